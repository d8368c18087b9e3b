"""Exact directed-cut duality on finite digraphs.

Minimum dijoins paired with maximum families of disjoint dicuts, nested
optimal pairs through uncrossing, quotient and 2-block reductions,
windowed approximations of built-in infinite families, and the matching
and cover view of the same duality on hypergraphs.
"""

from .core import (
    Cut,
    Dicut,
    Digraph,
    Witness,
    crossing,
    decompose_dicut,
    dicut_from_edge_set,
    dicut_from_shore,
    is_weakly_connected,
    join,
    meet,
    minimal_witness,
    nested,
    weak_components_within,
    witness_check,
)
from .enumeration import (
    DEFAULT_CAP,
    Condensation,
    condensation,
    dibonds_containing_edge,
    enumerate_dibonds,
    enumerate_dicuts,
)
from .errors import (
    CapExceeded,
    DicutsError,
    DualityGapDetected,
    NotCornerClosed,
    ParseError,
    PreconditionViolated,
    VerificationFailed,
)
from .families import (
    FAMILIES,
    CompactnessReport,
    FamilySpec,
    FamilyWindow,
    WindowRow,
    check_finitary_dijoin,
    compactness_run,
    dibond_growth,
    finite_dibonds_in_window,
    get_family,
    nested_extension_search,
    window,
    window_coherent,
)
from .hypergraph import (
    Hypergraph,
    KonigPair,
    Multigraph,
    dibond_hypergraph,
    fin_parameter_check,
    konig_property,
    menger_hypergraph,
)
from .reduce import (
    BlockTree,
    QuotientMap,
    block_cut_tree,
    contract_to,
    equivalence_classes,
    quotient_lift,
    split_solve_merge,
    verify_cut_lift,
)
from .solver import (
    DibondClass,
    OptimalPair,
    corner_closure,
    exact_max_set_packing,
    exact_min_hitting_set,
    is_dijoin,
    max_disjoint_dicuts,
    maximal_nested_disjoint_family,
    min_dijoin,
    nested_optimal_pair,
    optimal_pair,
    uncross,
    verify_optimal_pair,
)
from .cli import RunReport, main, parse_digraph, run, serialize_digraph

__version__ = "0.1.0"

__all__ = [
    "BlockTree",
    "CapExceeded",
    "CompactnessReport",
    "Condensation",
    "Cut",
    "DEFAULT_CAP",
    "DibondClass",
    "Dicut",
    "DicutsError",
    "Digraph",
    "DualityGapDetected",
    "FAMILIES",
    "FamilySpec",
    "FamilyWindow",
    "Hypergraph",
    "KonigPair",
    "Multigraph",
    "NotCornerClosed",
    "OptimalPair",
    "ParseError",
    "PreconditionViolated",
    "QuotientMap",
    "RunReport",
    "VerificationFailed",
    "WindowRow",
    "Witness",
    "block_cut_tree",
    "check_finitary_dijoin",
    "compactness_run",
    "condensation",
    "contract_to",
    "corner_closure",
    "crossing",
    "decompose_dicut",
    "dibond_growth",
    "dibond_hypergraph",
    "dibonds_containing_edge",
    "dicut_from_edge_set",
    "dicut_from_shore",
    "enumerate_dibonds",
    "enumerate_dicuts",
    "equivalence_classes",
    "exact_max_set_packing",
    "exact_min_hitting_set",
    "fin_parameter_check",
    "finite_dibonds_in_window",
    "get_family",
    "is_dijoin",
    "is_weakly_connected",
    "join",
    "konig_property",
    "main",
    "max_disjoint_dicuts",
    "maximal_nested_disjoint_family",
    "meet",
    "menger_hypergraph",
    "min_dijoin",
    "minimal_witness",
    "nested",
    "nested_extension_search",
    "nested_optimal_pair",
    "optimal_pair",
    "parse_digraph",
    "quotient_lift",
    "run",
    "serialize_digraph",
    "split_solve_merge",
    "uncross",
    "verify_cut_lift",
    "verify_optimal_pair",
    "weak_components_within",
    "window",
    "window_coherent",
    "witness_check",
]
