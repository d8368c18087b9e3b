"""Finite hypergraph machinery: matchings, covers, and the Koenig property.

A hypergraph has the Koenig property when some maximum matching M admits a
cover A built by picking exactly one vertex from each member of M. Such a
pair forces the matching and cover optima to coincide, which is the
hypergraph form of an optimal pair: the dibond hypergraph of a digraph
turns dijoins into covers and disjoint dicut families into matchings, and
the path hypergraph of an undirected graph turns Menger's theorem into the
same statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Digraph
from .enumeration import DEFAULT_CAP, enumerate_dibonds
from .errors import CapExceeded
from .solver import exact_max_set_packing, exact_min_hitting_set


def _edge_key(s: frozenset) -> tuple:
    return (len(s), tuple(sorted(s)))


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A finite hypergraph; every hyperedge is a finite nonempty vertex set."""

    vertices: frozenset
    hyperedges: tuple

    def __post_init__(self) -> None:
        for h in self.hyperedges:
            if not h:
                raise ValueError("hyperedges must be nonempty")
            if not h <= self.vertices:
                raise ValueError("hyperedge contains undeclared vertices")

    @staticmethod
    def from_edges(hyperedges: Iterable[Iterable], vertices: Iterable = ()) -> "Hypergraph":
        edges = tuple(frozenset(h) for h in hyperedges)
        verts = set(vertices)
        for h in edges:
            verts |= h
        return Hypergraph(vertices=frozenset(verts), hyperedges=edges)

    @property
    def is_simple(self) -> bool:
        """True iff no hyperedge contains another."""
        edges = self.hyperedges
        for i, a in enumerate(edges):
            for j, b in enumerate(edges):
                if i != j and a <= b:
                    return False
        return True


@dataclass(frozen=True, eq=False)
class KonigPair:
    """A matching and a cover picking exactly one vertex per matching member."""

    matching: tuple
    cover: frozenset


class Multigraph:
    """A loopless undirected multigraph with dense integer edge ids."""

    def __init__(self, vertices: Iterable, edges: Iterable[tuple]):
        self.vertices: frozenset = frozenset(vertices)
        self.edges: tuple = tuple((a, b) for (a, b) in edges)
        for i, (a, b) in enumerate(self.edges):
            if a == b:
                raise ValueError(f"edge {i} is a loop at {a!r}")
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"edge {i} has undeclared endpoints")
        adj: dict = {v: [] for v in self.vertices}
        for e, (a, b) in enumerate(self.edges):
            adj[a].append((b, e))
            adj[b].append((a, e))
        self._adj = {v: tuple(sorted(ps)) for v, ps in adj.items()}

    def neighbors(self, v) -> tuple:
        """Pairs (other endpoint, edge id) sorted by endpoint then edge id."""
        return self._adj[v]


def _enumerate_maximum_matchings(edges: list, size: int, cap: int) -> list:
    """All pairwise-disjoint subfamilies of exactly the given size, canonical order."""
    k = len(edges)
    found: list = []

    def compatible_bound(i: int, used: frozenset) -> int:
        # Optimistic: counts every remaining edge disjoint from the current
        # union, ignoring conflicts among those edges themselves.
        return sum(1 for j in range(i, k) if not (edges[j] & used))

    def search(i: int, used: frozenset, chosen: list) -> None:
        if len(chosen) == size:
            if len(found) >= cap:
                raise CapExceeded(cap, "enumerating maximum matchings")
            found.append(tuple(chosen))
            return
        if i == k or len(chosen) + compatible_bound(i, used) < size:
            return
        if not (edges[i] & used):
            chosen.append(i)
            search(i + 1, used | edges[i], chosen)
            chosen.pop()
        search(i + 1, used, chosen)

    search(0, frozenset(), [])
    return found


def _covering_transversal(members: list, hyperedges: list) -> Optional[frozenset]:
    """One vertex per member such that every hyperedge is hit, or None.

    Every hyperedge intersects the union of a maximum matching, so a
    hyperedge can only be hit by choices at the members it meets; the
    search prunes as soon as a hyperedge has run out of meeting members.
    """
    k = len(members)
    meets = []
    for h in hyperedges:
        idx = tuple(i for i, m in enumerate(members) if m & h)
        if not idx:
            return None
        meets.append(idx)
    last_chance: dict = {}
    for hi, idx in enumerate(meets):
        if idx:
            last_chance.setdefault(idx[-1], []).append(hi)
    covered = [False] * len(hyperedges)

    def search(i: int, picked: list) -> Optional[frozenset]:
        if i == k:
            return frozenset(picked) if all(covered) else None
        for v in sorted(members[i]):
            newly = []
            for hi, h in enumerate(hyperedges):
                if not covered[hi] and v in h:
                    covered[hi] = True
                    newly.append(hi)
            dead = any(not covered[hi] for hi in last_chance.get(i, ()))
            if not dead:
                picked.append(v)
                result = search(i + 1, picked)
                if result is not None:
                    return result
                picked.pop()
            for hi in newly:
                covered[hi] = False
        return None

    return search(0, [])


def konig_property(hypergraph: Hypergraph, cap: int = DEFAULT_CAP) -> Optional[KonigPair]:
    """A maximum matching with a one-vertex-per-member cover, or None.

    Any matching-cover pair with the one-per-member structure sandwiches
    the two optima into equality, so its matching is automatically maximum;
    completeness therefore only requires searching all maximum matchings,
    each paired with an exact transversal search. Deterministic: hyperedges
    are considered in canonical order.
    """
    edges = sorted(set(hypergraph.hyperedges), key=_edge_key)
    if not edges:
        return KonigPair(matching=(), cover=frozenset())
    size = len(exact_max_set_packing(edges))
    for matching_idx in _enumerate_maximum_matchings(edges, size, cap):
        members = [edges[i] for i in matching_idx]
        cover = _covering_transversal(members, edges)
        if cover is not None:
            return KonigPair(matching=tuple(members), cover=cover)
    return None


def dibond_hypergraph(digraph: Digraph, cap: int = DEFAULT_CAP) -> Hypergraph:
    """Vertices are the digraph's edge ids; hyperedges are its dibond edge sets."""
    dibonds = enumerate_dibonds(digraph, cap)
    return Hypergraph(
        vertices=frozenset(digraph.edge_ids()),
        hyperedges=tuple(b.edge_set for b in dibonds),
    )


def menger_hypergraph(graph: Multigraph, a_set: Iterable, b_set: Iterable, cap: int = DEFAULT_CAP) -> Hypergraph:
    """Hyperedges are the vertex sets of paths from A to B, internally avoiding both.

    A path meets A and B only at its endpoints; a vertex in both A and B is
    itself a single-vertex path. Hyperedges are deduplicated by vertex set
    and the hypergraph's vertices are exactly those lying on some path.
    """
    a_set = frozenset(a_set)
    b_set = frozenset(b_set)
    if not a_set <= graph.vertices or not b_set <= graph.vertices:
        raise ValueError("endpoint sets must be vertices of the graph")
    blocked = a_set | b_set
    found: set = set()

    def record(path: list) -> None:
        if len(found) >= cap:
            raise CapExceeded(cap, "enumerating paths")
        found.add(frozenset(path))

    def extend(path: list, on_path: set) -> None:
        v = path[-1]
        for w, _e in graph.neighbors(v):
            if w in on_path:
                continue
            if w in b_set:
                record(path + [w])
                continue
            if w in blocked:
                continue
            path.append(w)
            on_path.add(w)
            extend(path, on_path)
            path.pop()
            on_path.discard(w)

    for a in sorted(a_set):
        if a in b_set:
            record([a])
        extend([a], {a})
    hyperedges = tuple(sorted(found, key=_edge_key))
    vertices: set = set()
    for h in hyperedges:
        vertices |= h
    return Hypergraph(vertices=frozenset(vertices), hyperedges=hyperedges)


def fin_parameter_check(hypergraph: Hypergraph) -> bool:
    """Validate the finite matching-cover relationship on a finite hypergraph.

    Checks that the exact minimum cover is at least as large as the exact
    maximum matching, and that the union of an inclusion-maximal matching
    is a cover. Both hold on every finite hypergraph; the check exists to
    validate the solvers against each other.
    """
    edges = sorted(set(hypergraph.hyperedges), key=_edge_key)
    if not edges:
        return True
    matching_size = len(exact_max_set_packing(edges))
    cover_size = len(exact_min_hitting_set(edges))
    union: set = set()
    for h in edges:
        if not (h & union):
            union |= h
    union_covers = all(h & union for h in edges)
    return cover_size >= matching_size and union_covers
