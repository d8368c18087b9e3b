"""Built-in infinite digraph families, exposed through finite windows.

Each family is a closed-form generator for an infinite digraph together
with a canonical increasing sequence of finite edge sets. The window at
index n is the finite contraction minor obtained by collapsing every
weak component left after removing the window edges from the infinite
digraph; the remainder components are known in closed form per family,
so no infinite object is ever materialized. Edges of the window carry
their symbolic names, which is what lets claims about the infinite
digraph be tested consistently across growing windows.

The four families:

- zigzag_d1: two one-way ranks feeding a hub. Upper vertex a_i sends a
  vertical edge to b_i and a diagonal edge to b_{i+1}; every b_i feeds
  the hub r. Distinguished edge sets: the diagonals and the verticals
  plus the first spoke are both minimal sets meeting every finite
  dibond, but only the diagonals extend to a nested selection.
- grid_d2: a half-plane grid directed down and to the right, with a
  sink at every second boundary vertex. Distinguished sets: the
  vertical drops into the sinks and the horizontal steps along the
  boundary.
- ladder: a two-rail bi-infinite ladder whose rails run in opposite
  directions, joined by rungs. Every window is strongly connected, so
  no finite dicut of the infinite ladder fits in any window.
- transitive_tournament: the transitive tournament on the naturals.
  Far vertices are represented by one contracted vertex reached by a
  single bundled edge per window vertex, so its windows are bespoke
  quotients rather than exact contraction minors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Optional

from .core import Dicut, Digraph, dicut_from_edge_set, is_weakly_connected, nested
from .enumeration import DEFAULT_CAP, dibonds_containing_edge, enumerate_dibonds
from .errors import CapExceeded
from .reduce import contract_to
from .solver import DibondClass, _member_key, maximal_nested_disjoint_family


@dataclass(frozen=True)
class RawWindow:
    """Symbolic description of one window before quotienting.

    symbolic_edges lists (name, tail, head) over symbolic vertex names;
    class_of maps every symbolic vertex appearing in those edges to its
    window vertex; named_sets maps a distinguished-set name to the tuple
    of its member edge names that lie inside the window.
    """

    symbolic_edges: tuple
    class_of: dict
    named_sets: dict


@dataclass(frozen=True)
class FamilySpec:
    """A symbolic infinite digraph family with a canonical window sequence."""

    name: str
    description: str
    _raw: Callable[[int], RawWindow] = field(repr=False)


@dataclass(frozen=True, eq=False)
class FamilyWindow:
    """A finite window of a family: the quotient digraph plus provenance.

    class_map sends each symbolic vertex incident to a window edge to
    its window vertex; edge_provenance sends each window edge id to its
    symbolic name; named_edge_sets holds each distinguished set as the
    ids of its surviving window edges, and dropped_named_edges records
    the members that collapsed to loops and were removed.
    """

    spec: FamilySpec
    n: int
    digraph: Digraph
    class_map: dict
    edge_provenance: dict
    name_to_edge: dict
    named_edge_sets: dict
    dropped_named_edges: dict
    dropped_edges: tuple
    symbolic_edges: tuple
    _dibond_cache: dict = field(default_factory=dict, repr=False)


@dataclass(frozen=True)
class WindowRow:
    """One window's numbers inside a consistency report."""

    n: int
    member_count: int
    family_size: int
    choice_count: int
    thread_count: int


@dataclass(frozen=True)
class CompactnessReport:
    """Outcome of threading per-window dijoin choices through restrictions.

    consistent is true when at least one choice thread survives to the
    largest window; stable_dijoin is the canonical surviving choice as
    symbolic edge names (empty set when there is nothing to hit);
    unstable_at is the first window index where every thread died, kept
    as data rather than raised.
    """

    family: str
    n_max: int
    rows: tuple
    consistent: bool
    stable_dijoin: Optional[frozenset]
    unstable_at: Optional[int]


def _zigzag_raw(n: int) -> RawWindow:
    class_of = {}
    for i in range(n):
        class_of[f"a{i}"] = f"a{i}"
    class_of[f"a{n}"] = "rest"
    for i in range(n + 1):
        class_of[f"b{i}"] = f"b{i}"
    class_of["r"] = "rest"
    edges = []
    for i in range(n + 1):
        edges.append((f"a{i}->b{i}", f"a{i}", f"b{i}"))
    for i in range(n):
        edges.append((f"a{i}->b{i+1}", f"a{i}", f"b{i+1}"))
    for i in range(n + 1):
        edges.append((f"b{i}->r", f"b{i}", "r"))
    verticals = tuple(f"a{i}->b{i}" for i in range(n + 1))
    spokes = tuple(f"b{i}->r" for i in range(n + 1))
    named = {
        "verticals": verticals,
        "diagonals": tuple(f"a{i}->b{i+1}" for i in range(n)),
        "spokes": spokes,
        "verticals_and_first_spoke": verticals + ("b0->r",),
        "spokes_without_first": spokes[1:],
    }
    return RawWindow(tuple(edges), class_of, named)


def _grid_ymin(x: int) -> int:
    # lowest y with (x, y) in the half-plane x - 2y <= 2
    return (x - 1) // 2


def _grid_raw(n: int) -> RawWindow:
    depth = max(2, -(-n // 5))
    core = set()
    for x in range(-n, n + 1):
        y0 = _grid_ymin(x)
        for y in range(y0, y0 + depth + 1):
            core.add((x, y))

    def in_plane(x: int, y: int) -> bool:
        return x - 2 * y <= 2

    def neighbors(x: int, y: int) -> list:
        # (x,y+1) and (x-1,y) are always in the half-plane
        out = [(x, y + 1), (x - 1, y)]
        if in_plane(x, y - 1):
            out.append((x, y - 1))
        if in_plane(x + 1, y):
            out.append((x + 1, y))
        return out

    survives = {v: all(u in core for u in neighbors(*v)) for v in core}

    def sym(v: tuple) -> str:
        return f"({v[0]},{v[1]})"

    class_of = {sym(v): (sym(v) if survives[v] else "rest") for v in core}
    edges = []
    for (x, y) in sorted(core):
        up = (x, y + 1)
        if up in core:
            edges.append((f"{sym(up)}->{sym((x, y))}", sym(up), sym((x, y))))
        left = (x - 1, y)
        if left in core:
            edges.append((f"{sym(left)}->{sym((x, y))}", sym(left), sym((x, y))))

    drops = []
    for k in range(-(n // 2) - 1, n // 2 + 2):
        top, corner = (2 * k, k), (2 * k, k - 1)
        if top in core and corner in core:
            drops.append(f"{sym(top)}->{sym(corner)}")
    steps = []
    for k in range(-(n + 1) // 2 - 1, (n + 1) // 2 + 2):
        into, corner = (2 * k - 1, k - 1), (2 * k, k - 1)
        if into in core and corner in core:
            steps.append(f"{sym(into)}->{sym(corner)}")
        top, beyond = (2 * k, k), (2 * k + 1, k)
        if top in core and beyond in core:
            steps.append(f"{sym(top)}->{sym(beyond)}")
    named = {"vertical_drops": tuple(drops), "horizontal_steps": tuple(steps)}
    return RawWindow(tuple(edges), class_of, named)


def _ladder_raw(n: int) -> RawWindow:
    def cls(prefix: str, i: int) -> str:
        if i == -n:
            return "left"
        if i == n:
            return "right"
        return f"{prefix}{i}"

    class_of = {}
    for i in range(-n, n + 1):
        class_of[f"u{i}"] = cls("u", i)
        class_of[f"w{i}"] = cls("w", i)
    edges = []
    for i in range(-n, n):
        edges.append((f"u{i}->u{i+1}", f"u{i}", f"u{i+1}"))
    for i in range(-n, n):
        edges.append((f"w{i+1}->w{i}", f"w{i+1}", f"w{i}"))
    for i in range(-n, n + 1):
        edges.append((f"w{i}->u{i}", f"w{i}", f"u{i}"))
    return RawWindow(tuple(edges), class_of, {})


def _tournament_raw(n: int) -> RawWindow:
    class_of = {str(i): str(i) for i in range(n + 1)}
    class_of[str(n + 1)] = "rest"
    class_of["rest"] = "rest"
    edges = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            edges.append((f"{i}->{j}", str(i), str(j)))
    for i in range(n + 1):
        edges.append((f"{i}->*", str(i), "rest"))
    return RawWindow(tuple(edges), class_of, {})


FAMILIES = {
    "zigzag_d1": FamilySpec(
        name="zigzag_d1",
        description="two one-way ranks feeding a hub: verticals, diagonals, spokes",
        _raw=_zigzag_raw,
    ),
    "grid_d2": FamilySpec(
        name="grid_d2",
        description="half-plane grid directed down and right with sinks on the boundary",
        _raw=_grid_raw,
    ),
    "ladder": FamilySpec(
        name="ladder",
        description="bi-infinite two-rail ladder with counter-rotating rails and rungs",
        _raw=_ladder_raw,
    ),
    "transitive_tournament": FamilySpec(
        name="transitive_tournament",
        description="transitive tournament on the naturals with a bundled far vertex",
        _raw=_tournament_raw,
    ),
}


def get_family(name: str) -> FamilySpec:
    try:
        return FAMILIES[name]
    except KeyError:
        known = ", ".join(sorted(FAMILIES))
        raise ValueError(f"unknown family {name!r}; known families: {known}") from None


def window(spec: FamilySpec, n: int) -> FamilyWindow:
    """The finite contraction minor of the family at window index n.

    Symbolic edges whose endpoints collapse into the same window vertex
    drop out (a loop never takes part in a cut); every other edge keeps
    its symbolic name through edge_provenance.
    """
    if n < 1:
        raise ValueError("window index must be at least 1")
    raw = spec._raw(n)
    pairs = []
    provenance = {}
    dropped = []
    for name, tail, head in raw.symbolic_edges:
        ct, ch = raw.class_of[tail], raw.class_of[head]
        if ct == ch:
            dropped.append(name)
            continue
        provenance[len(pairs)] = name
        pairs.append((ct, ch))
    digraph = Digraph.from_edges(pairs)
    if not is_weakly_connected(digraph):
        raise RuntimeError("window construction produced a disconnected digraph")
    name_to_edge = {name: e for e, name in provenance.items()}
    dropped_set = set(dropped)
    named_edge_sets = {}
    dropped_named = {}
    for set_name, members in raw.named_sets.items():
        named_edge_sets[set_name] = frozenset(
            name_to_edge[m] for m in members if m in name_to_edge
        )
        dropped_named[set_name] = tuple(m for m in members if m in dropped_set)
    return FamilyWindow(
        spec=spec,
        n=n,
        digraph=digraph,
        class_map=dict(raw.class_of),
        edge_provenance=provenance,
        name_to_edge=name_to_edge,
        named_edge_sets=named_edge_sets,
        dropped_named_edges=dropped_named,
        dropped_edges=tuple(dropped),
        symbolic_edges=raw.symbolic_edges,
    )


def finite_dibonds_in_window(w: FamilyWindow, cap: int = DEFAULT_CAP) -> list:
    """All dibonds of the window digraph, canonically ordered.

    The window has exactly the window edges, so these are the finite
    dibonds of the infinite digraph that fit inside the window. The
    result is cached on the window, so repeated checks share one
    enumeration.
    """
    if cap not in w._dibond_cache:
        w._dibond_cache[cap] = sorted(enumerate_dibonds(w.digraph, cap), key=_member_key)
    return list(w._dibond_cache[cap])


def _named_ids(w: FamilyWindow, set_name: str) -> frozenset:
    try:
        return w.named_edge_sets[set_name]
    except KeyError:
        known = ", ".join(sorted(w.named_edge_sets)) or "none"
        raise ValueError(
            f"unknown named edge set {set_name!r} for family {w.spec.name!r}; known: {known}"
        ) from None


def check_finitary_dijoin(
    w: FamilyWindow, set_name: str, cap: int = DEFAULT_CAP
) -> tuple:
    """Whether the named set hits every window dibond; on failure, the first miss."""
    edge_set = _named_ids(w, set_name)
    for b in finite_dibonds_in_window(w, cap):
        if not (b.edge_set & edge_set):
            return False, b
    return True, None


def nested_extension_search(
    w: FamilyWindow, set_name: str, cap: int = DEFAULT_CAP
) -> Optional[dict]:
    """A pairwise disjoint, pairwise nested dibond for each edge of the named set.

    Each selected dibond must contain its edge and meet the named set in
    that edge only. Returns {edge id: dibond} or None when no selection
    exists; None at one window rules out any nested selection confined
    to that window.
    """
    edge_set = _named_ids(w, set_name)
    if not edge_set:
        return {}
    dibonds = finite_dibonds_in_window(w, cap)
    candidates = {}
    for e in sorted(edge_set):
        cands = [b for b in dibonds if e in b.edge_set and len(b.edge_set & edge_set) == 1]
        if not cands:
            return None
        candidates[e] = cands
    order = sorted(edge_set, key=lambda e: (len(candidates[e]), e))
    chosen: dict = {}

    def compatible(b: Dicut) -> bool:
        for c in chosen.values():
            if b.edge_set & c.edge_set or not nested(b, c):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        for b in candidates[e]:
            if compatible(b):
                chosen[e] = b
                if search(i + 1):
                    return True
                del chosen[e]
        return False

    return dict(chosen) if search(0) else None


def _window_members(
    w: FamilyWindow, restriction: Optional[tuple], cap: int
) -> DibondClass:
    if restriction is None:
        return DibondClass.full(w.digraph, cap)
    members = []
    for names in restriction:
        if not all(nm in w.name_to_edge for nm in names):
            continue
        ids = frozenset(w.name_to_edge[nm] for nm in names)
        d = dicut_from_edge_set(w.digraph, ids)
        if d is None or not d.is_dibond:
            raise ValueError(
                "restriction member does not realize as a dibond of the window"
            )
        members.append(d)
    return DibondClass.from_members(w.digraph, members)


def compactness_run(
    spec: FamilySpec,
    n_max: int,
    restrict_to: Optional[Iterable] = None,
    cap: int = DEFAULT_CAP,
    choice_cap: int = 4096,
) -> CompactnessReport:
    """Thread per-window dijoin choices through window restrictions.

    At each window the canonical maximal nested disjoint dibond family
    is computed for the class (optionally restricted to the given
    symbolic members); a choice picks one edge from each family member
    and must hit every class member. A choice thread survives to window
    n when its restriction to the previous window's edges was itself a
    surviving choice there. The report carries the canonical surviving
    choice, or the first index where all threads died.
    """
    if n_max < 1:
        raise ValueError("window index must be at least 1")
    restriction = None
    if restrict_to is not None:
        restriction = tuple(frozenset(names) for names in restrict_to)
    rows = []
    threads: set = set()
    prev_names: Optional[frozenset] = None
    unstable_at: Optional[int] = None
    for n in range(1, n_max + 1):
        w = window(spec, n)
        klass = _window_members(w, restriction, cap)
        family = maximal_nested_disjoint_family(w.digraph, klass)
        member_sets = [m.edge_set for m in klass.members]
        total = 1
        for b in family:
            total *= len(b.edge_set)
        if total > choice_cap:
            raise CapExceeded(choice_cap, "enumerating dijoin choices")
        choices = []
        for combo in product(*(sorted(b.edge_set) for b in family)):
            pick = frozenset(combo)
            if all(pick & ms for ms in member_sets):
                choices.append(frozenset(w.edge_provenance[e] for e in pick))
        if prev_names is None:
            threads = set(choices)
        else:
            alive = threads
            threads = {c for c in choices if (c & prev_names) in alive}
        rows.append(
            WindowRow(
                n=n,
                member_count=len(klass.members),
                family_size=len(family),
                choice_count=len(choices),
                thread_count=len(threads),
            )
        )
        if not threads and unstable_at is None:
            unstable_at = n
        prev_names = frozenset(w.name_to_edge)
    consistent = bool(threads)
    stable = min(threads, key=lambda f: (len(f), tuple(sorted(f)))) if threads else None
    return CompactnessReport(
        family=spec.name,
        n_max=n_max,
        rows=tuple(rows),
        consistent=consistent,
        stable_dijoin=stable,
        unstable_at=unstable_at,
    )


def dibond_growth(
    spec: FamilySpec, edge_name: str, n_max: int, cap: int = DEFAULT_CAP
) -> tuple:
    """Per-window counts of dibonds containing the named edge.

    The edge must lie inside the largest window; windows it has not yet
    entered, or where it collapsed to a loop, contribute zero.
    """
    if n_max < 1:
        raise ValueError("window index must be at least 1")
    w_max = window(spec, n_max)
    known = set(w_max.name_to_edge) | set(w_max.dropped_edges)
    if edge_name not in known:
        raise ValueError(f"edge {edge_name!r} is not inside window {n_max}")
    counts = []
    for n in range(1, n_max + 1):
        w = window(spec, n)
        e = w.name_to_edge.get(edge_name)
        if e is None:
            counts.append(0)
        else:
            counts.append(len(dibonds_containing_edge(w.digraph, e, cap)))
    return tuple(counts)


def window_coherent(spec: FamilySpec, m: int, n: int) -> bool:
    """Whether contracting window n down to window m reproduces window m.

    Checks the isomorphism under the class maps: vertex classes must
    correspond and every shared symbolic edge must keep its endpoints.
    The bundled-edge family breaks this on purpose; the check reports
    False rather than raising.
    """
    if not 1 <= m <= n:
        raise ValueError("window indices must satisfy 1 <= m <= n")
    wm, wn = window(spec, m), window(spec, n)
    if any(nm not in wn.name_to_edge for nm in wm.name_to_edge):
        return False
    kept = frozenset(wn.name_to_edge[nm] for nm in wm.name_to_edge)
    try:
        qm = contract_to(wn.digraph, kept)
    except RuntimeError:
        return False
    phi: dict = {}
    for sym_v, cm in wm.class_map.items():
        if sym_v not in wn.class_map:
            return False
        q = qm.class_of[wn.class_map[sym_v]]
        if phi.setdefault(cm, q) != q:
            return False
    if len(set(phi.values())) != len(phi):
        return False
    if set(phi.values()) != set(qm.quotient.vertices):
        return False
    if qm.quotient.m != wm.digraph.m:
        return False
    back = {orig: q for q, orig in qm.edge_provenance.items()}
    for nm, em in wm.name_to_edge.items():
        q = back.get(wn.name_to_edge[nm])
        if q is None:
            return False
        want = (phi[wm.digraph.tail(em)], phi[wm.digraph.head(em)])
        if (qm.quotient.tail(q), qm.quotient.head(q)) != want:
            return False
    return True
