"""Finite multidigraphs and the cut-level primitives built on them.

Vertex identifiers are opaque values that must be hashable and mutually
sortable within one digraph. Edges are (tail, head) pairs stored in a fixed
order; the edge id is the index into that order, so ids are dense ints
0..m-1 and stable. Parallel edges are distinct ids; loops are rejected.

All values are treated as immutable once constructed, and every operation
is a pure function of its inputs. Iteration orders follow sorted vertex ids
and ascending edge ids throughout, so results are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional

Vertex = Hashable
EdgeId = int


class Digraph:
    """A loopless multidigraph with stable vertex and edge identifiers."""

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple]):
        self.vertices: frozenset = frozenset(vertices)
        self.edges: tuple = tuple((t, h) for (t, h) in edges)
        for i, (t, h) in enumerate(self.edges):
            if t == h:
                raise ValueError(f"edge {i} is a loop at {t!r}")
            if t not in self.vertices:
                raise ValueError(f"edge {i} has undeclared tail {t!r}")
            if h not in self.vertices:
                raise ValueError(f"edge {i} has undeclared head {h!r}")
        self._hash: Optional[int] = None
        self._out: Optional[dict] = None
        self._in: Optional[dict] = None
        self._und: Optional[dict] = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], isolated: Iterable[Vertex] = ()) -> "Digraph":
        """Build a digraph whose vertex set is the endpoints plus any isolated vertices."""
        edges = tuple(edges)
        vertices = set(isolated)
        for t, h in edges:
            vertices.add(t)
            vertices.add(h)
        return cls(vertices, edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def tail(self, e: EdgeId) -> Vertex:
        return self.edges[e][0]

    def head(self, e: EdgeId) -> Vertex:
        return self.edges[e][1]

    def edge_ids(self) -> range:
        return range(len(self.edges))

    def _build_adjacency(self) -> None:
        out: dict = {v: [] for v in self.vertices}
        inc: dict = {v: [] for v in self.vertices}
        und: dict = {v: [] for v in self.vertices}
        for e, (t, h) in enumerate(self.edges):
            out[t].append(e)
            inc[h].append(e)
            und[t].append((h, e))
            und[h].append((t, e))
        self._out = {v: tuple(es) for v, es in out.items()}
        self._in = {v: tuple(es) for v, es in inc.items()}
        self._und = {v: tuple(ps) for v, ps in und.items()}

    def out_edges(self, v: Vertex) -> tuple:
        if self._out is None:
            self._build_adjacency()
        return self._out[v]

    def in_edges(self, v: Vertex) -> tuple:
        if self._in is None:
            self._build_adjacency()
        return self._in[v]

    def und_neighbors(self, v: Vertex) -> tuple:
        """Pairs (other endpoint, edge id) over all incident edges, ignoring direction."""
        if self._und is None:
            self._build_adjacency()
        return self._und[v]

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


def _component_containing(digraph: Digraph, start: Vertex, allowed: frozenset) -> frozenset:
    """Weak component of `start` inside the induced subdigraph on `allowed`."""
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w, _e in digraph.und_neighbors(v):
            if w in allowed and w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def weak_components_within(digraph: Digraph, subset: frozenset) -> list:
    """Weak components of the induced subdigraph on `subset`, each a frozenset.

    Deterministic: components are discovered from sorted seeds and returned
    in that discovery order.
    """
    remaining = set(subset)
    comps = []
    for v in sorted(subset):
        if v in remaining:
            comp = _component_containing(digraph, v, frozenset(remaining))
            comps.append(comp)
            remaining -= comp
    return comps


def is_weakly_connected(digraph: Digraph) -> bool:
    """True iff the underlying undirected graph is connected.

    The empty digraph and a single vertex both count as connected.
    """
    if digraph.n <= 1:
        return True
    start = min(digraph.vertices)
    comp = _component_containing(digraph, start, digraph.vertices)
    return len(comp) == digraph.n


def _subset_weakly_connected(digraph: Digraph, subset: frozenset) -> bool:
    if len(subset) <= 1:
        return True
    start = min(subset)
    return len(_component_containing(digraph, start, subset)) == len(subset)


class Cut:
    """An undirected edge cut, stored by its two vertex sides.

    The in side is the authoritative representation; the edge set consists
    of all edges with one endpoint on each side, in either direction.
    """

    def __init__(self, digraph: Digraph, in_side: Iterable[Vertex]):
        in_side = frozenset(in_side)
        if not in_side <= digraph.vertices:
            raise ValueError("in side contains undeclared vertices")
        if not in_side or in_side == digraph.vertices:
            raise ValueError("both sides of a cut must be nonempty")
        self.digraph = digraph
        self.in_side = in_side
        self.out_side = digraph.vertices - in_side
        self._edge_set: Optional[frozenset] = None

    @property
    def edge_set(self) -> frozenset:
        if self._edge_set is None:
            y = self.in_side
            self._edge_set = frozenset(
                e for e, (t, h) in enumerate(self.digraph.edges) if (t in y) != (h in y)
            )
        return self._edge_set

    @property
    def sides(self) -> tuple:
        return (self.in_side, self.out_side)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cut):
            return NotImplemented
        return self.in_side == other.in_side and self.digraph == other.digraph

    def __hash__(self) -> int:
        return hash(self.in_side)

    def __repr__(self) -> str:
        return f"Cut(in_side={sorted(self.in_side)!r})"


class Dicut:
    """A directed cut: no edge leaves the in shore.

    Stored canonically by the in shore Y; the edge set is derived as the set
    of edges entering Y. Degenerate shores (empty or the whole vertex set)
    are permitted so that meets and joins always have a value; such a dicut
    has an empty edge set and is reported by `is_empty`.
    """

    def __init__(self, digraph: Digraph, in_shore: Iterable[Vertex]):
        in_shore = frozenset(in_shore)
        if not in_shore <= digraph.vertices:
            raise ValueError("in shore contains undeclared vertices")
        for v in in_shore:
            for e in digraph.out_edges(v):
                if digraph.head(e) not in in_shore:
                    raise ValueError(f"edge {e} leaves the in shore; not a dicut")
        self.digraph = digraph
        self.in_shore = in_shore
        self._edge_set: Optional[frozenset] = None
        self._is_dibond: Optional[bool] = None

    @property
    def out_shore(self) -> frozenset:
        return self.digraph.vertices - self.in_shore

    @property
    def edge_set(self) -> frozenset:
        if self._edge_set is None:
            y = self.in_shore
            edges = []
            for v in y:
                for e in self.digraph.in_edges(v):
                    if self.digraph.tail(e) not in y:
                        edges.append(e)
            self._edge_set = frozenset(edges)
        return self._edge_set

    @property
    def is_empty(self) -> bool:
        return len(self.edge_set) == 0

    @property
    def is_dibond(self) -> bool:
        """True iff the dicut is nonempty and both shores induce weakly connected subdigraphs."""
        if self._is_dibond is None:
            self._is_dibond = (
                not self.is_empty
                and _subset_weakly_connected(self.digraph, self.in_shore)
                and _subset_weakly_connected(self.digraph, self.out_shore)
            )
        return self._is_dibond

    @property
    def sides(self) -> tuple:
        return (self.in_shore, self.out_shore)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Dicut):
            return NotImplemented
        return self.in_shore == other.in_shore and self.digraph == other.digraph

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash(self.in_shore)

    def __repr__(self) -> str:
        return f"Dicut(in_shore={sorted(self.in_shore)!r}, edges={sorted(self.edge_set)!r})"


@dataclass(frozen=True, eq=False)
class Witness:
    """An edge set within which two designated vertices reach each other."""

    digraph: Digraph
    edge_set: frozenset
    endpoints: tuple


def dicut_from_shore(digraph: Digraph, in_shore: Iterable[Vertex]) -> Optional[Dicut]:
    """The dicut with in shore Y, or None if some edge leaves Y.

    Y must be a nonempty proper subset of the vertices.
    """
    y = frozenset(in_shore)
    if not y <= digraph.vertices:
        raise ValueError("in shore contains undeclared vertices")
    if not y or y == digraph.vertices:
        raise ValueError("in shore must be a nonempty proper vertex subset")
    for v in y:
        for e in digraph.out_edges(v):
            if digraph.head(e) not in y:
                return None
    return Dicut(digraph, y)


def dicut_from_edge_set(digraph: Digraph, edge_set: Iterable[EdgeId]) -> Optional[Dicut]:
    """Reconstruct the dicut whose edge set is exactly `edge_set`, if one exists.

    On a weakly connected digraph a dicut is determined by its edge set: the
    weak components of the digraph minus the edge set are each forced onto
    one shore by the cut edges incident to them. Returns None when the
    labelling is inconsistent or the candidate shores fail the dicut checks.
    """
    b = frozenset(edge_set)
    if not b:
        return None
    if not all(0 <= e < digraph.m for e in b):
        raise ValueError("edge set contains unknown edge ids")
    comp_of: dict = {}
    for v in sorted(digraph.vertices):
        if v in comp_of:
            continue
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w, e in digraph.und_neighbors(u):
                if e not in b and w not in seen:
                    seen.add(w)
                    queue.append(w)
        for w in seen:
            comp_of[w] = v
    label: dict = {}
    for e in b:
        t_comp = comp_of[digraph.tail(e)]
        h_comp = comp_of[digraph.head(e)]
        if t_comp == h_comp:
            return None
        if label.get(t_comp, "out") != "out" or label.get(h_comp, "in") != "in":
            return None
        label[t_comp] = "out"
        label[h_comp] = "in"
    if any(comp not in label for comp in set(comp_of.values())):
        return None
    y = frozenset(v for v in digraph.vertices if label[comp_of[v]] == "in")
    if not y or y == digraph.vertices:
        return None
    for v in y:
        for e in digraph.out_edges(v):
            if digraph.head(e) not in y:
                return None
    cut = Dicut(digraph, y)
    if cut.edge_set != b:
        return None
    return cut


def nested(c1, c2) -> bool:
    """True iff some side of one cut is contained in some side of the other.

    Accepts any two cuts (directed or not) over the same digraph. In terms
    of the in sides Y1, Y2 this is: Y1 <= Y2, or Y2 <= Y1, or Y1 and Y2 are
    disjoint, or Y1 union Y2 covers every vertex.
    """
    if c1.digraph != c2.digraph:
        raise ValueError("cuts are over different digraphs")
    y1, y2 = c1.sides[0], c2.sides[0]
    if y1 <= y2 or y2 <= y1:
        return True
    inter = len(y1 & y2)
    if inter == 0:
        return True
    return len(y1) + len(y2) - inter == c1.digraph.n


def crossing(c1, c2) -> bool:
    """True iff the two cuts are not nested."""
    return not nested(c1, c2)


def meet(b1: Dicut, b2: Dicut) -> Dicut:
    """The dicut on the intersection of the in shores.

    May be the empty dicut (empty in shore) when the in shores are disjoint.
    """
    if b1.digraph != b2.digraph:
        raise ValueError("dicuts are over different digraphs")
    return Dicut(b1.digraph, b1.in_shore & b2.in_shore)


def join(b1: Dicut, b2: Dicut) -> Dicut:
    """The dicut on the union of the in shores.

    May be the empty dicut (in shore equal to the whole vertex set) when the
    out shores are disjoint.
    """
    if b1.digraph != b2.digraph:
        raise ValueError("dicuts are over different digraphs")
    return Dicut(b1.digraph, b1.in_shore | b2.in_shore)


def decompose_dicut(dicut: Dicut) -> list:
    """Partition a nonempty dicut into the dibonds it contains.

    Repeatedly splits along disconnected shores: a disconnected in shore
    splits the edge set by head component, a disconnected out shore by tail
    component. Every edge of the input lands in exactly one returned dibond.
    Deterministic: the result is sorted by edge id tuples.
    """
    if dicut.is_empty:
        raise ValueError("cannot decompose an empty dicut")
    digraph = dicut.digraph
    parts = []
    stack = [dicut]
    while stack:
        cur = stack.pop()
        in_comps = weak_components_within(digraph, cur.in_shore)
        if len(in_comps) > 1:
            stack.extend(Dicut(digraph, comp) for comp in in_comps)
            continue
        out_comps = weak_components_within(digraph, cur.out_shore)
        if len(out_comps) > 1:
            stack.extend(Dicut(digraph, digraph.vertices - comp) for comp in out_comps)
            continue
        parts.append(cur)
    parts.sort(key=lambda d: tuple(sorted(d.edge_set)))
    return parts


def _reachable_within(digraph: Digraph, start: Vertex, allowed_edges: frozenset, forward: bool) -> frozenset:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        edges = digraph.out_edges(v) if forward else digraph.in_edges(v)
        for e in edges:
            if e not in allowed_edges:
                continue
            w = digraph.head(e) if forward else digraph.tail(e)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def witness_check(digraph: Digraph, edge_set: Iterable[EdgeId], v: Vertex, w: Vertex) -> bool:
    """True iff v reaches w and w reaches v using only the given edges."""
    if v not in digraph.vertices or w not in digraph.vertices:
        raise ValueError("witness endpoints must be vertices of the digraph")
    if v == w:
        raise ValueError("witness endpoints must be distinct")
    allowed = frozenset(edge_set)
    if not all(0 <= e < digraph.m for e in allowed):
        raise ValueError("edge set contains unknown edge ids")
    if w not in _reachable_within(digraph, v, allowed, forward=True):
        return False
    return w in _reachable_within(digraph, v, allowed, forward=False)


def minimal_witness(digraph: Digraph, v: Vertex, w: Vertex) -> Optional[Witness]:
    """An inclusion-minimal edge set within which v and w reach each other.

    Greedy single-edge removal in ascending edge id order; a single pass
    yields inclusion minimality because the witness property is monotone in
    the edge set. Returns None when v and w are not mutually reachable at
    all. The edges of the result always induce a strongly connected
    subdigraph, which is verified before returning.
    """
    full = frozenset(digraph.edge_ids())
    if not witness_check(digraph, full, v, w):
        return None
    kept = set(full)
    for e in sorted(full):
        trial = frozenset(kept - {e})
        if witness_check(digraph, trial, v, w):
            kept.discard(e)
    witness_edges = frozenset(kept)
    touched = set()
    for e in witness_edges:
        touched.add(digraph.tail(e))
        touched.add(digraph.head(e))
    if touched:
        root = min(touched)
        fwd = _reachable_within(digraph, root, witness_edges, forward=True)
        bwd = _reachable_within(digraph, root, witness_edges, forward=False)
        if not (touched <= fwd and touched <= bwd):
            raise RuntimeError("internal error: minimal witness is not strongly connected")
    return Witness(digraph=digraph, edge_set=witness_edges, endpoints=(v, w))
