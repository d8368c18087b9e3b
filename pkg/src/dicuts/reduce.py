"""Reductions that preserve cut structure: quotients, contraction minors, 2-blocks.

A family of cuts induces an equivalence on vertices (never separated by any
family member); the quotient keeps exactly the non-internal edges and every
generating cut survives with an identical edge set. Contracting to an edge
set N collapses each weak component of the digraph minus N, and cuts inside
N correspond exactly between the digraph and the minor. Dibonds live in
single 2-blocks of the underlying multigraph, which yields a split, solve
per block, and merge pipeline whose result is re-verified independently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    Digraph,
    Dicut,
    dicut_from_edge_set,
    is_weakly_connected,
)
from .errors import PreconditionViolated, VerificationFailed
from .solver import (
    DibondClass,
    OptimalPair,
    _member_key,
    nested_optimal_pair,
    verify_optimal_pair,
)


@dataclass(frozen=True, eq=False)
class QuotientMap:
    """A vertex identification of one digraph together with the quotient.

    class_of sends every original vertex to its class id (the least vertex
    of the class); class ids are the quotient's vertices. edge_provenance
    sends each quotient edge id to the original edge it came from; edges
    internal to a class are dropped as loops and have no image. generators
    records the cuts that induced the identification, when any did.
    """

    digraph: Digraph
    quotient: Digraph
    class_of: dict
    edge_provenance: dict
    generators: tuple

    def classes(self) -> dict:
        """Class id -> sorted tuple of original vertices in that class."""
        out: dict = {}
        for v, c in self.class_of.items():
            out.setdefault(c, []).append(v)
        return {c: tuple(sorted(vs)) for c, vs in out.items()}


def _quotient_from_classes(digraph: Digraph, class_of: dict, generators: tuple) -> QuotientMap:
    edges = []
    provenance = {}
    for e, (t, h) in enumerate(digraph.edges):
        ct, ch = class_of[t], class_of[h]
        if ct == ch:
            continue
        provenance[len(edges)] = e
        edges.append((ct, ch))
    quotient = Digraph(set(class_of.values()), edges)
    return QuotientMap(
        digraph=digraph,
        quotient=quotient,
        class_of=dict(class_of),
        edge_provenance=provenance,
        generators=generators,
    )


def equivalence_classes(digraph: Digraph, cuts: Iterable) -> QuotientMap:
    """Quotient by a family of cuts: identify vertices no family member separates.

    Accepts directed and undirected cuts alike; two vertices share a class
    iff every listed cut has both on the same side. With no cuts everything
    collapses to one vertex; with all dicuts of a finite digraph the classes
    are exactly the strongly connected components.
    """
    cuts = tuple(cuts)
    for cut in cuts:
        if cut.digraph != digraph:
            raise ValueError("cut belongs to a different digraph")
    by_signature: dict = {}
    for v in sorted(digraph.vertices):
        sig = tuple(v in cut.sides[0] for cut in cuts)
        by_signature.setdefault(sig, []).append(v)
    class_of = {}
    for group in by_signature.values():
        cid = group[0]
        for v in group:
            class_of[v] = cid
    return _quotient_from_classes(digraph, class_of, generators=cuts)


def contract_to(digraph: Digraph, edge_ids: Iterable[int]) -> QuotientMap:
    """The contraction minor keeping exactly the given edges.

    Every weak component of the digraph minus the kept edges collapses to
    one vertex; kept edges that end up inside one component are dropped as
    loops. Keeping every edge is the identity; keeping none collapses a
    weakly connected digraph to a single vertex.
    """
    kept = frozenset(edge_ids)
    if not all(0 <= e < digraph.m for e in kept):
        raise ValueError("edge set contains unknown edge ids")
    class_of: dict = {}
    for v in sorted(digraph.vertices):
        if v in class_of:
            continue
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w, e in digraph.und_neighbors(u):
                if e not in kept and w not in seen:
                    seen.add(w)
                    queue.append(w)
        cid = min(seen)
        for w in seen:
            class_of[w] = cid
    qm = _quotient_from_classes(digraph, class_of, generators=())
    if set(qm.edge_provenance.values()) - kept:
        raise RuntimeError("internal error: contraction kept an edge outside the target set")
    return qm


def verify_cut_lift(digraph: Digraph, edge_ids: Iterable[int], b: Iterable[int]) -> bool:
    """Check that dicut and dibond status of an edge set agree between D and D.N.

    For B inside N, B is a dicut (respectively dibond) of the digraph iff
    the corresponding edges form one of the contraction minor to N. Returns
    whether both biconditionals hold.
    """
    kept = frozenset(edge_ids)
    b = frozenset(b)
    if not b <= kept:
        raise ValueError("the checked edge set must lie inside the kept edges")
    qm = contract_to(digraph, kept)
    original = dicut_from_edge_set(digraph, b)
    inverse = {orig: q for q, orig in qm.edge_provenance.items()}
    if all(e in inverse for e in b):
        minor = dicut_from_edge_set(qm.quotient, frozenset(inverse[e] for e in b))
    else:
        minor = None
    dicut_match = (original is not None) == (minor is not None)
    dibond_match = (original is not None and original.is_dibond) == (
        minor is not None and minor.is_dibond
    )
    return dicut_match and dibond_match


@dataclass(frozen=True, eq=False)
class BlockTree:
    """The 2-blocks and cutvertices of the underlying multigraph, as a tree.

    Blocks partition the edge set: a block is either a maximal 2-connected
    subgraph or the parallel class of a bridge. tree_edges lists the
    (cutvertex, block index) incidences of the block-cutvertex tree.
    """

    digraph: Digraph
    blocks: tuple
    cutvertices: frozenset
    tree_edges: tuple


def block_cut_tree(digraph: Digraph) -> BlockTree:
    """Blocks via a depth-first lowpoint sweep of the underlying multigraph.

    Requires a weakly connected digraph. Blocks are ordered by their least
    edge id; parallel edges are distinct, so a doubled bridge forms one
    two-edge block.
    """
    if not is_weakly_connected(digraph):
        raise ValueError("block decomposition requires a weakly connected digraph")
    disc: dict = {}
    low: dict = {}
    edge_stack: list = []
    raw_blocks: list = []
    counter = 0
    for root in sorted(digraph.vertices):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        frames = [(root, None, iter(sorted(digraph.und_neighbors(root))))]
        while frames:
            v, entry_edge, neighbors = frames[-1]
            descended = False
            for w, e in neighbors:
                if e == entry_edge:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append(e)
                    frames.append((w, e, iter(sorted(digraph.und_neighbors(w)))))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            frames.pop()
            if frames:
                parent = frames[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == entry_edge:
                            break
                    raw_blocks.append(frozenset(block))
    if edge_stack:
        raise RuntimeError("internal error: block sweep left unassigned edges")
    raw_blocks.sort(key=min)
    block_vertices = []
    for block in raw_blocks:
        verts = set()
        for e in block:
            verts.add(digraph.tail(e))
            verts.add(digraph.head(e))
        block_vertices.append(frozenset(verts))
    membership: dict = {}
    for i, verts in enumerate(block_vertices):
        for v in verts:
            membership.setdefault(v, []).append(i)
    cutvertices = frozenset(v for v, bs in membership.items() if len(bs) >= 2)
    tree_edges = tuple(
        (v, i) for v in sorted(cutvertices) for i in membership[v]
    )
    return BlockTree(
        digraph=digraph,
        blocks=tuple(raw_blocks),
        cutvertices=cutvertices,
        tree_edges=tree_edges,
    )


def split_solve_merge(digraph: Digraph, klass: DibondClass) -> Optional[OptimalPair]:
    """Solve per 2-block and merge, re-verifying against the whole class.

    Every dibond lies inside exactly one block, so the class splits by
    block; each sub-class is solved for a nested optimal pair on the full
    digraph and the pieces are concatenated. Members in different blocks
    are automatically disjoint and nested, which the final verification
    re-checks rather than assumes. Returns None exactly when some block
    has a genuine duality gap (possible only for user classes).
    """
    tree = block_cut_tree(digraph)
    by_block: dict = {}
    for member in klass.members:
        home = None
        for i, block in enumerate(tree.blocks):
            if member.edge_set <= block:
                home = i
                break
        if home is None:
            raise RuntimeError("internal error: a class member spans multiple blocks")
        by_block.setdefault(home, []).append(member)
    dijoin: set = set()
    family: list = []
    for i in sorted(by_block):
        sub = DibondClass(
            digraph=digraph,
            members=tuple(sorted(by_block[i], key=_member_key)),
            corner_closed=klass.corner_closed,
            tag=klass.tag,
        )
        pair = nested_optimal_pair(digraph, sub)
        if pair is None:
            return None
        dijoin |= pair.dijoin
        family.extend(pair.family)
    merged = OptimalPair(
        dijoin=frozenset(dijoin),
        family=tuple(sorted(family, key=_member_key)),
        nested=True,
        class_tag=klass.tag,
    )
    verify_optimal_pair(digraph, klass, merged)
    return merged


def _lift_in_shore(qm: QuotientMap, q_in_shore: frozenset) -> frozenset:
    members = qm.classes()
    lifted: set = set()
    for cid in q_in_shore:
        lifted.update(members[cid])
    return frozenset(lifted)


def _project_in_shore(qm: QuotientMap, in_shore: frozenset) -> frozenset:
    projected = set()
    for cid, members in qm.classes().items():
        inside = sum(1 for v in members if v in in_shore)
        if inside == len(members):
            projected.add(cid)
        elif inside != 0:
            raise VerificationFailed(
                "family member in-shore is not a union of quotient classes"
            )
    return frozenset(projected)


def quotient_lift(
    digraph: Digraph, qm: QuotientMap, pair: OptimalPair, direction: str = "lift"
) -> OptimalPair:
    """Restate an optimal pair across a quotient by its generating dibonds.

    direction "lift" takes a pair stated on the quotient back to the
    original digraph; "project" takes a pair stated on the original down to
    the quotient. Either way the restated pair is re-verified against the
    generator class on the target digraph, since a pair is optimal for the
    class exactly when its restatement is.
    """
    if direction not in ("lift", "project"):
        raise ValueError("direction must be 'lift' or 'project'")
    generators = qm.generators
    if not generators:
        raise PreconditionViolated("quotient has no generating cuts")
    for g in generators:
        if not isinstance(g, Dicut) or not g.is_dibond:
            raise PreconditionViolated("quotient generators must be dibonds")
    if direction == "lift":
        for e in pair.dijoin:
            if e not in qm.edge_provenance:
                raise ValueError("dijoin contains unknown quotient edge ids")
        new_dijoin = frozenset(qm.edge_provenance[e] for e in pair.dijoin)
        new_family = tuple(
            sorted(
                (Dicut(digraph, _lift_in_shore(qm, member.in_shore)) for member in pair.family),
                key=_member_key,
            )
        )
        klass = DibondClass.from_members(digraph, generators, tag=pair.class_tag)
        target = digraph
    else:
        inverse = {orig: q for q, orig in qm.edge_provenance.items()}
        for e in pair.dijoin:
            if e not in inverse:
                raise VerificationFailed("dijoin edge does not survive in the quotient")
        new_dijoin = frozenset(inverse[e] for e in pair.dijoin)
        new_family = tuple(
            sorted(
                (
                    Dicut(qm.quotient, _project_in_shore(qm, member.in_shore))
                    for member in pair.family
                ),
                key=_member_key,
            )
        )
        projected_generators = [
            Dicut(qm.quotient, _project_in_shore(qm, g.in_shore)) for g in generators
        ]
        klass = DibondClass.from_members(qm.quotient, projected_generators, tag=pair.class_tag)
        target = qm.quotient
    restated = OptimalPair(
        dijoin=new_dijoin,
        family=new_family,
        nested=pair.nested,
        class_tag=pair.class_tag,
    )
    verify_optimal_pair(target, klass, restated)
    return restated
