"""Brute-force oracles and corpus generators.

Everything in this module is deliberately independent of the package's
own algorithms: shores are enumerated as raw subsets, connectivity is
plain BFS, minima are found by exhausting subsets in size order, and
flows use integral augmenting paths.  A disagreement between an oracle
and the package therefore always indicts the fast path, never a shared
helper.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from dicuts import Dicut, Digraph


# ---------------------------------------------------------------------------
# connectivity helpers


def und_adjacency(digraph):
    adj = {v: set() for v in digraph.vertices}
    for t, h in digraph.edges:
        adj[t].add(h)
        adj[h].add(t)
    return adj


def connected_subset(digraph, vertices):
    """True when the given vertices induce one weak component."""
    vertices = set(vertices)
    if not vertices:
        return True
    adj = und_adjacency(digraph)
    seen = {next(iter(sorted(vertices)))}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w in vertices and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == vertices


def reachable_within(digraph, edge_ids, source):
    """Vertices reachable from source using only the given edge ids."""
    out = {v: [] for v in digraph.vertices}
    for e in edge_ids:
        out[digraph.tail(e)].append(digraph.head(e))
    seen = {source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in out[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def kosaraju_scc(digraph):
    """Strongly connected components as a frozenset of frozensets."""
    order = []
    seen = set()
    out = {v: [] for v in digraph.vertices}
    rev = {v: [] for v in digraph.vertices}
    for t, h in digraph.edges:
        out[t].append(h)
        rev[h].append(t)
    for root in sorted(digraph.vertices):
        if root in seen:
            continue
        stack = [(root, iter(out[root]))]
        seen.add(root)
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w not in seen:
                    seen.add(w)
                    stack.append((w, iter(out[w])))
                    advanced = True
                    break
            if not advanced:
                order.append(v)
                stack.pop()
    comps = []
    assigned = set()
    for root in reversed(order):
        if root in assigned:
            continue
        comp = {root}
        queue = deque([root])
        assigned.add(root)
        while queue:
            v = queue.popleft()
            for w in rev[v]:
                if w not in assigned:
                    assigned.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return frozenset(comps)


# ---------------------------------------------------------------------------
# brute cut enumeration


def brute_dicuts(digraph):
    """Every dicut, found by testing all proper nonempty shores."""
    vertices = sorted(digraph.vertices)
    found = {}
    for r in range(1, len(vertices)):
        for combo in itertools.combinations(vertices, r):
            shore = frozenset(combo)
            closed = all(
                h in shore for t, h in digraph.edges if t in shore
            )
            if closed:
                found[shore] = Dicut(digraph, shore)
    return list(found.values())


def brute_dibonds(digraph):
    """Dicuts whose two shores each induce one weak component."""
    bonds = []
    for cut in brute_dicuts(digraph):
        if not cut.edge_set:
            continue
        if connected_subset(digraph, cut.in_shore) and connected_subset(
            digraph, cut.out_shore
        ):
            bonds.append(cut)
    return bonds


def brute_dibond_partitions(digraph, edge_set, bonds=None):
    """All ways to split edge_set into pairwise disjoint dibonds."""
    if bonds is None:
        bonds = brute_dibonds(digraph)
    usable = [b for b in bonds if b.edge_set <= edge_set]
    usable.sort(key=lambda b: sorted(b.edge_set))
    results = []

    def extend(remaining, chosen):
        if not remaining:
            results.append(tuple(chosen))
            return
        anchor = min(remaining)
        for b in usable:
            if anchor in b.edge_set and b.edge_set <= remaining:
                chosen.append(b)
                extend(remaining - b.edge_set, chosen)
                chosen.pop()

    extend(frozenset(edge_set), [])
    return results


# ---------------------------------------------------------------------------
# brute optimization


def hits_every(edge_ids, cuts):
    chosen = frozenset(edge_ids)
    return all(chosen & c.edge_set for c in cuts)


def brute_min_dijoin(digraph, cuts=None):
    """Smallest edge set meeting every nonempty dicut, by subset sweep."""
    if cuts is None:
        cuts = [c for c in brute_dicuts(digraph) if c.edge_set]
    ids = list(digraph.edge_ids())
    for r in range(0, len(ids) + 1):
        for combo in itertools.combinations(ids, r):
            if hits_every(combo, cuts):
                return frozenset(combo)
    raise AssertionError("no hitting set found")


def brute_max_packing(cuts):
    """Largest pairwise edge-disjoint subfamily, by branch and bound."""
    cuts = [c for c in cuts if c.edge_set]
    cuts.sort(key=lambda c: len(c.edge_set))
    best = []

    def extend(i, chosen, used):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if i == len(cuts) or len(chosen) + (len(cuts) - i) <= len(best):
            return
        c = cuts[i]
        if not (c.edge_set & used):
            chosen.append(c)
            extend(i + 1, chosen, used | c.edge_set)
            chosen.pop()
        extend(i + 1, chosen, used)

    extend(0, [], frozenset())
    return best


# ---------------------------------------------------------------------------
# witness oracle


def crosses_every_separation(digraph, edge_ids, v, w):
    """Quantified form: both directions crossed for every v/w split."""
    others = sorted(digraph.vertices - {v, w})
    chosen = frozenset(edge_ids)
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            side = frozenset(combo) | {v}
            forward = any(
                e in chosen
                for e in digraph.edge_ids()
                if digraph.tail(e) in side and digraph.head(e) not in side
            )
            backward = any(
                e in chosen
                for e in digraph.edge_ids()
                if digraph.head(e) in side and digraph.tail(e) not in side
            )
            if not (forward and backward):
                return False
    return True


def mutually_reachable_within(digraph, edge_ids, v, w):
    return w in reachable_within(digraph, edge_ids, v) and v in reachable_within(
        digraph, edge_ids, w
    )


# ---------------------------------------------------------------------------
# corpora


def exhaustive_three_vertex_corpus():
    """All weakly connected digraphs on {a,b,c} with at most 6 edges.

    Parallel edges are included up to multiplicity 2 per ordered pair.
    """
    vertices = ("a", "b", "c")
    pairs = [(t, h) for t in vertices for h in vertices if t != h]
    corpus = []
    for mults in itertools.product(range(3), repeat=len(pairs)):
        total = sum(mults)
        if total == 0 or total > 6:
            continue
        edges = []
        for pair, k in zip(pairs, mults):
            edges.extend([pair] * k)
        digraph = Digraph.from_edges(edges, isolated=vertices)
        if connected_subset(digraph, digraph.vertices):
            corpus.append(digraph)
    return corpus


def exhaustive_simple_digraphs(n, max_edges):
    """All weakly connected simple digraphs on n labelled vertices."""
    vertices = tuple(f"v{i}" for i in range(n))
    arcs = [(t, h) for t in vertices for h in vertices if t != h]
    corpus = []
    for r in range(1, max_edges + 1):
        for combo in itertools.combinations(arcs, r):
            digraph = Digraph.from_edges(combo, isolated=vertices)
            if connected_subset(digraph, digraph.vertices):
                corpus.append(digraph)
    return corpus


def random_weak_digraph(rng, max_n=7, max_extra=7, parallels=True):
    """Random weakly connected digraph built from an oriented tree."""
    n = rng.randint(2, max_n)
    vertices = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(1, n):
        other = vertices[rng.randrange(i)]
        pair = (vertices[i], other)
        if rng.random() < 0.5:
            pair = (other, vertices[i])
        edges.append(pair)
    for _ in range(rng.randint(0, max_extra)):
        t, h = rng.sample(vertices, 2)
        if not parallels and (t, h) in edges:
            continue
        edges.append((t, h))
    return Digraph.from_edges(edges)


def random_multigraph_edges(rng, max_n=8, max_m=12):
    """Random connected loopless undirected edge list on string names."""
    n = rng.randint(2, max_n)
    vertices = [f"u{i}" for i in range(n)]
    edges = []
    for i in range(1, n):
        edges.append((vertices[rng.randrange(i)], vertices[i]))
    while len(edges) < rng.randint(n - 1, max_m):
        a, b = rng.sample(vertices, 2)
        edges.append((a, b))
    return vertices, edges


# ---------------------------------------------------------------------------
# disjoint path oracle


def max_disjoint_path_count(edges, a_set, b_set):
    """Maximum number of fully vertex-disjoint A-B paths.

    Paths may touch A and B only at their endpoints.  Computed with a
    unit-capacity node-split flow network and augmenting BFS, so the
    value is exact.
    """
    a_set = frozenset(a_set)
    b_set = frozenset(b_set)
    vertices = set(a_set) | set(b_set)
    for u, v in edges:
        vertices.add(u)
        vertices.add(v)

    capacity = {}

    def add(u, v):
        capacity.setdefault(u, {})[v] = capacity.get(u, {}).get(v, 0) + 1
        capacity.setdefault(v, {}).setdefault(u, 0)

    for v in vertices:
        add(("in", v), ("out", v))
    for u, v in edges:
        if u == v:
            continue
        if u not in a_set - b_set and v not in b_set - a_set:
            add(("out", v), ("in", u))
        if v not in a_set - b_set and u not in b_set - a_set:
            add(("out", u), ("in", v))
    for a in a_set:
        add("S", ("in", a))
    for b in b_set:
        add(("out", b), "T")

    flow = 0
    while True:
        parent = {"S": None}
        queue = deque(["S"])
        while queue and "T" not in parent:
            u = queue.popleft()
            for v, cap in capacity.get(u, {}).items():
                if cap > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if "T" not in parent:
            return flow
        v = "T"
        while parent[v] is not None:
            u = parent[v]
            capacity[u][v] -= 1
            capacity[v][u] += 1
            v = u
        flow += 1
