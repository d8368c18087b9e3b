"""Hypergraph machinery: matchings, covers, and path hypergraphs."""

from __future__ import annotations

import random

import pytest

from dicuts import (
    CapExceeded,
    DibondClass,
    Digraph,
    Hypergraph,
    Multigraph,
    dibond_hypergraph,
    fin_parameter_check,
    konig_property,
    max_disjoint_dicuts,
    menger_hypergraph,
    min_dijoin,
)

from .oracles import max_disjoint_path_count, random_multigraph_edges, random_weak_digraph


def diamond():
    return Digraph.from_edges([("s", "a"), ("s", "b"), ("a", "t"), ("b", "t")])


class TestHypergraph:
    def test_from_edges_collects_vertices(self):
        hg = Hypergraph.from_edges([{"a", "b"}, {"b", "c"}])
        assert hg.vertices == frozenset({"a", "b", "c"})
        assert len(hg.hyperedges) == 2
        assert hg.is_simple

    def test_duplicate_hyperedges_break_simplicity(self):
        hg = Hypergraph.from_edges([{"a", "b"}, {"b", "a"}])
        assert not hg.is_simple

    def test_empty_hyperedges_are_rejected(self):
        with pytest.raises(ValueError):
            Hypergraph(frozenset({"a"}), (frozenset(),))

    def test_hyperedges_must_stay_inside_the_vertices(self):
        with pytest.raises(ValueError):
            Hypergraph(frozenset({"a"}), (frozenset({"a", "b"}),))


class TestMultigraph:
    def test_neighbors_are_sorted_pairs(self):
        g = Multigraph(["a", "b", "x"], [("a", "x"), ("x", "b"), ("a", "x")])
        assert g.neighbors("x") == (("a", 0), ("a", 2), ("b", 1))

    def test_loops_are_rejected(self):
        with pytest.raises(ValueError):
            Multigraph(["a"], [("a", "a")])

    def test_undeclared_endpoints_are_rejected(self):
        with pytest.raises(ValueError):
            Multigraph(["a"], [("a", "b")])


class TestKonigProperty:
    def test_intersecting_pair_has_a_pair(self):
        hg = Hypergraph.from_edges([{"a", "b"}, {"b", "c"}])
        kp = konig_property(hg)
        assert kp is not None
        assert kp.matching == (frozenset({"a", "b"}),)
        assert kp.cover == frozenset({"b"})

    def test_triangle_has_none(self):
        hg = Hypergraph.from_edges([{"a", "b"}, {"b", "c"}, {"c", "a"}])
        assert konig_property(hg) is None

    def test_empty_hypergraph_has_the_trivial_pair(self):
        kp = konig_property(Hypergraph.from_edges([]))
        assert kp is not None
        assert kp.matching == () and kp.cover == frozenset()

    def test_cover_conditions_hold_when_present(self):
        rng = random.Random(71)
        for _ in range(60):
            universe = [f"x{i}" for i in range(rng.randint(2, 6))]
            hyperedges = []
            for _ in range(rng.randint(1, 5)):
                size = rng.randint(1, len(universe))
                hyperedges.append(frozenset(rng.sample(universe, size)))
            hg = Hypergraph.from_edges(hyperedges)
            kp = konig_property(hg)
            if kp is None:
                continue
            union = frozenset().union(*kp.matching) if kp.matching else frozenset()
            assert kp.cover <= union
            assert all(len(kp.cover & m) == 1 for m in kp.matching)
            assert all(kp.cover & h for h in hg.hyperedges)

    def test_matching_enumeration_cap(self):
        hyperedges = []
        for i in range(10):
            hyperedges.append(frozenset({f"x{i}", f"y{i}"}))
            hyperedges.append(frozenset({f"x{i}", f"z{i}"}))
        hg = Hypergraph.from_edges(hyperedges)
        with pytest.raises(CapExceeded) as info:
            konig_property(hg, cap=16)
        assert info.value.cap == 16


class TestDibondHypergraph:
    def test_diamond_hypergraph_mirrors_the_solver(self):
        d = diamond()
        hg = dibond_hypergraph(d)
        assert hg.vertices == frozenset({0, 1, 2, 3})
        assert sorted(map(sorted, hg.hyperedges)) == [
            [0, 1],
            [0, 3],
            [1, 2],
            [2, 3],
        ]
        kp = konig_property(hg)
        assert kp is not None
        assert len(kp.matching) == 2
        assert len(kp.cover) == len(min_dijoin(d, DibondClass.full(d)))

    def test_mirrors_the_solver_on_random_digraphs(self):
        rng = random.Random(73)
        for _ in range(50):
            d = random_weak_digraph(rng, max_n=6, max_extra=6)
            hg = dibond_hypergraph(d)
            klass = DibondClass.full(d)
            packing = len(max_disjoint_dicuts(d, klass))
            if not hg.hyperedges:
                assert packing == 0
                continue
            kp = konig_property(hg)
            assert kp is not None
            assert len(kp.matching) == packing
            assert len(kp.cover) == len(min_dijoin(d, klass))
            assert fin_parameter_check(hg)


class TestMengerHypergraph:
    def test_two_internally_disjoint_paths_share_their_endpoints(self):
        g = Multigraph(["a", "b", "x", "y"], [("a", "x"), ("x", "b"), ("a", "y"), ("y", "b")])
        hg = menger_hypergraph(g, {"a"}, {"b"})
        assert sorted(map(sorted, hg.hyperedges)) == [
            ["a", "b", "x"],
            ["a", "b", "y"],
        ]
        kp = konig_property(hg)
        assert kp is not None
        assert len(kp.matching) == 1 and kp.cover == frozenset({"a"})

    def test_shared_endpoint_gives_a_singleton_path(self):
        g = Multigraph(["p", "q"], [("p", "q")])
        hg = menger_hypergraph(g, {"p"}, {"p", "q"})
        assert sorted(map(sorted, hg.hyperedges)) == [["p"], ["p", "q"]]
        kp = konig_property(hg)
        assert kp is not None and len(kp.matching) == 1

    def test_paths_avoid_interior_terminal_vertices(self):
        g = Multigraph(
            ["a", "m", "b", "c"],
            [("a", "m"), ("m", "b"), ("b", "c")],
        )
        hg = menger_hypergraph(g, {"a"}, {"b", "c"})
        assert sorted(map(sorted, hg.hyperedges)) == [["a", "b", "m"]]

    def test_matches_the_flow_oracle_on_random_graphs(self):
        rng = random.Random(79)
        for _ in range(50):
            vertices, edges = random_multigraph_edges(rng, max_n=7, max_m=9)
            k = rng.randint(1, max(1, len(vertices) // 2))
            a_set = frozenset(rng.sample(vertices, k))
            b_set = frozenset(rng.sample(vertices, k))
            g = Multigraph(vertices, edges)
            hg = menger_hypergraph(g, a_set, b_set)
            kp = konig_property(hg)
            flow = max_disjoint_path_count(edges, a_set, b_set)
            if kp is not None:
                assert len(kp.matching) == flow


class TestParameterCheck:
    def test_holds_on_assorted_hypergraphs(self):
        samples = [
            Hypergraph.from_edges([]),
            Hypergraph.from_edges([{"a"}]),
            Hypergraph.from_edges([{"a", "b"}, {"b", "c"}, {"c", "a"}]),
            dibond_hypergraph(diamond()),
        ]
        assert all(fin_parameter_check(hg) for hg in samples)
