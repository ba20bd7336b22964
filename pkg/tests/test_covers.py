import random
from itertools import combinations

import pytest
from hypothesis import given, settings

import oracles
from conftest import connected_graphs, labelset, random_graph
from equidim import (
    BudgetError,
    Graph,
    GraphError,
    clique_number,
    empty_bisector_graph,
    enumerate_vertex_covers,
    independence_number,
    is_vertex_cover,
    min_cover_containing,
    vertex_cover_number,
)
from equidim.families import (
    chorded_path_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
)


@pytest.fixture(scope="module")
def fish_ghat(fish):
    return empty_bisector_graph(fish).graph


class TestIsVertexCover:
    def test_complete_bipartite_parts(self):
        g = complete_bipartite_graph(2, 2)
        assert is_vertex_cover(g, {0, 1})
        assert is_vertex_cover(g, {2, 3})

    def test_single_vertex_fails_on_c4(self):
        assert not is_vertex_cover(cycle_graph(4), {0})

    def test_fish_ghat_single_cover(self, fish, fish_ghat):
        assert is_vertex_cover(fish_ghat, labelset(fish, 4))

    def test_rejects_foreign_vertices(self):
        with pytest.raises(GraphError, match="outside"):
            is_vertex_cover(cycle_graph(3), {5})


class TestVertexCoverNumber:
    def test_fish_ghat(self, fish, fish_ghat):
        result = vertex_cover_number(fish_ghat)
        assert result.value == 1
        assert result.witness == labelset(fish, 4)

    def test_chorded_path_ghat(self):
        g = chorded_path_graph()
        ghat = empty_bisector_graph(g).graph
        assert vertex_cover_number(ghat).value == 4

    def test_k5_leaves_ghat(self, k5_leaves):
        ghat = empty_bisector_graph(k5_leaves).graph
        assert vertex_cover_number(ghat).value == 5

    def test_budget_cap(self):
        with pytest.raises(BudgetError, match="out of budget"):
            vertex_cover_number(empty_graph(29))
        vertex_cover_number(empty_graph(28))
        with pytest.raises(BudgetError):
            vertex_cover_number(empty_graph(12), max_order=11)

    def test_matches_subset_scan_on_corpus(self):
        rng = random.Random(7011)
        for _ in range(60):
            n = rng.randint(1, 9)
            g = random_graph(rng, n, rng.choice((0.2, 0.4, 0.7)))
            size, witness = oracles.min_vertex_cover(n, g.edges)
            result = vertex_cover_number(g)
            assert result.value == size
            assert result.witness == frozenset(witness)

    def test_sparse_sixteen_vertex_instances(self):
        rng = random.Random(88)
        for _ in range(5):
            g = random_graph(rng, 16, 0.15)
            size, _ = oracles.min_vertex_cover(16, g.edges)
            assert vertex_cover_number(g).value == size


class TestIndependenceNumber:
    def test_fish_ghat(self, fish_ghat):
        assert independence_number(fish_ghat).value == 5

    def test_pendant_triangle_ghat(self, pendant_triangle):
        ghat = empty_bisector_graph(pendant_triangle).graph
        assert independence_number(ghat).value == 5

    def test_triangle(self):
        assert independence_number(complete_graph(3)).value == 1

    @given(connected_graphs(max_n=9))
    @settings(max_examples=50)
    def test_gallai_identity_and_witness(self, g):
        alpha = independence_number(g)
        beta = vertex_cover_number(g)
        assert alpha.value + beta.value == g.n
        assert alpha.witness == frozenset(range(g.n)) - beta.witness
        assert alpha.value == oracles.max_independent_set_size(g.n, g.edges)


class TestCliqueNumber:
    def test_k5_leaves(self, k5_leaves):
        result = clique_number(k5_leaves)
        assert result.value == 5
        assert result.witness == labelset(k5_leaves, 1, 2, 3, 4, 5)

    def test_c5(self):
        assert clique_number(cycle_graph(5)).value == 2

    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_complete(self, n):
        assert clique_number(complete_graph(n)).value == n

    def test_matches_subset_scan(self):
        rng = random.Random(909)
        for _ in range(40):
            n = rng.randint(1, 9)
            g = random_graph(rng, n, rng.choice((0.3, 0.6)))
            result = clique_number(g)
            assert result.value == oracles.max_clique_size(n, g.edges)
            assert all(g.has_edge(u, v) for u, v in combinations(sorted(result.witness), 2))

    def test_witness_is_lexicographically_first(self):
        rng = random.Random(515)
        for _ in range(25):
            n = rng.randint(2, 8)
            g = random_graph(rng, n, 0.5)
            result = clique_number(g)
            first = next(
                combo
                for combo in combinations(range(n), result.value)
                if all(g.has_edge(u, v) for u, v in combinations(combo, 2))
            )
            assert result.witness == frozenset(first)


class TestMinCoverContaining:
    def test_triangle_forced_vertex(self):
        result = min_cover_containing(complete_graph(3), {0}, {0, 1, 2})
        assert result.value == 2
        assert result.witness == frozenset({0, 1})

    def test_fish_ghat_tail(self, fish, fish_ghat):
        # Frozen from a subset scan over the subsets of {4, 5, 6}.
        restrict = labelset(fish, 4, 5, 6)
        result = min_cover_containing(fish_ghat, frozenset(), restrict)
        assert result.value == 1
        assert result.witness == labelset(fish, 4)

    def test_forced_equals_restriction(self):
        g = cycle_graph(5)
        result = min_cover_containing(g, {1, 2, 3}, {1, 2, 3})
        assert result.value == 3 and result.witness == frozenset({1, 2, 3})

    def test_forced_outside_restriction_rejected(self):
        with pytest.raises(GraphError, match="inside"):
            min_cover_containing(cycle_graph(4), {0}, {1, 2})

    @given(connected_graphs(max_n=7))
    @settings(max_examples=40)
    def test_matches_definition(self, g):
        rng = random.Random(g.n * 1000 + g.m)
        restrict = frozenset(v for v in range(g.n) if rng.random() < 0.7)
        forced = frozenset(v for v in restrict if rng.random() < 0.3)
        result = min_cover_containing(g, forced, restrict)
        inner = [(u, v) for u, v in g.edges if u in restrict and v in restrict]
        best = None
        for k in range(len(restrict) + 1):
            for combo in combinations(sorted(restrict), k):
                chosen = set(combo)
                if forced <= chosen and all(u in chosen or v in chosen for u, v in inner):
                    best = (k, chosen)
                    break
            if best:
                break
        assert result.value == best[0]
        assert result.witness == frozenset(best[1])


class TestEnumerateCovers:
    def test_fish_ghat_unique_minimum(self, fish, fish_ghat):
        assert list(enumerate_vertex_covers(fish_ghat, 1)) == [labelset(fish, 4)]

    def test_edgeless_size_zero(self):
        assert list(enumerate_vertex_covers(empty_graph(3), 0)) == [frozenset()]

    def test_c4_opposite_pairs(self):
        # Frozen by enumerating all 2-subsets of the 4-cycle.
        got = list(enumerate_vertex_covers(cycle_graph(4), 2))
        assert got == [frozenset({0, 2}), frozenset({1, 3})]

    def test_stream_order_contract(self):
        g = cycle_graph(5)
        seen = list(enumerate_vertex_covers(g, 5))
        keyed = [(len(s), tuple(sorted(s))) for s in seen]
        assert keyed == sorted(keyed)
        assert len(set(keyed)) == len(keyed)

    @given(connected_graphs(max_n=6))
    @settings(max_examples=30)
    def test_complete_and_upward_closed(self, g):
        seen = set(enumerate_vertex_covers(g, g.n))
        for mask in range(1 << g.n):
            s = frozenset(v for v in range(g.n) if mask >> v & 1)
            assert (s in seen) == is_vertex_cover(g, s)
        for s in seen:
            for v in range(g.n):
                assert s | {v} in seen

    def test_bad_max_size(self):
        with pytest.raises(GraphError):
            list(enumerate_vertex_covers(cycle_graph(3), 4))
