import random

import pytest
from hypothesis import given, settings

import oracles
from conftest import connected_graphs, graph_pairs_for_corona, random_graph
from equidim import Graph, GraphError, INFINITY, corona, degree_profile, join
from equidim.families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    wheel_graph,
)


class TestConstruction:
    def test_path_p3(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.neighbors(1) == (0, 2)

    def test_singleton(self):
        g = Graph(1, [])
        assert g.n == 1 and g.m == 0

    def test_fish_edge_set(self, fish):
        assert fish.n == 6 and fish.m == 8
        expected = {(1, 3), (3, 2), (2, 4), (4, 1), (1, 2), (3, 5), (5, 6), (6, 3)}
        got = {
            (min(fish.label_of(u), fish.label_of(v)), max(fish.label_of(u), fish.label_of(v)))
            for u, v in fish.edges
        }
        assert got == {(min(e), max(e)) for e in expected}

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match="outside"):
            Graph(3, [(0, 3)])

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            Graph(3, [(1, 1)])

    def test_bad_order_rejected(self):
        with pytest.raises(GraphError):
            Graph(0, [])

    def test_labels_must_be_distinct(self):
        with pytest.raises(GraphError, match="distinct"):
            Graph(2, [], labels=(7, 7))

    def test_label_round_trip(self, fish):
        for v in range(fish.n):
            assert fish.index_of(fish.label_of(v)) == v
        with pytest.raises(GraphError, match="unknown vertex label"):
            fish.index_of(99)


class TestDistances:
    def test_p3_end_to_end(self):
        assert path_graph(3).distance(0, 2) == 2

    def test_c5_radius_two(self):
        assert max(max(row) for row in cycle_graph(5).distances) == 2

    def test_k5_corona_diameter(self):
        # Frozen from the definition-level oracle on the explicit product.
        k5 = complete_graph(5)
        product = corona(k5, empty_graph(1)).product
        oracle = oracles.floyd_warshall(product.n, product.edges)
        assert max(max(r) for r in oracle) == 3
        assert max(max(r) for r in product.distances) == 3

    def test_disconnected_sentinel(self):
        g = Graph(2, [])
        assert g.distance(0, 1) is INFINITY

    def test_matches_floyd_warshall_on_random_graphs(self):
        rng = random.Random(411)
        for _ in range(100):
            n = rng.randint(1, 32)
            g = random_graph(rng, n, rng.choice((0.05, 0.1, 0.3)))
            assert [list(r) for r in g.distances] == oracles.floyd_warshall(n, g.edges)

    @given(connected_graphs(max_n=9))
    def test_metric_axioms(self, g):
        d = g.distances
        for u in range(g.n):
            assert d[u][u] == 0
            for v in range(g.n):
                assert d[u][v] == d[v][u]
                for w in range(g.n):
                    assert d[u][v] <= d[u][w] + d[w][v]


class TestConnectivity:
    def test_singleton_connected(self):
        assert Graph(1).is_connected

    def test_two_isolated_vertices(self):
        assert not Graph(2).is_connected

    def test_corona_connected_iff_base_is(self):
        assert corona(cycle_graph(3), path_graph(2)).product.is_connected
        assert not corona(Graph(2), path_graph(2)).product.is_connected


class TestCorona:
    def test_c3_p2_layout(self):
        cg = corona(cycle_graph(3), path_graph(2))
        # triangle 0-1-2, copy of vertex i on {3+2i, 4+2i}, each joined to i
        expected = {(0, 1), (0, 2), (1, 2)}
        for i in range(3):
            a, b = 3 + 2 * i, 4 + 2 * i
            expected |= {(a, b), (i, a), (i, b)}
        assert set(cg.product.edges) == expected
        assert cg.product.n == 9

    def test_matches_definition_level_construction(self):
        g, h = cycle_graph(4), path_graph(3)
        n, edges = oracles.corona_edges(g.n, g.edges, h.n, h.edges)
        product = corona(g, h).product
        assert product.n == n
        assert set(product.edges) == {(min(e), max(e)) for e in edges}

    def test_k1_base_is_universal(self):
        cg = corona(Graph(1), cycle_graph(4))
        assert cg.product.degree(0) == 4

    def test_cross_copy_distance(self):
        cg = corona(cycle_graph(3), path_graph(2))
        u, w = cg.copy_vertex(0, 0), cg.copy_vertex(1, 1)
        assert cg.product.distance(u, w) == cg.base.distance(0, 1) + 2 == 3

    def test_vertex_kind_total(self):
        cg = corona(path_graph(2), path_graph(3))
        kinds = [cg.kind(v) for v in range(cg.product.n)]
        assert kinds[:2] == [("base", 0), ("base", 1)]
        assert kinds[2] == ("copy", 0, 0) and kinds[-1] == ("copy", 1, 2)
        with pytest.raises(GraphError):
            cg.kind(cg.product.n)

    def test_projections(self):
        cg = corona(cycle_graph(3), path_graph(2))
        s = {0, 2, cg.copy_vertex(1, 0), cg.copy_vertex(1, 1), cg.copy_vertex(2, 1)}
        assert cg.lower_projection(s) == frozenset({0, 2})
        assert cg.upper_projection(s) == frozenset({1, 2})

    @given(graph_pairs_for_corona())
    @settings(max_examples=60)
    def test_distance_law_exhaustive(self, pair):
        g, h = pair
        cg = corona(g, h)
        d = cg.product.distances
        dg, dh = g.distances, h.distances
        for x in range(cg.product.n):
            kx = cg.kind(x)
            for y in range(x + 1, cg.product.n):
                ky = cg.kind(y)
                if kx[0] == "base" and ky[0] == "base":
                    want = dg[x][y]
                elif kx[0] == "copy" and ky[0] == "copy":
                    if kx[1] == ky[1]:
                        want = min(dh[kx[2]][ky[2]], 2)
                    else:
                        want = dg[kx[1]][ky[1]] + 2
                else:
                    base, copy = (kx, ky) if ky[0] == "copy" else (ky, kx)
                    want = dg[base[1]][copy[1]] + 1
                assert d[x][y] == want


class TestJoin:
    def test_wheel_is_join_of_hub_and_rim(self):
        assert join(Graph(1), cycle_graph(4)) == wheel_graph(5)

    def test_k2_from_two_singletons(self):
        assert join(Graph(1), Graph(1)) == complete_graph(2)

    def test_complete_bipartite_from_empty_parts(self):
        assert join(empty_graph(2), empty_graph(3)) == complete_bipartite_graph(2, 3)

    @given(connected_graphs(max_n=5), connected_graphs(max_n=5))
    @settings(max_examples=40)
    def test_order_and_cross_edges(self, g1, g2):
        j = join(g1, g2)
        assert j.n == g1.n + g2.n
        assert all(j.has_edge(u, g1.n + v) for u in range(g1.n) for v in range(g2.n))


class TestDegreeProfile:
    def test_k5_corona_max_degree(self):
        product = corona(complete_graph(5), empty_graph(1)).product
        assert degree_profile(product).max_degree == 5

    def test_c6_eccentricities(self):
        assert degree_profile(cycle_graph(6)).eccentricities == (3,) * 6

    def test_fish_radius(self, fish):
        # Frozen from a BFS/Floyd-Warshall sweep: eccentricities (2,2,2,3,3,3).
        oracle = oracles.floyd_warshall(fish.n, fish.edges)
        assert min(max(row) for row in oracle) == 2
        profile = degree_profile(fish)
        assert profile.radius == 2 and profile.diameter == 3

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError, match="connected"):
            degree_profile(Graph(3, [(0, 1)]))
