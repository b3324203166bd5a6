"""Path enumeration, canonical codes, covers, and cover ordering."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subiso import (
    MaxLTooLarge,
    build_graph,
    canonical_code,
    classify_iso,
    connectivity_after_removal,
    cover,
    density_rule_holds,
    enumerate_paths,
    order_cover,
    path_code,
)

from conftest import (
    A, B, X, Y, Z,
    complete_graph,
    random_connected,
    random_connected_with_edges,
    tri_query,
    twin_triangles,
)


class TestEnumeratePaths:
    def test_seven_edge_graph_has_21_paths_up_to_size_two(self):
        g = twin_triangles()
        paths = enumerate_paths(g, 2)
        assert len(paths) == 21
        assert sum(1 for p in paths if p.size == 1) == 7
        assert sum(1 for p in paths if p.size == 2) == 14

    def test_single_edge(self):
        g = build_graph([A, B], [(0, 1, X)])
        paths = enumerate_paths(g, 2)
        assert len(paths) == 1
        assert paths[0].code == (A, X, B)

    def test_triangle_at_size_one(self):
        assert len(enumerate_paths(tri_query(), 1)) == 3

    def test_each_undirected_path_listed_once(self):
        g = twin_triangles()
        seen = set()
        for p in enumerate_paths(g, 3):
            norm = (p.vertices if p.vertices[0] < p.vertices[-1]
                    else tuple(reversed(p.vertices)))
            assert norm not in seen
            seen.add(norm)

    def test_output_sorted_by_code(self):
        codes = [p.code for p in enumerate_paths(twin_triangles(), 2)]
        assert codes == sorted(codes)

    def test_maxl_guard(self):
        with pytest.raises(MaxLTooLarge):
            enumerate_paths(tri_query(), 5)
        with pytest.raises(ValueError):
            enumerate_paths(tri_query(), 0)


class TestIsoClassification:
    def test_palindromic_two_edge_path(self):
        g = build_graph([B, B, B], [(0, 1, Z), (1, 2, Z)])
        assert classify_iso((0, 1, 2), g)

    def test_non_iso_two_edge_path(self):
        # code A X A Y B reversed is B Y A X A
        g = build_graph([A, A, B], [(0, 1, X), (1, 2, Y)])
        assert not classify_iso((0, 1, 2), g)

    def test_one_edge_equal_endpoint_labels(self):
        g = build_graph([B, B], [(0, 1, X)])
        assert classify_iso((0, 1), g)

    def test_one_edge_unequal_endpoint_labels(self):
        g = build_graph([A, B], [(0, 1, X)])
        assert not classify_iso((0, 1), g)


class TestCanonicalCode:
    def test_lexicographic_minimum_of_both_orientations(self):
        g = build_graph([A, A, B], [(0, 1, X), (1, 2, Y)])
        assert canonical_code((0, 1, 2), g) == (A, X, A, Y, B)
        assert path_code(g, (2, 1, 0)) == (B, Y, A, X, A)

    def test_iso_path_code_equals_its_reversal(self):
        g = build_graph([B, B, B], [(0, 1, Z), (1, 2, Z)])
        assert canonical_code((0, 1, 2), g) == path_code(g, (2, 1, 0))

    def test_single_edge_orientation(self):
        g = build_graph([B, A], [(0, 1, X)])
        assert canonical_code((0, 1), g) == (A, X, B)

    def test_canonical_idempotence_over_enumeration(self):
        rng = random.Random(5)
        for _ in range(40):
            g = random_connected(rng, 8, 3, 2)
            for p in enumerate_paths(g, 3):
                assert canonical_code(p.vertices, g) == p.code
                assert p.is_iso == (p.code == p.code[::-1])


class TestCover:
    def test_seven_edges_cover_to_four_paths(self):
        g = twin_triangles()
        c = cover(g, enumerate_paths(g, 2), 2)
        assert len(c) == 4
        assert sorted(p.size for p in c.paths) == [1, 2, 2, 2]

    def test_complete_graph_seven_vertices(self):
        k7 = complete_graph(7)
        c = cover(k7, enumerate_paths(k7, 2), 2)
        assert len(c) == 11

    def test_single_edge(self):
        g = build_graph([A, B], [(0, 1, X)])
        c = cover(g, enumerate_paths(g, 2), 2)
        assert len(c) == 1 and c.paths[0].size == 1

    @pytest.mark.parametrize("maxL", [1, 2, 3])
    def test_disjoint_and_covering(self, maxL):
        rng = random.Random(100 + maxL)
        for _ in range(120):
            g = random_connected_with_edges(rng, rng.randint(2, 20))
            c = cover(g, enumerate_paths(g, maxL), maxL)
            covered = set()
            for p in c.paths:
                assert p.size <= maxL
                for e in p.edge_pairs():
                    assert e not in covered
                    covered.add(e)
            assert covered == {(u, v) for u, v, _ in g.edges()}

    def test_size_law_at_maxl_two(self):
        rng = random.Random(200)
        for _ in range(250):
            m = rng.randint(2, 20)
            g = random_connected_with_edges(rng, m)
            c = cover(g, enumerate_paths(g, 2), 2)
            assert len(c) == m // 2 + (m % 2)

    def test_vertex_freq_counts_paths_containing_vertex(self):
        g = twin_triangles()
        c = cover(g, enumerate_paths(g, 2), 2)
        for u in range(g.num_vertices):
            assert c.vertex_freq[u] == sum(
                1 for p in c.paths if u in p.vertices)


class TestOrderCover:
    def test_star_orders_hub_heavy_path_first(self):
        star = build_graph([A, B, B, B, B],
                           [(0, 1, X), (0, 2, X), (0, 3, Y), (0, 4, Y)])
        c = cover(star, enumerate_paths(star, 2), 2)
        ordered = order_cover(star, c)
        assert 0 in ordered.paths[0].vertices
        # every later path shares the hub with the prefix
        for p in ordered.paths[1:]:
            assert 0 in p.vertices

    def test_single_path_cover_unchanged(self):
        g = build_graph([A, B], [(0, 1, X)])
        c = cover(g, enumerate_paths(g, 2), 2)
        assert order_cover(g, c).paths == c.paths

    def test_chain_second_path_overlaps_first_in_one_vertex(self):
        chain = build_graph([A, B, A, B, A],
                            [(0, 1, X), (1, 2, Y), (2, 3, X), (3, 4, Y)])
        c = cover(chain, enumerate_paths(chain, 2), 2)
        ordered = order_cover(chain, c)
        assert len(ordered) == 2
        overlap = set(ordered.paths[0].vertices) & set(ordered.paths[1].vertices)
        assert len(overlap) == 1

    def test_output_is_permutation_of_input(self):
        rng = random.Random(300)
        for _ in range(80):
            g = random_connected_with_edges(rng, rng.randint(2, 16))
            c = cover(g, enumerate_paths(g, 2), 2)
            ordered = order_cover(g, c)
            assert sorted(map(id, ordered.paths)) == sorted(map(id, c.paths))


class TestConnectivityAfterRemoval:
    def test_triangle_minus_one_edge(self):
        residual = {(0, 1), (0, 2), (1, 2)}
        assert connectivity_after_removal(residual, [(0, 1)])

    def test_pendant_vertex_is_excluded(self):
        residual = {(0, 1), (1, 2)}
        assert connectivity_after_removal(residual, [(0, 1)])

    def test_bridge_between_triangles_disconnects(self):
        left = {(0, 1), (0, 2), (1, 2)}
        right = {(4, 5), (4, 6), (5, 6)}
        bridge = {(2, 4)}
        assert not connectivity_after_removal(left | right | bridge,
                                              [(2, 4)])

    def test_empty_residual_counts_as_connected(self):
        assert connectivity_after_removal({(0, 1)}, [(0, 1)])


class TestDensityRule:
    def test_matches_formula(self):
        rng = random.Random(17)
        for _ in range(60):
            g = random_connected(rng, 9, 3, 2, min_v=2)
            for maxL in (1, 2, 3):
                n = g.num_vertices
                expected = g.density < 2.0 * maxL / (n - 1)
                assert density_rule_holds(g, maxL) == expected
