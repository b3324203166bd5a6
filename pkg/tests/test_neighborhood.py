"""Labeled neighborhoods, multiset inclusion, and the inclusion matrix."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subiso import (
    IndexOutOfRange,
    build_graph,
    build_index,
    compute_neighborhood,
    multiset_includes,
    neighborhood_table,
    oracle_enumerate,
)

from conftest import A, B, X, Y, tri_query, twin_triangles, random_connected


class TestComputeNeighborhood:
    def test_data_vertex_with_duplicate_entries(self):
        g = twin_triangles()
        assert compute_neighborhood(g, 0) == ((A, X), (B, Y), (B, Y))

    def test_query_vertex(self):
        q = tri_query()
        assert compute_neighborhood(q, 0) == ((B, Y), (B, Y))

    def test_single_neighbor(self):
        g = build_graph([A, B], [(0, 1, X)])
        assert compute_neighborhood(g, 0) == ((B, X),)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            compute_neighborhood(tri_query(), 5)


class TestMultisetIncludes:
    def test_duplicates_required_and_present(self):
        assert multiset_includes(((B, Y), (B, Y)), ((A, X), (B, Y), (B, Y)))

    def test_multiplicity_shortfall(self):
        assert not multiset_includes(((B, Y), (B, Y)), ((B, Y),))

    def test_empty_included_in_anything(self):
        assert multiset_includes((), ((A, X),))
        assert multiset_includes((), ())

    def test_not_included_when_entry_missing(self):
        assert not multiset_includes(((A, Y),), ((A, X), (B, Y)))


pair = st.tuples(st.integers(0, 3), st.integers(0, 2))


@given(st.lists(pair, max_size=6), st.lists(pair, max_size=6))
@settings(max_examples=200)
def test_inclusion_matches_counting_semantics(a, b):
    """Two-pointer merge equals the counting definition of multiset inclusion."""
    sa, sb = tuple(sorted(a)), tuple(sorted(b))
    expected = all(sa.count(x) <= sb.count(x) for x in set(sa))
    assert multiset_includes(sa, sb) == expected


@given(st.lists(pair, max_size=6), st.lists(pair, max_size=6))
@settings(max_examples=100)
def test_inclusion_implies_size_bound(a, b):
    sa, sb = tuple(sorted(a)), tuple(sorted(b))
    if multiset_includes(sa, sb):
        assert len(sa) <= len(sb)


class TestBuildIndex:
    def test_distinct_table_sizes(self, tri_pair):
        q, g = tri_pair
        qt, gt, _ = build_index(q, g)
        assert len(qt) == 2
        assert len(gt) == 3

    def test_position_array_points_to_own_neighborhood(self):
        g = twin_triangles()
        t = neighborhood_table(g)
        for u in range(g.num_vertices):
            assert t.entries[t.position[u]] == compute_neighborhood(g, u)

    def test_self_pair_diagonal_is_all_ones(self):
        g = tri_query()
        qt, gt, m = build_index(g, g)
        for u in range(g.num_vertices):
            assert m.test(qt.position[u], gt.position[u])

    def test_matrix_equals_direct_inclusion_exhaustively(self):
        rng = random.Random(23)
        for _ in range(150):
            q = random_connected(rng, 8, 3, 2)
            g = random_connected(rng, 12, 3, 2)
            qt, gt, m = build_index(q, g)
            for u in range(q.num_vertices):
                for v in range(g.num_vertices):
                    direct = multiset_includes(compute_neighborhood(q, u),
                                               compute_neighborhood(g, v))
                    assert m.test(qt.position[u], gt.position[v]) == direct

    def test_no_oracle_witness_is_ever_excluded(self):
        rng = random.Random(29)
        for _ in range(200):
            q = random_connected(rng, 5, 3, 2)
            g = random_connected(rng, 8, 3, 2)
            qt, gt, m = build_index(q, g)
            for w in oracle_enumerate(q, g):
                for u, v in enumerate(w.image):
                    assert m.test(qt.position[u], gt.position[v])
