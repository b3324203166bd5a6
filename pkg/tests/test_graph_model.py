"""Graph construction, validation, and mapping verification."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subiso import (
    Disconnected,
    DuplicateEdge,
    IncompleteMapping,
    IndexOutOfRange,
    LabelTable,
    Mapping,
    SelfLoop,
    build_graph,
    identity_mapping,
    oracle_enumerate,
    verify_mapping,
)

from conftest import (
    A, B, X, Y, Z,
    random_connected,
    tri_query,
    twin_triangles,
)


class TestLabelTable:
    def test_interning_is_bijective(self):
        t = LabelTable()
        ids = [t.intern(s) for s in ("C", "O", "N", "C", "O")]
        assert ids == [0, 1, 2, 0, 1]
        assert [t.name_of(i) for i in range(3)] == ["C", "O", "N"]
        assert "C" in t and "H" not in t
        assert len(t) == 3


class TestBuildGraph:
    def test_triangle_query_degrees(self):
        q = tri_query()
        assert q.degrees == (2, 2, 2)
        assert q.num_edges == 3

    def test_single_edge_size(self):
        g = build_graph([A, B], [(0, 1, X)])
        assert g.size == 1

    def test_duplicate_edge_rejected_even_with_distinct_labels(self):
        with pytest.raises(DuplicateEdge):
            build_graph([A, B], [(0, 1, X), (0, 1, Y)])

    def test_duplicate_edge_rejected_reversed(self):
        with pytest.raises(DuplicateEdge):
            build_graph([A, B, B], [(0, 1, X), (1, 0, X), (1, 2, X)])

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoop):
            build_graph([A, B], [(0, 0, X), (0, 1, X)])

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            build_graph([A, B], [(0, 2, X)])

    def test_disconnected_rejected(self):
        with pytest.raises(Disconnected):
            build_graph([A, A, B, B], [(0, 1, X), (2, 3, X)])

    def test_disconnected_allowed_when_requested(self):
        g = build_graph([A, A, B, B], [(0, 1, X), (2, 3, X)],
                        require_connected=False)
        assert not g.is_connected

    def test_adjacency_sorted_by_label_then_edge_label(self):
        g = twin_triangles()
        # neighbors of vertex 3: A vertices (Y) before B vertices (Z)
        labels = [g.vertex_labels[v] for v, _ in g.adjacency[3]]
        assert labels == sorted(labels)

    def test_single_vertex_graph(self):
        g = build_graph([A], [])
        assert g.num_vertices == 1 and g.num_edges == 0 and g.is_connected

    def test_edge_label_lookup_both_orientations(self):
        g = tri_query()
        assert g.edge_label(0, 1) == Y == g.edge_label(1, 0)
        assert g.edge_label(0, 1) is not None
        assert not g.has_edge(0, 0)


@given(st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_degree_sum_is_twice_edge_count(rnd):
    g = random_connected(rnd, 10, 3, 2)
    assert sum(g.degrees) == 2 * g.num_edges


class TestVerifyMapping:
    def test_valid_witness(self, tri_pair):
        q, g = tri_pair
        assert verify_mapping(q, g, Mapping((0, 2, 3)))

    def test_invalid_mapping_edge_label_mismatch(self, tri_pair):
        q, g = tri_pair
        # (0, 1) carries X in the data graph but the query needs Y
        assert not verify_mapping(q, g, Mapping((0, 1, 2)))

    def test_one_vertex_identity(self):
        q = build_graph([A], [])
        g = build_graph([A], [])
        assert verify_mapping(q, g, Mapping((0,)))

    def test_incomplete_mapping_raises(self, tri_pair):
        q, g = tri_pair
        with pytest.raises(IncompleteMapping):
            verify_mapping(q, g, Mapping((0, None, 2)))
        with pytest.raises(IncompleteMapping):
            verify_mapping(q, g, Mapping((0, 1)))

    def test_non_injective_is_false(self, tri_pair):
        q, g = tri_pair
        assert not verify_mapping(q, g, Mapping((0, 3, 3)))

    def test_every_graph_contains_itself(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_connected(rng, 9, 3, 2)
            assert verify_mapping(g, g, identity_mapping(g))

    def test_agrees_with_oracle_witnesses(self):
        rng = random.Random(11)
        for _ in range(120):
            q = random_connected(rng, 5, 3, 2)
            g = random_connected(rng, 8, 3, 2)
            for w in oracle_enumerate(q, g):
                assert verify_mapping(q, g, w)
