"""Baseline vertex-at-a-time matcher."""

import random

from subiso import (
    build_graph,
    oracle_enumerate,
    ullman_candidates,
    ullman_match,
    verify_mapping,
)

from conftest import (
    A, B, X, Y,
    MIRROR_WITNESSES,
    TRI_WITNESSES,
    mirror_pair,
    random_connected,
    tri_query,
    twin_triangles,
    witness_images,
)


class TestCandidates:
    def test_label_and_degree_filter(self, tri_pair):
        q, g = tri_pair
        cands = ullman_candidates(q, g)
        assert cands[0] == (0, 1)
        assert set(cands[0]) <= {0, 1}

    def test_absent_label_gives_empty_set_and_false(self):
        q = build_graph([A, A], [(0, 1, X)])
        g = build_graph([B, B], [(0, 1, X)])
        assert ullman_candidates(q, g) == [(), ()]
        assert not ullman_match(q, g).found

    def test_reflexive_pair_admits_equal_degree_matches(self):
        g = tri_query()
        cands = ullman_candidates(g, g)
        for u in range(g.num_vertices):
            assert u in cands[u]


class TestMatch:
    def test_four_witnesses_on_example_pair(self, tri_pair):
        q, g = tri_pair
        out = ullman_match(q, g, "count-all")
        assert out.found
        assert witness_images(out) == TRI_WITNESSES

    def test_two_bijections_on_mirror_pair(self):
        g1, g2 = mirror_pair()
        out = ullman_match(g1, g2, "count-all")
        assert witness_images(out) == MIRROR_WITNESSES
        assert all(len(set(w.image)) == 4 for w in out.witnesses)

    def test_absent_labels_cost_no_recursion_past_root(self):
        q = build_graph([A, A], [(0, 1, X)])
        g = build_graph([B, B], [(0, 1, X)])
        out = ullman_match(q, g)
        assert not out.found
        assert out.stats.recursive_calls == 0

    def test_query_vertices_processed_in_input_order(self, tri_pair):
        q, g = tri_pair
        out = ullman_match(q, g)
        assert out.stats.order == (0, 1, 2)

    def test_witness_mode_returns_verified_mapping(self, tri_pair):
        q, g = tri_pair
        out = ullman_match(q, g, "witness")
        assert out.found and verify_mapping(q, g, out.witness)

    def test_boolean_mode_stops_early(self, tri_pair):
        q, g = tri_pair
        fast = ullman_match(q, g, "boolean")
        full = ullman_match(q, g, "count-all")
        assert fast.found and full.found
        assert fast.stats.recursive_calls <= full.stats.recursive_calls

    def test_verdicts_match_oracle(self):
        rng = random.Random(41)
        for _ in range(400):
            q = random_connected(rng, 6, 4, 3)
            g = random_connected(rng, 9, 4, 3)
            expected = bool(oracle_enumerate(q, g))
            assert ullman_match(q, g).found == expected

    def test_all_witnesses_verify(self):
        rng = random.Random(43)
        for _ in range(200):
            q = random_connected(rng, 5, 3, 2)
            g = random_connected(rng, 8, 3, 2)
            out = ullman_match(q, g, "count-all")
            for w in out.witnesses:
                assert verify_mapping(q, g, w)

    def test_witness_set_equals_oracle(self):
        rng = random.Random(47)
        for _ in range(200):
            q = random_connected(rng, 5, 4, 3)
            g = random_connected(rng, 8, 4, 3)
            mine = witness_images(ullman_match(q, g, "count-all"))
            theirs = {w.image for w in oracle_enumerate(q, g)}
            assert mine == theirs
