"""Shared fixtures: canonical example graphs and random-graph helpers.

Labels are interned in alphabetical order so integer comparisons agree with
the intuitive string order used in the worked examples.
"""

import random

import pytest

from subiso import LabelTable, build_graph

VL = LabelTable(["A", "B"])
EL = LabelTable(["_", "X", "Y", "Z"])
A, B = VL.id_of("A"), VL.id_of("B")
X, Y, Z = EL.id_of("X"), EL.id_of("Y"), EL.id_of("Z")


def tri_query():
    """Triangle query: one A vertex joined to two B vertices (Y edges),
    B vertices joined by a Z edge.  Has 4 embeddings in twin_triangles()."""
    return build_graph([A, B, B], [(0, 1, Y), (0, 2, Y), (1, 2, Z)])


def twin_triangles():
    """5-vertex, 7-edge data graph: two A vertices bridged by an X edge,
    each sitting on a Y/Y/Z triangle of B vertices sharing vertex 3."""
    return build_graph(
        [A, A, B, B, B],
        [(0, 1, X), (0, 2, Y), (0, 3, Y), (1, 3, Y), (1, 4, Y),
         (2, 3, Z), (3, 4, Z)])


# all witnesses of tri_query in twin_triangles, as image tuples
TRI_WITNESSES = {(0, 2, 3), (0, 3, 2), (1, 3, 4), (1, 4, 3)}


def mirror_pair():
    """Two isomorphic 4-vertex graphs with exactly two bijective witnesses:
    (0,1,3,2) and (1,0,2,3).  The query's only nontrivial automorphism is
    the simultaneous swap of its A pair and its B pair."""
    g1 = build_graph([A, A, B, B], [(0, 1, X), (0, 2, Y), (1, 3, Y)])
    g2 = build_graph([A, A, B, B], [(0, 1, X), (0, 3, Y), (1, 2, Y)])
    return g1, g2


MIRROR_WITNESSES = {(0, 1, 3, 2), (1, 0, 2, 3)}


def hub_tree():
    """4-leaf tree whose hub is vertex 3: two A leaves on Y edges, two B
    leaves on Z edges.  Has exactly 4 embeddings in twin_triangles(), all
    with the same image edge set."""
    return build_graph([A, A, B, B, B],
                       [(0, 3, Y), (1, 3, Y), (2, 3, Z), (3, 4, Z)])


def complete_graph(n, vlabel=A, elabel=X):
    return build_graph([vlabel] * n,
                       [(i, j, elabel) for i in range(n)
                        for j in range(i + 1, n)])


def random_connected(rng: random.Random, max_v: int, n_vlabels: int,
                     n_elabels: int, min_v: int = 1):
    """Random connected simple graph: spanning tree plus random extras."""
    n = rng.randint(min_v, max_v)
    vlabels = [rng.randrange(n_vlabels) for _ in range(n)]
    edges = []
    seen = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v, rng.randrange(n_elabels)))
        seen.add((u, v))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)
            if (u, v) not in seen]
    rng.shuffle(pool)
    for u, v in pool[:rng.randint(0, max(0, n))]:
        edges.append((u, v, rng.randrange(n_elabels)))
    return build_graph(vlabels, edges)


def random_connected_with_edges(rng: random.Random, m: int,
                                n_vlabels: int = 4, n_elabels: int = 3):
    """Random connected simple graph with exactly ``m`` edges."""
    lo = max(2, int((1 + (1 + 8 * m) ** 0.5) // 2))
    n = rng.randint(lo, m + 1)
    while n * (n - 1) // 2 < m:
        n += 1
    vlabels = [rng.randrange(n_vlabels) for _ in range(n)]
    edges = []
    seen = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v, rng.randrange(n_elabels)))
        seen.add((u, v))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)
            if (u, v) not in seen]
    rng.shuffle(pool)
    for u, v in pool[:m - len(edges)]:
        edges.append((u, v, rng.randrange(n_elabels)))
    assert len(edges) == m
    return build_graph(vlabels, edges)


def witness_images(outcome):
    """Set of image tuples from a count-all outcome."""
    return {w.image for w in outcome.witnesses}


@pytest.fixture
def tri_pair():
    return tri_query(), twin_triangles()
