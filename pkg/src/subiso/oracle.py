"""Brute-force ground-truth enumerator.

Deliberately naive: candidates are filtered by vertex label only, every
injective assignment is enumerated, and each complete assignment is checked
with the full mapping verifier.  No degree, neighborhood, or connectivity
pruning is shared with any engine, so a bug in shared pruning logic cannot
mask itself here.  A hard size guard keeps it from being used where it
would crawl.
"""

from __future__ import annotations

from .errors import TooLargeForOracle
from .graph import LabeledGraph, Mapping, verify_mapping

MAX_QUERY_VERTICES = 8
MAX_DATA_VERTICES = 12


def oracle_enumerate(q: LabeledGraph, g: LabeledGraph) -> list[Mapping]:
    """All subgraph-isomorphism witnesses from ``q`` into ``g``.

    Raises :class:`TooLargeForOracle` beyond the size guard.
    """
    if q.num_vertices > MAX_QUERY_VERTICES or g.num_vertices > MAX_DATA_VERTICES:
        raise TooLargeForOracle(
            f"oracle guard: |V_q| <= {MAX_QUERY_VERTICES}, "
            f"|V_G| <= {MAX_DATA_VERTICES}")
    nq = q.num_vertices
    cands = [g.vertices_with_label(q.vertex_labels[u]) for u in range(nq)]
    image = [-1] * nq
    used = bytearray(g.num_vertices)
    out: list[Mapping] = []

    def assign(u: int) -> None:
        if u == nq:
            m = Mapping(image)
            if verify_mapping(q, g, m):
                out.append(m)
            return
        for v in cands[u]:
            if used[v]:
                continue
            image[u] = v
            used[v] = 1
            assign(u + 1)
            image[u] = -1
            used[v] = 0

    assign(0)
    return out


def oracle_dedupe_redundant(witnesses: list[Mapping], q: LabeledGraph,
                            g: LabeledGraph) -> list[Mapping]:
    """Collapse witnesses whose image subgraphs coincide.

    Witnesses are grouped by the set of data edges their query edges map
    onto; one representative (the first seen) is kept per group.
    """
    q_edges = [(u, v) for u, v, _ in q.edges()]
    seen: set = set()
    kept: list[Mapping] = []
    for m in witnesses:
        img = m.image
        edge_key = frozenset(
            (img[u], img[v]) if img[u] < img[v] else (img[v], img[u])
            for u, v in q_edges)
        key = (frozenset(img), edge_key)
        if key not in seen:
            seen.add(key)
            kept.append(m)
    return kept
