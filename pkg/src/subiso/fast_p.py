"""Path-at-a-time matcher.

Instead of mapping one query vertex per recursion level, the query is
decomposed into an ordered cover of edge-disjoint paths and one whole path
is mapped per level.  Candidates for a cover path are the data paths with
the same canonical code that also pass a positional neighborhood-inclusion
test; palindromic (iso) query paths admit each undirected data path in both
orientations, all others only forward-aligned.

Overlapping cover paths must agree on shared vertex images.  That is
enforced by per-vertex use counters on both sides plus the image map h and
an inverse image map: a position (u, v) is acceptable only if both vertices
are unused or u is already mapped exactly to v.  Counters are decremented
on backtrack and h/inverse entries cleared only when the use count reaches
zero, so the state unwinds completely whether or not a witness was found.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import NamedTuple

from .errors import SearchTimeout
from .graph import LabeledGraph, Mapping, verify_mapping
from .neighborhood import timed_index
from .outcome import MatchOutcome, SearchStats, check_mode
from .paths import (
    DEFAULT_MAXL_CAP,
    CanonicalPath,
    PathCover,
    cover,
    enumerate_paths,
    order_cover,
)

_CLOCK_MASK = 255


class PathCandidate(NamedTuple):
    """One admissible traversal of a data path, aligned with the query path.

    ``aligned[j]`` is the image of the j-th vertex of the query path's
    canonical orientation; ``key`` identifies the underlying undirected data
    path (its canonical vertex tuple) so that two orientations of one path
    cannot be consumed as if they were distinct structures.
    """

    aligned: tuple[int, ...]
    key: tuple[int, ...]


@dataclass(frozen=True)
class MaxLChoice:
    """Chosen path size bound plus a flag for the density guidance failing."""

    value: int
    warned: bool


def size_rule_holds(q: LabeledGraph, maxL: int) -> bool:
    """|E_q| / |V_q| < maxL, evaluated exactly."""
    return q.num_edges < maxL * q.num_vertices


def choose_maxL(q: LabeledGraph, requested: int | None = None,
                cap: int = DEFAULT_MAXL_CAP) -> MaxLChoice:
    """Pick the path size bound for a query.

    An explicit request is honored, flagged when it violates the size rule.
    Otherwise the default is 2 whenever the rule already holds there, else
    the smallest satisfying value, clamped (and flagged) at ``cap``.
    """
    if requested is not None:
        return MaxLChoice(requested, not size_rule_holds(q, requested))
    smallest = q.num_edges // q.num_vertices + 1
    value = max(2, smallest)
    if value > cap:
        return MaxLChoice(cap, True)
    return MaxLChoice(value, False)


def query_cover(q: LabeledGraph, maxL: int,
                cap: int = DEFAULT_MAXL_CAP) -> PathCover:
    """Ordered disjoint-path cover of ``q``, cached per (graph, maxL)."""
    key = ("cover", maxL)
    cached = q._cache.get(key)
    if cached is None:
        cached = order_cover(q, cover(q, enumerate_paths(q, maxL, cap), maxL))
        q._cache[key] = cached
    return cached


def graph_path_index(g: LabeledGraph, maxL: int,
                     cap: int = DEFAULT_MAXL_CAP) -> dict:
    """Data-side paths grouped by canonical code, cached per (graph, maxL)."""
    key = ("path_index", maxL)
    cached = g._cache.get(key)
    if cached is None:
        index: dict[tuple, list[CanonicalPath]] = {}
        for p in enumerate_paths(g, maxL, cap):
            index.setdefault(p.code, []).append(p)
        cached = {code: tuple(ps) for code, ps in index.items()}
        g._cache[key] = cached
    return cached


def fast_p_candidates(cov: PathCover, g_paths, index) -> list[list[PathCandidate]]:
    """Candidate traversals for every cover path.

    ``g_paths`` is either the data graph's path list or a prebuilt
    code-to-paths mapping; ``index`` is the neighborhood index triple for
    the (query, data) pair.  A data path with matching code is admitted
    forward-aligned when every position passes the inclusion bit test, and
    (for iso query paths only) reverse-aligned under the mirrored test.
    """
    if isinstance(g_paths, dict):
        by_code = g_paths
    else:
        by_code = {}
        for p in g_paths:
            by_code.setdefault(p.code, []).append(p)
    qt, gt, matrix = index
    rows = matrix.rows
    qpos = qt.position
    gpos = gt.position

    out: list[list[PathCandidate]] = []
    for p in cov.paths:
        cands: list[PathCandidate] = []
        matches = by_code.get(p.code)
        if matches:
            qverts = p.vertices
            k = len(qverts)
            qrows = [rows[qpos[u]] for u in qverts]
            for cand in matches:
                gverts = cand.vertices
                if all(qrows[i] >> gpos[gverts[i]] & 1 for i in range(k)):
                    cands.append(PathCandidate(gverts, gverts))
                if p.is_iso:
                    if all(qrows[i] >> gpos[gverts[k - 1 - i]] & 1
                           for i in range(k)):
                        cands.append(PathCandidate(gverts[::-1], gverts))
        out.append(cands)
    return out


def _label_only_match(q, g, mode):
    """Single-vertex queries have an empty cover; match on the label alone."""
    label = q.vertex_labels[0]
    hits = g.vertices_with_label(label)
    stats = SearchStats(candidates_total=len(hits), order=((0,),))
    if not hits:
        return MatchOutcome(False, None, [] if mode == "count-all" else None,
                            stats)
    if mode == "count-all":
        return MatchOutcome(True, None, [Mapping((v,)) for v in hits], stats)
    witness = Mapping((hits[0],)) if mode == "witness" else None
    return MatchOutcome(True, witness, None, stats)


def fast_p_match(q: LabeledGraph, g: LabeledGraph, maxL: int = 2,
                 mode: str = "boolean", deadline: float | None = None,
                 cap: int = DEFAULT_MAXL_CAP) -> MatchOutcome:
    """Containment check by stitching cover-path assignments.

    Decides the same predicate as the vertex-at-a-time matchers for any
    ``maxL``; a complete consistent assignment of all cover paths yields the
    stitched vertex map as the witness.
    """
    check_mode(mode)
    cov = query_cover(q, maxL, cap)
    if not cov.paths:
        return _label_only_match(q, g, mode)
    by_code = graph_path_index(g, maxL, cap)
    qt, gt, matrix, index_seconds = timed_index(q, g)
    cand_lists = fast_p_candidates(cov, by_code, (qt, gt, matrix))

    order = q._cache.get(("cover_order", maxL))
    if order is None:
        order = tuple(p.vertices for p in cov.paths)
        q._cache[("cover_order", maxL)] = order
    npaths = len(order)
    stats = SearchStats(
        candidates_total=sum(map(len, cand_lists)),
        index_seconds=index_seconds,
        order=order,
    )
    collect_all = mode == "count-all"

    nq = q.num_vertices
    ng = g.num_vertices
    u_count = [0] * nq
    v_count = [0] * ng
    h = [-1] * nq
    inverse = [-1] * ng
    matched: set[tuple[int, ...]] = set()
    witnesses: list[Mapping] = []
    want_witness = mode != "boolean"
    # entries counts every invocation; reported recursive calls exclude the root
    state = {"entries": 0, "fails": 0}

    def rec(i: int) -> bool:
        state["entries"] += 1
        if deadline is not None and state["entries"] & _CLOCK_MASK == 0 \
                and perf_counter() > deadline:
            raise SearchTimeout("containment check exceeded its deadline")
        qverts = order[i]
        last = i == npaths - 1
        for aligned, key in cand_lists[i]:
            if key in matched:
                state["fails"] += 1
                continue
            ok = True
            for u, v in zip(qverts, aligned):
                if ((u_count[u] or v_count[v]) and h[u] != v) or \
                        (inverse[v] != -1 and inverse[v] != u):
                    ok = False
                    break
            if not ok:
                state["fails"] += 1
                continue
            matched.add(key)
            for u, v in zip(qverts, aligned):
                u_count[u] += 1
                v_count[v] += 1
                h[u] = v
                inverse[v] = u
            if last:
                wit = Mapping(h)
                assert verify_mapping(q, g, wit)
                witnesses.append(wit)
                done = not collect_all
            else:
                done = rec(i + 1)
            for u, v in zip(qverts, aligned):
                u_count[u] -= 1
                v_count[v] -= 1
                if u_count[u] == 0:
                    h[u] = -1
                if v_count[v] == 0:
                    inverse[v] = -1
            matched.discard(key)
            if done:
                return True
        return False

    stopped = rec(0)
    found = stopped or bool(witnesses)
    stats.recursive_calls = max(0, state["entries"] - 1)
    stats.feasibility_failures = state["fails"]
    stats.state_clean = (not matched
                         and not any(u_count) and not any(v_count)
                         and h.count(-1) == nq and inverse.count(-1) == ng)
    witness = witnesses[0] if (want_witness and witnesses) else None
    return MatchOutcome(found, witness, witnesses if collect_all else None,
                        stats)
