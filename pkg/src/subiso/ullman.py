"""Baseline vertex-at-a-time matcher.

Query vertices are processed strictly in input order.  Admission combines
three refinement conditions: candidate sets filtered by vertex label and
degree, one-to-one use of data vertices, and preservation (with edge labels)
of every query edge into the already-mapped prefix.

The recursive skeleton here is shared with the neighborhood-filtering
engine, which differs only in vertex order and candidate sets.
"""

from __future__ import annotations

from time import perf_counter

from .errors import SearchTimeout
from .graph import LabeledGraph, Mapping
from .outcome import MatchOutcome, SearchStats, check_mode

# deadline polling stride inside the recursion (power of two minus one)
_CLOCK_MASK = 255


def ullman_candidates(q: LabeledGraph, g: LabeledGraph) -> list[tuple[int, ...]]:
    """Per-query-vertex candidates: equal vertex label and degree(u) <= degree(v)."""
    q_adj = q.adjacency
    g_adj = g.adjacency
    with_label = g.vertices_with_label
    out = []
    for u, lbl in enumerate(q.vertex_labels):
        du = len(q_adj[u])
        out.append(tuple([v for v in with_label(lbl) if len(g_adj[v]) >= du]))
    return out


def _search_plan(q: LabeledGraph, order: tuple[int, ...]):
    """Prefix-edge requirements per position, cached per (query, order)."""
    key = ("plan", order)
    plan = q._cache.get(key)
    if plan is None:
        pos_of = {u: i for i, u in enumerate(order)}
        plan = tuple(
            tuple((w, el) for w, el in q.adjacency[u] if pos_of[w] < i)
            for i, u in enumerate(order))
        q._cache[key] = plan
    return plan


def _search_vertices(q: LabeledGraph, g: LabeledGraph,
                     order: tuple[int, ...],
                     cands,
                     mode: str, deadline: float | None):
    """Depth-first search over per-position candidate lists.

    ``cands[i]`` holds the admissible data vertices for ``order[i]``.  The
    feasibility check enforces injectivity and label-exact prefix edges.
    Returns (found, witness, witnesses, calls, fails).
    """
    nq = q.num_vertices
    reqs = _search_plan(q, order)

    f = [-1] * nq
    used = bytearray(g.num_vertices)
    get_el = g._edge_label.get
    collect_all = mode == "count-all"
    want_witness = mode != "boolean"
    witnesses: list[Mapping] = []
    # entries counts every invocation; reported recursive calls exclude the root
    state = {"entries": 0, "fails": 0}

    def rec(i: int) -> bool:
        state["entries"] += 1
        if deadline is not None and state["entries"] & _CLOCK_MASK == 0 \
                and perf_counter() > deadline:
            raise SearchTimeout("containment check exceeded its deadline")
        u = order[i]
        last = i == nq - 1
        for v in cands[i]:
            if used[v]:
                state["fails"] += 1
                continue
            ok = True
            for w, el in reqs[i]:
                if get_el((v, f[w])) != el:
                    ok = False
                    break
            if not ok:
                state["fails"] += 1
                continue
            f[u] = v
            used[v] = 1
            if last:
                if collect_all:
                    witnesses.append(Mapping(f))
                    f[u] = -1
                    used[v] = 0
                    continue
                if want_witness:
                    witnesses.append(Mapping(f))
                f[u] = -1
                used[v] = 0
                return True
            if rec(i + 1):
                f[u] = -1
                used[v] = 0
                return True
            f[u] = -1
            used[v] = 0
        return False

    stopped = rec(0)
    found = stopped or bool(witnesses)
    witness = witnesses[0] if (want_witness and witnesses) else None
    return (found, witness, witnesses if collect_all else None,
            max(0, state["entries"] - 1), state["fails"])


def ullman_match(q: LabeledGraph, g: LabeledGraph, mode: str = "boolean",
                 deadline: float | None = None) -> MatchOutcome:
    """Decide containment of ``q`` in ``g`` with the baseline refinement.

    ``mode`` is ``boolean`` (stop at the first witness), ``witness``
    (also return the mapping), or ``count-all`` (enumerate every witness).
    """
    check_mode(mode)
    # the baseline re-applies its label and degree filter on every check;
    # it has no counterpart to the cached inclusion machinery by design
    q_adj = q.adjacency
    g_adj = g.adjacency
    with_label = g.vertices_with_label

    cands = []
    total = 0
    for u, lbl in enumerate(q.vertex_labels):
        du = len(q_adj[u])
        c = [v for v in with_label(lbl) if len(g_adj[v]) >= du]
        total += len(c)
        cands.append(c)

    order = tuple(range(q.num_vertices))
    found, witness, witnesses, calls, fails = _search_vertices(
        q, g, order, cands, mode, deadline)
    stats = SearchStats(
        recursive_calls=calls,
        feasibility_failures=fails,
        candidates_total=total,
        order=order,
    )
    return MatchOutcome(found, witness, witnesses, stats)
