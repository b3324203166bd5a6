"""Simple-path enumeration, canonical codes, and disjoint path covers.

A path is kept as a tuple of distinct vertex indices with consecutive pairs
adjacent.  Its code interleaves vertex and edge labels; the canonical form
is the lexicographically smaller of the code and its reversal, so each
undirected path has exactly one canonical representative.  Paths whose code
is palindromic ("iso" paths) equal their own reversal and are the one case
where a data path must later be tried in both orientations.

The cover routine decomposes a connected query into edge-disjoint paths of
bounded size that jointly cover every edge, greedily taking the largest
acceptable path whose removal keeps the residual connected.  For a size
bound of 2 the result is compact: floor(|E|/2) two-edge paths plus one
leftover edge when |E| is odd.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CoverIncomplete, GraphError, MaxLTooLarge
from .graph import LabeledGraph

SimplePath = tuple[int, ...]
PathCode = tuple[int, ...]

# Path counts explode on dense graphs; enumeration refuses bounds above this
# unless the caller raises the cap explicitly.
DEFAULT_MAXL_CAP = 4


def path_code(g: LabeledGraph, vertices: Sequence[int]) -> PathCode:
    """Label code of a path: l(v0) l(v0,v1) l(v1) ... l(vk)."""
    labels = g.vertex_labels
    get = g._edge_label.get
    code = [labels[vertices[0]]]
    for a, b in zip(vertices, vertices[1:]):
        el = get((a, b))
        if el is None:
            raise GraphError(f"({a}, {b}) is not an edge")
        code.append(el)
        code.append(labels[b])
    return tuple(code)


def classify_iso(p: Sequence[int], g: LabeledGraph) -> bool:
    """True iff the path's label code is palindromic (an "iso" path)."""
    code = path_code(g, p)
    return code == code[::-1]


def canonical_code(p: Sequence[int], g: LabeledGraph) -> PathCode:
    """Lexicographic minimum of the path's code and its reversal."""
    code = path_code(g, p)
    rev = code[::-1]
    return code if code <= rev else rev


@dataclass(frozen=True)
class CanonicalPath:
    """An undirected simple path stored in its canonical orientation.

    ``orientation`` records which direction won canonicalization relative to
    the direction the path was discovered in.
    """

    vertices: tuple[int, ...]
    code: PathCode
    is_iso: bool
    orientation: str  # "forward" | "reversed"

    @property
    def size(self) -> int:
        return len(self.vertices) - 1

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        """Normalized (min, max) vertex pairs of the path's edges."""
        vs = self.vertices
        return tuple((a, b) if a < b else (b, a) for a, b in zip(vs, vs[1:]))

    def __repr__(self) -> str:
        return f"CanonicalPath({list(self.vertices)}, code={list(self.code)})"


def make_canonical(g: LabeledGraph, vertices: Sequence[int]) -> CanonicalPath:
    """Canonicalize a vertex sequence into a :class:`CanonicalPath`."""
    code = path_code(g, vertices)
    rev = code[::-1]
    if code <= rev:
        canon, orientation = tuple(vertices), "forward"
        final = code
    else:
        canon, orientation = tuple(reversed(vertices)), "reversed"
        final = rev
    return CanonicalPath(canon, final, code == rev, orientation)


def enumerate_paths(g: LabeledGraph, maxL: int,
                    cap: int = DEFAULT_MAXL_CAP) -> list[CanonicalPath]:
    """All undirected simple paths of size 1..maxL, one entry each.

    Every path appears exactly once, in canonical orientation, sorted by
    code (ties by vertex tuple) for deterministic candidate lookup.
    """
    if maxL < 1:
        raise ValueError("maxL must be >= 1")
    if maxL > cap:
        raise MaxLTooLarge(f"maxL={maxL} exceeds cap={cap}")
    adjacency = g.adjacency
    out: list[CanonicalPath] = []
    stack: list[int] = []
    on_path = bytearray(g.num_vertices)

    def extend(last: int) -> None:
        for v, _ in adjacency[last]:
            if on_path[v]:
                continue
            stack.append(v)
            # one representative per undirected path: smaller endpoint first
            if stack[0] < v:
                out.append(make_canonical(g, stack))
            if len(stack) <= maxL:
                on_path[v] = 1
                extend(v)
                on_path[v] = 0
            stack.pop()

    for s in range(g.num_vertices):
        stack.append(s)
        on_path[s] = 1
        extend(s)
        on_path[s] = 0
        stack.pop()

    out.sort(key=lambda p: (p.code, p.vertices))
    return out


def connectivity_after_removal(residual_edges: Iterable[tuple[int, int]],
                               path_edges: Iterable[tuple[int, int]]) -> bool:
    """Would the residual stay connected after removing a path's edges?

    Vertices left with no incident edge are excluded from the check; a
    residual with zero edges counts as connected.
    """
    remaining = set(residual_edges)
    remaining.difference_update(path_edges)
    if not remaining:
        return True
    adj: dict[int, list[int]] = {}
    for a, b in remaining:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    start = next(iter(adj))
    seen = {start}
    queue = deque((start,))
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(adj)


@dataclass(frozen=True)
class PathCover:
    """An ordered edge-disjoint set of paths covering a query's edges.

    ``vertex_freq[u]`` counts the cover paths containing query vertex u.
    """

    paths: tuple[CanonicalPath, ...]
    maxL: int
    vertex_freq: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.paths)


def cover(q: LabeledGraph, paths: Sequence[CanonicalPath],
          maxL: int | None = None) -> PathCover:
    """Greedy edge-disjoint path cover of ``q`` drawn from ``paths``.

    Candidates are scanned largest-first (code order within equal size); a
    path is taken iff its edges all remain in the residual and removing them
    keeps the residual connected.  The scan restarts after each take:
    removals can make previously rejected candidates acceptable, and a
    single pass may otherwise strand residual edges behind bridges.
    """
    if maxL is None:
        maxL = max((p.size for p in paths), default=1)
    ranked = sorted(paths, key=lambda p: (-p.size, p.code, p.vertices))
    residual = {(u, v) for u, v, _ in q.edges()}
    taken: list[CanonicalPath] = []
    while residual:
        for p in ranked:
            pe = p.edge_pairs()
            if all(e in residual for e in pe) and \
                    connectivity_after_removal(residual, pe):
                residual.difference_update(pe)
                taken.append(p)
                break
        else:
            raise CoverIncomplete(
                f"{len(residual)} residual edges not coverable at maxL={maxL}")
    freq = [0] * q.num_vertices
    for p in taken:
        for u in p.vertices:
            freq[u] += 1
    return PathCover(tuple(taken), maxL, tuple(freq))


def order_cover(q: LabeledGraph, c: PathCover) -> PathCover:
    """Reorder a cover so each path overlaps the already-ordered ones most.

    The first path maximizes the summed vertex frequency over the cover;
    each next path maximizes its vertex overlap with the union of the
    vertices ordered so far.  Ties keep the earliest path in cover order.
    """
    remaining = list(c.paths)
    if not remaining:
        return c
    freq = c.vertex_freq
    first = max(remaining, key=lambda p: sum(freq[u] for u in p.vertices))
    remaining.remove(first)
    ordered = [first]
    seen = set(first.vertices)
    while remaining:
        nxt = max(remaining, key=lambda p: len(seen.intersection(p.vertices)))
        remaining.remove(nxt)
        ordered.append(nxt)
        seen.update(nxt.vertices)
    return PathCover(tuple(ordered), c.maxL, c.vertex_freq)


def density_rule_holds(q: LabeledGraph, maxL: int) -> bool:
    """Density form of the size-bound guidance: d_q < 2 maxL / (|V|-1)."""
    n = q.num_vertices
    if n < 2:
        return True
    return q.density < 2.0 * maxL / (n - 1)
