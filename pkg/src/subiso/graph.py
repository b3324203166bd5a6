"""Core labeled-graph representation.

Graphs are undirected, simple (no self-loops, no duplicate edges) and carry
one integer label per vertex and per edge.  Labels are small integers
interned from a string alphabet by :class:`LabelTable`; a query and the data
graphs it is matched against must share the same tables so that equal ids
mean equal labels.

Graphs are immutable after construction and may be shared freely across
concurrent searches.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    GraphError,
    IncompleteMapping,
    IndexOutOfRange,
    SelfLoop,
)


class LabelTable:
    """Bijective string-to-integer interning table for a label alphabet."""

    def __init__(self, reserved: Sequence[str] = ()):
        self._ids: dict[str, int] = {}
        self._names: list[str] = []
        for name in reserved:
            self.intern(name)

    def intern(self, name: str) -> int:
        """Return the id for ``name``, assigning the next free id if new."""
        lid = self._ids.get(name)
        if lid is None:
            lid = len(self._names)
            self._ids[name] = lid
            self._names.append(name)
        return lid

    def id_of(self, name: str) -> int:
        return self._ids[name]

    def name_of(self, lid: int) -> str:
        return self._names[lid]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    def __contains__(self, name: str) -> bool:
        return name in self._ids

    def __len__(self) -> int:
        return len(self._names)

    def __repr__(self) -> str:
        return f"LabelTable({self._names!r})"


class LabeledGraph:
    """An undirected simple graph with integer vertex and edge labels.

    Adjacency lists are sorted by (neighbor label, edge label, neighbor
    index) so that every traversal in the toolkit is run-to-run
    reproducible.  Use :func:`build_graph` instead of constructing directly.
    """

    __slots__ = (
        "vertex_labels",
        "adjacency",
        "num_edges",
        "graph_id",
        "is_connected",
        "token",
        "_edge_label",
        "_cache",
    )

    _tokens = itertools.count()

    def __init__(self, vertex_labels, adjacency, edge_label, num_edges,
                 is_connected, graph_id=None):
        self.vertex_labels: tuple[int, ...] = vertex_labels
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = adjacency
        self.num_edges: int = num_edges
        self.graph_id = graph_id
        self.is_connected: bool = is_connected
        # process-unique id used to key per-pair memoized structures
        self.token: int = next(LabeledGraph._tokens)
        # both orientations keyed for O(1) lookups in the search inner loops
        self._edge_label: dict[tuple[int, int], int] = edge_label
        self._cache: dict = {}

    # -- basic queries -----------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_labels)

    @property
    def size(self) -> int:
        """|G|, the number of edges."""
        return self.num_edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_label

    def edge_label(self, u: int, v: int) -> Optional[int]:
        """Label of edge (u, v), or None if the edge is absent."""
        return self._edge_label.get((u, v))

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, label) with u < v, in sorted order."""
        for (u, v), lbl in sorted(self._edge_label.items()):
            if u < v:
                yield u, v, lbl

    @property
    def density(self) -> float:
        """2|E| / (|V| (|V|-1)); zero for graphs with fewer than 2 vertices."""
        n = self.num_vertices
        if n < 2:
            return 0.0
        return 2.0 * self.num_edges / (n * (n - 1))

    def vertices_with_label(self, label: int) -> tuple[int, ...]:
        """Vertices carrying ``label``, cached per graph."""
        table = self._cache.get("label_vertices")
        if table is None:
            table = {}
            for v, lbl in enumerate(self.vertex_labels):
                table.setdefault(lbl, []).append(v)
            table = {lbl: tuple(vs) for lbl, vs in table.items()}
            self._cache["label_vertices"] = table
        return table.get(label, ())

    def __repr__(self) -> str:
        gid = f" id={self.graph_id!r}" if self.graph_id is not None else ""
        return (f"<LabeledGraph{gid} |V|={self.num_vertices} "
                f"|E|={self.num_edges}>")


def build_graph(vertex_labels: Sequence[int],
                edges: Iterable[tuple[int, int, int]],
                *,
                require_connected: bool = True,
                graph_id=None) -> LabeledGraph:
    """Validate and construct a :class:`LabeledGraph`.

    ``edges`` is an iterable of (u, v, edge_label) index triples.  Raises
    :class:`IndexOutOfRange`, :class:`SelfLoop`, :class:`DuplicateEdge`, or
    :class:`Disconnected` (the last only when ``require_connected``).
    """
    labels = tuple(int(l) for l in vertex_labels)
    n = len(labels)
    if n == 0:
        raise GraphError("graph must have at least one vertex")

    edge_label: dict[tuple[int, int], int] = {}
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    m = 0
    for u, v, lbl in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if (u, v) in edge_label:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})")
        edge_label[(u, v)] = lbl
        edge_label[(v, u)] = lbl
        adj[u].append((v, lbl))
        adj[v].append((u, lbl))
        m += 1

    for u in range(n):
        adj[u].sort(key=lambda e: (labels[e[0]], e[1], e[0]))
    adjacency = tuple(tuple(a) for a in adj)

    connected = _connected(n, adjacency)
    if require_connected and not connected:
        raise Disconnected(f"graph {graph_id!r} is not connected")

    return LabeledGraph(labels, adjacency, edge_label, m, connected, graph_id)


def _connected(n: int, adjacency) -> bool:
    if n <= 1:
        return True
    seen = bytearray(n)
    seen[0] = 1
    queue = deque((0,))
    count = 1
    while queue:
        u = queue.popleft()
        for v, _ in adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == n


class Mapping:
    """A (possibly partial) injective map from query vertices to data vertices.

    ``image[u]`` is the data vertex assigned to query vertex ``u`` or None.
    Instances are value objects: hashable, comparable by image.
    """

    __slots__ = ("image",)

    def __init__(self, image: Sequence[Optional[int]]):
        self.image: tuple[Optional[int], ...] = tuple(image)

    @property
    def complete(self) -> bool:
        return all(v is not None for v in self.image)

    def as_tuple(self) -> tuple[Optional[int], ...]:
        return self.image

    def __getitem__(self, u: int) -> Optional[int]:
        return self.image[u]

    def __len__(self) -> int:
        return len(self.image)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mapping) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Mapping({list(self.image)})"


def identity_mapping(g: LabeledGraph) -> Mapping:
    return Mapping(range(g.num_vertices))


def verify_mapping(q: LabeledGraph, g: LabeledGraph, m: Mapping) -> bool:
    """Check that ``m`` witnesses a subgraph isomorphism from ``q`` into ``g``.

    The mapping must be total and injective, preserve vertex labels, and map
    every query edge onto a data edge with the same edge label.  Data edges
    outside the image are not constrained (non-induced containment).
    """
    image = m.image
    if len(image) != q.num_vertices:
        raise IncompleteMapping(
            f"mapping covers {len(image)} vertices, query has {q.num_vertices}")
    if any(v is None for v in image):
        raise IncompleteMapping("mapping has unassigned query vertices")

    if len(set(image)) != len(image):
        return False
    g_labels = g.vertex_labels
    n_g = g.num_vertices
    for u, v in enumerate(image):
        if not 0 <= v < n_g:
            raise IndexOutOfRange(f"image vertex {v} out of range")
        if q.vertex_labels[u] != g_labels[v]:
            return False
    get = g._edge_label.get
    for u, w, lbl in q.edges():
        if get((image[u], image[w])) != lbl:
            return False
    return True
