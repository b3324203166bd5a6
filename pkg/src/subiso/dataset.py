"""Transaction-format dataset and query-set IO.

One file holds a sequence of graphs in the line-based interchange format
common to graph-mining corpora:

    # free-form comment
    t # <graph-id>
    v <index> <label>
    e <u> <v> [<label>]

Vertex indices are 0-based and contiguous per graph; fields are
space-separated ASCII.  The edge label is optional: absent labels intern to
a reserved default label, which is also how the unlabeled-edge dataset
variants are produced (``strip_edge_labels`` rewrites every edge label to
the default at read time).

Query sets are ordinary dataset files; the only extras are a connectivity
requirement and an optional ``#src <graph-id>`` comment recording which
data graph a query was extracted from.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

from .errors import ParseError, ValidationError
from .graph import LabeledGraph, LabelTable, build_graph

DEFAULT_EDGE_LABEL = "_"

DISCONNECTED_POLICIES = ("reject", "warn", "allow")


@dataclass
class DatasetStats:
    """Counts accumulated while parsing; guards against parser drift."""

    graphs: int = 0
    total_vertices: int = 0
    total_edges: int = 0

    @property
    def avg_vertices(self) -> float:
        return self.total_vertices / self.graphs if self.graphs else 0.0

    @property
    def avg_edges(self) -> float:
        return self.total_edges / self.graphs if self.graphs else 0.0


@dataclass
class GraphDataset:
    """A sequence of labeled graphs sharing one pair of label tables."""

    graphs: list[LabeledGraph] = field(default_factory=list)
    ids: list[str] = field(default_factory=list)
    vertex_labels: LabelTable = field(default_factory=LabelTable)
    edge_labels: LabelTable = field(
        default_factory=lambda: LabelTable([DEFAULT_EDGE_LABEL]))
    source: Optional[str] = None
    stats: DatasetStats = field(default_factory=DatasetStats)

    def __len__(self) -> int:
        return len(self.graphs)

    def recomputed_stats(self) -> DatasetStats:
        s = DatasetStats(graphs=len(self.graphs))
        for g in self.graphs:
            s.total_vertices += g.num_vertices
            s.total_edges += g.num_edges
        return s

    def prefix(self, count: int) -> "GraphDataset":
        """Dataset view over the first ``count`` graphs (shared tables)."""
        return GraphDataset(self.graphs[:count], self.ids[:count],
                            self.vertex_labels, self.edge_labels,
                            self.source, self.recomputed_stats())


@dataclass
class QuerySet:
    """Named collection of connected query graphs of one nominal size."""

    name: str
    queries: list[LabeledGraph]
    nominal_size: Optional[int] = None
    sources: Optional[list[str]] = None

    def __len__(self) -> int:
        return len(self.queries)


class _Parser:
    def __init__(self, path, vertex_labels, edge_labels, strip_edge_labels,
                 on_disconnected):
        if on_disconnected not in DISCONNECTED_POLICIES:
            raise ValueError(f"on_disconnected must be one of "
                             f"{DISCONNECTED_POLICIES}")
        self.path = os.fspath(path)
        self.vt = vertex_labels if vertex_labels is not None else LabelTable()
        self.et = (edge_labels if edge_labels is not None
                   else LabelTable([DEFAULT_EDGE_LABEL]))
        if DEFAULT_EDGE_LABEL not in self.et:
            self.et.intern(DEFAULT_EDGE_LABEL)
        self.strip = strip_edge_labels
        self.on_disconnected = on_disconnected
        self.stats = DatasetStats()
        self.graphs: list[LabeledGraph] = []
        self.ids: list[str] = []
        self._gid: Optional[str] = None
        self._vlabels: list[int] = []
        self._edges: list[tuple[int, int, int]] = []
        self._line_no = 0

    def fail(self, message: str):
        raise ParseError(message, self._line_no)

    def flush(self):
        if self._gid is None:
            return
        if not self._vlabels:
            self.fail(f"graph {self._gid!r} has no vertices")
        try:
            g = build_graph(self._vlabels, self._edges,
                            require_connected=False, graph_id=self._gid)
        except Exception as exc:
            raise ValidationError(f"graph {self._gid!r}: {exc}") from exc
        if not g.is_connected:
            if self.on_disconnected == "reject":
                raise ValidationError(f"graph {self._gid!r} is not connected")
            if self.on_disconnected == "warn":
                import warnings
                warnings.warn(f"graph {self._gid!r} in {self.path} "
                              f"is not connected", stacklevel=4)
        self.graphs.append(g)
        self.ids.append(self._gid)
        self.stats.graphs += 1
        self.stats.total_vertices += g.num_vertices
        self.stats.total_edges += g.num_edges
        self._gid = None
        self._vlabels = []
        self._edges = []

    def feed(self, line: str):
        self._line_no += 1
        text = line.strip()
        if not text:
            return
        if text.startswith("#"):
            return
        fields = text.split()
        kind = fields[0]
        if kind == "t":
            if len(fields) < 3 or fields[1] != "#":
                self.fail("expected 't # <graph-id>'")
            self.flush()
            self._gid = " ".join(fields[2:])
        elif kind == "v":
            if self._gid is None:
                self.fail("'v' line before any 't' line")
            if len(fields) != 3:
                self.fail("expected 'v <index> <label>'")
            try:
                idx = int(fields[1])
            except ValueError:
                self.fail(f"bad vertex index {fields[1]!r}")
            if idx != len(self._vlabels):
                self.fail(f"vertex indices must be contiguous from 0; "
                          f"got {idx}, expected {len(self._vlabels)}")
            self._vlabels.append(self.vt.intern(fields[2]))
        elif kind == "e":
            if self._gid is None:
                self.fail("'e' line before any 't' line")
            if len(fields) not in (3, 4):
                self.fail("expected 'e <u> <v> [<label>]'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                self.fail(f"bad edge endpoints {fields[1]!r} {fields[2]!r}")
            if self.strip or len(fields) == 3:
                lbl = self.et.id_of(DEFAULT_EDGE_LABEL)
            else:
                lbl = self.et.intern(fields[3])
            self._edges.append((u, v, lbl))
        else:
            self.fail(f"unknown record type {kind!r}")


def read_dataset(path, *, strip_edge_labels: bool = False,
                 on_disconnected: str = "warn",
                 vertex_labels: Optional[LabelTable] = None,
                 edge_labels: Optional[LabelTable] = None) -> GraphDataset:
    """Parse a transaction file into a :class:`GraphDataset`.

    Pass existing label tables to intern several files (for example a data
    file and its query files) into one shared label space.
    """
    parser = _Parser(path, vertex_labels, edge_labels, strip_edge_labels,
                     on_disconnected)
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            parser.feed(line)
    parser.flush()
    return GraphDataset(parser.graphs, parser.ids, parser.vt, parser.et,
                        parser.path, parser.stats)


def write_dataset(ds: GraphDataset, path) -> None:
    """Write a dataset back out; ``read(write(ds))`` is structurally equal.

    Output is deterministic: sorted edge order, no timestamps.  Edges whose
    label is the reserved default are written without a label field.
    """
    vt, et = ds.vertex_labels, ds.edge_labels
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"# graphs: {len(ds.graphs)}\n")
        for gid, g in zip(ds.ids, ds.graphs):
            fh.write(f"t # {gid}\n")
            for v, lbl in enumerate(g.vertex_labels):
                fh.write(f"v {v} {vt.name_of(lbl)}\n")
            for u, v, lbl in g.edges():
                name = et.name_of(lbl)
                if name == DEFAULT_EDGE_LABEL:
                    fh.write(f"e {u} {v}\n")
                else:
                    fh.write(f"e {u} {v} {name}\n")


def read_query_set(path, *, name: Optional[str] = None,
                   vertex_labels: Optional[LabelTable] = None,
                   edge_labels: Optional[LabelTable] = None,
                   strip_edge_labels: bool = False) -> QuerySet:
    """Read a query set; every query must be connected.

    The nominal size is the common edge count when all queries agree.
    """
    ds = read_dataset(path, strip_edge_labels=strip_edge_labels,
                      on_disconnected="reject",
                      vertex_labels=vertex_labels, edge_labels=edge_labels)
    sizes = {g.num_edges for g in ds.graphs}
    nominal = sizes.pop() if len(sizes) == 1 else None
    if name is None:
        base = os.path.basename(os.fspath(path))
        name = os.path.splitext(base)[0]
    parser_sources = _reparse_sources(path)
    sources = None
    if parser_sources and len(parser_sources) == len(ds.graphs):
        sources = parser_sources
    return QuerySet(name, ds.graphs, nominal, sources)


def _reparse_sources(path) -> list[str]:
    sources = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            parts = line.split()
            if parts and parts[0] == "#src" and len(parts) > 1:
                sources.append(" ".join(parts[1:]))
    return sources


def write_query_set(qs: QuerySet, ds_tables: tuple[LabelTable, LabelTable],
                    path) -> None:
    """Write a query set, recording extraction sources as #src comments."""
    vt, et = ds_tables
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"# queryset: {qs.name} graphs: {len(qs.queries)}\n")
        for i, g in enumerate(qs.queries):
            if qs.sources is not None:
                fh.write(f"#src {qs.sources[i]}\n")
            fh.write(f"t # {i}\n")
            for v, lbl in enumerate(g.vertex_labels):
                fh.write(f"v {v} {vt.name_of(lbl)}\n")
            for u, v, lbl in g.edges():
                name = et.name_of(lbl)
                if name == DEFAULT_EDGE_LABEL:
                    fh.write(f"e {u} {v}\n")
                else:
                    fh.write(f"e {u} {v} {name}\n")


def dataset_equal(a: GraphDataset, b: GraphDataset) -> bool:
    """Structural equality including label strings (not just interned ids)."""
    if len(a) != len(b) or a.ids != b.ids:
        return False
    for ga, gb in zip(a.graphs, b.graphs):
        if ga.num_vertices != gb.num_vertices or ga.num_edges != gb.num_edges:
            return False
        la = [a.vertex_labels.name_of(l) for l in ga.vertex_labels]
        lb = [b.vertex_labels.name_of(l) for l in gb.vertex_labels]
        if la != lb:
            return False
        ea = [(u, v, a.edge_labels.name_of(l)) for u, v, l in ga.edges()]
        eb = [(u, v, b.edge_labels.name_of(l)) for u, v, l in gb.edges()]
        if ea != eb:
            return False
    return True
