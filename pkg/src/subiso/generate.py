"""Synthetic dataset generation and query extraction.

Datasets are parameterized by graph count, average edge count, density, and
label alphabet size.  Each graph draws its edge count uniformly within 20%
of the average, derives its vertex count from the density, and is built as
a random spanning tree (guaranteeing connectivity) plus random extra edges.
Everything is driven by one seed, so equal seeds give byte-identical files.

Queries are sampled as connected edge subgraphs of randomly chosen data
graphs grown edge by edge to the exact requested size, which guarantees
every query has a nonempty answer set against its source corpus.

Dataset naming follows the Syn<N>.E<E>.D<D>.L<L> convention where D is the
density times ten (D5 means 0.5).
"""

from __future__ import annotations

import math
import random
import re
from typing import Optional

from .dataset import DatasetStats, GraphDataset, LabelTable, QuerySet, DEFAULT_EDGE_LABEL
from .errors import InfeasibleParameters, InfeasibleQuerySize
from .graph import build_graph

EDGE_JITTER = 0.2


def _vertex_count(m: int, density: float) -> int:
    # solve 2m / (V (V-1)) = density for V, round, floor at 3
    target = 2.0 * m / density
    v = round((1.0 + math.sqrt(1.0 + 4.0 * target)) / 2.0)
    return max(3, v)


def generate_dataset(n: int, avg_edges: int, density: float, labels: int,
                     seed: int) -> GraphDataset:
    """Generate ``n`` connected simple graphs.

    Raises :class:`InfeasibleParameters` when the derived vertex count
    cannot host the drawn edge count (fewer than a spanning tree needs, or
    more than a simple graph allows).
    """
    if n <= 0 or avg_edges <= 0 or labels <= 0:
        raise InfeasibleParameters("all counts must be positive")
    if not 0.0 < density <= 1.0:
        raise InfeasibleParameters("density must be in (0, 1]")
    rng = random.Random(seed)
    vt = LabelTable()
    et = LabelTable([DEFAULT_EDGE_LABEL])
    vlabel_ids = [vt.intern(f"l{i}") for i in range(labels)]
    elabel_ids = [et.intern(f"l{i}") for i in range(labels)]

    lo = math.ceil(avg_edges * (1.0 - EDGE_JITTER))
    hi = math.floor(avg_edges * (1.0 + EDGE_JITTER))
    graphs = []
    ids = []
    stats = DatasetStats()
    for gi in range(n):
        m = rng.randint(lo, hi)
        nv = _vertex_count(m, density)
        max_edges = nv * (nv - 1) // 2
        if m < nv - 1:
            raise InfeasibleParameters(
                f"{m} edges cannot connect {nv} vertices")
        if m > max_edges:
            raise InfeasibleParameters(
                f"{m} edges exceed the simple-graph maximum {max_edges} "
                f"for {nv} vertices")
        edges = set()
        for v in range(1, nv):
            u = rng.randrange(v)
            edges.add((u, v))
        if m > len(edges):
            free = [(u, v) for u in range(nv) for v in range(u + 1, nv)
                    if (u, v) not in edges]
            edges.update(rng.sample(free, m - len(edges)))
        labeled = [(u, v, rng.choice(elabel_ids)) for u, v in sorted(edges)]
        vlabels = [rng.choice(vlabel_ids) for _ in range(nv)]
        g = build_graph(vlabels, labeled, graph_id=str(gi))
        graphs.append(g)
        ids.append(str(gi))
        stats.graphs += 1
        stats.total_vertices += nv
        stats.total_edges += m
    return GraphDataset(graphs, ids, vt, et, None, stats)


def extract_queries(ds: GraphDataset, size: int, count: int, seed: int,
                    name: Optional[str] = None) -> QuerySet:
    """Sample ``count`` connected queries of exactly ``size`` edges.

    Each query is grown edge by edge inside one randomly chosen data graph,
    so it is a subgraph of that graph by construction; the source graph ids
    are recorded on the query set.
    """
    if size < 1 or count < 1:
        raise InfeasibleQuerySize("size and count must be positive")
    eligible = [i for i, g in enumerate(ds.graphs) if g.num_edges >= size]
    if not eligible:
        raise InfeasibleQuerySize(
            f"no data graph has {size} or more edges")
    rng = random.Random(seed)
    queries = []
    sources = []
    for _ in range(count):
        gi = rng.choice(eligible)
        g = ds.graphs[gi]
        all_edges = [(u, v, lbl) for u, v, lbl in g.edges()]
        first = rng.choice(all_edges)
        chosen = [first]
        chosen_keys = {(first[0], first[1])}
        in_query = {first[0], first[1]}
        while len(chosen) < size:
            frontier = [e for e in all_edges
                        if (e[0], e[1]) not in chosen_keys
                        and (e[0] in in_query or e[1] in in_query)]
            nxt = rng.choice(frontier)
            chosen.append(nxt)
            chosen_keys.add((nxt[0], nxt[1]))
            in_query.add(nxt[0])
            in_query.add(nxt[1])
        # keep the source graph's vertex order; growth order would bake a
        # search-friendly input order into the benchmark
        touched = sorted(in_query)
        remap = {w: i for i, w in enumerate(touched)}
        vlabels = [g.vertex_labels[w] for w in touched]
        q_edges = [(remap[u], remap[v], lbl) for u, v, lbl in chosen]
        queries.append(build_graph(vlabels, q_edges))
        sources.append(ds.ids[gi])
    return QuerySet(name or f"Q{size}", queries, size, sources)


def dataset_name(n: int, avg_edges: int, density: float, labels: int) -> str:
    """Conventional name, e.g. dataset_name(10000, 30, 0.5, 50) -> 'Syn10K.E30.D5.L50'."""
    if n % 1_000_000 == 0:
        count = f"{n // 1_000_000}M"
    elif n % 1000 == 0:
        count = f"{n // 1000}K"
    else:
        count = str(n)
    d = density * 10
    d_text = str(int(d)) if d == int(d) else str(d)
    return f"Syn{count}.E{avg_edges}.D{d_text}.L{labels}"


_NAME_RE = re.compile(
    r"^Syn(?P<n>\d+)(?P<mult>[KM]?)\.E(?P<e>\d+)\.D(?P<d>\d+(\.\d+)?)"
    r"\.L(?P<l>\d+)$")


def parse_dataset_name(name: str) -> dict:
    """Invert :func:`dataset_name`; D is density times ten."""
    m = _NAME_RE.match(name)
    if m is None:
        raise ValueError(f"not a recognized dataset name: {name!r}")
    mult = {"": 1, "K": 1000, "M": 1_000_000}[m.group("mult")]
    return {
        "n": int(m.group("n")) * mult,
        "avg_edges": int(m.group("e")),
        "density": float(m.group("d")) / 10.0,
        "labels": int(m.group("l")),
    }
