"""Benchmark harness: engine x dataset x query-set matrices.

For every cell the harness replays the containment protocol (each query is
checked against every data graph), records per-query wall time on a
monotonic clock, and aggregates search statistics.  A warm-up pass is run
first and excluded from timing so that caches shared between engines (data
side neighborhood tables, path tables) do not skew comparisons.  Queries
exceeding their timeout are recorded and skipped, never aborting the suite.

All engines in one run must produce identical verdicts; the harness checks
this on every run and raises :class:`EngineDisagreement` otherwise.
"""

from __future__ import annotations

import csv
import gc
import io
import os
import statistics
from dataclasses import dataclass, field
from time import perf_counter
from typing import Optional, Sequence, Union

from .dataset import GraphDataset, QuerySet, read_dataset, read_query_set
from .errors import ConfigError, EngineDisagreement, SearchTimeout
from .fast_on import fast_on_match
from .fast_p import choose_maxL, fast_p_match
from .graph import build_graph
from .ullman import ullman_match

ENGINE_NAMES = ("ullman", "fast-on", "fast-p")

DatasetInput = Union[str, os.PathLike, GraphDataset]
QuerySetInput = Union[str, os.PathLike, QuerySet]


@dataclass
class BenchConfig:
    datasets: Sequence[DatasetInput]
    querysets: Sequence[QuerySetInput]
    engines: Sequence[str] = ENGINE_NAMES
    maxL: Optional[int] = 2
    mode: str = "boolean"
    repetitions: int = 1
    timeout_ms: float = 10_000.0
    strip_edge_labels: bool = False
    prefix_sizes: Optional[Sequence[int]] = None
    workers: int = 1


@dataclass
class BenchRow:
    engine: str
    dataset: str
    queryset: str
    queryset_size: Optional[int]
    graphs: int
    queries: int
    total_seconds: float
    mean_query_seconds: float
    median_query_seconds: float
    index_seconds: float
    recursive_calls: int
    feasibility_failures: int
    candidates_total: int
    matches: int
    timeouts: int
    # per-query detail; kept for invariants, not emitted
    query_seconds: list[float] = field(default_factory=list, repr=False)


# stable emission order
COLUMNS = (
    "engine", "dataset", "queryset", "queryset_size", "graphs", "queries",
    "total_seconds", "mean_query_seconds", "median_query_seconds",
    "index_seconds", "recursive_calls", "feasibility_failures",
    "candidates_total", "matches", "timeouts",
)


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def table(self) -> tuple[tuple[str, ...], list[tuple[str, ...]]]:
        """Header plus stringified rows in stable column order."""
        out = []
        for r in self.rows:
            cells = []
            for col in COLUMNS:
                val = getattr(r, col)
                if isinstance(val, float):
                    cells.append(f"{val:.6f}")
                elif val is None:
                    cells.append("")
                else:
                    cells.append(str(val))
            out.append(tuple(cells))
        return COLUMNS, out


def _engine_runner(name: str, mode: str):
    if name == "ullman":
        return lambda q, g, deadline, maxL: ullman_match(q, g, mode, deadline)
    if name == "fast-on":
        return lambda q, g, deadline, maxL: fast_on_match(q, g, mode, deadline)
    if name == "fast-p":
        return lambda q, g, deadline, maxL: fast_p_match(q, g, maxL, mode,
                                                         deadline)
    raise ConfigError(f"unknown engine {name!r}; expected one of {ENGINE_NAMES}")


def _load_dataset(item: DatasetInput, config: BenchConfig) -> GraphDataset:
    if isinstance(item, GraphDataset):
        return item
    return read_dataset(item, strip_edge_labels=config.strip_edge_labels)


def _load_queryset(item: QuerySetInput, ds: GraphDataset,
                   config: BenchConfig) -> QuerySet:
    if isinstance(item, QuerySet):
        return item
    return read_query_set(item, vertex_labels=ds.vertex_labels,
                          edge_labels=ds.edge_labels,
                          strip_edge_labels=config.strip_edge_labels)


def _dataset_label(item: DatasetInput, ds: GraphDataset) -> str:
    if isinstance(item, GraphDataset):
        return item.source or "dataset"
    return os.path.splitext(os.path.basename(os.fspath(item)))[0]


def _time_query(runner, q, maxL_q, graphs, timeout_s, collect_stats):
    """Run one query against every graph; returns (seconds, verdicts|None, stats).

    The timed block starts from a fresh copy of the query so that per-query
    preparation (vertex ordering, path enumeration, cover construction) is
    paid inside the measurement, once per block, exactly as a single pass
    over the dataset would pay it.  Data-side structures stay amortized.
    """
    deadline = perf_counter() + timeout_s
    verdicts = []
    agg = [0, 0, 0, 0.0]  # calls, fails, cands, index_seconds
    matches = 0
    t0 = perf_counter()
    q_work = build_graph(q.vertex_labels, list(q.edges()),
                         require_connected=False, graph_id=q.graph_id)
    timed_out = False
    for g in graphs:
        try:
            out = runner(q_work, g, deadline, maxL_q)
        except SearchTimeout:
            timed_out = True
            break
        verdicts.append(out.found)
        if out.found:
            matches += 1
        if collect_stats:
            s = out.stats
            agg[0] += s.recursive_calls
            agg[1] += s.feasibility_failures
            agg[2] += s.candidates_total
            agg[3] += s.index_seconds
        if perf_counter() > deadline:
            timed_out = True
            break
    seconds = perf_counter() - t0
    return seconds, (None if timed_out else tuple(verdicts)), agg, matches


def _run_cells(engines: Sequence[str], ds_label: str, ds: GraphDataset,
               qs: QuerySet, config: BenchConfig):
    """Run every engine over one (dataset, query set) cell.

    Each engine runs the whole query set as one contiguous block per
    repetition (the protocol's shape), with the engine order rotating
    across repetitions and a per-query median taken over repetitions, so
    scheduler bursts and slow drift do not land on one engine only.
    """
    runners = {e: _engine_runner(e, config.mode) for e in engines}
    timeout_s = config.timeout_ms / 1000.0
    graphs = ds.graphs
    query_maxL = [config.maxL if config.maxL is not None
                  else choose_maxL(q).value for q in qs.queries]
    tasks = list(zip(qs.queries, query_maxL))
    n_engines = len(engines)

    def engine_pass(engine, collect_stats):
        runner = runners[engine]
        if config.workers > 1:
            from concurrent.futures import ThreadPoolExecutor
            with ThreadPoolExecutor(max_workers=config.workers) as pool:
                futures = [pool.submit(_time_query, runner, q, mL, graphs,
                                       timeout_s, collect_stats)
                           for q, mL in tasks]
                return [f.result() for f in futures]
        return [_time_query(runner, q, mL, graphs, timeout_s, collect_stats)
                for q, mL in tasks]

    for e in engines:  # warm-up, excluded from timing
        engine_pass(e, collect_stats=False)

    reps = max(1, config.repetitions)
    samples = {e: [[] for _ in tasks] for e in engines}
    last = {}
    gc_was_enabled = gc.isenabled()
    gc.disable()  # keep collector pauses out of comparative timings
    try:
        for rep in range(reps):
            rotated = [engines[(rep + k) % n_engines]
                       for k in range(n_engines)]
            for e in rotated:
                result = engine_pass(e, collect_stats=(rep == reps - 1))
                last[e] = result
                for i, r in enumerate(result):
                    samples[e][i].append(r[0])
    finally:
        if gc_was_enabled:
            gc.enable()
        gc.collect()

    rows = []
    verdict_map = {}
    for e in engines:
        # median across repetitions per query: robust to scheduler bursts
        seconds = [statistics.median(s) for s in samples[e]]
        results = last[e]
        verdicts = [r[1] for r in results]
        rows.append(BenchRow(
            engine=e,
            dataset=ds_label,
            queryset=qs.name,
            queryset_size=qs.nominal_size,
            graphs=len(graphs),
            queries=len(tasks),
            total_seconds=sum(seconds),
            mean_query_seconds=statistics.fmean(seconds) if seconds else 0.0,
            median_query_seconds=statistics.median(seconds) if seconds else 0.0,
            index_seconds=sum(r[2][3] for r in results),
            recursive_calls=sum(r[2][0] for r in results),
            feasibility_failures=sum(r[2][1] for r in results),
            candidates_total=sum(r[2][2] for r in results),
            matches=sum(r[3] for r in results),
            timeouts=sum(1 for v in verdicts if v is None),
            query_seconds=seconds,
        ))
        verdict_map[e] = verdicts
    return rows, verdict_map


def _check_agreement(ds_label: str, qs_name: str,
                     verdict_map: dict[str, list]):
    engines = list(verdict_map)
    n_queries = len(next(iter(verdict_map.values())))
    for qi in range(n_queries):
        seen = {}
        for e in engines:
            v = verdict_map[e][qi]
            if v is not None:
                seen[e] = v
        distinct = set(seen.values())
        if len(distinct) > 1:
            raise EngineDisagreement(
                f"engines disagree on {ds_label}/{qs_name} query {qi}: "
                + ", ".join(f"{e}={sum(v)} matches" for e, v in seen.items()))


def run_benchmark(config: BenchConfig) -> BenchReport:
    """Run the full engine x dataset x query-set matrix."""
    if not config.datasets or not config.querysets or not config.engines:
        raise ConfigError("datasets, querysets and engines must be nonempty")
    for e in config.engines:
        _engine_runner(e, config.mode)  # validate names early
    report = BenchReport()
    for ds_item in config.datasets:
        ds_full = _load_dataset(ds_item, config)
        base_label = _dataset_label(ds_item, ds_full)
        if config.prefix_sizes:
            variants = [(f"{base_label}[:{k}]", ds_full.prefix(k))
                        for k in config.prefix_sizes]
        else:
            variants = [(base_label, ds_full)]
        for qs_item in config.querysets:
            qs = _load_queryset(qs_item, ds_full, config)
            for ds_label, ds in variants:
                rows, verdict_map = _run_cells(config.engines, ds_label, ds,
                                               qs, config)
                report.rows.extend(rows)
                _check_agreement(ds_label, qs.name, verdict_map)
    return report


# -- emission ----------------------------------------------------------------

def _write_delimited(header, rows, path, delimiter):
    with open(path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh, delimiter=delimiter)
        writer.writerow(header)
        writer.writerows(rows)


def _markdown_table(header, rows) -> str:
    out = io.StringIO()
    out.write("| " + " | ".join(header) + " |\n")
    out.write("|" + "|".join(" --- " for _ in header) + "|\n")
    for row in rows:
        out.write("| " + " | ".join(row) + " |\n")
    return out.getvalue()


def emit_report(report: BenchReport, output_dir, fmt: str = "csv",
                plotdata: bool = False) -> list[str]:
    """Write the report table (and optional per-engine series files).

    Returns the list of written paths.  ``fmt`` is csv, tsv, or markdown.
    """
    if not report.rows:
        raise ConfigError("refusing to emit an empty report")
    os.makedirs(output_dir, exist_ok=True)
    header, rows = report.table()
    written = []
    if fmt == "csv":
        path = os.path.join(output_dir, "report.csv")
        _write_delimited(header, rows, path, ",")
    elif fmt == "tsv":
        path = os.path.join(output_dir, "report.tsv")
        _write_delimited(header, rows, path, "\t")
    elif fmt == "markdown":
        path = os.path.join(output_dir, "report.md")
        with open(path, "w", encoding="ascii") as fh:
            fh.write(_markdown_table(header, rows))
    else:
        raise ConfigError(f"unknown format {fmt!r}; expected csv, tsv or markdown")
    written.append(path)

    if plotdata:
        engines = []
        for r in report.rows:
            if r.engine not in engines:
                engines.append(r.engine)
        for engine in engines:
            path = os.path.join(output_dir, f"series_{engine}.csv")
            with open(path, "w", newline="", encoding="ascii") as fh:
                writer = csv.writer(fh)
                writer.writerow(("dataset", "queryset", "graphs",
                                 "queryset_size", "total_seconds"))
                for r in report.rows:
                    if r.engine == engine:
                        writer.writerow((r.dataset, r.queryset, r.graphs,
                                         r.queryset_size if r.queryset_size
                                         is not None else "",
                                         f"{r.total_seconds:.6f}"))
            written.append(path)
    return written


def linear_r2(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Coefficient of determination of the least-squares line through points."""
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two points")
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    syy = sum((y - my) ** 2 for y in ys)
    if syy == 0.0:
        return 1.0
    if sxx == 0.0:
        return 0.0
    slope = sxy / sxx
    intercept = my - slope * mx
    ss_res = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    return 1.0 - ss_res / syy
