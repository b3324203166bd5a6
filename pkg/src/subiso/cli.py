"""Command-line front end.

Subcommands:

* ``match``            one query file against one data file
* ``bench``            engine x dataset x query-set benchmark matrix
* ``gen``              synthetic dataset generator
* ``extract-queries``  sample query sets out of a dataset
* ``paths``            dump a query's path cover and candidates (debugging)
* ``validate``         lint a dataset file

Exit codes: ``match`` returns 0 when the query is contained in some data
graph, 1 when it is not, and 2 on errors; every other command returns 0 on
success and 2 on errors.
"""

from __future__ import annotations

import argparse
import sys
from time import perf_counter

from . import bench as bench_mod
from .dataset import (
    DEFAULT_EDGE_LABEL,
    read_dataset,
    read_query_set,
    write_dataset,
    write_query_set,
)
from .errors import SearchTimeout, SubisoError
from .fast_p import choose_maxL, fast_p_candidates, graph_path_index, query_cover
from .generate import dataset_name, extract_queries, generate_dataset
from .graph import LabelTable
from .neighborhood import build_index
from .outcome import MODES
from .paths import enumerate_paths

EXIT_FOUND = 0
EXIT_NOT_FOUND = 1
EXIT_ERROR = 2


def _add_common_match_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--engine", choices=bench_mod.ENGINE_NAMES,
                   default="fast-on", help="matching engine")
    p.add_argument("--maxL", type=int, default=None,
                   help="path size bound for fast-p (default: auto)")
    p.add_argument("--mode", choices=MODES, default="boolean",
                   help="verdict only, one witness, or all witnesses")
    p.add_argument("--strip-edge-labels", action="store_true",
                   help="replace every edge label with the default label")
    p.add_argument("--timeout-ms", type=float, default=10_000.0,
                   help="per-query timeout in milliseconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subiso",
        description="Labeled-graph subgraph isomorphism toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("match", help="check one query file against a data file")
    p.add_argument("query", help="query file (first graph is used)")
    p.add_argument("data", help="data graph file")
    _add_common_match_flags(p)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("bench", help="run a benchmark matrix")
    p.add_argument("--datasets", nargs="+", required=True)
    p.add_argument("--querysets", nargs="+", required=True)
    p.add_argument("--engine", action="append", dest="engines",
                   choices=bench_mod.ENGINE_NAMES,
                   help="repeatable; default: all engines")
    p.add_argument("--maxL", type=int, default=2)
    p.add_argument("--mode", choices=MODES, default="boolean")
    p.add_argument("--strip-edge-labels", action="store_true")
    p.add_argument("--timeout-ms", type=float, default=10_000.0)
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--prefix-sizes", default=None,
                   help="comma-separated corpus prefix sizes for scalability")
    p.add_argument("--workers", type=int, default=1,
                   help="query-level worker threads (timing runs should stay at 1)")
    p.add_argument("--output", default="bench-out",
                   help="output directory for report files")
    p.add_argument("--format", choices=("csv", "tsv", "markdown"),
                   default="csv")
    p.add_argument("--plotdata", action="store_true",
                   help="also emit one series file per engine")
    p.add_argument("--no-figures", action="store_true",
                   help="skip PNG figure rendering")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="generate a synthetic dataset")
    p.add_argument("-n", "--count", type=int, required=True,
                   help="number of graphs")
    p.add_argument("--avg-edges", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--labels", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None,
                   help="output file (default: conventional name + .txt)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("extract-queries",
                       help="sample connected queries from a dataset")
    p.add_argument("--dataset", required=True)
    p.add_argument("--size", type=int, required=True,
                   help="edges per query")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--name", default=None)
    p.add_argument("--strip-edge-labels", action="store_true")
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("paths",
                       help="dump a query's enumerated paths, cover and order")
    p.add_argument("query")
    p.add_argument("--data", default=None,
                   help="also show per-path candidate counts against this file")
    p.add_argument("--maxL", type=int, default=None)
    p.add_argument("--strip-edge-labels", action="store_true")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("validate", help="lint dataset files")
    p.add_argument("files", nargs="+")
    p.add_argument("--strip-edge-labels", action="store_true")
    p.set_defaults(func=cmd_validate)

    return parser


def _format_code(code, vt: LabelTable, et: LabelTable) -> str:
    parts = []
    for i, lbl in enumerate(code):
        parts.append(vt.name_of(lbl) if i % 2 == 0 else et.name_of(lbl))
    return " ".join(parts)


def _load_pair(args):
    ds = read_dataset(args.data, strip_edge_labels=args.strip_edge_labels)
    qs = read_query_set(args.query, vertex_labels=ds.vertex_labels,
                        edge_labels=ds.edge_labels,
                        strip_edge_labels=args.strip_edge_labels)
    if not qs.queries:
        raise SubisoError(f"no query graphs in {args.query}")
    if len(qs.queries) > 1:
        print(f"note: {args.query} has {len(qs.queries)} graphs; "
              f"using the first", file=sys.stderr)
    return ds, qs.queries[0]


def cmd_match(args) -> int:
    ds, q = _load_pair(args)
    if args.engine == "fast-p":
        choice = choose_maxL(q, args.maxL)
        maxL = choice.value
        if choice.warned:
            print(f"note: maxL={maxL} violates the density guidance for "
                  f"this query; fast-on is likely faster", file=sys.stderr)
    else:
        maxL = args.maxL
    runner = bench_mod._engine_runner(args.engine, args.mode)
    deadline = perf_counter() + args.timeout_ms / 1000.0

    matched = []
    first_outcome = None
    calls = fails = cands = 0
    witness_total = 0
    t0 = perf_counter()
    for gid, g in zip(ds.ids, ds.graphs):
        try:
            out = runner(q, g, deadline, maxL)
        except SearchTimeout:
            print(f"timeout after {perf_counter() - t0:.3f}s "
                  f"(graph {gid})", file=sys.stderr)
            return EXIT_ERROR
        calls += out.stats.recursive_calls
        fails += out.stats.feasibility_failures
        cands += out.stats.candidates_total
        witness_total += out.witness_count
        if out.found:
            matched.append(gid)
            if first_outcome is None:
                first_outcome = (gid, out)
    elapsed = perf_counter() - t0

    print(f"query: |V|={q.num_vertices} |E|={q.num_edges}  "
          f"engine={args.engine}" + (f" maxL={maxL}" if args.engine == "fast-p" else ""))
    print(f"verdict: {'CONTAINED' if matched else 'NOT CONTAINED'} "
          f"({len(matched)}/{len(ds.graphs)} graphs match)")
    if args.mode == "count-all":
        print(f"witnesses: {witness_total}")
    if args.mode == "witness" and first_outcome is not None:
        gid, out = first_outcome
        pairs = " ".join(f"{u}->{v}" for u, v in enumerate(out.witness.image))
        print(f"witness (graph {gid}): {pairs}")
    print(f"stats: time={elapsed:.4f}s recursive_calls={calls} "
          f"feasibility_failures={fails} candidates={cands}")
    return EXIT_FOUND if matched else EXIT_NOT_FOUND


def cmd_bench(args) -> int:
    prefix_sizes = None
    if args.prefix_sizes:
        prefix_sizes = [int(x) for x in args.prefix_sizes.split(",") if x]
    config = bench_mod.BenchConfig(
        datasets=args.datasets,
        querysets=args.querysets,
        engines=args.engines or list(bench_mod.ENGINE_NAMES),
        maxL=args.maxL,
        mode=args.mode,
        repetitions=args.repetitions,
        timeout_ms=args.timeout_ms,
        strip_edge_labels=args.strip_edge_labels,
        prefix_sizes=prefix_sizes,
        workers=args.workers,
    )
    report = bench_mod.run_benchmark(config)
    written = bench_mod.emit_report(report, args.output, args.format,
                                    plotdata=args.plotdata)
    if not args.no_figures:
        from .figures import render_figures
        written += render_figures(report, args.output)
    header, rows = report.table()
    print(bench_mod._markdown_table(header, rows))
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_gen(args) -> int:
    ds = generate_dataset(args.count, args.avg_edges, args.density,
                          args.labels, args.seed)
    name = dataset_name(args.count, args.avg_edges, args.density, args.labels)
    out_path = args.output or f"{name}.txt"
    write_dataset(ds, out_path)
    stats = ds.stats
    print(f"wrote {out_path}: {stats.graphs} graphs, "
          f"avg |V|={stats.avg_vertices:.2f}, avg |E|={stats.avg_edges:.2f} "
          f"({name})")
    return 0


def cmd_extract(args) -> int:
    ds = read_dataset(args.dataset,
                      strip_edge_labels=args.strip_edge_labels)
    qs = extract_queries(ds, args.size, args.count, args.seed, args.name)
    write_query_set(qs, (ds.vertex_labels, ds.edge_labels), args.output)
    print(f"wrote {args.output}: {len(qs.queries)} queries of size "
          f"{qs.nominal_size} ({qs.name})")
    return 0


def cmd_paths(args) -> int:
    if args.data:
        ds = read_dataset(args.data, strip_edge_labels=args.strip_edge_labels)
        vt, et = ds.vertex_labels, ds.edge_labels
    else:
        ds = None
        vt = LabelTable()
        et = LabelTable([DEFAULT_EDGE_LABEL])
    qs = read_query_set(args.query, vertex_labels=vt, edge_labels=et,
                        strip_edge_labels=args.strip_edge_labels)
    if not qs.queries:
        raise SubisoError(f"no query graphs in {args.query}")
    q = qs.queries[0]
    choice = choose_maxL(q, args.maxL)
    maxL = choice.value
    print(f"query: |V|={q.num_vertices} |E|={q.num_edges} "
          f"density={q.density:.3f} maxL={maxL}"
          + (" (density guidance violated)" if choice.warned else ""))
    all_paths = enumerate_paths(q, maxL)
    print(f"simple paths up to size {maxL}: {len(all_paths)}")
    cov = query_cover(q, maxL)
    print(f"ordered cover: {len(cov.paths)} paths")
    for i, p in enumerate(cov.paths):
        print(f"  p{i + 1}: vertices={list(p.vertices)} size={p.size} "
              f"code='{_format_code(p.code, vt, et)}'"
              + (" iso" if p.is_iso else ""))
    freq = ", ".join(f"{u}:{c}" for u, c in enumerate(cov.vertex_freq))
    print(f"vertex frequency in cover: {freq}")
    if ds is not None and ds.graphs:
        g = ds.graphs[0]
        index = build_index(q, g)
        cands = fast_p_candidates(cov, graph_path_index(g, maxL), index)
        print(f"candidates against graph {ds.ids[0]}:")
        for i, c in enumerate(cands):
            print(f"  p{i + 1}: {len(c)} candidate traversal(s)")
    return 0


def cmd_validate(args) -> int:
    status = 0
    for path in args.files:
        try:
            ds = read_dataset(path, strip_edge_labels=args.strip_edge_labels,
                              on_disconnected="allow")
        except SubisoError as exc:
            print(f"{path}: INVALID: {exc}")
            status = EXIT_ERROR
            continue
        recomputed = ds.recomputed_stats()
        disconnected = sum(1 for g in ds.graphs if not g.is_connected)
        print(f"{path}: OK: {len(ds)} graphs, avg |V|={recomputed.avg_vertices:.2f}, "
              f"avg |E|={recomputed.avg_edges:.2f}, "
              f"{len(ds.vertex_labels)} vertex labels, "
              f"{len(ds.edge_labels)} edge labels"
              + (f", {disconnected} disconnected" if disconnected else ""))
    return status


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SubisoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
