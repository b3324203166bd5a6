"""Render benchmark reports as figures alongside the delimited output.

Two chart families mirror how the results are usually read: total response
time per query set (one line per engine, per dataset) and, when a report
contains prefix-subset rows, total time against corpus size (the
scalability view).  Files are written as PNG next to the report tables.
"""

from __future__ import annotations

import os
from collections import defaultdict

from .bench import BenchReport

_STYLES = {
    "ullman": dict(color="tab:gray", marker="s"),
    "fast-on": dict(color="tab:blue", marker="o"),
    "fast-p": dict(color="tab:red", marker="^"),
}


def _style(engine: str) -> dict:
    return _STYLES.get(engine, dict(marker="x"))


def render_figures(report: BenchReport, output_dir) -> list[str]:
    """Write one time-vs-queryset chart per dataset and a scalability chart
    per query set when prefix rows are present.  Returns written paths."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(output_dir, exist_ok=True)
    written = []

    by_dataset = defaultdict(list)
    for r in report.rows:
        by_dataset[r.dataset].append(r)

    # scalability detection: same base dataset at several prefix sizes
    sweep = defaultdict(list)  # (queryset, engine) -> [(graphs, seconds)]
    sweep_bases = set()
    for r in report.rows:
        if "[:" in r.dataset:
            sweep[(r.queryset, r.engine)].append((r.graphs, r.total_seconds))
            sweep_bases.add(r.dataset.split("[:")[0])

    for dataset, rows in sorted(by_dataset.items()):
        series = defaultdict(list)  # engine -> [(x, y)]
        for r in rows:
            x = r.queryset_size if r.queryset_size is not None else len(
                series[r.engine])
            series[r.engine].append((x, r.total_seconds))
        if not series or all(len(pts) < 1 for pts in series.values()):
            continue
        fig, ax = plt.subplots(figsize=(6, 4))
        for engine, pts in series.items():
            pts.sort()
            ax.plot([p[0] for p in pts], [p[1] for p in pts],
                    label=engine, **_style(engine))
        ax.set_xlabel("query set size |E_q|")
        ax.set_ylabel("total response time (s)")
        ax.set_title(dataset)
        ax.legend()
        ax.grid(True, alpha=0.3)
        safe = dataset.replace("/", "_").replace("[:", "_prefix").rstrip("]")
        path = os.path.join(output_dir, f"time_vs_queryset_{safe}.png")
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

    if sweep:
        by_qs = defaultdict(dict)
        for (qs_name, engine), pts in sweep.items():
            by_qs[qs_name][engine] = sorted(pts)
        for qs_name, engines in sorted(by_qs.items()):
            fig, ax = plt.subplots(figsize=(6, 4))
            for engine, pts in engines.items():
                ax.plot([p[0] for p in pts], [p[1] for p in pts],
                        label=engine, **_style(engine))
            ax.set_xlabel("data graphs")
            ax.set_ylabel("total response time (s)")
            base = ", ".join(sorted(sweep_bases))
            ax.set_title(f"scalability on {base} ({qs_name})")
            ax.legend()
            ax.grid(True, alpha=0.3)
            path = os.path.join(output_dir, f"scalability_{qs_name}.png")
            fig.savefig(path, dpi=120, bbox_inches="tight")
            plt.close(fig)
            written.append(path)
    return written
