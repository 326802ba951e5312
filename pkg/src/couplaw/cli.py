"""Command-line front end: scan, analyze, corr, synth, ablate."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import graphs as graphs_mod
from . import robustness as robustness_mod
from . import stats as stats_mod
from . import synth as synth_mod
from .errors import CouplawError, EmptyCorpus
from .graphs import RELATIONSHIPS, all_degree_series, build_graphs, export_edge_list
from .ingest import Corpus, load_summaries, save_summaries, scan_tree
from .stats import FitResult, bucket, correlation_matrix, fit_points


@dataclass(frozen=True)
class Report:
    rows: tuple[tuple[str, FitResult], ...]  # canonical 12-row order
    class_count: int
    edge_counts: dict

    def to_csv(self) -> str:
        lines = ["relationship,exponent,lower95,upper95,r2,status,buckets"]
        for name, result in self.rows:
            if result.status == "ok":
                lines.append(
                    f"{name},{result.exponent:.4f},{result.ci_lower:.4f},"
                    f"{result.ci_upper:.4f},{result.r_squared:.4f},ok,"
                    f"{result.buckets_used}"
                )
            else:
                lines.append(f"{name},,,,,insufficient_data,{result.buckets_used}")
        lines.append(f"# classes={self.class_count}")
        for coupling_type in graphs_mod.COUPLING_TYPES:
            lines.append(f"# edges_{coupling_type}={self.edge_counts[coupling_type]}")
        return "\n".join(lines) + "\n"

    def to_markdown(self) -> str:
        lines = [
            "| Relationship | Exponent | Lower 95% | Upper 95% | r2 |",
            "|---|---|---|---|---|",
        ]
        for name, result in self.rows:
            if result.status == "ok":
                lines.append(
                    f"| {name} | {result.exponent:.3f} | {result.ci_lower:.3f} "
                    f"| {result.ci_upper:.3f} | {result.r_squared:.3f} |"
                )
            else:
                lines.append(f"| {name} | insufficient data | | | |")
        return "\n".join(lines) + "\n"


def analyze_corpus(corpus: Corpus, base=stats_mod.DEFAULT_BASE,
                   normalization="density",
                   min_buckets=stats_mod.DEFAULT_MIN_BUCKETS,
                   include_external=False) -> Report:
    coupling = build_graphs(corpus, include_external=include_external)
    series = all_degree_series(coupling, corpus)
    rows = tuple(
        (name, stats_mod.fit_series(series[name], base=base,
                                    normalization=normalization,
                                    min_buckets=min_buckets))
        for name in RELATIONSHIPS
    )
    return Report(rows, len(corpus.classes), coupling.edge_counts())


def _load_corpus(path: str) -> Corpus:
    p = Path(path)
    if p.is_dir():
        return scan_tree(p)
    return load_summaries(p)


def _write_or_print(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _write_plot_data(corpus, plot_dir, base, normalization, min_buckets):
    plot_dir = Path(plot_dir)
    plot_dir.mkdir(parents=True, exist_ok=True)
    coupling = build_graphs(corpus)
    series = all_degree_series(coupling, corpus)
    for name in RELATIONSHIPS:
        values = [v for v in series[name].values() if v > 0]
        slug = name.lower().replace(" ", "_").replace("-", "_")
        lines = []
        if values:
            histogram = bucket(values, base=base, normalization=normalization)
            for lx, ly in fit_points(histogram):
                lines.append(f"{lx:.6f}\t{ly:.6f}")
            result = stats_mod.fit(histogram, min_buckets=min_buckets) \
                if len(histogram.nonempty()) >= min_buckets else None
            if result is not None and result.status == "ok":
                lines.append(
                    f"# fit exponent={result.exponent:.6f} "
                    f"intercept={result.intercept:.6f} r2={result.r_squared:.6f}"
                )
            else:
                lines.append("# fit insufficient_data")
        else:
            lines.append("# fit insufficient_data")
        (plot_dir / f"{slug}.tsv").write_text("\n".join(lines) + "\n",
                                              encoding="utf-8")


def cmd_scan(args) -> int:
    corpus = scan_tree(args.directory)
    for line in corpus.diagnostics:
        print(line, file=sys.stderr)
    save_summaries(corpus, args.out)
    return 0


def cmd_analyze(args) -> int:
    corpus = _load_corpus(args.input)
    for line in corpus.diagnostics:
        print(line, file=sys.stderr)
    report = analyze_corpus(
        corpus,
        base=args.base,
        normalization="raw" if args.raw else "density",
        min_buckets=args.min_buckets,
        include_external=args.include_external,
    )
    text = report.to_markdown() if args.markdown else report.to_csv()
    _write_or_print(text, args.out)
    if args.plot_dir:
        _write_plot_data(corpus, args.plot_dir, args.base,
                         "raw" if args.raw else "density", args.min_buckets)
    if args.edges_out:
        coupling = build_graphs(corpus, include_external=args.include_external)
        Path(args.edges_out).write_text(export_edge_list(coupling),
                                        encoding="utf-8")
    return 0


def cmd_corr(args) -> int:
    corpus = _load_corpus(args.input)
    methods, fields, constructors = graphs_mod.member_counts(corpus)
    matrix = correlation_matrix(methods, fields, constructors)
    lines = ["," + ",".join(matrix.labels)]
    for label, row in zip(matrix.labels, matrix.matrix):
        lines.append(label + "," + ",".join(f"{v:.4f}" for v in row))
    _write_or_print("\n".join(lines) + "\n", args.out)
    return 0


def cmd_synth(args) -> int:
    params = synth_mod.SynthParams(
        n_classes=args.n,
        seed_size=args.seed_size,
        edges_per_class={
            "aggregation": args.agg_m,
            "inheritance": args.inherit_m,
            "interface": args.interface_m,
            "parameter": args.param_m,
            "return_type": args.return_m,
        },
        alpha=args.alpha,
        rng_seed=args.seed,
        interface_fraction=args.interface_fraction,
    )
    corpus = synth_mod.generate(params)
    save_summaries(corpus, args.out)
    return 0


def cmd_ablate(args) -> int:
    corpus = _load_corpus(args.input)
    coupling = build_graphs(corpus)
    roots = frozenset(args.roots.split(",")) if args.roots else None
    experiment = robustness_mod.RemovalExperiment(
        mode=args.mode,
        fraction=args.fraction,
        trials=args.trials,
        rng_seed=args.seed,
        roots=roots,
    )
    experiment = robustness_mod.run_experiment(coupling, experiment)
    _write_or_print(robustness_mod.export_results(experiment), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="couplaw",
        description="Class-coupling power-law analysis for Java source trees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="parse a source tree to an interchange file")
    p.add_argument("directory")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("analyze", help="fit the twelve power laws")
    p.add_argument("input", help="source directory or interchange file")
    p.add_argument("--base", type=float, default=stats_mod.DEFAULT_BASE)
    p.add_argument("--min-buckets", type=int,
                   default=stats_mod.DEFAULT_MIN_BUCKETS)
    norm = p.add_mutually_exclusive_group()
    norm.add_argument("--raw", action="store_true",
                      help="use raw bucket counts (uncorrected convention)")
    norm.add_argument("--density", action="store_true",
                      help="width-normalize bucket counts (default)")
    p.add_argument("--include-external", action="store_true")
    p.add_argument("--markdown", action="store_true",
                   help="render the report as a table instead of CSV")
    p.add_argument("--out")
    p.add_argument("--plot-dir")
    p.add_argument("--edges-out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("corr", help="member-count correlation matrix")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_corr)

    p = sub.add_parser("synth", help="generate a synthetic corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed-size", type=int, default=3)
    p.add_argument("--agg-m", type=int, default=2)
    p.add_argument("--inherit-m", type=int, default=0)
    p.add_argument("--interface-m", type=int, default=0)
    p.add_argument("--param-m", type=int, default=0)
    p.add_argument("--return-m", type=int, default=0)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--interface-fraction", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("ablate", help="node-removal reachability experiment")
    p.add_argument("input")
    p.add_argument("--mode", choices=["random", "targeted_by_degree"],
                   default="random")
    p.add_argument("--fraction", type=float, default=0.1)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--roots", help="comma-separated root class names")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ablate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EmptyCorpus as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CouplawError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
