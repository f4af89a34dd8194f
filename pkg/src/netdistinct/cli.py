"""Command-line interface: score computation, experiments, benchmarks.

Subcommands: compute, experiment corr, experiment dist, bench. All CSV
output uses fixed 6-decimal formatting and is byte-deterministic given the
same flags and seed. NETDISTINCT_OUTPUT_DIR sets the default directory for
relative output paths.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import centrality as ct
from .experiments import (ExperimentConfig, run_correlation_experiment,
                          run_distribution_experiment, run_scaling_benchmark)
from .generators import Family, GeneratorConfig, WeightConfig
from .graph import read_edge_list

PARAM_FLAG = {"beta": "beta", "gamma": "gamma"}


def parse_alpha_grid(spec: str) -> tuple[float, ...]:
    """Parse "start:step:end" into an inclusive grid (endpoints within 1e-12)."""
    try:
        start, step, end = (float(tok) for tok in spec.split(":"))
    except ValueError:
        raise ValueError(f"bad grid {spec!r}; expected start:step:end") from None
    if start <= 0 or end < start or step <= 0:
        raise ValueError(f"bad grid {spec!r}: need 0 < start <= end, step > 0")
    grid = []
    k = 0
    while True:
        v = start + k * step
        if v > end + 1e-12:
            break
        grid.append(min(v, end))
        k += 1
    return tuple(grid)


def _out_path(path: str) -> Path:
    p = Path(path)
    if not p.is_absolute():
        base = os.environ.get("NETDISTINCT_OUTPUT_DIR")
        if base:
            p = Path(base) / p
    return p


def _write_csv(path: str, header: str, rows):
    p = _out_path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with open(p, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _generator_config(args) -> GeneratorConfig:
    return GeneratorConfig(family=Family(args.topology), n=args.n,
                           m=args.m, nei=args.nei, p=args.p)


def _experiment_config(args, alpha_grid) -> ExperimentConfig:
    return ExperimentConfig(
        topology=_generator_config(args),
        reps=args.reps,
        alpha_grid=alpha_grid,
        weighted=args.weighted,
        weight_range=WeightConfig(weighted=args.weighted,
                                  low=args.weight_low, high=args.weight_high),
        base_seed=args.seed)


def cmd_compute(args) -> int:
    spec = _metric_spec(args)
    with open(args.edge_list, "r", encoding="utf-8") as fh:
        g, labels = read_edge_list(fh, weighted=not args.unweighted)
    sv = ct.compute(g, spec)
    rows = [(labels.label_of(i), _fmt(float(s))) for i, s in enumerate(sv.scores)]
    if args.output:
        _write_csv(args.output, "node,score", rows)
    else:
        print("node,score")
        for r in rows:
            print(",".join(r))
    return 0


def _metric_spec(args) -> ct.MetricSpec:
    kind = ct.Metric(args.metric)
    given = {name for name in ("alpha", "beta", "gamma")
             if getattr(args, name) is not None}
    if kind in ct.D_METRICS:
        want = {"alpha"}
    elif kind in (ct.Metric.BETA, ct.Metric.GAMMA):
        want = {kind.value}
    else:
        want = set()
    if given != want:
        need = f"--{next(iter(want))}" if want else "no parameter flag"
        raise ValueError(f"metric {kind.value} takes {need}, got "
                         f"{sorted('--' + x for x in given) or 'none'}")
    param = getattr(args, next(iter(want))) if want else None
    return ct.MetricSpec(kind, param)


def cmd_experiment_corr(args) -> int:
    grid = parse_alpha_grid(args.alpha_grid)
    cfg = _experiment_config(args, grid)
    records = run_correlation_experiment(cfg, jobs=args.jobs)
    rows = [(r.topology, str(r.weighted).lower(), _fmt(r.alpha),
             r.metric_a, r.metric_b, _fmt(r.mean_spearman),
             _fmt(r.sd_spearman), str(r.reps_used), str(r.reps_skipped))
            for r in sorted(records,
                            key=lambda r: (r.alpha, r.metric_a, r.metric_b))]
    _write_csv(args.output,
               "topology,weighted,alpha,metric_a,metric_b,mean_spearman,"
               "sd_spearman,reps_used,reps_skipped", rows)
    return 0


def cmd_experiment_dist(args) -> int:
    cfg = _experiment_config(args, (args.alpha,))
    score_rows, records = run_distribution_experiment(cfg, bins=args.bins)
    _write_csv(args.scores_output, "metric,node,normalized_score",
               [(m, str(node), _fmt(score))
                for _, m, node, score in score_rows])
    _write_csv(args.ruzicka_output, "metric_a,metric_b,mode,ruzicka",
               [(r.metric_a, r.metric_b, r.mode, _fmt(r.ruzicka))
                for r in sorted(records,
                                key=lambda r: (r.metric_a, r.metric_b, r.mode))])
    return 0


def cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",")]
    proto = GeneratorConfig(family=Family(args.topology), n=max(sizes[0], 3),
                            m=args.m, nei=args.nei, p=args.p)
    records = run_scaling_benchmark(sizes, proto, reps=args.reps,
                                    base_seed=args.seed)
    rows = [(r.metric, str(r.n), f"{r.median_runtime_seconds:.6e}",
             _fmt(r.loglog_slope)) for r in records]
    _write_csv(args.output, "metric,n,median_runtime_seconds,loglog_slope",
               rows)
    return 0


def _add_topology_flags(p: argparse.ArgumentParser, default_p: float):
    p.add_argument("--topology", choices=[f.value for f in Family],
                   default="sf")
    p.add_argument("--n", type=int, default=300)
    p.add_argument("--m", type=int, default=2,
                   help="edges per new node (scale-free)")
    p.add_argument("--nei", type=int, default=2,
                   help="half-neighborhood size (small-world)")
    p.add_argument("--p", type=float, default=default_p,
                   help="rewiring or edge probability")
    wt = p.add_mutually_exclusive_group()
    wt.add_argument("--weighted", dest="weighted", action="store_true")
    wt.add_argument("--unweighted", dest="weighted", action="store_false")
    p.set_defaults(weighted=False)
    p.add_argument("--weight-low", type=int, default=1)
    p.add_argument("--weight-high", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="netdistinct",
        description="Distinctiveness, Beta and Gamma centrality toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="score a graph from an edge list")
    pc.add_argument("edge_list", help="whitespace-separated edge-list file")
    pc.add_argument("--metric", required=True,
                    choices=[m.value for m in ct.Metric])
    pc.add_argument("--alpha", type=float)
    pc.add_argument("--beta", type=float)
    pc.add_argument("--gamma", type=float)
    pc.add_argument("--unweighted", action="store_true",
                    help="ignore edge weights in the input")
    pc.add_argument("-o", "--output", help="output CSV (default: stdout)")
    pc.set_defaults(func=cmd_compute)

    pe = sub.add_parser("experiment", help="replication experiments")
    esub = pe.add_subparsers(dest="experiment", required=True)

    pcorr = esub.add_parser("corr", help="correlation sweep over alpha")
    _add_topology_flags(pcorr, default_p=0.05)
    pcorr.add_argument("--reps", type=int, default=20)
    pcorr.add_argument("--alpha-grid", default="0.5:0.25:3",
                       help="inclusive grid start:step:end")
    pcorr.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    pcorr.add_argument("-o", "--output", default="correlations.csv")
    pcorr.set_defaults(func=cmd_experiment_corr)

    pdist = esub.add_parser("dist", help="score distributions and Ruzicka")
    _add_topology_flags(pdist, default_p=0.05)
    pdist.add_argument("--alpha", type=float, default=1.0)
    pdist.add_argument("--bins", type=int, default=100)
    pdist.add_argument("--scores-output", default="scores.csv")
    pdist.add_argument("--ruzicka-output", default="ruzicka.csv")
    pdist.set_defaults(func=cmd_experiment_dist, reps=1)

    pb = sub.add_parser("bench", help="empirical complexity scaling")
    pb.add_argument("--topology", choices=[f.value for f in Family],
                    default="er")
    pb.add_argument("--sizes", default="200,400,800,1600",
                    help="comma-separated node counts")
    pb.add_argument("--m", type=int, default=2)
    pb.add_argument("--nei", type=int, default=2)
    pb.add_argument("--p", type=float, default=0.2)
    pb.add_argument("--reps", type=int, default=5)
    pb.add_argument("--seed", type=int, default=0)
    pb.add_argument("-o", "--output", default="scaling.csv")
    pb.set_defaults(func=cmd_bench)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, ArithmeticError, RuntimeError) as exc:
        print(f"netdistinct: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
