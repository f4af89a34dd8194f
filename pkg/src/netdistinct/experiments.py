"""Replication experiments: correlation sweeps, score distributions, scaling.

Each experiment is deterministic given (config, base_seed): replication r
always uses seeds derived from (base_seed, r), so results do not depend on
how many workers execute the replications.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations
from statistics import median

import numpy as np
from threadpoolctl import threadpool_limits

from . import centrality as ct
from . import stats
from .generators import (Family, GeneratorConfig, WeightConfig,
                         assign_weights, derive_seeds, generate)
from .graph import Graph

UNWEIGHTED_PANEL = ("d2", "d3", "d5", "beta", "gamma")
WEIGHTED_PANEL = ("d1", "d3", "d4", "beta", "gamma")


@dataclass(frozen=True)
class ExperimentConfig:
    topology: GeneratorConfig
    reps: int
    alpha_grid: tuple[float, ...]
    weighted: bool
    weight_range: WeightConfig = WeightConfig()
    base_seed: int = 0

    def __post_init__(self):
        if self.reps < 1:
            raise ValueError("reps must be at least 1")
        if not self.alpha_grid or any(a <= 0 for a in self.alpha_grid):
            raise ValueError("alpha_grid must be nonempty with positive entries")


@dataclass(frozen=True)
class CorrelationRecord:
    topology: str
    weighted: bool
    alpha: float
    metric_a: str
    metric_b: str
    mean_spearman: float
    sd_spearman: float
    reps_used: int
    reps_skipped: int


@dataclass(frozen=True)
class RuzickaRecord:
    topology: str
    weighted: bool
    alpha: float
    metric_a: str
    metric_b: str
    mode: str  # "node-aligned" | "histogram"
    ruzicka: float


@dataclass(frozen=True)
class ScalingRecord:
    metric: str
    n: int
    median_runtime_seconds: float
    loglog_slope: float


def panel_metrics(weighted: bool) -> tuple[str, ...]:
    return WEIGHTED_PANEL if weighted else UNWEIGHTED_PANEL


def metric_panel(g: Graph, alpha: float, weighted: bool,
                 lambda1: float | None = None) -> dict[str, ct.ScoreVector]:
    """Score vectors for the metric panel at one alpha.

    Beta and Gamma use the harmonized parameters gamma = -alpha and
    beta = (2/e**alpha - 1)/lambda1.
    """
    if lambda1 is None:
        lambda1 = ct.dominant_eigenvalue(g)
    gamma, beta = ct.harmonize(alpha, lambda1)
    fns = {
        "d1": lambda: ct.d1(g, alpha),
        "d2": lambda: ct.d2(g, alpha),
        "d3": lambda: ct.d3(g, alpha),
        "d4": lambda: ct.d4(g, alpha),
        "d5": lambda: ct.d5(g, alpha),
        "beta": lambda: ct.beta_centrality(g, beta),
        "gamma": lambda: ct.gamma_centrality(g, gamma),
    }
    return {name: fns[name]() for name in panel_metrics(weighted)}


def _replication_graph(cfg: ExperimentConfig, rep: int) -> Graph:
    graph_seed, weight_seed = derive_seeds(cfg.base_seed, rep)
    g = generate(replace(cfg.topology, seed=graph_seed))
    wcfg = replace(cfg.weight_range, weighted=cfg.weighted)
    return assign_weights(g, wcfg, weight_seed)


def _metric_pairs(weighted: bool):
    return list(combinations(sorted(panel_metrics(weighted)), 2))


def _corr_worker(args):
    """One replication: {(alpha, metric_a, metric_b): rho or None}."""
    cfg, rep = args
    g = _replication_graph(cfg, rep)
    lam1 = ct.dominant_eigenvalue(g)
    out = {}
    for alpha in cfg.alpha_grid:
        panel = metric_panel(g, alpha, cfg.weighted, lam1)
        for a, b in _metric_pairs(cfg.weighted):
            try:
                rho = stats.spearman(panel[a], panel[b])
            except ValueError:
                rho = None
            out[(alpha, a, b)] = rho
    return out


def run_correlation_experiment(cfg: ExperimentConfig,
                               jobs: int = 1) -> list[CorrelationRecord]:
    """Mean/SD of Spearman's rho per (alpha, metric pair) over replications.

    A replication whose correlation is undefined for a cell (constant
    scores) is counted in that cell's reps_skipped, never silently dropped.
    """
    tasks = [(cfg, rep) for rep in range(cfg.reps)]
    if jobs <= 1:
        results = [_corr_worker(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_corr_worker, tasks))

    records = []
    for alpha in cfg.alpha_grid:
        for a, b in _metric_pairs(cfg.weighted):
            vals = [r[(alpha, a, b)] for r in results]
            used = [v for v in vals if v is not None]
            if not used:
                raise RuntimeError(
                    f"all {cfg.reps} replications undefined for "
                    f"({alpha}, {a}, {b})")
            mean = float(np.mean(used))
            sd = float(np.std(used, ddof=1)) if len(used) > 1 else 0.0
            records.append(CorrelationRecord(
                topology=cfg.topology.family.value, weighted=cfg.weighted,
                alpha=alpha, metric_a=a, metric_b=b,
                mean_spearman=mean, sd_spearman=sd,
                reps_used=len(used), reps_skipped=cfg.reps - len(used)))
    return records


def run_distribution_experiment(cfg: ExperimentConfig, bins: int = 100):
    """Normalized scores and pairwise Ruzicka indices on a single graph.

    Returns (score_rows, ruzicka_records); score_rows are
    (alpha, metric, node, normalized_score) tuples. Ruzicka is reported in
    two modes: node-aligned (on normalized score vectors) and histogram
    (on binned masses of the normalized scores).
    """
    g = _replication_graph(cfg, rep=0)
    lam1 = ct.dominant_eigenvalue(g)
    score_rows = []
    records = []
    names = panel_metrics(cfg.weighted)
    for alpha in cfg.alpha_grid:
        panel = metric_panel(g, alpha, cfg.weighted, lam1)
        normed = {m: stats.normalize_minmax(panel[m]).scores for m in names}
        hists = {m: stats.histogram(normed[m], bins).masses for m in names}
        for m in names:
            for node, score in enumerate(normed[m]):
                score_rows.append((alpha, m, node, float(score)))
        for a, b in combinations(sorted(names), 2):
            records.append(RuzickaRecord(
                cfg.topology.family.value, cfg.weighted, alpha, a, b,
                "node-aligned", stats.ruzicka(normed[a], normed[b])))
            records.append(RuzickaRecord(
                cfg.topology.family.value, cfg.weighted, alpha, a, b,
                "histogram", stats.ruzicka(hists[a], hists[b])))
        for m in sorted(names):
            records.append(RuzickaRecord(
                cfg.topology.family.value, cfg.weighted, alpha, m, m,
                "node-aligned", stats.ruzicka(normed[m], normed[m])))
            records.append(RuzickaRecord(
                cfg.topology.family.value, cfg.weighted, alpha, m, m,
                "histogram", stats.ruzicka(hists[m], hists[m])))
    return score_rows, records


BENCH_METRICS = ("d1", "d2", "d3", "d4", "d5", "gamma", "beta")


def run_scaling_benchmark(sizes, family_cfg: GeneratorConfig, reps: int = 5,
                          alpha: float = 1.0,
                          base_seed: int = 0) -> list[ScalingRecord]:
    """Median wall-clock per metric per n, plus a log-log slope per metric.

    Degrees/strengths are cached at graph construction and the dominant
    eigenvalue is computed before the clock starts, so the timings cover the
    metric computation proper. Beta's timing includes its dense
    materialization and LU solve. Runs single-threaded by design.
    """
    sizes = [int(n) for n in sizes]
    if len(sizes) < 3 or any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("need at least 3 strictly increasing sizes")
    if reps < 1:
        raise ValueError("reps must be at least 1")
    resolution = time.get_clock_info("perf_counter").resolution

    # burn-in so the small sizes are not measured on a cold/unthrottled CPU
    with threadpool_limits(limits=1):
        burn = np.random.default_rng(0).random((400, 400))
        t0 = time.perf_counter()
        while time.perf_counter() - t0 < 0.5:
            np.linalg.solve(burn, burn[:, 0])

    times: dict[str, list[float]] = {m: [] for m in BENCH_METRICS}
    for i, n in enumerate(sizes):
        seed = derive_seeds(base_seed, i, count=1)[0]
        g = generate(replace(family_cfg, n=n, seed=seed))
        lam1 = ct.dominant_eigenvalue(g)
        gamma, beta = ct.harmonize(alpha, lam1)
        fns = {
            "d1": lambda: ct.d1(g, alpha),
            "d2": lambda: ct.d2(g, alpha),
            "d3": lambda: ct.d3(g, alpha),
            "d4": lambda: ct.d4(g, alpha),
            "d5": lambda: ct.d5(g, alpha),
            "gamma": lambda: ct.gamma_centrality(g, gamma),
            "beta": lambda: ct.beta_centrality(g, beta, dense_cap=max(n, 5000)),
        }
        for name in BENCH_METRICS:
            with threadpool_limits(limits=1):
                fns[name]()  # warmup, excluded from the samples
                samples = []
                for _ in range(reps):
                    # best-of-3 per rep discards scheduler hiccups, which are
                    # heavily right-skewed at sub-millisecond scales
                    best = math.inf
                    for _ in range(3):
                        t0 = time.perf_counter()
                        fns[name]()
                        best = min(best, time.perf_counter() - t0)
                    samples.append(best)
            med = median(samples)
            if med < 10 * resolution:
                raise RuntimeError(
                    f"timer resolution too coarse: {name} at n={n} "
                    f"took {med:.3e}s (resolution {resolution:.1e}s)")
            times[name].append(med)

    records = []
    logn = np.log(np.asarray(sizes, dtype=float))
    for name in BENCH_METRICS:
        slope = float(np.polyfit(logn, np.log(times[name]), 1)[0])
        for n, t in zip(sizes, times[name]):
            records.append(ScalingRecord(name, n, t, slope))
    return records
