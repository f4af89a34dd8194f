"""Empirical complexity scaling of the metrics.

Times every metric on Erdos-Renyi graphs of doubling size and fits a
log-log slope. With degrees cached and the dominant eigenvalue precomputed,
the sparse metrics scale roughly with the edge count (slope ~2 at fixed
density) while Beta's dense LU solve pushes toward cubic growth.
"""

from netdistinct.experiments import run_scaling_benchmark
from netdistinct.generators import Family, GeneratorConfig

records = run_scaling_benchmark(
    sizes=[200, 400, 800, 1600],
    family_cfg=GeneratorConfig(Family.ERDOS_RENYI, n=3, p=0.2),
    reps=5,
)

by_metric: dict[str, list] = {}
for r in records:
    by_metric.setdefault(r.metric, []).append(r)

sizes = [r.n for r in next(iter(by_metric.values()))]
header = "metric  slope " + "".join(f"{f'n={n}':>12}" for n in sizes)
print(header)
for metric, rs in sorted(by_metric.items(), key=lambda kv: kv[1][0].loglog_slope):
    times = "".join(f"{r.median_runtime_seconds * 1e3:>10.3f}ms" for r in rs)
    print(f"{metric:<7} {rs[0].loglog_slope:>5.2f} {times}")

print("\nbeta (dense solve) should sit clearly above the sparse metrics.")
