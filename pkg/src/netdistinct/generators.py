"""Seeded random-graph generators and random integer edge weights.

All generators use numpy's PCG64 stream, so a given (config, seed) pair
produces the same graph on every platform. Replication seeds are derived
with derive_seeds(base_seed, rep), which keeps serial and parallel runs
identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graph import Graph


class Family(str, Enum):
    SCALE_FREE = "sf"
    SMALL_WORLD = "sw"
    ERDOS_RENYI = "er"


@dataclass(frozen=True)
class GeneratorConfig:
    family: Family
    n: int
    m: int = 2          # edges per new node (scale-free)
    nei: int = 2        # half-neighborhood size (small-world)
    p: float = 0.05     # rewiring or edge probability
    seed: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.nei < 1:
            raise ValueError("nei must be at least 1")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")


@dataclass(frozen=True)
class WeightConfig:
    weighted: bool = False
    low: int = 1
    high: int = 20

    def __post_init__(self):
        if self.low < 1 or self.high < self.low:
            raise ValueError("weight range requires 1 <= low <= high")


def derive_seeds(base_seed: int, rep: int, count: int = 2) -> list[int]:
    """Independent 64-bit seeds for replication rep of a base seed."""
    ss = np.random.SeedSequence(entropy=(int(base_seed), int(rep)))
    return [int(s) for s in ss.generate_state(count, dtype=np.uint64)]


def gen_scale_free(cfg: GeneratorConfig) -> Graph:
    """Preferential attachment, starting from a single node.

    Node t (t = 1..n-1) attaches min(m, t) distinct edges to existing nodes,
    drawn without replacement with probability proportional to degree + 1
    (unit zero-appeal so the first attachment is well defined).
    """
    if cfg.family is not Family.SCALE_FREE:
        raise ValueError("config family must be scale-free")
    rng = np.random.default_rng(cfg.seed)
    n, m = cfg.n, cfg.m
    deg = np.zeros(n, dtype=np.int64)
    eu, ev = [], []
    for t in range(1, n):
        k = min(m, t)
        weights = deg[:t] + 1.0
        targets = rng.choice(t, size=k, replace=False, p=weights / weights.sum())
        for tgt in targets:
            eu.append(t)
            ev.append(int(tgt))
            deg[t] += 1
            deg[tgt] += 1
    return Graph(n, eu, ev)


def gen_small_world(cfg: GeneratorConfig) -> Graph:
    """Watts-Strogatz ring lattice with random rewiring.

    Each node links to its nei nearest neighbors on each side (n*nei edges);
    each edge is rewired with probability p to a uniform random endpoint,
    redrawing on self-loop or duplicate so the edge count stays exact.
    """
    if cfg.family is not Family.SMALL_WORLD:
        raise ValueError("config family must be small-world")
    n, nei = cfg.n, cfg.nei
    if n <= 2 * nei:
        raise ValueError("small-world requires n > 2*nei")
    rng = np.random.default_rng(cfg.seed)
    edges = set()
    order = []
    for k in range(1, nei + 1):
        for i in range(n):
            e = (i, (i + k) % n) if i < (i + k) % n else ((i + k) % n, i)
            edges.add(e)
            order.append(e)
    for e in order:
        if rng.random() >= cfg.p:
            continue
        u = e[0]
        edges.remove(e)
        while True:
            v = int(rng.integers(n))
            cand = (min(u, v), max(u, v))
            if v != u and cand not in edges:
                break
        edges.add(cand)
    eu, ev = zip(*sorted(edges))
    return Graph(n, eu, ev)


def gen_erdos_renyi(cfg: GeneratorConfig) -> Graph:
    """G(n, p): each unordered pair included independently with probability p."""
    if cfg.family is not Family.ERDOS_RENYI:
        raise ValueError("config family must be Erdos-Renyi")
    n = cfg.n
    rng = np.random.default_rng(cfg.seed)
    iu, iv = np.triu_indices(n, k=1)
    mask = rng.random(iu.size) < cfg.p
    return Graph(n, iu[mask], iv[mask])


_GENERATORS = {
    Family.SCALE_FREE: gen_scale_free,
    Family.SMALL_WORLD: gen_small_world,
    Family.ERDOS_RENYI: gen_erdos_renyi,
}


def generate(cfg: GeneratorConfig) -> Graph:
    """Dispatch to the generator matching cfg.family."""
    return _GENERATORS[cfg.family](cfg)


def assign_weights(g: Graph, wcfg: WeightConfig, seed: int) -> Graph:
    """Independent uniform integer weights in [low, high] per edge.

    With the weighted flag off the graph is returned with all weights 1
    (unchanged if it already is unweighted).
    """
    eu, ev, _ = g.edges()
    if not wcfg.weighted:
        return g if g.is_unweighted() else Graph(g.node_count, eu, ev)
    rng = np.random.default_rng(seed)
    w = rng.integers(wcfg.low, wcfg.high + 1, size=eu.size).astype(np.float64)
    return Graph(g.node_count, eu, ev, w)
