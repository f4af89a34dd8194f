"""Rank correlation, normalization, Ruzicka similarity, histograms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .centrality import ScoreVector


def _values(x) -> np.ndarray:
    if isinstance(x, ScoreVector):
        return np.asarray(x.scores, dtype=np.float64)
    return np.asarray(x, dtype=np.float64)


def spearman(x, y) -> float:
    """Spearman's rho: Pearson correlation of average-tie ranks.

    Raises on length mismatch or when either side has zero rank variance
    (an all-constant vector makes the correlation undefined, not 0).
    """
    xv, yv = _values(x), _values(y)
    if xv.size != yv.size:
        raise ValueError(f"length mismatch: {xv.size} vs {yv.size}")
    if xv.size < 2:
        raise ValueError("need at least two observations")
    rx = rankdata(xv, method="average")
    ry = rankdata(yv, method="average")
    rx = rx - rx.mean()
    ry = ry - ry.mean()
    vx = float(rx @ rx)
    vy = float(ry @ ry)
    if vx == 0 or vy == 0:
        raise ValueError("undefined correlation: zero rank variance")
    rho = float(rx @ ry) / np.sqrt(vx * vy)
    return float(np.clip(rho, -1.0, 1.0))


def normalize_minmax(x):
    """(x - min)/(max - min) into [0, 1]; constant vectors map to all zeros."""
    v = _values(x)
    span = v.max() - v.min()
    out = np.zeros_like(v) if span == 0 else (v - v.min()) / span
    if isinstance(x, ScoreVector):
        return ScoreVector(out, x.metric, x.graph_fingerprint)
    return out


def ruzicka(p, q) -> float:
    """Ruzicka index: sum(min(p,q)) / sum(max(p,q)), in [0,1], 1 iff p == q."""
    pv, qv = _values(p), _values(q)
    if pv.size != qv.size:
        raise ValueError(f"length mismatch: {pv.size} vs {qv.size}")
    if np.any(pv < 0) or np.any(qv < 0):
        raise ValueError("ruzicka requires nonnegative entries")
    denom = float(np.maximum(pv, qv).sum())
    if denom == 0:
        raise ValueError("undefined: both vectors are all-zero")
    return float(np.minimum(pv, qv).sum()) / denom


@dataclass(frozen=True)
class Histogram:
    bin_edges: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        if self.masses.size != self.bin_edges.size - 1:
            raise ValueError("masses must have one entry per bin")
        if abs(self.masses.sum() - 1.0) > 1e-12:
            raise ValueError("masses must sum to 1")


def histogram(x, bins: int) -> Histogram:
    """Equal-width histogram of values in [0, 1] with normalized masses.

    The last bin is right-closed, so a value of exactly 1 lands in it.
    """
    v = _values(x)
    if bins < 1:
        raise ValueError("bins must be positive")
    if v.size == 0:
        raise ValueError("empty input")
    if np.any(v < 0) or np.any(v > 1):
        raise ValueError("histogram input must lie in [0, 1]")
    edges = np.linspace(0.0, 1.0, bins + 1)
    counts, _ = np.histogram(v, bins=edges)
    return Histogram(edges, counts / v.size)
