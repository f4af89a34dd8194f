"""Distinctiveness (D1-D5), Beta and Gamma centrality on sparse graphs.

All metrics assign isolates a score of exactly 0 and never evaluate a log or
reciprocal of a zero degree. D1, D2 and D5 use the binary degree (neighbor
count) even on weighted graphs; Gamma uses strength (weighted row sums).
Logs are base 10 throughout. Scores are never normalized here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graph import Graph

DENSE_NODE_CAP = 5000


class ConvergenceError(RuntimeError):
    """Power iteration failed to converge; carries the achieved residual."""

    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(message)


class Metric(str, Enum):
    D1 = "d1"
    D2 = "d2"
    D3 = "d3"
    D4 = "d4"
    D5 = "d5"
    BETA = "beta"
    GAMMA = "gamma"
    DEGREE = "degree"
    STRENGTH = "strength"


D_METRICS = (Metric.D1, Metric.D2, Metric.D3, Metric.D4, Metric.D5)


@dataclass(frozen=True)
class MetricSpec:
    """Metric selector plus its tuning parameter.

    param is alpha for D1-D5 (must be > 0), beta for Beta, gamma for Gamma,
    and ignored for Degree/Strength.
    """
    kind: Metric
    param: float | None = None

    def __post_init__(self):
        if self.kind in D_METRICS:
            if self.param is None or self.param <= 0:
                raise ValueError(f"{self.kind.value} requires alpha > 0")
        elif self.kind in (Metric.BETA, Metric.GAMMA):
            if self.param is None:
                raise ValueError(f"{self.kind.value} requires a parameter")


@dataclass(frozen=True)
class ScoreVector:
    """Per-node scores of one metric on one graph."""
    scores: np.ndarray
    metric: MetricSpec
    graph_fingerprint: str

    def __post_init__(self):
        s = np.asarray(self.scores, dtype=np.float64)
        s.setflags(write=False)
        object.__setattr__(self, "scores", s)

    def __len__(self):
        return self.scores.size


def _finish(g: Graph, kind: Metric, param, scores: np.ndarray) -> ScoreVector:
    bad = ~np.isfinite(scores)
    if np.any(bad):
        node = int(np.argmax(bad))
        raise ArithmeticError(
            f"{kind.value}: non-finite score {scores[node]} at node {node}")
    return ScoreVector(scores, MetricSpec(kind, param), g.fingerprint)


def _require(g: Graph, alpha: float, min_n: int = 2):
    if g.node_count < min_n:
        raise ValueError(f"graph must have at least {min_n} nodes")
    if alpha <= 0:
        raise ValueError("alpha must be positive")


def _log_term(g: Graph, alpha: float) -> np.ndarray:
    """log10((n-1)/g_j**alpha) per node, 0 where degree is 0.

    Isolates never appear as neighbors, so their placeholder is never used.
    """
    t = np.zeros(g.node_count)
    pos = g.degrees > 0
    t[pos] = math.log10(g.node_count - 1) - alpha * np.log10(g.degrees[pos])
    return t


def d1(g: Graph, alpha: float) -> ScoreVector:
    """D1(i) = sum over neighbors j of w_ij * log10((n-1)/g_j**alpha)."""
    _require(g, alpha)
    adj = g.adjacency
    t = _log_term(g, alpha)
    scores = np.bincount(adj.indices, weights=adj.data * t[g._row_index],
                         minlength=g.node_count)
    return _finish(g, Metric.D1, alpha, scores)


def d2(g: Graph, alpha: float) -> ScoreVector:
    """D2(i) = sum over neighbors j of log10((n-1)/g_j**alpha)."""
    _require(g, alpha)
    adj = g.adjacency
    t = _log_term(g, alpha)
    scores = np.bincount(adj.indices, weights=t[g._row_index],
                         minlength=g.node_count)
    return _finish(g, Metric.D2, alpha, scores)


def d3(g: Graph, alpha: float) -> ScoreVector:
    """D3(i) = sum_j w_ij * log10(W / (alpha_strength(j) - w_ij**alpha + 1)).

    W is the total weight over distinct edges. The denominator is >= 1 by
    construction since w_ij**alpha is one of alpha_strength(j)'s summands.
    """
    _require(g, alpha)
    if g.edge_count == 0:
        raise ValueError("d3 requires at least one edge")
    adj = g.adjacency
    wa = adj.data ** alpha
    astr = np.bincount(g._row_index, weights=wa, minlength=g.node_count)
    denom = astr[g._row_index] - wa + 1.0
    if np.any(denom < 1.0 - 1e-9):
        e = int(np.argmin(denom))
        raise ArithmeticError(
            f"d3: denominator {denom[e]} < 1 at edge "
            f"({g._row_index[e]}, {adj.indices[e]})")
    vals = adj.data * np.log10(g.total_weight() / denom)
    scores = np.bincount(adj.indices, weights=vals, minlength=g.node_count)
    return _finish(g, Metric.D3, alpha, scores)


def d4(g: Graph, alpha: float) -> ScoreVector:
    """D4(i) = sum_j w_ij * w_ij**alpha / alpha_strength(j)."""
    _require(g, alpha)
    adj = g.adjacency
    wa = adj.data ** alpha
    astr = np.bincount(g._row_index, weights=wa, minlength=g.node_count)
    vals = adj.data * wa / astr[g._row_index]
    scores = np.bincount(adj.indices, weights=vals, minlength=g.node_count)
    return _finish(g, Metric.D4, alpha, scores)


def d5(g: Graph, alpha: float) -> ScoreVector:
    """D5(i) = sum over neighbors j of 1/g_j**alpha."""
    _require(g, alpha, min_n=1)
    adj = g.adjacency
    inv = np.zeros(g.node_count)
    pos = g.degrees > 0
    inv[pos] = g.degrees[pos].astype(np.float64) ** (-alpha)
    scores = np.bincount(adj.indices, weights=inv[g._row_index],
                         minlength=g.node_count)
    return _finish(g, Metric.D5, alpha, scores)


def gamma_centrality(g: Graph, gamma: float) -> ScoreVector:
    """GC(i) = sum over neighbors j of w_ij * strength(j)**gamma.

    gamma=0 returns the strength vector exactly. Isolates score 0; a power
    of a zero strength is never evaluated (neighbors have strength > 0).
    """
    adj = g.adjacency
    if gamma == 0:
        return _finish(g, Metric.GAMMA, gamma, g.strengths.copy())
    sg = np.ones(g.node_count)
    pos = g.degrees > 0
    sg[pos] = g.strengths[pos] ** gamma
    scores = np.bincount(adj.indices, weights=adj.data * sg[g._row_index],
                         minlength=g.node_count)
    return _finish(g, Metric.GAMMA, gamma, scores)


def beta_centrality(g: Graph, beta: float,
                    dense_cap: int = DENSE_NODE_CAP) -> ScoreVector:
    """Bonacich Beta centrality: solve (I - beta*A) x = A 1.

    Solved as a dense linear system (LU with partial pivoting), never by
    explicit inversion. Requires |beta| * lambda1 < 1 and n within
    dense_cap. beta=0 returns the strength vector exactly.
    """
    if g.node_count > dense_cap:
        raise ValueError(
            f"beta centrality densifies the matrix: n={g.node_count} "
            f"exceeds the cap of {dense_cap} nodes")
    if beta == 0 or g.edge_count == 0:
        return _finish(g, Metric.BETA, beta, g.strengths.copy())
    lam1 = dominant_eigenvalue(g)
    if abs(beta) * lam1 >= 1.0:
        raise ValueError(
            f"|beta|*lambda1 = {abs(beta) * lam1:.6g} >= 1; "
            "the Beta series does not converge")
    lhs = g.adjacency.toarray()
    lhs *= -beta
    np.fill_diagonal(lhs, lhs.diagonal() + 1.0)
    try:
        x = np.linalg.solve(lhs, g.strengths)  # LAPACK gesv: LU, partial pivoting
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError(f"beta: singular system ({exc})") from exc
    return _finish(g, Metric.BETA, beta, x)


def dominant_eigenvalue(g: Graph, tol: float = 1e-10,
                        max_iter: int = 10000) -> float:
    """Largest eigenvalue of the weight matrix via power iteration.

    Rayleigh-quotient iteration from the uniform vector, stopping when the
    relative change of the quotient drops below tol and the eigen-residual
    is small. Bipartite/tie oscillation (the quotient settles but the
    residual stays large) triggers one shift-restart with a random unit
    vector on A + s*I, which has the same eigenvectors but a sign-free
    spectrum. Results are cached on the graph.
    """
    if g.edge_count == 0:
        raise ValueError("dominant eigenvalue requires at least one edge")
    if g._lambda1 is not None:
        return g._lambda1

    adj = g.adjacency
    n = g.node_count
    x0 = np.full(n, 1.0 / math.sqrt(n))

    lam, residual = _power_iterate(adj, x0, 0.0, tol, max_iter)
    if lam is None:
        # shift by a Gershgorin bound so every shifted eigenvalue is >= 1
        shift = float(g.strengths.max()) + 1.0
        rng = np.random.default_rng(0x5eed)
        x0 = rng.standard_normal(n)
        x0 /= np.linalg.norm(x0)
        lam, residual = _power_iterate(adj, x0, shift, tol, max_iter)
        if lam is None:
            raise ConvergenceError(
                f"power iteration did not converge within {max_iter} "
                f"iterations (residual {residual:.3e})", residual)
    g._lambda1 = lam
    return lam


def _power_iterate(adj, x, shift, tol, max_iter):
    """One power-iteration run on A + shift*I; returns (lambda, residual).

    lambda is None when the run did not converge; the residual is relative
    to max(|lambda|, 1) and must fall below 1e-4 for acceptance (the
    Rayleigh quotient itself is accurate to ~residual**2 for symmetric
    matrices).
    """
    lam = math.inf
    residual = math.inf
    for _ in range(max_iter):
        y = adj @ x + shift * x
        norm = np.linalg.norm(y)
        if norm == 0:
            return None, math.inf
        lam_new = float(x @ y)
        x = y / norm
        if abs(lam_new - lam) <= tol * max(abs(lam_new), 1.0):
            r = adj @ x + shift * x - lam_new * x
            residual = float(np.linalg.norm(r)) / max(abs(lam_new), 1.0)
            if residual <= 1e-4:
                return lam_new - shift, residual
            # oscillation or near-tie: quotient settled, vector did not;
            # keep iterating in case the residual is still shrinking
        lam = lam_new
    return None, residual


def harmonize(alpha: float, lambda1: float) -> tuple[float, float]:
    """Map a Distinctiveness alpha onto comparable (gamma, beta) parameters.

    gamma = -alpha and beta = (2/e**alpha - 1)/lambda1, which keeps
    |beta|*lambda1 < 1 for every alpha > 0.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if lambda1 <= 0:
        raise ValueError("lambda1 must be positive")
    return -alpha, (2.0 / math.exp(alpha) - 1.0) / lambda1


_DISPATCH = {
    Metric.D1: d1,
    Metric.D2: d2,
    Metric.D3: d3,
    Metric.D4: d4,
    Metric.D5: d5,
}


def compute(g: Graph, spec: MetricSpec) -> ScoreVector:
    """Compute any metric from its MetricSpec."""
    if spec.kind in _DISPATCH:
        return _DISPATCH[spec.kind](g, spec.param)
    if spec.kind is Metric.BETA:
        return beta_centrality(g, spec.param)
    if spec.kind is Metric.GAMMA:
        return gamma_centrality(g, spec.param)
    if spec.kind is Metric.DEGREE:
        return _finish(g, Metric.DEGREE, None, g.degrees.astype(np.float64))
    if spec.kind is Metric.STRENGTH:
        return _finish(g, Metric.STRENGTH, None, g.strengths.copy())
    raise ValueError(f"unknown metric kind {spec.kind!r}")
