"""Shared fixtures and independent brute-force oracles.

The oracle functions below deliberately work on a dense weight matrix with
plain double loops, so they share no code path with the library's sparse
kernels.
"""

import math

import numpy as np
import pytest

from netdistinct import Graph


def dense_weights(g: Graph) -> np.ndarray:
    W = np.zeros((g.node_count, g.node_count))
    for u, v, w in zip(*g.edges()):
        W[u, v] = W[v, u] = w
    return W


def oracle_degrees(W):
    return (W > 0).sum(axis=1)


def oracle_d1(W, alpha):
    n = W.shape[0]
    deg = oracle_degrees(W)
    out = np.zeros(n)
    for i in range(n):
        for j in range(n):
            if W[i, j] > 0:
                out[i] += W[i, j] * math.log10((n - 1) / deg[j] ** alpha)
    return out


def oracle_d2(W, alpha):
    n = W.shape[0]
    deg = oracle_degrees(W)
    out = np.zeros(n)
    for i in range(n):
        for j in range(n):
            if W[i, j] > 0:
                out[i] += math.log10((n - 1) / deg[j] ** alpha)
    return out


def oracle_d3(W, alpha):
    n = W.shape[0]
    total = W[np.triu_indices(n, k=1)].sum()
    out = np.zeros(n)
    for i in range(n):
        for j in range(n):
            if W[i, j] > 0:
                astr_j = sum(W[j, k] ** alpha for k in range(n) if W[j, k] > 0)
                out[i] += W[i, j] * math.log10(
                    total / (astr_j - W[i, j] ** alpha + 1))
    return out


def oracle_d4(W, alpha):
    n = W.shape[0]
    out = np.zeros(n)
    for i in range(n):
        for j in range(n):
            if W[i, j] > 0:
                astr_j = sum(W[j, k] ** alpha for k in range(n) if W[j, k] > 0)
                out[i] += W[i, j] * W[i, j] ** alpha / astr_j
    return out


def oracle_d5(W, alpha):
    n = W.shape[0]
    deg = oracle_degrees(W)
    out = np.zeros(n)
    for i in range(n):
        for j in range(n):
            if W[i, j] > 0:
                out[i] += 1.0 / deg[j] ** alpha
    return out


def oracle_beta_neumann(W, beta, tol=1e-12, max_terms=10000):
    """Truncated Neumann series sum_k beta^k W^k (W 1)."""
    s = W.sum(axis=1)
    term = s.copy()
    total = s.copy()
    for _ in range(max_terms):
        term = beta * (W @ term)
        total += term
        if np.linalg.norm(term) < tol:
            return total
    raise AssertionError("Neumann series did not converge")


def oracle_spearman(x, y):
    """Pearson correlation of hand-computed average ranks."""
    def ranks(v):
        v = list(v)
        order = sorted(range(len(v)), key=lambda i: v[i])
        r = [0.0] * len(v)
        i = 0
        while i < len(order):
            j = i
            while j + 1 < len(order) and v[order[j + 1]] == v[order[i]]:
                j += 1
            avg = (i + j) / 2 + 1
            for k in range(i, j + 1):
                r[order[k]] = avg
            i = j + 1
        return np.asarray(r)

    rx, ry = ranks(x), ranks(y)
    rx = rx - rx.mean()
    ry = ry - ry.mean()
    return float(rx @ ry / math.sqrt((rx @ rx) * (ry @ ry)))


def random_graph(rng, n, p=0.3, weighted=True, max_w=9):
    """Small random test graph, possibly with isolates."""
    iu, iv = np.triu_indices(n, k=1)
    mask = rng.random(iu.size) < p
    eu, ev = iu[mask], iv[mask]
    w = rng.integers(1, max_w + 1, size=eu.size).astype(float) if weighted \
        else None
    return Graph(n, eu, ev, w)


@pytest.fixture
def path3():
    """Unweighted path A--B--C (nodes 0,1,2)."""
    return Graph(3, [0, 1], [1, 2])


@pytest.fixture
def star4():
    """Unweighted star with center 0 and four leaves."""
    return Graph(5, [0, 0, 0, 0], [1, 2, 3, 4])


@pytest.fixture
def triangle():
    return Graph(3, [0, 0, 1], [1, 2, 2])
