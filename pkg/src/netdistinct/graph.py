"""Immutable sparse undirected weighted graph with cached degree/strength."""

from __future__ import annotations

import hashlib
import io
from pathlib import Path

import numpy as np
from scipy import sparse


class EdgeListError(ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class NodeLabelMap:
    """Bijection between external node labels and internal indices 0..n-1."""

    def __init__(self, labels):
        self.labels = tuple(str(x) for x in labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError("duplicate node labels")

    def __len__(self):
        return len(self.labels)

    def index_of(self, label: str) -> int:
        return self._index[label]

    def label_of(self, index: int) -> str:
        return self.labels[index]


class Graph:
    """Simple undirected graph with strictly positive edge weights.

    Immutable after construction; degrees and strengths are cached so later
    lookups are O(1). Isolates (degree 0) are allowed. Unweighted graphs are
    represented with all weights exactly 1.0.
    """

    def __init__(self, node_count: int, edge_u, edge_v, edge_w=None):
        n = int(node_count)
        if n < 0:
            raise ValueError("node_count must be nonnegative")
        eu = np.asarray(edge_u, dtype=np.int64).ravel()
        ev = np.asarray(edge_v, dtype=np.int64).ravel()
        if edge_w is None:
            ew = np.ones(eu.size, dtype=np.float64)
        else:
            ew = np.asarray(edge_w, dtype=np.float64).ravel()
        if not (eu.size == ev.size == ew.size):
            raise ValueError("edge arrays must have equal length")
        if eu.size:
            if eu.min(initial=0) < 0 or ev.min(initial=0) < 0 \
                    or eu.max(initial=-1) >= n or ev.max(initial=-1) >= n:
                raise ValueError("edge endpoint out of range")
            if np.any(eu == ev):
                raise ValueError("self-loops are not allowed")
            if not np.all(np.isfinite(ew)) or np.any(ew <= 0):
                raise ValueError("edge weights must be finite and strictly positive")

        # canonical order: u < v, sorted lexicographically
        lo = np.minimum(eu, ev)
        hi = np.maximum(eu, ev)
        order = np.lexsort((hi, lo))
        lo, hi, ew = lo[order], hi[order], ew[order]
        if lo.size > 1:
            same = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
            if np.any(same):
                raise ValueError("duplicate edge between the same node pair")

        self._n = n
        self._eu, self._ev, self._ew = lo, hi, ew
        rows = np.concatenate([lo, hi])
        cols = np.concatenate([hi, lo])
        data = np.concatenate([ew, ew])
        self._adj = sparse.csr_array((data, (rows, cols)), shape=(n, n))
        self._degrees = np.diff(self._adj.indptr).astype(np.int64)
        self._strengths = np.zeros(n) if lo.size == 0 else self._adj.sum(axis=1)
        self._strengths = np.asarray(self._strengths, dtype=np.float64).ravel()
        # row index of each stored CSR entry; reused by the centrality kernels
        self._row_index = np.repeat(np.arange(n), self._degrees)
        for arr in (self._eu, self._ev, self._ew, self._degrees,
                    self._strengths, self._row_index):
            arr.setflags(write=False)
        h = hashlib.sha256()
        h.update(np.int64(n).tobytes())
        h.update(lo.tobytes())
        h.update(hi.tobytes())
        h.update(ew.tobytes())
        self._fingerprint = h.hexdigest()[:16]
        self._lambda1 = None  # cache filled by centrality.dominant_eigenvalue

    # -- basic queries ------------------------------------------------------

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._eu.size

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def strengths(self) -> np.ndarray:
        return self._strengths

    @property
    def adjacency(self) -> sparse.csr_array:
        """Symmetric sparse weight matrix (do not mutate)."""
        return self._adj

    @property
    def fingerprint(self) -> str:
        return self._fingerprint

    def edges(self):
        """Canonical (u, v, w) arrays with u < v, one row per undirected edge."""
        return self._eu, self._ev, self._ew

    def _check_node(self, j: int):
        if not 0 <= j < self._n:
            raise IndexError(f"node index {j} out of range for n={self._n}")

    def degree(self, j: int) -> int:
        self._check_node(j)
        return int(self._degrees[j])

    def strength(self, j: int) -> float:
        self._check_node(j)
        return float(self._strengths[j])

    def neighbors(self, j: int):
        """(neighbor indices, weights) of node j as array views."""
        self._check_node(j)
        a, b = self._adj.indptr[j], self._adj.indptr[j + 1]
        return self._adj.indices[a:b], self._adj.data[a:b]

    def alpha_strength(self, j: int, alpha: float) -> float:
        """Sum over neighbors k of w_jk**alpha."""
        self._check_node(j)
        if alpha <= 0:
            raise ValueError("alpha must be positive")
        _, w = self.neighbors(j)
        return float(np.sum(w ** alpha))

    def alpha_strengths(self, alpha: float) -> np.ndarray:
        """Vector of alpha-strengths for every node (0 for isolates)."""
        if alpha <= 0:
            raise ValueError("alpha must be positive")
        return np.bincount(self._row_index, weights=self._adj.data ** alpha,
                           minlength=self._n)

    def total_weight(self) -> float:
        """Sum of weights over distinct edges (each unordered pair once)."""
        return float(self._ew.sum())

    def is_unweighted(self) -> bool:
        return bool(np.all(self._ew == 1.0))


# -- edge-list I/O ----------------------------------------------------------

def _open_lines(source):
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8")
    if isinstance(source, bytes):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, io.IOBase) and not isinstance(source, io.TextIOBase):
        return io.TextIOWrapper(source, encoding="utf-8")
    return source


def read_edge_list(source, weighted: bool = True):
    """Parse a whitespace-separated edge list into (Graph, NodeLabelMap).

    Lines are "u v" or "u v w"; `#`-prefixed lines and blank lines are
    ignored. Labels are mapped to contiguous indices in first-appearance
    order. With weighted=False every edge gets weight 1.0 regardless of any
    third column. Malformed input raises EdgeListError with the line number.
    """
    fh = _open_lines(source)
    labels: list[str] = []
    index: dict[str, int] = {}
    seen: set[tuple[int, int]] = set()
    eu, ev, ew = [], [], []

    def node(tok: str) -> int:
        if tok not in index:
            index[tok] = len(labels)
            labels.append(tok)
        return index[tok]

    for line_no, raw in enumerate(fh, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) not in (2, 3):
            raise EdgeListError(line_no, f"expected 2 or 3 tokens, got {len(toks)}")
        u, v = node(toks[0]), node(toks[1])
        if u == v:
            raise EdgeListError(line_no, f"self-loop on node {toks[0]!r}")
        if len(toks) == 3:
            try:
                w = float(toks[2])
            except ValueError:
                raise EdgeListError(line_no, f"unparsable weight {toks[2]!r}") from None
            if not np.isfinite(w) or w <= 0:
                raise EdgeListError(line_no, f"nonpositive weight {toks[2]}")
        else:
            w = 1.0
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(line_no, f"duplicate edge {toks[0]} -- {toks[1]}")
        seen.add(key)
        eu.append(u)
        ev.append(v)
        ew.append(w if weighted else 1.0)

    return Graph(len(labels), eu, ev, ew), NodeLabelMap(labels)


def write_edge_list(g: Graph, labels: NodeLabelMap, sink):
    """Write the canonical edge list using the original labels."""
    close = False
    if isinstance(sink, (str, Path)):
        sink = open(sink, "w", encoding="utf-8")
        close = True
    try:
        for u, v, w in zip(*g.edges()):
            sink.write(f"{labels.label_of(int(u))} {labels.label_of(int(v))} {w:g}\n")
    finally:
        if close:
            sink.close()
