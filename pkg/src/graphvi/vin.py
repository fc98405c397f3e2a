"""Variation of information with neighbors (VIN).

Each point is described by its neighborhood signature: its own label
together with the multiset of its neighbors' labels. Two points fall in
the same class exactly when their signatures match, which means same
central label, same number of neighbors and same count per label. The
classes form a refinement of the clustering, and VIN is the variation of
information between the refinements of the two clusterings.

Because each refinement depends only on its own clustering and the fixed
graph, VIN inherits the metric properties of VI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .clustering import Clustering, ClusteringLike, as_clustering
from .metrics import vi

__all__ = [
    "AdjacencyGraph",
    "NeighborhoodSignature",
    "Refinement",
    "signatures",
    "refine",
    "vin",
]


@dataclass(frozen=True, eq=False)
class AdjacencyGraph:
    """Unweighted undirected graph stored as a boolean CSR matrix.

    Self-edges are dropped: a point always belongs to its own
    neighborhood, so listing it again would change nothing.
    """

    matrix: sp.csr_matrix

    def __post_init__(self):
        m = sp.csr_matrix(self.matrix)
        if m.shape[0] != m.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got {m.shape}")
        coo = m.tocoo()
        keep = (coo.row != coo.col) & (coo.data != 0)
        m = sp.csr_matrix(
            (np.ones(int(keep.sum()), dtype=bool), (coo.row[keep], coo.col[keep])), shape=m.shape
        )
        m.sum_duplicates()
        m.sort_indices()
        if (m != m.T).nnz:
            raise ValueError("adjacency matrix is not symmetric")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_edges(cls, n: int, i, j) -> "AdjacencyGraph":
        i = np.asarray(i, dtype=np.int64).ravel()
        j = np.asarray(j, dtype=np.int64).ravel()
        if i.size != j.size:
            raise ValueError("edge arrays differ in length")
        if i.size and (min(i.min(), j.min()) < 0 or max(i.max(), j.max()) >= n):
            raise ValueError(f"edge endpoint out of range for {n} nodes")
        rows = np.concatenate([i, j])
        cols = np.concatenate([j, i])
        data = np.ones(rows.size, dtype=bool)
        return cls(sp.coo_matrix((data, (rows, cols)), shape=(n, n)).tocsr())

    @classmethod
    def from_dense(cls, a) -> "AdjacencyGraph":
        return cls(sp.csr_matrix(np.asarray(a) != 0))

    @classmethod
    def empty(cls, n: int) -> "AdjacencyGraph":
        return cls(sp.csr_matrix((n, n), dtype=bool))

    @classmethod
    def complete(cls, n: int) -> "AdjacencyGraph":
        return cls(sp.csr_matrix(np.ones((n, n), dtype=bool)))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.matrix.indptr)

    def neighbors(self, i: int) -> np.ndarray:
        m = self.matrix
        return m.indices[m.indptr[i] : m.indptr[i + 1]]

    def edges(self):
        """Upper-triangle edge list ``(i, j)`` with ``i < j``."""
        upper = sp.triu(self.matrix).tocoo()
        order = np.lexsort((upper.col, upper.row))
        return upper.row[order], upper.col[order]


@dataclass(frozen=True)
class NeighborhoodSignature:
    central: int
    neighbor_labels: tuple


@dataclass(frozen=True, eq=False)
class Refinement:
    """Neighborhood classes of a clustering on a graph.

    ``labels`` numbers the classes by first occurrence; ``source`` is the
    clustering that was refined.
    """

    labels: Clustering
    source: Clustering


def _check(c: Clustering, a: AdjacencyGraph) -> None:
    if c.n != a.n:
        raise ValueError(f"clustering size mismatch: graph has {a.n} nodes, clustering {c.n}")


def signatures(c: ClusteringLike, a: AdjacencyGraph) -> list:
    """Per-point signatures, using canonical cluster codes."""
    c = as_clustering(c)
    _check(c, a)
    lab = c.labels
    return [
        NeighborhoodSignature(int(lab[i]), tuple(sorted(lab[a.neighbors(i)].tolist())))
        for i in range(c.n)
    ]


def _signature_rows(c: Clustering, a: AdjacencyGraph) -> np.ndarray:
    """One row per point: central label, then (label, count) pairs, padded with -1.

    The pairs are sorted by label, so equal rows mean equal signatures.
    """
    m = a.matrix
    n, k = c.n, c.k
    owner = np.repeat(np.arange(n, dtype=np.int64), np.diff(m.indptr))
    keys, counts = np.unique(owner * k + c.labels[m.indices], return_counts=True)
    rows, labs = np.divmod(keys, k)
    distinct = np.bincount(rows, minlength=n)
    width = int(distinct.max()) if distinct.size else 0
    start = np.concatenate([[0], np.cumsum(distinct)[:-1]])
    slot = np.arange(keys.size) - start[rows]
    out = np.full((n, 1 + 2 * width), -1, dtype=np.int64)
    out[:, 0] = c.labels
    out[rows, 1 + 2 * slot] = labs
    out[rows, 2 + 2 * slot] = counts
    return out


def refine(c: ClusteringLike, a: AdjacencyGraph) -> Refinement:
    """Split each cluster into classes of identical neighborhood signature.

    With no edges the refinement is the clustering itself.
    """
    c = as_clustering(c)
    _check(c, a)
    rows = _signature_rows(c, a)
    _, cls = np.unique(rows, axis=0, return_inverse=True)
    return Refinement(Clustering(cls.ravel()), c)


def vin(c: ClusteringLike, c2: ClusteringLike, a: AdjacencyGraph, base: float = math.e) -> float:
    """Variation of information between the neighborhood refinements."""
    c, c2 = as_clustering(c), as_clustering(c2)
    if c.n != c2.n:
        raise ValueError(f"clustering size mismatch: {c.n} vs {c2.n} points")
    return vi(refine(c, a).labels, refine(c2, a).labels, base=base)
