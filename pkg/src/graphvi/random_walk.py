"""Random walks on a similarity graph and the random walk index (RWI).

The walk moves from node ``i`` to node ``j`` with probability
``T_ij = S_ij / d_i`` and is started from its stationary distribution
``pi_i = d_i / sum(d)``. RWI adds, to each conditional entropy of VI, the
label of the previously visited point as an extra conditioning variable::

    RWI(C, C') = H(k_t | k'_t, k_{t-1}) + H(k'_t | k_t, k'_{t-1})

Only one step of the chain is ever needed. Building the three-way joint
law costs one pass over the edges; the entropies then cost O(K^2 K').
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
import scipy.sparse as sp

from .clustering import Clustering, ClusteringLike, as_clustering
from .metrics import _scale

__all__ = [
    "SimilarityGraph",
    "TransitionModel",
    "TripleDistribution",
    "transition_model",
    "cluster_transitions",
    "triple_joint",
    "rwi",
]


@dataclass(frozen=True, eq=False)
class SimilarityGraph:
    """Symmetric nonnegative similarity weights over ``n`` points.

    ``weights`` is an ``n x n`` CSR matrix holding both ``(i, j)`` and
    ``(j, i)``. Use :meth:`from_edges` or :meth:`from_dense` rather than
    constructing it directly.
    """

    weights: sp.csr_matrix

    def __post_init__(self):
        w = sp.csr_matrix(self.weights, dtype=float)
        if w.shape[0] != w.shape[1]:
            raise ValueError(f"similarity matrix must be square, got {w.shape}")
        w.sum_duplicates()
        w.eliminate_zeros()
        w.sort_indices()
        if w.nnz and (np.any(w.data < 0) or not np.all(np.isfinite(w.data))):
            raise ValueError("similarities must be finite and nonnegative")
        if (w - w.T).count_nonzero():
            raise ValueError("similarity matrix is not symmetric")
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_edges(cls, n: int, i, j, w=None) -> "SimilarityGraph":
        """Build from an undirected edge list; each pair listed once.

        Self-edges ``(i, i)`` are kept with their weight. Repeated pairs
        accumulate.
        """
        i = np.asarray(i, dtype=np.int64).ravel()
        j = np.asarray(j, dtype=np.int64).ravel()
        w = np.ones(i.size) if w is None else np.asarray(w, dtype=float).ravel()
        if not (i.size == j.size == w.size):
            raise ValueError("edge arrays differ in length")
        if i.size and (min(i.min(), j.min()) < 0 or max(i.max(), j.max()) >= n):
            raise ValueError(f"edge endpoint out of range for {n} nodes")
        off = i != j
        rows = np.concatenate([i, j[off]])
        cols = np.concatenate([j, i[off]])
        data = np.concatenate([w, w[off]])
        return cls(sp.coo_matrix((data, (rows, cols)), shape=(n, n)).tocsr())

    @classmethod
    def from_dense(cls, s) -> "SimilarityGraph":
        return cls(sp.csr_matrix(np.asarray(s, dtype=float)))

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        return np.asarray(self.weights.sum(axis=1)).ravel()

    def edges(self):
        """Upper-triangle edge list ``(i, j, w)`` with ``i <= j``."""
        upper = sp.triu(self.weights).tocoo()
        order = np.lexsort((upper.col, upper.row))
        return upper.row[order], upper.col[order], upper.data[order]

    def with_self_loops(self, weight: float) -> "SimilarityGraph":
        if weight < 0:
            raise ValueError("self-loop weight must be nonnegative")
        return SimilarityGraph(self.weights + weight * sp.identity(self.n, format="csr"))

    def toarray(self) -> np.ndarray:
        return self.weights.toarray()


@dataclass(frozen=True, eq=False)
class TransitionModel:
    """Row-stochastic ``T = D^-1 S`` with stationary distribution ``pi``."""

    T: sp.csr_matrix
    pi: np.ndarray

    @property
    def n(self) -> int:
        return self.pi.size


def transition_model(s: SimilarityGraph, self_loop: float = 0.0) -> TransitionModel:
    """Normalize a similarity graph into a random walk.

    A node with zero degree makes the walk undefined and raises
    ``ValueError`` unless ``self_loop > 0`` adds a uniform self-weight
    to every node first.
    """
    if self_loop:
        s = s.with_self_loops(self_loop)
    d = s.degrees
    zero = np.flatnonzero(d <= 0)
    if zero.size:
        raise ValueError(f"isolated node {int(zero[0]) + 1} has zero degree; RWI undefined")
    T = sp.diags(1.0 / d) @ s.weights
    T = sp.csr_matrix(T)
    pi = d / d.sum()
    pi.setflags(write=False)
    return TransitionModel(T, pi)


@dataclass(frozen=True, eq=False)
class TripleDistribution:
    """``P[k, l, m] = Pr(k_{t-1} = k, k_t = l, k'_t = m)`` under the stationary walk."""

    P: np.ndarray

    def conditional_entropy(self) -> float:
        """``H(k_t | k'_t, k_{t-1})`` in nats."""
        P = self.P
        given = P.sum(axis=1, keepdims=True)
        mask = P > 0
        # a zero conditioning mass forces zero joint mass, so 0/0 never enters
        ratio = P[mask] / np.broadcast_to(given, P.shape)[mask]
        return -math.fsum(P[mask] * np.log(ratio))


def _model(s: Union[SimilarityGraph, TransitionModel]) -> TransitionModel:
    return s if isinstance(s, TransitionModel) else transition_model(s)


def _check(tm: TransitionModel, *cs: Clustering) -> None:
    for c in cs:
        if c.n != tm.n:
            raise ValueError(f"clustering size mismatch: graph has {tm.n} nodes, clustering {c.n}")


def cluster_transitions(tm: TransitionModel, c: ClusteringLike) -> np.ndarray:
    """``P[k, l] = Pr(k_t = l | k_{t-1} = k)`` for one clustering."""
    c = as_clustering(c)
    _check(tm, c)
    T = tm.T.tocoo()
    mass = tm.pi[T.row] * T.data
    flow = np.bincount(c.labels[T.row] * c.k + c.labels[T.col], weights=mass, minlength=c.k * c.k)
    flow = flow.reshape(c.k, c.k)
    return flow / np.bincount(c.labels, weights=tm.pi, minlength=c.k)[:, None]


def triple_joint(
    tm: Union[SimilarityGraph, TransitionModel], c: ClusteringLike, c2: ClusteringLike
) -> TripleDistribution:
    """Joint law of (previous label in ``c``, current label in ``c``, current label in ``c2``)."""
    tm = _model(tm)
    c, c2 = as_clustering(c), as_clustering(c2)
    _check(tm, c, c2)
    T = tm.T.tocoo()
    mass = tm.pi[T.row] * T.data
    k, k2 = c.k, c2.k
    flat = (c.labels[T.row] * k + c.labels[T.col]) * k2 + c2.labels[T.col]
    P = np.bincount(flat, weights=mass, minlength=k * k * k2).reshape(k, k, k2)
    return TripleDistribution(P)


def rwi(
    s: Union[SimilarityGraph, TransitionModel],
    c: ClusteringLike,
    c2: ClusteringLike,
    base: float = math.e,
) -> float:
    """Random walk index between two clusterings of the nodes of ``s``.

    Symmetric in ``(c, c2)`` and zero when they are the same partition.
    Not a metric: the triangle inequality can fail.
    """
    tm = _model(s)
    c, c2 = as_clustering(c), as_clustering(c2)
    nats = triple_joint(tm, c, c2).conditional_entropy() + triple_joint(tm, c2, c).conditional_entropy()
    return _scale(nats, base)
