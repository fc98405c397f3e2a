"""Contingency tables and entropy-based comparison of clusterings.

All entropies are in nats unless a different ``base`` is passed. The
convention ``0 log 0 = 0`` is used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clustering import Clustering, ClusteringLike, as_clustering

__all__ = [
    "PROB_TOL",
    "ConfusionMatrix",
    "confusion_matrix",
    "entropy",
    "mutual_information",
    "conditional_entropy",
    "vi",
    "vi_from_mutual_information",
    "weighted_vi",
    "SplitSpec",
    "apply_split",
    "split_entropy",
]

PROB_TOL = 1e-12


def _plogp(p: np.ndarray) -> float:
    """``-sum p log p`` over the positive entries of ``p``, in nats."""
    p = np.asarray(p, dtype=float).ravel()
    p = p[p > 0]
    return -math.fsum(p * np.log(p))


def _scale(nats: float, base: float) -> float:
    # adding 0.0 turns a -0.0 from summing empty or zero terms into 0.0
    if base == math.e:
        return nats + 0.0
    if base <= 0 or base == 1:
        raise ValueError(f"invalid logarithm base {base!r}")
    return nats / math.log(base) + 0.0


def _check_same_size(c: Clustering, c2: Clustering) -> None:
    if c.n != c2.n:
        raise ValueError(f"clustering size mismatch: {c.n} vs {c2.n} points")


@dataclass(frozen=True, eq=False)
class ConfusionMatrix:
    """Intersection counts ``counts[k, k'] = |C_k & C'_k'|``."""

    counts: np.ndarray

    @property
    def n(self) -> int:
        return int(self.counts.sum())

    @property
    def joint(self) -> np.ndarray:
        return self.counts / self.n

    @property
    def row_marginal(self) -> np.ndarray:
        return self.counts.sum(axis=1) / self.n

    @property
    def col_marginal(self) -> np.ndarray:
        return self.counts.sum(axis=0) / self.n


def confusion_matrix(c: ClusteringLike, c2: ClusteringLike) -> ConfusionMatrix:
    """Contingency table of two clusterings of the same points.

    >>> confusion_matrix([1, 1, 2, 2], [1, 2, 1, 2]).counts.tolist()
    [[1, 1], [1, 1]]
    """
    c, c2 = as_clustering(c), as_clustering(c2)
    _check_same_size(c, c2)
    flat = c.labels * c2.k + c2.labels
    counts = np.bincount(flat, minlength=c.k * c2.k).reshape(c.k, c2.k)
    counts.setflags(write=False)
    return ConfusionMatrix(counts)


def entropy(p, base: float = math.e) -> float:
    """Shannon entropy of a probability vector.

    Raises ``ValueError`` if an entry is negative or the entries do not
    sum to one within ``PROB_TOL``.
    """
    p = np.asarray(p, dtype=float).ravel()
    if p.size == 0:
        raise ValueError("empty probability vector")
    if np.any(p < 0) or not np.all(np.isfinite(p)):
        raise ValueError("probabilities must be finite and nonnegative")
    if abs(p.sum() - 1.0) > PROB_TOL:
        raise ValueError(f"probabilities sum to {p.sum()!r}, not 1")
    return _scale(_plogp(p), base)


def _joint_terms(joint: np.ndarray):
    pk = joint.sum(axis=1)
    pk2 = joint.sum(axis=0)
    return pk, pk2


def mutual_information(c: ClusteringLike, c2: ClusteringLike, base: float = math.e) -> float:
    joint = confusion_matrix(c, c2).joint
    pk, pk2 = _joint_terms(joint)
    rows, cols = np.nonzero(joint)
    pj = joint[rows, cols]
    nats = float(np.sum(pj * np.log(pj / (pk[rows] * pk2[cols]))))
    return _scale(nats, base)


def _conditional(mass: np.ndarray, given_axis: int) -> float:
    # H(other | given) = -sum P(x, y) log P(x, y) / P(given), from unnormalized
    # counts or weights. Marginals are exact (integers) or exactly rounded
    # (fsum), so transposing the table cannot change a single bit.
    if np.issubdtype(mass.dtype, np.integer):
        marg = mass.sum(axis=1 - given_axis, keepdims=True)
        total = int(mass.sum())
    else:
        m = np.moveaxis(mass, given_axis, 0)
        marg = np.array([math.fsum(row) for row in m])
        marg = np.expand_dims(marg, 1 - given_axis)
        total = math.fsum(marg.ravel())
    mask = mass > 0
    ratio = mass[mask] / np.broadcast_to(marg, mass.shape)[mask]
    return -math.fsum((mass[mask] / total) * np.log(ratio))


def conditional_entropy(c: ClusteringLike, given: ClusteringLike, base: float = math.e) -> float:
    """``H(c | given)`` under the uniform distribution over points."""
    counts = confusion_matrix(c, given).counts
    return _scale(_conditional(counts, given_axis=1), base)


def vi(c: ClusteringLike, c2: ClusteringLike, base: float = math.e) -> float:
    """Variation of information ``H(C|C') + H(C'|C)``.

    Summing the two conditional entropies keeps the result nonnegative and
    exactly zero for identical partitions.

    >>> round(vi([1, 1, 2, 2], [1, 2, 1, 2]), 6)
    1.386294
    """
    counts = confusion_matrix(c, c2).counts
    nats = _conditional(counts, given_axis=1) + _conditional(counts, given_axis=0)
    return _scale(nats, base)


def vi_from_mutual_information(c: ClusteringLike, c2: ClusteringLike, base: float = math.e) -> float:
    """Variation of information as ``H(C) + H(C') - 2 I(C, C')``.

    Equal to :func:`vi` up to rounding; may come out a few ulps from zero
    for identical partitions.
    """
    joint = confusion_matrix(c, c2).joint
    pk, pk2 = _joint_terms(joint)
    rows, cols = np.nonzero(joint)
    pj = joint[rows, cols]
    mi = float(np.sum(pj * np.log(pj / (pk[rows] * pk2[cols]))))
    return _scale(_plogp(pk) + _plogp(pk2) - 2.0 * mi, base)


def _check_weights(w, n: int) -> np.ndarray:
    w = np.asarray(w, dtype=float).ravel()
    if w.size != n:
        raise ValueError(f"weight vector has {w.size} entries for {n} points")
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise ValueError("point weights must be finite and nonnegative")
    if abs(w.sum() - 1.0) > PROB_TOL:
        raise ValueError(f"point weights sum to {w.sum()!r}, not 1")
    return w


def weighted_vi(c: ClusteringLike, c2: ClusteringLike, w, base: float = math.e) -> float:
    """Variation of information with points weighted by ``w``.

    The joint law of the two labels is ``P(k, k') = sum of w_i over
    C_k & C'_k'``. With uniform weights this is :func:`vi`.
    """
    c, c2 = as_clustering(c), as_clustering(c2)
    _check_same_size(c, c2)
    w = _check_weights(w, c.n)
    flat = c.labels * c2.k + c2.labels
    joint = np.bincount(flat, weights=w, minlength=c.k * c2.k).reshape(c.k, c2.k)
    nats = _conditional(joint, given_axis=1) + _conditional(joint, given_axis=0)
    return _scale(nats, base)


@dataclass(frozen=True)
class SplitSpec:
    """Split of cluster ``parent`` of a clustering into sub-clusters.

    ``sub_labels[i]`` is the new sub-cluster of point ``points[i]``;
    ``points`` must be exactly the members of the parent cluster.
    """

    parent: int
    points: tuple
    sub_labels: tuple

    @classmethod
    def of(cls, c: ClusteringLike, parent: int, sub_labels) -> "SplitSpec":
        """Split ``parent`` with sub-labels given in increasing point order."""
        c = as_clustering(c)
        pts = c.members(parent)
        sub = tuple(int(s) for s in np.asarray(sub_labels).ravel())
        if len(sub) != pts.size:
            raise ValueError(
                f"cluster {parent} has {pts.size} points but {len(sub)} sub-labels were given"
            )
        return cls(parent, tuple(int(p) for p in pts), sub)


def _validate_split(c: Clustering, split: SplitSpec) -> tuple[np.ndarray, np.ndarray]:
    if not 0 <= split.parent < c.k:
        raise ValueError(f"no cluster {split.parent} in a clustering with {c.k} clusters")
    pts = np.asarray(split.points, dtype=np.int64)
    sub = np.asarray(split.sub_labels)
    if pts.size != sub.size:
        raise ValueError("split points and sub-labels differ in length")
    members = c.members(split.parent)
    if pts.size != np.unique(pts).size or not np.array_equal(np.sort(pts), members):
        outside = np.setdiff1d(pts, members)
        if outside.size:
            raise ValueError(
                f"split touches points outside cluster {split.parent}: {(outside + 1).tolist()}"
            )
        raise ValueError(f"split does not cover cluster {split.parent} exactly once")
    return pts, sub


def apply_split(c: ClusteringLike, split: SplitSpec) -> Clustering:
    """The clustering obtained from ``c`` by splitting one cluster."""
    c = as_clustering(c)
    pts, sub = _validate_split(c, split)
    new = c.labels.copy()
    _, sub_codes = np.unique(sub, return_inverse=True)
    new[pts] = c.k + sub_codes.ravel()
    return Clustering(new)


def split_entropy(c: ClusteringLike, split: SplitSpec, base: float = math.e) -> float:
    """``P(k) * H_|k``, the entropy of the split weighted by the cluster mass.

    This equals ``vi(c, apply_split(c, split))``.
    """
    c = as_clustering(c)
    pts, sub = _validate_split(c, split)
    _, counts = np.unique(sub, return_counts=True)
    within = _plogp(counts / pts.size)
    return _scale(pts.size / c.n * within, base)
