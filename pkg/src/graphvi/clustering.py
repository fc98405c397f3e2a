"""Clustering labels and their canonical form.

A clustering of ``n`` points is stored as an integer array of codes
``0..K-1`` numbered by first occurrence, so two label vectors describing
the same partition always canonicalize to the same array.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

__all__ = [
    "Clustering",
    "as_clustering",
    "canonical_labels",
    "singletons",
    "single_cluster",
    "set_partitions",
]


def canonical_labels(labels) -> np.ndarray:
    """Renumber ``labels`` as ``0..K-1`` in order of first occurrence.

    >>> canonical_labels([7, 7, 3, 9, 3]).tolist()
    [0, 0, 1, 2, 1]
    """
    arr = np.asarray(labels)
    if arr.ndim != 1:
        raise ValueError(f"labels must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("a clustering needs at least one point")
    _, first, inverse = np.unique(arr, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(first.size)
    return rank[inverse.ravel()]


@dataclass(frozen=True, eq=False)
class Clustering:
    """An immutable, canonicalized partition of ``n`` points."""

    labels: np.ndarray

    def __post_init__(self):
        codes = canonical_labels(self.labels)
        codes.setflags(write=False)
        object.__setattr__(self, "labels", codes)

    @property
    def n(self) -> int:
        return int(self.labels.size)

    @property
    def k(self) -> int:
        return int(self.labels.max()) + 1

    def sizes(self) -> np.ndarray:
        """Number of points in each cluster, indexed by canonical code."""
        return np.bincount(self.labels, minlength=self.k)

    def members(self, k: int) -> np.ndarray:
        return np.flatnonzero(self.labels == k)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Clustering):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.labels, other.labels))

    def __hash__(self) -> int:
        return hash(self.labels.tobytes())

    def __repr__(self) -> str:
        return f"Clustering(n={self.n}, k={self.k}, labels={self.labels.tolist()!r})"


ClusteringLike = Union[Clustering, Sequence[int], np.ndarray]


def as_clustering(c: ClusteringLike) -> Clustering:
    return c if isinstance(c, Clustering) else Clustering(np.asarray(c))


def singletons(n: int) -> Clustering:
    """Every point in its own cluster."""
    return Clustering(np.arange(n))


def single_cluster(n: int) -> Clustering:
    """All points in one cluster."""
    return Clustering(np.zeros(n, dtype=np.int64))


def set_partitions(n: int) -> Iterator[Clustering]:
    """Yield every partition of ``n`` points exactly once.

    Partitions are generated as restricted growth strings, which are
    already canonical. There are Bell(n) of them, so keep ``n`` small.
    """
    if n < 1:
        raise ValueError("n must be positive")
    codes = [0] * n
    maxes = [0] * n

    def rec(i):
        if i == n:
            yield Clustering(np.array(codes))
            return
        for v in range(maxes[i - 1] + 2):
            codes[i] = v
            maxes[i] = max(maxes[i - 1], v)
            yield from rec(i + 1)

    yield from rec(1)
