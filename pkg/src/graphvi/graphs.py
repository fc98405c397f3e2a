"""Graphs and point sets for the chain, Gaussian and pixel-grid experiments."""

from __future__ import annotations

import math

import numpy as np
import scipy.sparse as sp
from scipy.spatial.distance import pdist, squareform

from .random_walk import SimilarityGraph
from .vin import AdjacencyGraph

__all__ = [
    "CHAIN_MODES",
    "chain_graph",
    "chain_adjacency",
    "gaussian_similarity",
    "threshold_adjacency",
    "grid_similarity",
    "sample_gaussian",
]

CHAIN_MODES = ("adjacent-unit", "all-pairs-decay")
_MAX_NODES = 2**31 - 1


def chain_graph(n: int, mode: str = "adjacent-unit", decay: str = "gauss") -> SimilarityGraph:
    """Evenly spaced points on a line.

    ``adjacent-unit`` links consecutive points with weight 1.
    ``all-pairs-decay`` links every pair with a weight that falls with
    the distance ``|i - j|``: ``exp(-|i-j|^2)`` for ``decay="gauss"`` or
    ``1/|i-j|`` for ``decay="inverse"``.
    """
    if n < 2:
        raise ValueError(f"a chain needs at least 2 points, got {n}")
    if mode == "adjacent-unit":
        i = np.arange(n - 1)
        return SimilarityGraph.from_edges(n, i, i + 1, np.ones(n - 1))
    if mode != "all-pairs-decay":
        raise ValueError(f"unknown chain mode {mode!r}; expected one of {CHAIN_MODES}")
    i, j = np.triu_indices(n, k=1)
    dist = (j - i).astype(float)
    if decay == "gauss":
        w = np.exp(-(dist**2))
    elif decay == "inverse":
        w = 1.0 / dist
    else:
        raise ValueError(f"unknown decay {decay!r}; expected 'gauss' or 'inverse'")
    return SimilarityGraph.from_edges(n, i, j, w)


def chain_adjacency(n: int) -> AdjacencyGraph:
    """Path graph ``0 - 1 - ... - (n-1)``."""
    if n < 2:
        raise ValueError(f"a chain needs at least 2 points, got {n}")
    i = np.arange(n - 1)
    return AdjacencyGraph.from_edges(n, i, i + 1)


def _check_points(points) -> np.ndarray:
    p = np.asarray(points, dtype=float)
    if p.ndim == 1:
        p = p[:, None]
    if p.ndim != 2:
        raise ValueError(f"points must be an (n, d) array, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        bad = int(np.flatnonzero(~np.isfinite(p).all(axis=1))[0])
        raise ValueError(f"point {bad + 1} has a non-finite coordinate")
    return p


def gaussian_similarity(points) -> SimilarityGraph:
    """All-pairs similarity ``exp(-d_ij^2)`` with Euclidean ``d_ij``.

    The diagonal is left empty. Pairs whose similarity underflows to
    zero are simply absent from the sparse structure.
    """
    p = _check_points(points)
    if p.shape[0] < 2:
        raise ValueError("need at least 2 points")
    s = np.exp(-squareform(pdist(p, "sqeuclidean")))
    np.fill_diagonal(s, 0.0)
    return SimilarityGraph.from_dense(s)


def threshold_adjacency(s: SimilarityGraph, eps: float) -> AdjacencyGraph:
    """Keep the pairs whose similarity is strictly above ``eps``.

    With ``s = exp(-d^2)`` this is the ``eps``-neighborhood graph of
    radius ``sqrt(-ln eps)``.
    """
    if not eps >= 0:
        raise ValueError(f"threshold must be nonnegative, got {eps!r}")
    w = s.weights.tocoo()
    keep = w.data > eps
    return AdjacencyGraph(
        sp.coo_matrix(
            (np.ones(int(keep.sum()), dtype=bool), (w.row[keep], w.col[keep])), shape=w.shape
        )
    )


def grid_similarity(h: int, w: int, window: int = 5) -> tuple[SimilarityGraph, AdjacencyGraph]:
    """Pixel graph of an ``h x w`` image with a square neighborhood.

    Pixels are numbered row-major. Each pixel is linked to every other
    pixel inside the ``window x window`` box centred on it, with
    similarity ``exp(-d^2)`` for the Euclidean pixel distance ``d``.
    The adjacency graph has the same edge set.
    """
    if window < 3 or window % 2 == 0:
        raise ValueError(f"window must be an odd integer >= 3, got {window}")
    if h < 1 or w < 1:
        raise ValueError(f"grid dimensions must be positive, got {h}x{w}")
    n = h * w
    r = window // 2
    if n > _MAX_NODES or n * (window * window - 1) > 2**62:
        raise ValueError(f"grid {h}x{w} is too large")
    ys, xs = np.divmod(np.arange(n, dtype=np.int64), w)
    rows, cols, vals = [], [], []
    # half the offsets; from_edges adds the mirror image
    for dy in range(0, r + 1):
        for dx in range(-r, r + 1):
            if dy == 0 and dx <= 0:
                continue
            ok = (ys + dy < h) & (xs + dx >= 0) & (xs + dx < w)
            src = np.flatnonzero(ok)
            rows.append(src)
            cols.append(src + dy * w + dx)
            vals.append(np.full(src.size, math.exp(-(dx * dx + dy * dy))))
    i, j, v = np.concatenate(rows), np.concatenate(cols), np.concatenate(vals)
    return SimilarityGraph.from_edges(n, i, j, v), AdjacencyGraph.from_edges(n, i, j)


def sample_gaussian(n: int, seed=0, dim: int = 2) -> np.ndarray:
    """``n`` independent standard normal points in ``dim`` dimensions.

    ``seed`` is an integer or a :class:`numpy.random.SeedSequence`; the
    generator is PCG64, so a given seed always yields the same points.
    """
    if n < 1:
        raise ValueError(f"need at least one point, got {n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.standard_normal((n, dim))
