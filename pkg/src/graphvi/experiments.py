"""Perturbation experiments comparing VI, RWI and VIN.

Every scenario starts from a reference clustering ``A`` and builds two
perturbations ``B`` and ``C`` that move the same number of points, so VI
cannot tell them apart. The graph-aware indices may.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .clustering import Clustering, set_partitions, single_cluster
from .graphs import (
    chain_adjacency,
    chain_graph,
    gaussian_similarity,
    grid_similarity,
    sample_gaussian,
    threshold_adjacency,
)
from .metrics import vi
from .random_walk import SimilarityGraph, TransitionModel, rwi, transition_model
from .vin import AdjacencyGraph, vin

__all__ = [
    "DEFAULT_EPS",
    "GRID_VARIANTS",
    "ScenarioResult",
    "TrialSummary",
    "TriangleWitness",
    "scenario_chain_single",
    "scenario_chain_block",
    "scenario_gaussian",
    "scenario_grid",
    "grid_clusterings",
    "rwi_triangle_search",
    "trial_seed",
    "format_report",
    "format_plot_data",
]

DEFAULT_EPS = math.exp(-1.0)
GRID_VARIANTS = ("square-block", "boundary-strip", "distant-line")
TIE_RTOL = 1e-12


def _closer(d_ab: float, d_ac: float) -> str:
    if abs(d_ab - d_ac) <= TIE_RTOL * max(1.0, abs(d_ab), abs(d_ac)):
        return "tie"
    return "B" if d_ab < d_ac else "C"


@dataclass
class ScenarioResult:
    """Distances ``d(A, B)`` and ``d(A, C)`` per index."""

    name: str
    config: dict
    distances: dict = field(default_factory=dict)

    def verdict(self, index: str) -> str:
        """``"B"`` or ``"C"`` for whichever is closer to A, or ``"tie"``."""
        return _closer(*self.distances[index])

    @property
    def verdicts(self) -> dict:
        return {k: self.verdict(k) for k in self.distances}


@dataclass
class TrialSummary:
    """Per-index means over trials and the number of wrong verdicts.

    A trial counts as an error for an index when ``d(A, B) >= d(A, C)``.
    ``per_trial[index]`` holds the ``(trials, 2)`` array of raw distances.
    """

    name: str
    config: dict
    trials: int
    per_trial: dict = field(default_factory=dict)

    def mean(self, index: str) -> tuple[float, float]:
        d = self.per_trial[index]
        return math.fsum(d[:, 0]) / self.trials, math.fsum(d[:, 1]) / self.trials

    def errors(self, index: str) -> int:
        d = self.per_trial[index]
        return int(np.count_nonzero(d[:, 0] >= d[:, 1]))


def _three(a: Clustering, b: Clustering, c: Clustering, fn) -> tuple[float, float]:
    return fn(a, b), fn(a, c)


def scenario_chain_single(n: int = 10, base: float = math.e) -> ScenarioResult:
    """One chain cluster; B relabels the middle point, C the last one."""
    if n < 4:
        raise ValueError(f"chain scenario needs n >= 4, got {n}")
    a = np.zeros(n, dtype=np.int64)
    b, c = a.copy(), a.copy()
    b[n // 2] = 1
    c[n - 1] = 1
    A, B, C = Clustering(a), Clustering(b), Clustering(c)
    tm = transition_model(chain_graph(n, "adjacent-unit"))
    adj = chain_adjacency(n)
    res = ScenarioResult("chain-single", {"n": n, "log_base": _base_name(base)})
    res.distances["vi"] = _three(A, B, C, lambda x, y: vi(x, y, base))
    res.distances["rwi"] = _three(A, B, C, lambda x, y: rwi(tm, x, y, base))
    res.distances["vin"] = _three(A, B, C, lambda x, y: vin(x, y, adj, base))
    return res


def scenario_chain_block(
    n: int = 10, m: int = 2, base: float = math.e, decay: str = "gauss"
) -> ScenarioResult:
    """Two halves of a chain; ``m`` points of the second half move to the first.

    B moves the ``m`` points next to the boundary, C the ``m`` points at
    the far end. RWI is reported on the nearest-neighbour chain (``rwi``)
    and on the all-pairs chain with decaying weights (``rwi-decay``).
    """
    if n < 4 or n % 2:
        raise ValueError(f"chain block scenario needs an even n >= 4, got {n}")
    if not 1 <= m < n // 2:
        raise ValueError(f"need 1 <= m < n/2, got m={m} for n={n}")
    half = n // 2
    a = np.repeat([0, 1], half)
    b, c = a.copy(), a.copy()
    b[half : half + m] = 0
    c[n - m :] = 0
    A, B, C = Clustering(a), Clustering(b), Clustering(c)
    tm_unit = transition_model(chain_graph(n, "adjacent-unit"))
    tm_decay = transition_model(chain_graph(n, "all-pairs-decay", decay=decay))
    adj = chain_adjacency(n)
    res = ScenarioResult(
        "chain-block", {"n": n, "m": m, "decay": decay, "log_base": _base_name(base)}
    )
    res.distances["vi"] = _three(A, B, C, lambda x, y: vi(x, y, base))
    res.distances["rwi"] = _three(A, B, C, lambda x, y: rwi(tm_unit, x, y, base))
    res.distances["rwi-decay"] = _three(A, B, C, lambda x, y: rwi(tm_decay, x, y, base))
    res.distances["vin"] = _three(A, B, C, lambda x, y: vin(x, y, adj, base))
    return res


def trial_seed(seed: int, trial: int) -> np.random.SeedSequence:
    """Independent stream for one trial, fixed by ``(seed, trial)`` alone."""
    return np.random.SeedSequence(seed, spawn_key=(trial,))


def _gaussian_trial(args) -> np.ndarray:
    seed, trial, n, eps, base = args
    pts = sample_gaussian(n, trial_seed(seed, trial))
    dist = np.linalg.norm(pts - pts.mean(axis=0), axis=1)
    a = np.zeros(n, dtype=np.int64)
    b, c = a.copy(), a.copy()
    b[int(np.argmax(dist))] = 1  # first index wins ties
    c[int(np.argmin(dist))] = 1
    A, B, C = Clustering(a), Clustering(b), Clustering(c)
    sim = gaussian_similarity(pts)
    tm = transition_model(sim)
    adj = threshold_adjacency(sim, eps)
    return np.array(
        [
            _three(A, B, C, lambda x, y: vi(x, y, base)),
            _three(A, B, C, lambda x, y: rwi(tm, x, y, base)),
            _three(A, B, C, lambda x, y: vin(x, y, adj, base)),
        ]
    )


def scenario_gaussian(
    trials: int = 100,
    n: int = 100,
    eps: float = DEFAULT_EPS,
    seed: int = 0,
    base: float = math.e,
    workers: int = 1,
) -> TrialSummary:
    """Repeated relabelling of one point of a standard 2D Gaussian sample.

    In each trial all points start in one cluster; B relabels the point
    farthest from the sample mean and C the point closest to it. RWI runs
    on the ``exp(-d^2)`` similarity graph, VIN on its ``eps`` threshold.
    Results do not depend on ``workers``.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if n < 3:
        raise ValueError(f"need n >= 3 points, got {n}")
    if not 0 <= eps:
        raise ValueError(f"eps must be nonnegative, got {eps}")
    jobs = [(seed, t, n, eps, base) for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_gaussian_trial, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        rows = [_gaussian_trial(j) for j in jobs]
    stacked = np.stack(rows)  # (trials, index, pair)
    config = {
        "trials": trials,
        "n": n,
        "eps": eps,
        "seed": seed,
        "log_base": _base_name(base),
        "rng": "numpy PCG64, SeedSequence(seed, spawn_key=(trial,))",
    }
    summary = TrialSummary("gaussian", config, trials)
    for idx, name in enumerate(("vi", "rwi", "vin")):
        summary.per_trial[name] = stacked[:, idx, :]
    return summary


def _grid_regions(h: int, w: int) -> dict:
    """Pixel index sets for the grid perturbations.

    The upper half of the grid is region 0, the lower half region 1.
    Each perturbation is 100 pixels of region 1.
    """
    top = h // 2
    c0 = (w - 10) // 2
    s0 = (w - 50) // 2

    def box(r0, r1, x0, x1):
        ys, xs = np.mgrid[r0:r1, x0:x1]
        return (ys * w + xs).ravel()

    return {
        "near-block": box(top, top + 10, c0, c0 + 10),
        "far-block": box(h - 12, h - 2, c0, c0 + 10),
        "boundary-strip": box(top, top + 2, s0, s0 + 50),
        "distant-line": box(h - 4, h - 2, s0, s0 + 50),
    }


_GRID_PAIRS = {
    "square-block": ("near-block", "far-block"),
    "boundary-strip": ("boundary-strip", "far-block"),
    "distant-line": ("boundary-strip", "distant-line"),
}


def grid_clusterings(h: int, w: int, variant: str) -> tuple[Clustering, Clustering, Clustering]:
    """The reference labelling A of an ``h x w`` grid and its perturbations B, C."""
    if variant not in _GRID_PAIRS:
        raise ValueError(f"unknown grid variant {variant!r}; expected one of {GRID_VARIANTS}")
    if h - h // 2 < 24 or w < 54:
        raise ValueError(f"grid {h}x{w} too small for 100-pixel perturbations (need h >= 48, w >= 54)")
    regions = _grid_regions(h, w)
    a = (np.arange(h * w) // w >= h // 2).astype(np.int64)
    b, c = a.copy(), a.copy()
    b[regions[_GRID_PAIRS[variant][0]]] = 0
    c[regions[_GRID_PAIRS[variant][1]]] = 0
    return Clustering(a), Clustering(b), Clustering(c)


def scenario_grid(
    h: int = 60, w: int = 60, variant: str = "square-block", window: int = 5, base: float = math.e
) -> ScenarioResult:
    """Synthetic two-region image with 100-pixel relabellings.

    A splits the grid into an upper region 0 and a lower region 1. B and C
    each move 100 pixels of region 1 into region 0:

    * ``square-block``: a 10x10 block on the boundary vs one far from it;
    * ``boundary-strip``: a 2x50 strip along the boundary vs the far block;
    * ``distant-line``: the boundary strip vs a 2x50 line far from it.

    RWI uses ``exp(-d^2)`` weights within a ``window x window`` box around
    each pixel and VIN treats that box as the neighborhood.
    """
    A, B, C = grid_clusterings(h, w, variant)
    sim, adj = grid_similarity(h, w, window)
    tm = transition_model(sim)
    res = ScenarioResult(
        "grid",
        {"h": h, "w": w, "variant": variant, "window": window, "log_base": _base_name(base)},
    )
    res.distances["vi"] = _three(A, B, C, lambda x, y: vi(x, y, base))
    res.distances["rwi"] = _three(A, B, C, lambda x, y: rwi(tm, x, y, base))
    res.distances["vin"] = _three(A, B, C, lambda x, y: vin(x, y, adj, base))
    return res


@dataclass
class TriangleWitness:
    """The clustering triple with the most negative ``d(A,B) + d(B,C) - d(A,C)``."""

    a: Clustering
    b: Clustering
    c: Clustering
    d_ab: float
    d_bc: float
    d_ac: float
    violations: int
    triples: int

    @property
    def margin(self) -> float:
        return self.d_ab + self.d_bc - self.d_ac


def rwi_triangle_search(s, base: float = math.e) -> TriangleWitness:
    """Check the triangle inequality for RWI over all partitions of the nodes.

    The number of partitions grows as the Bell numbers, so this is only
    feasible for graphs of up to 6 nodes.
    """
    tm = s if isinstance(s, TransitionModel) else transition_model(s)
    parts = list(set_partitions(tm.n))
    p = len(parts)
    d = np.zeros((p, p))
    for i, j in itertools.combinations(range(p), 2):
        d[i, j] = d[j, i] = rwi(tm, parts[i], parts[j], base)
    # slack[a, b, c] = d(a,b) + d(b,c) - d(a,c)
    slack = d[:, :, None] + d[None, :, :] - d[:, None, :]
    a, b, c = np.unravel_index(int(np.argmin(slack)), slack.shape)
    return TriangleWitness(
        parts[a],
        parts[b],
        parts[c],
        float(d[a, b]),
        float(d[b, c]),
        float(d[a, c]),
        violations=int(np.count_nonzero(slack < -1e-12)),
        triples=p**3,
    )


def _base_name(base: float) -> str:
    return "e" if base == math.e else format(base, "g")


def _fmt(v: float) -> str:
    return f"{v:.9f}"


def _header(name: str, config: dict) -> list[str]:
    # floats are echoed at full precision so a run can be repeated exactly
    lines = [f"# experiment: {name}"]
    lines += [f"# {k}: {v!r}" if isinstance(v, float) else f"# {k}: {v}" for k, v in config.items()]
    return lines


def format_report(result, output: str = "table") -> str:
    """Render a scenario or trial summary as an aligned table or as TSV.

    Both forms start with ``#`` lines echoing the configuration.
    """
    if isinstance(result, TrialSummary):
        cols = ("index", "mean_d(A,B)", "mean_d(A,C)", "errors")
        body = [
            (k, _fmt(result.mean(k)[0]), _fmt(result.mean(k)[1]), f"{result.errors(k)}/{result.trials}")
            for k in result.per_trial
        ]
    elif isinstance(result, ScenarioResult):
        cols = ("index", "d(A,B)", "d(A,C)", "closer")
        body = [(k, _fmt(ab), _fmt(ac), result.verdict(k)) for k, (ab, ac) in result.distances.items()]
    else:
        raise TypeError(f"cannot format {type(result).__name__}")
    lines = _header(result.name, result.config)
    if output == "tsv":
        lines += ["\t".join(cols)] + ["\t".join(r) for r in body]
    elif output == "table":
        widths = [max(len(r[i]) for r in [cols, *body]) for i in range(len(cols))]
        for r in [cols, *body]:
            lines.append("  ".join(x.ljust(wd) if i == 0 else x.rjust(wd) for i, (x, wd) in enumerate(zip(r, widths))))
    else:
        raise ValueError(f"unknown output format {output!r}")
    return "\n".join(lines) + "\n"


def format_plot_data(summary: TrialSummary) -> str:
    """Per-trial distances as TSV, one row per trial."""
    names = list(summary.per_trial)
    head = ["trial"] + [f"{k}_{p}" for k in names for p in ("AB", "AC")]
    lines = _header(summary.name, summary.config) + ["\t".join(head)]
    for t in range(summary.trials):
        vals = [_fmt(summary.per_trial[k][t, j]) for k in names for j in (0, 1)]
        lines.append("\t".join([str(t), *vals]))
    return "\n".join(lines) + "\n"
