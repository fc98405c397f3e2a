"""Plain-text readers and writers.

Formats (node ids are 0-based in files; line numbers in error messages
are 1-based; ``#`` starts a comment line):

* labels: integer labels separated by whitespace or newlines, point ``i``
  is the ``i``-th label;
* similarity graph: one undirected edge per line, ``i j w``;
* adjacency: ``i j`` per line, any further columns are ignored;
* points: one point per line, coordinates separated by whitespace.
"""

from __future__ import annotations

import os
from typing import Iterator, Optional

import numpy as np

from .clustering import Clustering
from .random_walk import SimilarityGraph
from .vin import AdjacencyGraph

__all__ = [
    "FileFormatError",
    "read_labels",
    "read_similarity",
    "read_adjacency",
    "read_points",
    "write_labels",
    "write_similarity",
    "write_adjacency",
    "write_points",
]


class FileFormatError(ValueError):
    """Malformed input file; carries the path and 1-based line number."""

    def __init__(self, path, lineno: int, msg: str):
        self.path = os.fspath(path)
        self.lineno = lineno
        super().__init__(f"{self.path}:{lineno}: {msg}")


def _lines(path) -> Iterator[tuple[int, list[str]]]:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            yield lineno, stripped.split()


def _int(path, lineno, tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FileFormatError(path, lineno, f"expected an integer, got {tok!r}") from None


def _float(path, lineno, tok: str) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise FileFormatError(path, lineno, f"expected a number, got {tok!r}") from None
    if not np.isfinite(v):
        raise FileFormatError(path, lineno, f"non-finite value {tok!r}")
    return v


def read_labels(path) -> Clustering:
    labels = [_int(path, lineno, tok) for lineno, toks in _lines(path) for tok in toks]
    if not labels:
        raise FileFormatError(path, 1, "no labels found")
    return Clustering(np.asarray(labels, dtype=np.int64))


def _read_edges(path, n: Optional[int], weighted: bool):
    rows, cols, ws = [], [], []
    seen: dict[tuple[int, int], int] = {}
    for lineno, toks in _lines(path):
        need = 3 if weighted else 2
        if len(toks) < need:
            raise FileFormatError(path, lineno, f"expected {need} columns, got {len(toks)}")
        if weighted and len(toks) > 3:
            raise FileFormatError(path, lineno, f"expected 3 columns, got {len(toks)}")
        i, j = _int(path, lineno, toks[0]), _int(path, lineno, toks[1])
        if i < 0 or j < 0 or (n is not None and max(i, j) >= n):
            bound = f" for {n} points" if n is not None else ""
            raise FileFormatError(path, lineno, f"node id out of range{bound}: {i} {j}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise FileFormatError(
                path, lineno, f"edge {key[0]} {key[1]} already listed on line {seen[key]}"
            )
        seen[key] = lineno
        if weighted:
            w = _float(path, lineno, toks[2])
            if w < 0:
                raise FileFormatError(path, lineno, f"negative weight {w!r}")
            ws.append(w)
        rows.append(i)
        cols.append(j)
    if n is None:
        n = max(max(rows, default=-1), max(cols, default=-1)) + 1
    return n, rows, cols, ws


def read_similarity(path, n: Optional[int] = None) -> SimilarityGraph:
    """Read a weighted edge list; ``n`` defaults to the largest id + 1."""
    n, i, j, w = _read_edges(path, n, weighted=True)
    return SimilarityGraph.from_edges(n, i, j, w)


def read_adjacency(path, n: Optional[int] = None) -> AdjacencyGraph:
    n, i, j, _ = _read_edges(path, n, weighted=False)
    return AdjacencyGraph.from_edges(n, i, j)


def read_points(path) -> np.ndarray:
    pts = []
    for lineno, toks in _lines(path):
        if pts and len(toks) != len(pts[0]):
            raise FileFormatError(
                path, lineno, f"expected {len(pts[0])} coordinates, got {len(toks)}"
            )
        pts.append([_float(path, lineno, t) for t in toks])
    if not pts:
        raise FileFormatError(path, 1, "no points found")
    return np.asarray(pts, dtype=float)


def write_labels(path, c) -> None:
    labels = c.labels if isinstance(c, Clustering) else np.asarray(c)
    with open(path, "w", encoding="utf-8") as fh:
        fh.writelines(f"{int(v)}\n" for v in labels)


def write_similarity(path, s: SimilarityGraph) -> None:
    i, j, w = s.edges()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# similarity graph, {s.n} nodes, columns: i j weight\n")
        fh.writelines(f"{a} {b} {float(v)!r}\n" for a, b, v in zip(i, j, w))


def write_adjacency(path, a: AdjacencyGraph) -> None:
    i, j = a.edges()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# adjacency, {a.n} nodes, columns: i j\n")
        fh.writelines(f"{x} {y}\n" for x, y in zip(i, j))


def write_points(path, points) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for row in np.atleast_2d(points):
            fh.write(" ".join(repr(float(v)) for v in row) + "\n")
