"""Slow, literal reference implementations used to check the library.

Nothing here imports from graphvi; each function follows the textbook
definition with plain loops.
"""

import itertools
import math

import numpy as np


def canon(labels):
    seen = {}
    return [seen.setdefault(x, len(seen)) for x in labels]


def vi_sets(a, b):
    """VI from cluster member sets: -sum r (log r/p + log r/q)."""
    n = len(a)
    ca, cb = {}, {}
    for i, (x, y) in enumerate(zip(a, b)):
        ca.setdefault(x, set()).add(i)
        cb.setdefault(y, set()).add(i)
    total = 0.0
    for X in ca.values():
        for Y in cb.values():
            r = len(X & Y) / n
            if r > 0:
                total -= r * (math.log(r / (len(X) / n)) + math.log(r / (len(Y) / n)))
    return total


def entropy_direct(p):
    return -sum(x * math.log(x) for x in p if x > 0)


def triple_bruteforce(S, a, b):
    """P[k][l][m] by summing pi_i T_ij over every ordered node pair."""
    S = np.asarray(S, dtype=float)
    n = S.shape[0]
    a, b = canon(a), canon(b)
    d = S.sum(axis=1)
    pi = d / d.sum()
    K, K2 = max(a) + 1, max(b) + 1
    P = np.zeros((K, K, K2))
    for i in range(n):
        for j in range(n):
            if S[i, j]:
                P[a[i], a[j], b[j]] += pi[i] * S[i, j] / d[i]
    return P


def rwi_conditional_route(S, a, b):
    """RWI through explicit conditional probabilities.

    For every (previous cluster k, current cluster m in the other
    clustering), Pr(k_t = l | ...) = Pr(C_k -> C_l & C'_m) / Pr(C_k -> C'_m).
    """

    def one(x, y):
        P = triple_bruteforce(S, x, y)
        h = 0.0
        K, _, K2 = P.shape
        for k in range(K):
            for m in range(K2):
                cond_mass = sum(P[k, l, m] for l in range(K))
                for l in range(K):
                    if P[k, l, m] > 0:
                        h -= P[k, l, m] * math.log(P[k, l, m] / cond_mass)
        return h

    return one(a, b) + one(b, a)


def vin_algorithm(u, v, A):
    """VIN following the matrix recipe: mask labels by adjacency, sort rows, index unique rows."""
    A = (np.asarray(A) != 0).astype(int)
    n = A.shape[0]
    np.fill_diagonal(A, 1)

    def refined(labels):
        lab = np.asarray(canon(labels)) + 1  # 0 marks "not a neighbor"
        Au = np.tile(lab, (n, 1)) * A
        rows = []
        for i in range(n):
            rest = sorted(np.delete(Au[i], i).tolist())
            rows.append((int(Au[i, i]), *rest))
        ids = {}
        return [ids.setdefault(r, len(ids)) for r in rows]

    return vi_sets(refined(u), refined(v))


def all_partitions(n):
    """Every set partition of range(n), as canonical label lists."""

    def rec(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for sub in rec(rest):
            for i in range(len(sub)):
                yield sub[:i] + [[first] + sub[i]] + sub[i + 1 :]
            yield [[first]] + sub

    out = []
    for blocks in rec(list(range(n))):
        lab = [0] * n
        for b, block in enumerate(blocks):
            for i in block:
                lab[i] = b
        out.append(tuple(canon(lab)))
    return sorted(set(out))


BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def random_labels(rng, n, kmax=None):
    kmax = kmax or n
    return rng.integers(0, rng.integers(1, kmax + 1), size=n)


def random_adjacency(rng, n, p=None):
    p = rng.uniform(0.1, 0.9) if p is None else p
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return upper | upper.T


def random_similarity(rng, n, p=None):
    """Symmetric nonnegative weights with every degree positive."""
    p = rng.uniform(0.3, 1.0) if p is None else p
    W = np.triu(rng.uniform(0.1, 2.0, (n, n)) * (rng.random((n, n)) < p), k=1)
    W = W + W.T
    for i in range(n):
        if not W[i].any():
            j = (i + 1) % n
            W[i, j] = W[j, i] = 1.0
    return W
