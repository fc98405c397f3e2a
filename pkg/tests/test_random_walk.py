import math

import numpy as np
import pytest
import scipy.sparse as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import labelings
from oracles import random_labels, random_similarity, rwi_conditional_route, triple_bruteforce
from graphvi import (
    Clustering,
    SimilarityGraph,
    chain_graph,
    cluster_transitions,
    confusion_matrix,
    rwi,
    single_cluster,
    transition_model,
    triple_joint,
    vi,
    weighted_vi,
)


def complete_uniform(n):
    # every node, itself included, is equally likely as the next step
    return SimilarityGraph.from_dense(np.ones((n, n)))


def test_path_stationary_distribution():
    tm = transition_model(chain_graph(3))
    assert tm.pi.tolist() == [0.25, 0.5, 0.25]
    assert tm.T.toarray().tolist() == [[0, 1, 0], [0.5, 0, 0.5], [0, 1, 0]]


def test_complete_graph_uniform_pi():
    assert np.allclose(transition_model(complete_uniform(7)).pi, 1 / 7, atol=1e-15)


def test_weight_cancels_on_single_edge():
    tm = transition_model(SimilarityGraph.from_edges(2, [0], [1], [5.0]))
    assert tm.T.toarray().tolist() == [[0, 1], [1, 0]]
    assert tm.pi.tolist() == [0.5, 0.5]


def test_transition_invariants(rng):
    S = random_similarity(rng, 8)
    tm = transition_model(SimilarityGraph.from_dense(S))
    T = tm.T.toarray()
    assert np.allclose(T.sum(axis=1), 1, atol=1e-12)
    assert math.isclose(tm.pi.sum(), 1, abs_tol=1e-12)
    flow = tm.pi[:, None] * T
    assert np.allclose(flow, flow.T, atol=1e-12)  # detailed balance
    assert np.allclose(tm.pi @ T, tm.pi, atol=1e-12)


def test_zero_degree_is_an_error():
    s = SimilarityGraph.from_edges(3, [0], [1], [1.0])
    with pytest.raises(ValueError, match="isolated node 3 has zero degree; RWI undefined"):
        transition_model(s)
    with pytest.raises(ValueError, match="zero degree"):
        rwi(s, [0, 0, 1], [0, 1, 1])
    tm = transition_model(s, self_loop=0.5)
    assert tm.T.toarray()[2, 2] == 1.0


def test_similarity_graph_validation():
    with pytest.raises(ValueError, match="symmetric"):
        SimilarityGraph.from_dense([[0, 1], [2, 0]])
    with pytest.raises(ValueError, match="nonnegative"):
        SimilarityGraph.from_dense([[0, -1], [-1, 0]])
    with pytest.raises(ValueError, match="out of range"):
        SimilarityGraph.from_edges(2, [0], [2], [1.0])
    s = SimilarityGraph.from_edges(3, [0, 1, 2], [1, 2, 2], [1.0, 2.0, 3.0])
    assert s.toarray().tolist() == [[0, 1, 0], [1, 0, 2], [0, 2, 3]]
    assert [a.tolist() for a in s.edges()] == [[0, 1, 2], [1, 2, 2], [1.0, 2.0, 3.0]]


# --- three-way joint law ------------------------------------------------------


def test_triple_single_cluster():
    P = triple_joint(chain_graph(5), single_cluster(5), single_cluster(5)).P
    assert P.shape == (1, 1, 1)
    assert P[0, 0, 0] == pytest.approx(1.0, abs=1e-15)


def test_triple_single_edge():
    P = triple_joint(SimilarityGraph.from_edges(2, [0], [1], [1.0]), [1, 2], [1, 1]).P
    expected = np.zeros((2, 2, 1))
    expected[0, 1, 0] = expected[1, 0, 0] = 0.5
    assert np.array_equal(P, expected)


def test_triple_invariants_random(rng):
    for _ in range(20):
        n = int(rng.integers(2, 9))
        S = random_similarity(rng, n)
        a, b = random_labels(rng, n), random_labels(rng, n)
        tm = transition_model(SimilarityGraph.from_dense(S))
        P = triple_joint(tm, a, b).P
        assert np.all(P >= 0)
        assert P.sum() == pytest.approx(1.0, abs=1e-10)
        assert np.allclose(P, triple_bruteforce(S, a, b), atol=1e-12)
        # summing out the other clustering gives pi(C_k) * P_{C_k C_l}
        pik = np.bincount(Clustering(a).labels, weights=tm.pi)
        assert np.allclose(P.sum(axis=2), pik[:, None] * cluster_transitions(tm, a), atol=1e-12)
        # mass only where C_l meets C'_m
        cm = confusion_matrix(a, b).counts
        assert np.all(P[:, cm == 0] == 0)


# --- RWI ----------------------------------------------------------------------


def test_rwi_oracle_route(rng):
    for _ in range(30):
        n = int(rng.integers(2, 8))
        S = random_similarity(rng, n)
        a, b = random_labels(rng, n), random_labels(rng, n)
        assert rwi(SimilarityGraph.from_dense(S), a, b) == pytest.approx(
            rwi_conditional_route(S, a, b), abs=1e-12
        )


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(labelings(n=n), labelings(n=n))))
def test_rwi_reduces_to_vi_on_complete_uniform_graph(pair):
    a, b = pair
    assert rwi(complete_uniform(len(a)), a, b) == pytest.approx(vi(a, b), abs=1e-10)


def test_rwi_complete_graph_without_self_loops_does_not_reduce():
    n = 6
    S = np.ones((n, n)) - np.eye(n)
    a, b = [0, 0, 1, 1, 2, 2], [0, 1, 1, 2, 2, 0]
    assert abs(rwi(SimilarityGraph.from_dense(S), a, b) - vi(a, b)) > 1e-3


@settings(max_examples=60)
@given(st.integers(2, 8), st.data())
def test_rwi_symmetric_zero_and_bounded(n, data):
    seed = data.draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    S = SimilarityGraph.from_dense(random_similarity(rng, n))
    a, b = data.draw(labelings(n=n)), data.draw(labelings(n=n))
    tm = transition_model(S)
    r = rwi(tm, a, b)
    assert r == rwi(tm, b, a)
    assert rwi(tm, a, a) == pytest.approx(0.0, abs=1e-12)
    assert r >= 0
    assert r <= weighted_vi(a, b, tm.pi) + 1e-10


def test_rwi_can_exceed_plain_vi_when_pi_is_not_uniform():
    # the bound holds against the stationary-weighted VI, not plain VI
    s = chain_graph(10)
    a = np.zeros(10, dtype=int)
    b = a.copy()
    b[5] = 1
    assert rwi(s, a, b) > vi(a, b)
    assert rwi(s, a, b) <= weighted_vi(a, b, transition_model(s).pi) + 1e-12


def test_rwi_uses_one_step_transitions(rng):
    # a walk of two steps is itself reversible with the same pi;
    # feeding it in must change the index
    changed = 0
    for _ in range(10):
        S = random_similarity(rng, 6, p=0.5)
        tm = transition_model(SimilarityGraph.from_dense(S))
        T = tm.T.toarray()
        two_step = SimilarityGraph.from_dense(
            0.5 * (tm.pi[:, None] * (T @ T) + (tm.pi[:, None] * (T @ T)).T)
        )
        assert np.allclose(transition_model(two_step).pi, tm.pi, atol=1e-12)
        a, b = random_labels(rng, 6, 3), random_labels(rng, 6, 3)
        changed += abs(rwi(tm, a, b) - rwi(two_step, a, b)) > 1e-9
    assert changed > 0


def test_rwi_log_base():
    s = chain_graph(6)
    a, b = [0, 0, 0, 1, 1, 1], [0, 0, 1, 1, 2, 2]
    assert rwi(s, a, b, base=2) == pytest.approx(rwi(s, a, b) / math.log(2), abs=1e-12)


def test_rwi_size_mismatch():
    with pytest.raises(ValueError, match="size mismatch"):
        rwi(chain_graph(4), [0, 1, 1], [0, 0, 1])


def test_large_sparse_graph_stays_sparse():
    s = chain_graph(5000)
    tm = transition_model(s)
    assert sp.issparse(tm.T)
    assert tm.T.nnz == 2 * 4999
    a = np.arange(5000) // 100
    assert 0 < rwi(tm, a, np.arange(5000) // 50) < vi(a, np.arange(5000) // 50) + 1
