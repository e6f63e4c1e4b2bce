import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddhit import linalg
from oddhit.steenrod import hit_matrix


def brute_rank(M, p):
    """log_p of the size of the column span, by enumerating every combination."""
    M = np.asarray(M, dtype=np.int64) % p
    span = set()
    for coeffs in itertools.product(range(p), repeat=M.shape[1]):
        span.add(tuple(M @ np.array(coeffs, dtype=np.int64) % p) if M.shape[1] else ())
    r = 0
    while p**r < len(span):
        r += 1
    return r


def small_matrix(max_r=4, max_c=4):
    return st.tuples(st.sampled_from([3, 5]), st.integers(0, max_r), st.integers(0, max_c)).flatmap(
        lambda t: st.tuples(st.just(t[0]), st.lists(st.lists(st.integers(0, t[0] - 1), min_size=t[2], max_size=t[2]),
                                                    min_size=t[1], max_size=t[1]).map(
            lambda rows, c=t[2]: np.array(rows, dtype=np.int64).reshape(len(rows), c))))


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_rank_matches_brute_force(pm):
    p, M = pm
    assert linalg.rank(M, p) == brute_rank(M, p)


def test_rank_examples():
    assert linalg.rank(np.eye(3, dtype=int), 3) == 3
    assert linalg.rank(np.zeros((3, 4), dtype=int), 3) == 0
    assert linalg.rank(np.zeros((0, 0), dtype=int), 5) == 0
    assert linalg.rank(hit_matrix(2, 3, 18, "edge_sum").matrix, 3) == 15


@pytest.mark.parametrize("p", [3, 5, 7])
def test_rank_transpose(p):
    rng = np.random.default_rng(p)
    for _ in range(20):
        M = rng.integers(0, p, size=(8, 12))
        assert linalg.rank(M, p) == linalg.rank(M.T, p)


def test_rref_examples():
    R, piv = linalg.rref_with_pivots(np.eye(4, dtype=int), 5)
    assert (R == np.eye(4)).all() and piv == [0, 1, 2, 3]
    R, piv = linalg.rref_with_pivots(np.array([[1, 2], [2, 4]]), 5)
    assert piv == [0] and (R[1] == 0).all()


def test_rref_row_space_preserved():
    rng = np.random.default_rng(7)
    for _ in range(20):
        M = rng.integers(0, 3, size=(6, 9))
        R, piv = linalg.rref_with_pivots(M, 3)
        r = len(piv)
        assert linalg.rank(np.vstack([M, R]), 3) == linalg.rank(M, 3) == r
        for k, c in enumerate(piv):  # reduced: pivot 1, zero elsewhere in the column
            assert R[k, c] == 1 and np.count_nonzero(R[:, c]) == 1
        assert (R[r:] == 0).all()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_kernel_properties(p):
    rng = np.random.default_rng(100 + p)
    for _ in range(20):
        rows, cols = rng.integers(1, 8), rng.integers(1, 10)
        M = rng.integers(0, p, size=(rows, cols))
        K = linalg.right_kernel_basis(M, p)
        assert len(K) == cols - linalg.rank(M, p)
        for v in K:
            assert not (M @ v % p).any()
        if K:
            assert linalg.rank(np.array(K), p) == len(K)


def test_kernel_examples():
    assert linalg.right_kernel_basis(np.eye(3, dtype=int), 3) == []
    K = linalg.right_kernel_basis(np.zeros((3, 4), dtype=int), 3)
    assert (np.array(K) == np.eye(4)).all()


def test_independent_columns():
    c = np.array([[1], [2], [0]])
    assert (linalg.independent_columns(np.hstack([c, 2 * c % 3]), 3) == c).all()
    assert (linalg.independent_columns(np.eye(3, dtype=int), 3) == np.eye(3)).all()
    H = hit_matrix(2, 3, 18, "edge_sum").matrix
    B = linalg.independent_columns(H, 3)
    assert B.shape[1] == 15
    for j in range(H.shape[1]):
        assert linalg.in_column_span(B, H[:, j], 3)


@pytest.mark.parametrize("n", [1, 5, 20, 50])
def test_inverse_random(n):
    rng = np.random.default_rng(n)
    p = 5
    while True:
        M = rng.integers(0, p, size=(n, n))
        if linalg.rank(M, p) == n:
            break
    Minv = linalg.inverse(M, p)
    eye = np.eye(n, dtype=np.int64)
    assert (linalg.matmul(M, Minv, p) == eye).all()
    assert (linalg.matmul(Minv, M, p) == eye).all()


def test_inverse_errors_and_examples():
    assert (linalg.inverse(np.array([[2]]), 5) == [[3]]).all()
    with pytest.raises(linalg.NotSquareError):
        linalg.inverse(np.zeros((2, 3), dtype=int), 3)
    with pytest.raises(linalg.SingularMatrixError):
        linalg.inverse(np.array([[1, 2], [2, 4]]), 5)


def test_in_column_span():
    M = np.array([[1, 0], [0, 0], [0, 1]])
    assert linalg.in_column_span(M, np.zeros(3, dtype=int), 3)
    assert not linalg.in_column_span(np.zeros((3, 2), dtype=int), np.array([1, 0, 0]), 3)
    with pytest.raises(ValueError):
        linalg.in_column_span(M, np.zeros(4, dtype=int), 3)
    H = hit_matrix(1, 3, 11, "full").matrix
    assert linalg.in_column_span(H, np.array([1]), 3)


def test_rowspace_matches_rank():
    rng = np.random.default_rng(3)
    S = linalg.RowSpace(7, 3)
    rows = []
    for _ in range(12):
        v = rng.integers(0, 3, size=7)
        added = S.add(v)
        rows.append(v)
        assert S.dim == linalg.rank(np.array(rows), 3)
        assert S.contains(v)
        assert added in (True, False)
    for i in range(7):
        assert S.contains_unit(i) == S.contains(np.eye(7, dtype=int)[i])


def test_storage_dtype_fits():
    for p in (3, 5, 251, 257, 65537):
        assert np.iinfo(linalg.storage_dtype(p)).max >= p - 1
