"""Dense exact linear algebra over Z/p on numpy integer arrays.

Matrices are plain 2-D numpy arrays whose entries are canonical residues in
[0, p). Elimination always takes the first nonzero entry in column order as
pivot, so every result is reproducible bit for bit.
"""
from __future__ import annotations

import numpy as np

from .arith import inv_mod


class NotSquareError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


def storage_dtype(p: int):
    """Smallest unsigned dtype that holds residues mod p."""
    for dt in (np.uint8, np.uint16, np.uint32):
        if p - 1 <= np.iinfo(dt).max:
            return dt
    return np.uint64


def as_matrix(M, p: int) -> np.ndarray:
    """Reduce entries mod p and store in the compact dtype. 1-D input is a column."""
    A = np.asarray(M)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    if A.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return np.mod(A.astype(np.int64), p).astype(storage_dtype(p))


def zeros(rows: int, cols: int, p: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=storage_dtype(p))


def identity(n: int, p: int) -> np.ndarray:
    return np.eye(n, dtype=storage_dtype(p))


def matmul(A, B, p: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    inner = A.shape[-1]
    if inner * (p - 1) ** 2 >= 2**62:
        out = np.mod(A.astype(object) @ B.astype(object), p)
    else:
        out = np.mod(A @ B, p)
    return out.astype(storage_dtype(p))


def _eliminate(M, p: int, reduced: bool):
    """Gaussian elimination; returns (work array, pivot columns)."""
    A = np.array(M, dtype=np.int64)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r, c:] = A[r, c:] * inv_mod(lead, p) % p
        if reduced:
            targets = np.flatnonzero(A[:, c])
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.flatnonzero(A[r + 1:, c])
        if targets.size:
            A[targets, c:] = (A[targets, c:] - np.outer(A[targets, c], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M, p: int) -> int:
    A = np.asarray(M)
    if A.size == 0:
        return 0
    # eliminate along the shorter side
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(_eliminate(A, p, reduced=False)[1])


def rref_with_pivots(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and its pivot columns (0-based, in row order)."""
    A = np.asarray(M)
    if A.size == 0:
        return as_matrix(A.reshape(A.shape), p), []
    R, piv = _eliminate(A, p, reduced=True)
    return R.astype(storage_dtype(p)), piv


def right_kernel_basis(M, p: int) -> list[np.ndarray]:
    """Basis of {v : M v = 0}, one vector per free column (free entry set to 1)."""
    A = np.asarray(M)
    n = A.shape[1]
    if A.shape[0] == 0:
        R, piv = np.zeros((0, n), dtype=np.int64), []
    else:
        R, piv = rref_with_pivots(A, p)
    R = R.astype(np.int64)
    pivset = set(piv)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for r, pc in enumerate(piv):
            v[pc] = (-R[r, f]) % p
        basis.append(v.astype(storage_dtype(p)))
    return basis


def independent_column_indices(M, p: int) -> list[int]:
    """Greedy left-to-right columns that raise the rank (= pivot columns of rref)."""
    A = np.asarray(M)
    if A.size == 0:
        return []
    return _eliminate(A, p, reduced=False)[1]


def independent_columns(M, p: int) -> np.ndarray:
    A = np.asarray(M)
    return A[:, independent_column_indices(A, p)]


def inverse(M, p: int) -> np.ndarray:
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSquareError(f"matrix of shape {A.shape} is not square")
    n = A.shape[0]
    if n == 0:
        return zeros(0, 0, p)
    aug = np.concatenate([np.asarray(A, dtype=np.int64) % p, np.eye(n, dtype=np.int64)], axis=1)
    R, piv = _eliminate(aug, p, reduced=True)
    if piv[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular mod p")
    return R[:, n:].astype(storage_dtype(p))


def in_column_span(M, v, p: int) -> bool:
    A = np.asarray(M)
    v = np.asarray(v).reshape(-1)
    if v.shape[0] != A.shape[0]:
        raise ValueError(f"vector length {v.shape[0]} != matrix rows {A.shape[0]}")
    if not np.any(v % p):
        return True
    if A.shape[1] == 0:
        return False
    return rank(np.column_stack([A, v]), p) == rank(A, p)


class RowSpace:
    """Incrementally maintained RREF basis of a subspace of (Z/p)^n.

    Used for greedy completion: membership of unit vectors is an O(n) check
    against the reduced rows, and each accepted vector costs one sweep.
    """

    def __init__(self, n: int, p: int, rows=None):
        self.n = n
        self.p = p
        if rows is None or np.asarray(rows).size == 0:
            self.R = np.zeros((0, n), dtype=np.int64)
            self.pivots: list[int] = []
        else:
            R, piv = _eliminate(np.asarray(rows), p, reduced=True)
            self.R = R[: len(piv)]
            self.pivots = list(piv)
        self._where = {c: i for i, c in enumerate(self.pivots)}

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64).reshape(-1) % self.p
        if self.pivots:
            coeff = v[self.pivots]
            if np.any(coeff):
                v = (v - coeff @ self.R) % self.p
        return v

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    def contains_unit(self, i: int) -> bool:
        k = self._where.get(i)
        if k is None:
            return False
        row = self.R[k]
        return int(np.count_nonzero(row)) == 1

    def add(self, v) -> bool:
        """Add v to the span; returns True when the dimension grew."""
        w = self.reduce(v)
        nz = np.flatnonzero(w)
        if nz.size == 0:
            return False
        c = int(nz[0])
        w = w * inv_mod(int(w[c]), self.p) % self.p
        if self.R.shape[0]:
            col = self.R[:, c].copy()
            hit = np.flatnonzero(col)
            if hit.size:
                self.R[hit] = (self.R[hit] - np.outer(col[hit], w)) % self.p
        # keep rows sorted by pivot column so the basis stays in RREF
        at = int(np.searchsorted(self.pivots, c))
        self.R = np.insert(self.R, at, w, axis=0)
        self.pivots.insert(at, c)
        self._where = {col_: i for i, col_ in enumerate(self.pivots)}
        return True

    def add_unit(self, i: int) -> bool:
        if self.contains_unit(i):
            return False
        e = np.zeros(self.n, dtype=np.int64)
        e[i] = 1
        return self.add(e)
