"""Input validation shared by the estimators."""
from __future__ import annotations

import numbers

import numpy as np
from sklearn.utils.validation import check_array

from .arith import check_prime
from .monomials import ORDERS
from .steenrod import normalize_mode


def check_nonneg_int(value, name: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_params(h, p, m, mode, order) -> tuple[int, int, int, str, str]:
    h = check_nonneg_int(h, "h", 1)
    m = check_nonneg_int(m, "m")
    p = check_prime(p)
    mode = normalize_mode(mode)
    if order not in ORDERS:
        raise ValueError(f"unknown order {order!r}; expected one of {', '.join(ORDERS)}")
    return h, p, m, mode, order


def check_prefer(prefer, h: int, m: int) -> tuple[tuple[int, ...], ...]:
    if prefer is None:
        return ()
    out = []
    for e in prefer:
        e = tuple(int(a) for a in e)
        if len(e) != h or min(e) < 0 or sum(e) != m:
            raise ValueError(f"preferred monomial {e} is not of rank {h} and degree {m}")
        out.append(e)
    return tuple(out)


def check_residues(X, n_features: int, p: int, name: str = "X") -> np.ndarray:
    """2-D integer array with ``n_features`` columns, reduced mod p.

    A single 1-D vector is accepted and treated as one sample.
    """
    X = np.asarray(X)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    X = check_array(X, dtype=None, ensure_min_features=0, input_name=name)
    if not np.issubdtype(X.dtype, np.integer):
        if not np.all(np.mod(X, 1) == 0):
            raise ValueError(f"{name} must hold integer residues")
    X = X.astype(np.int64) % p
    if X.shape[1] != n_features:
        raise ValueError(f"{name} has {X.shape[1]} features, expected {n_features}")
    return X
