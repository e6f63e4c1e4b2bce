"""Reduced powers P^{p^s} on monomials and the hit matrices built from them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .arith import digit, lucas_binom
from .linalg import storage_dtype
from .monomials import DegreeBasis, Monomial, compositions, enumerate_degree

MODES = ("graded", "edge_sum", "full")

Poly = dict  # Monomial -> nonzero residue mod p


def normalize_mode(mode: str) -> str:
    m = mode.replace("-", "_")
    if m not in MODES:
        raise ValueError(f"unknown hit mode {mode!r}; expected graded, edge_sum or full")
    return m


def max_level(m: int, p: int) -> int:
    """Number of levels s with (p-1) p^s <= m."""
    s = 0
    while (p - 1) * p**s <= m:
        s += 1
    return s


def _add(poly: Poly, mono, c: int, p: int) -> None:
    v = (poly.get(mono, 0) + c) % p
    if v:
        poly[mono] = v
    else:
        poly.pop(mono, None)


def edge_image(mono: Sequence[int], var: int, s: int, p: int) -> Poly:
    """P^{p^s} acting on variable ``var`` only: coefficient is digit s of its exponent."""
    mono = tuple(mono)
    c = digit(mono[var], s, p)
    if c == 0:
        return {}
    out = list(mono)
    out[var] += (p - 1) * p**s
    return {tuple(out): c}


def edge_sum_image(mono: Sequence[int], s: int, p: int) -> Poly:
    out: Poly = {}
    for var in range(len(mono)):
        for e, c in edge_image(mono, var, s, p).items():
            _add(out, e, c, p)
    return out


def reduced_power(mono: Sequence[int], r: int, p: int) -> Poly:
    """P^r on a monomial via the Cartan formula.

    Sum over compositions (r_1..r_h) of r of prod_j binom(e_j, r_j) x_j^{e_j+(p-1)r_j};
    any prefix whose binomial product already vanishes is pruned.
    """
    mono = tuple(mono)
    h = len(mono)
    out: Poly = {}
    if r == 0:
        return {mono: 1}

    def rec(j: int, left: int, coeff: int, acc: list):
        if j == h - 1:
            b = lucas_binom(mono[j], left, p)
            if b:
                _add(out, tuple(acc + [mono[j] + (p - 1) * left]), coeff * b % p, p)
            return
        for r_j in range(min(left, mono[j]) + 1):
            b = lucas_binom(mono[j], r_j, p)
            if b:
                rec(j + 1, left - r_j, coeff * b % p, acc + [mono[j] + (p - 1) * r_j])

    rec(0, r, 1, [])
    return out


def full_image(mono: Sequence[int], s: int, p: int) -> Poly:
    """Full Cartan expansion of P^{p^s} on a monomial."""
    return reduced_power(mono, p**s, p)


def poly_mul(f: Poly, g: Poly, p: int) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            _add(out, tuple(a + b for a, b in zip(e1, e2)), c1 * c2, p)
    return out


def poly_add(f: Poly, g: Poly, p: int) -> Poly:
    out = dict(f)
    for e, c in g.items():
        _add(out, e, c, p)
    return out


def poly_scale(f: Poly, c: int, p: int) -> Poly:
    c %= p
    return {e: v * c % p for e, v in f.items()} if c else {}


def poly_degree(f: Poly) -> int | None:
    """Common total degree of the terms, or None for the zero polynomial."""
    degs = {sum(e) for e in f}
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError(f"polynomial is not homogeneous (degrees {sorted(degs)})")
    return degs.pop()


@dataclass(frozen=True)
class Column:
    level: int
    source: Monomial
    var: int | None = None  # set in graded mode


@dataclass
class HitMatrix:
    mode: str
    h: int
    p: int
    m: int
    rows: DegreeBasis
    columns: list[Column]
    matrix: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def column_poly(self, j: int) -> Poly:
        col = self.matrix[:, j]
        return {self.rows[i]: int(col[i]) for i in np.flatnonzero(col)}


def column_image(col: Column, mode: str, p: int) -> Poly:
    if mode == "graded":
        return edge_image(col.source, col.var, col.level, p)
    if mode == "edge_sum":
        return edge_sum_image(col.source, col.level, p)
    return full_image(col.source, col.level, p)


def hit_columns(h: int, p: int, m: int, mode: str) -> list[Column]:
    mode = normalize_mode(mode)
    cols = []
    for s in range(max_level(m, p)):
        for src in compositions(h, m - (p - 1) * p**s):
            if mode == "graded":
                cols.extend(Column(s, src, var) for var in range(h))
            else:
                cols.append(Column(s, src))
    return cols


def hit_matrix(h: int, p: int, m: int, mode: str = "edge_sum") -> HitMatrix:
    """Rows: degree-m monomials; columns: images of P^{p^s} on lower-degree sources.

    Columns run by level, then source order, then (graded only) variable.
    """
    mode = normalize_mode(mode)
    rows = enumerate_degree(h, m)
    cols = hit_columns(h, p, m, mode)
    M = np.zeros((len(rows), len(cols)), dtype=storage_dtype(p))
    idx = rows.index
    for j, col in enumerate(cols):
        for e, c in column_image(col, mode, p).items():
            M[idx[e], j] = c
    return HitMatrix(mode, h, p, m, rows, cols, M)
