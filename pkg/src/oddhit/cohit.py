"""Cohit quotients Q(P_h)_m: dimensions, greedy monomial bases, quotient coordinates."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg
from .arith import p_digits
from .monomials import DegreeBasis, Monomial, score
from .steenrod import HitMatrix, Poly, hit_matrix, normalize_mode, poly_degree


class BlockConsistencyError(RuntimeError):
    """[Q | Mb] failed to be square and invertible: rank bookkeeping is broken."""


def cohit_dimension(h: int, p: int, m: int, mode: str = "edge_sum") -> tuple[int, int, int]:
    """(dim, ambient, rank) of the degree-m cohit quotient."""
    H = hit_matrix(h, p, m, mode)
    r = linalg.rank(H.matrix, p)
    return len(H.rows) - r, len(H.rows), r


@dataclass
class CohitBasis:
    h: int
    p: int
    m: int
    mode: str
    order: str
    prefer: tuple[Monomial, ...]
    representatives: list[int]
    hit: HitMatrix = field(repr=False)
    rank: int = 0

    @property
    def rows(self) -> DegreeBasis:
        return self.hit.rows

    @property
    def ambient(self) -> int:
        return len(self.hit.rows)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    @property
    def monomials(self) -> list[Monomial]:
        return [self.rows[i] for i in self.representatives]


def candidate_order(rows: DegreeBasis, order: str, prefer: Sequence[Sequence[int]] = ()) -> list[int]:
    """Prefer-listed positions first, then the rest by ascending score."""
    h, m = rows.h, rows.m
    pref = []
    for e in prefer:
        e = tuple(e)
        if len(e) != h or sum(e) != m or min(e) < 0:
            raise ValueError(f"preferred monomial {e} is not of rank {h} and degree {m}")
        i = rows.index[e]
        if i not in pref:
            pref.append(i)
    taken = set(pref)
    rest = sorted((i for i in range(len(rows)) if i not in taken), key=lambda i: score(rows[i], order, h, m))
    return pref + rest


def cohit_basis(h: int, p: int, m: int, mode: str = "edge_sum", order: str = "balanced",
                prefer: Sequence[Sequence[int]] = (), hit: HitMatrix | None = None) -> CohitBasis:
    """Greedy admissible basis: accept candidates whose unit vector is not yet spanned."""
    mode = normalize_mode(mode)
    H = hit if hit is not None else hit_matrix(h, p, m, mode)
    N = len(H.rows)
    cand = candidate_order(H.rows, order, prefer)
    piv = linalg.independent_column_indices(H.matrix, p)
    span = linalg.RowSpace(N, p, H.matrix[:, piv].T if piv else None)
    reps = []
    for i in cand:
        if span.dim == N:
            break
        if span.add_unit(i):
            reps.append(i)
    return CohitBasis(h, p, m, mode, order, tuple(tuple(e) for e in prefer), reps, H, len(piv))


@dataclass
class QuotientBlocks:
    """Representatives Q, independent hit columns Mb and inv([Q | Mb])."""

    basis: CohitBasis
    image_columns: np.ndarray
    image_indices: list[int]
    combined_inverse: np.ndarray

    @property
    def p(self) -> int:
        return self.basis.p

    @property
    def dim(self) -> int:
        return self.basis.dim

    def coordinates(self, v) -> np.ndarray:
        return quotient_coordinates(self, v)


def build_quotient_blocks(h: int, p: int, m: int, mode: str = "edge_sum", order: str = "balanced",
                          prefer: Sequence[Sequence[int]] = ()) -> QuotientBlocks:
    B = cohit_basis(h, p, m, mode, order, prefer)
    M = B.hit.matrix
    cols = linalg.independent_column_indices(M, p)
    Mb = M[:, cols]
    N = B.ambient
    Q = linalg.zeros(N, B.dim, p)
    for j, r in enumerate(B.representatives):
        Q[r, j] = 1
    A = np.concatenate([Q, Mb], axis=1)
    if A.shape[0] != A.shape[1]:
        raise BlockConsistencyError(f"block [Q|Mb] is {A.shape}, not square")
    try:
        Ainv = linalg.inverse(A, p)
    except linalg.SingularMatrixError as exc:
        raise BlockConsistencyError("block [Q|Mb] is singular") from exc
    return QuotientBlocks(B, Mb, cols, Ainv)


def quotient_coordinates(blocks: QuotientBlocks, v) -> np.ndarray:
    """Coordinates of an ambient vector (or columns of a matrix) over the representatives."""
    v = np.asarray(v)
    N = blocks.basis.ambient
    if v.shape[0] != N:
        raise ValueError(f"expected ambient length {N}, got {v.shape[0]}")
    head = blocks.combined_inverse[: blocks.dim]
    return linalg.matmul(head, v, blocks.p)


def poly_vector(poly: Poly, rows: DegreeBasis, p: int) -> np.ndarray:
    v = np.zeros(len(rows), dtype=np.int64)
    for e, c in poly.items():
        v[rows.index[tuple(e)]] = (v[rows.index[tuple(e)]] + c) % p
    return v


def is_hit(poly: Poly, h: int, p: int, mode: str = "edge_sum", hit: HitMatrix | None = None) -> bool:
    """Whether a homogeneous polynomial lies in the span of the hit columns."""
    m = poly_degree(poly)
    if m is None:
        return True
    if any(len(e) != h for e in poly):
        raise ValueError(f"polynomial terms must have rank {h}")
    H = hit if hit is not None else hit_matrix(h, p, m, mode)
    return linalg.in_column_span(H.matrix, poly_vector(poly, H.rows, p), p)


def classify_rank1(d: int, p: int) -> str:
    """'nonhit' iff d = 0 or d + 1 has exactly one nonzero base-p digit."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return "nonhit"
    nonzero = sum(1 for a in p_digits(d + 1, p) if a)
    return "nonhit" if nonzero == 1 else "hit"


@dataclass(frozen=True)
class EndomorphismSpec:
    """Multiplier prod_j x_j^{q_j p^(t+1+r_j)} (r_j = 0 meaning no twist) applied before g^p."""

    t: int
    q: tuple[int, ...]
    r: tuple[int, ...] | None = None

    def validate(self, p: int, h: int) -> None:
        r = self.r or (0,) * len(self.q)
        if len(self.q) != h or len(r) != h:
            raise ValueError(f"need {h} entries in q and r")
        if self.t < 1 or any(qj < 1 for qj in self.q):
            raise ValueError("t and every q_j must be positive")
        if any(not 0 <= rj <= p - 1 for rj in r):
            raise ValueError(f"every r_j must lie in [0, {p - 1}]")
        if any(r):
            if self.t < 2:
                raise ValueError("twisted form needs t >= 2")
            if any(qj % p == p - 1 for qj in self.q):
                raise ValueError(f"twisted form needs q_j != {p - 1} mod {p}")

    def exponents(self, p: int) -> tuple[int, ...]:
        r = self.r or (0,) * len(self.q)
        return tuple(qj * p ** (self.t + 1 + rj) for qj, rj in zip(self.q, r))


def frobenius(g: Poly, p: int) -> Poly:
    """g^p: exponents scale by p, coefficients are fixed by c -> c^p on Z/p."""
    return {tuple(p * a for a in e): c for e, c in g.items()}


def _shift(g: Poly, mult: Sequence[int]) -> Poly:
    return {tuple(a + b for a, b in zip(e, mult)): c for e, c in g.items()}


def hit_endomorphism(g: Poly, spec: EndomorphismSpec, p: int) -> Poly:
    if not g:
        return {}
    h = len(next(iter(g)))
    spec.validate(p, h)
    return _shift(frobenius(g, p), spec.exponents(p))


def twisted_frobenius(g: Poly, p: int) -> Poly:
    """t_1^(p-1) g^p, the map that carries hit polynomials to hit polynomials."""
    if not g:
        return {}
    h = len(next(iter(g)))
    return _shift(frobenius(g, p), (p - 1,) + (0,) * (h - 1))
