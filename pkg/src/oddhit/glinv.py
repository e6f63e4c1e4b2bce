"""GL(h, F_p) acting on monomials and cohit quotients; invariants and weight blocks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .arith import inv_mod, lucas_binom, primitive_root
from .cohit import QuotientBlocks, build_quotient_blocks
from .monomials import Monomial, enumerate_degree, weight_of
from .steenrod import Poly, _add

TWISTS = ("none", "det_inverse")


@dataclass(frozen=True)
class Generator:
    """One of scale(i, lam), swap(i, j), transvection(i, j); indices are 0-based."""

    kind: str
    i: int
    j: int | None = None
    lam: int | None = None

    def __str__(self) -> str:
        if self.kind == "scale":
            return f"scale({self.i + 1}, {self.lam})"
        return f"{self.kind}({self.i + 1}, {self.j + 1})"


def gl_generators(h: int, p: int) -> list[Generator]:
    """Scalings by a primitive root, adjacent swaps, then every ordered transvection."""
    lam = primitive_root(p)
    gens = [Generator("scale", i, lam=lam) for i in range(h)]
    gens += [Generator("swap", i, i + 1) for i in range(h - 1)]
    gens += [Generator("transvection", i, j) for i in range(h) for j in range(h) if i != j]
    return gens


def det_of_generator(g: Generator, p: int) -> int:
    if g.kind == "scale":
        return g.lam % p
    if g.kind == "swap":
        return p - 1
    if g.kind == "transvection":
        return 1
    raise ValueError(f"unknown generator kind {g.kind!r}")


def act_on_monomial(g: Generator, mono: Sequence[int], p: int) -> Poly:
    """Contragredient action: scalings contribute inv(lam)^a_i; transvection(i, j)
    substitutes t_j -> t_j - t_i."""
    e = list(mono)
    if g.kind == "scale":
        c = pow(inv_mod(g.lam, p), e[g.i], p)
        return {tuple(e): c}
    if g.kind == "swap":
        e[g.i], e[g.j] = e[g.j], e[g.i]
        return {tuple(e): 1}
    if g.kind == "transvection":
        ai, aj = e[g.i], e[g.j]
        out: Poly = {}
        for u in range(aj + 1):
            c = lucas_binom(aj, u, p)
            if not c:
                continue
            if (aj - u) % 2:
                c = p - c
            f = list(e)
            f[g.i] = ai + aj - u
            f[g.j] = u
            _add(out, tuple(f), c, p)
        return out
    raise ValueError(f"unknown generator kind {g.kind!r}")


def ambient_matrix(g: Generator, h: int, p: int, m: int) -> np.ndarray:
    rows = enumerate_degree(h, m)
    G = linalg.zeros(len(rows), len(rows), p)
    for col, e in enumerate(rows):
        for f, c in act_on_monomial(g, e, p).items():
            G[rows.index[f], col] = (int(G[rows.index[f], col]) + c) % p
    return G


def quotient_action(g: Generator, blocks: QuotientBlocks) -> np.ndarray:
    """d x d matrix of g on the cohit quotient, columns indexed by representatives."""
    B = blocks.basis
    rows = B.rows
    p = B.p
    W = np.zeros((B.ambient, B.dim), dtype=np.int64)
    for j, r in enumerate(B.representatives):
        for f, c in act_on_monomial(g, rows[r], p).items():
            W[rows.index[f], j] = (W[rows.index[f], j] + c) % p
    return blocks.coordinates(W)


@dataclass
class InvariantSpace:
    blocks: QuotientBlocks
    twist: str
    kernel_vectors: list[np.ndarray]

    @property
    def dimension(self) -> int:
        return len(self.kernel_vectors)

    @property
    def representatives(self) -> list[Monomial]:
        return self.blocks.basis.monomials

    def support(self, k: int = 0) -> dict[Monomial, int]:
        """Nonzero coordinates of kernel vector k keyed by representative monomial."""
        v = self.kernel_vectors[k]
        reps = self.representatives
        return {reps[j]: int(v[j]) for j in np.flatnonzero(v)}


def invariance_stack(blocks: QuotientBlocks, twist: str = "none") -> np.ndarray:
    if twist not in TWISTS:
        raise ValueError(f"unknown twist {twist!r}; expected none or det_inverse")
    B = blocks.basis
    p, d = B.p, B.dim
    eye = np.eye(d, dtype=np.int64)
    parts = []
    for g in gl_generators(B.h, p):
        A = quotient_action(g, blocks).astype(np.int64)
        if twist == "det_inverse":
            A = A * inv_mod(det_of_generator(g, p), p) % p
        parts.append((A - eye) % p)
    if not parts:
        return np.zeros((0, d), dtype=np.int64)
    return np.concatenate(parts, axis=0)


def invariants_of(blocks: QuotientBlocks, twist: str = "none") -> InvariantSpace:
    if blocks.dim == 0:
        return InvariantSpace(blocks, twist, [])
    stack = invariance_stack(blocks, twist)
    return InvariantSpace(blocks, twist, linalg.right_kernel_basis(stack, blocks.p))


def invariants(h: int, p: int, m: int, mode: str = "edge_sum", order: str = "balanced",
               prefer: Sequence[Sequence[int]] = (), twist: str = "none") -> InvariantSpace:
    return invariants_of(build_quotient_blocks(h, p, m, mode, order, prefer), twist)


def weight_blocks(h: int, p: int, m: int) -> dict[tuple[int, ...], list[int]]:
    """Positions in the degree-m basis grouped by torus weight (first-seen order)."""
    out: dict[tuple[int, ...], list[int]] = {}
    for i, e in enumerate(enumerate_degree(h, m)):
        out.setdefault(weight_of(e, p), []).append(i)
    return out


def trivial_block_signature(h: int, p: int) -> tuple[int, ...]:
    return (p - 2,) * h
