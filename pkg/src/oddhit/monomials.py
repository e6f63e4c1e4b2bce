"""Degree-m monomials in h variables: enumeration, orders, weights, digits."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .arith import digit

Monomial = tuple[int, ...]

ORDERS = ("lex", "antilex", "balanced", "balanced_exact", "cartan_lex")

VAR_NAMES = ("x", "y", "z")


def _compositions(h: int, m: int) -> list[Monomial]:
    if h == 1:
        return [(m,)]
    out = []
    for a in range(m + 1):
        out.extend((a,) + rest for rest in _compositions(h - 1, m - a))
    return out


@lru_cache(maxsize=None)
def compositions(h: int, m: int) -> tuple[Monomial, ...]:
    """All h-part compositions of m, first coordinate ascending (outer loop)."""
    if h < 1 or m < 0:
        raise ValueError(f"need h >= 1 and m >= 0, got h={h}, m={m}")
    return tuple(_compositions(h, m))


@dataclass(frozen=True)
class DegreeBasis:
    """Ordered monomial basis of the degree-m part of F_p[t_1..t_h]."""

    h: int
    m: int
    monomials: tuple[Monomial, ...]
    index: dict[Monomial, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i: int) -> Monomial:
        return self.monomials[i]

    def position(self, mono: Sequence[int]) -> int:
        return self.index[tuple(mono)]


@lru_cache(maxsize=None)
def enumerate_degree(h: int, m: int) -> DegreeBasis:
    monos = compositions(h, m)
    return DegreeBasis(h, m, monos, {e: i for i, e in enumerate(monos)})


def weight_of(mono: Sequence[int], p: int) -> tuple[int, ...]:
    """Torus weight: exponents reduced mod p - 1."""
    return tuple(e % (p - 1) for e in mono)


def digit_signature(mono: Sequence[int], s: int, p: int) -> tuple[int, ...]:
    return tuple(digit(e, s, p) for e in mono)


def score(mono: Sequence[int], order: str, h: int, m: int):
    """Sort key for greedy representative selection; smaller sorts first.

    ``balanced`` (h >= 3) ranks by the spread sum((e_i - m/h)^2) evaluated in
    IEEE double, left to right; rounding splits some exact ties and the
    published bases depend on that split. ``balanced_exact`` uses the integer
    h*sum(e_i^2) - m^2 instead, with ties going to the lexicographic tuple.
    """
    e = tuple(mono)
    if order == "lex":
        return e
    if order == "antilex":
        return tuple(-a for a in e)
    if order in ("balanced", "balanced_exact"):
        if h == 2:
            return (abs(2 * e[0] - m),) + e
        if order == "balanced_exact":
            return (h * sum(a * a for a in e) - m * m,) + e
        mu = m / h
        v = 0.0
        for a in e:
            d = a - mu
            v += d * d
        return (v,) + e
    raise ValueError(f"unknown order {order!r}; expected one of lex, antilex, balanced, balanced_exact")


def compare_cartan_lex(m1: Sequence[int], m2: Sequence[int], p: int) -> int:
    """-1, 0 or 1 as m1 is below, equal to, or above m2 in Cartan-lex order.

    The comparison looks at the highest p-adic level where the digit tuples
    differ and compares those tuples lexicographically (variable 1 first).
    """
    if len(m1) != len(m2):
        raise ValueError("monomials of different rank")
    if tuple(m1) == tuple(m2):
        return 0
    top = max(max(m1), max(m2))
    s = 0
    while p**s <= top:
        s += 1
    for level in range(s, -1, -1):
        d1 = digit_signature(m1, level, p)
        d2 = digit_signature(m2, level, p)
        if d1 != d2:
            return 1 if d1 > d2 else -1
    return 0  # unreachable: distinct integers differ in some digit


class CartanLexKey:
    """Adapter so Cartan-lex can drive ``sorted``."""

    __slots__ = ("mono", "p")

    def __init__(self, mono, p):
        self.mono = tuple(mono)
        self.p = p

    def __lt__(self, other):
        return compare_cartan_lex(self.mono, other.mono, self.p) < 0

    def __eq__(self, other):
        return self.mono == other.mono


def sort_monomials(monos, order: str, h: int, m: int, p: int | None = None) -> list:
    if order == "cartan_lex":
        if p is None:
            raise ValueError("cartan_lex order needs p")
        return sorted(monos, key=lambda e: CartanLexKey(e, p))
    return sorted(monos, key=lambda e: score(e, order, h, m))


def var_symbol(j: int) -> str:
    return VAR_NAMES[j] if j < len(VAR_NAMES) else f"t{j + 1}"


def monomial_str(mono: Sequence[int], sep: str = " * ") -> str:
    """Render as ``x^a * y^b * z^c``; unit exponents elided, constant is ``1``."""
    parts = []
    for j, a in enumerate(mono):
        if a == 0:
            continue
        parts.append(var_symbol(j) if a == 1 else f"{var_symbol(j)}^{a}")
    return sep.join(parts) if parts else "1"


def exterior_symbol(h: int) -> str:
    return {1: "u", 2: "uv", 3: "uvw"}.get(h, "u1...uh")
