"""Embedded reference fixtures and the runner behind ``verify``."""
from __future__ import annotations

import fnmatch
import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .cohit import build_quotient_blocks, cohit_dimension
from .glinv import invariants_of
from .report import (UNSPECIFIED, rank2_expected, digit_report, graded_additivity_test,
                     slice_degree, top_edge_P_on_product)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

# rank-2 table replay: p=3 up to n=60, plus the single p=13 low-degree case
RANK2_RANGE = {3: range(2, 61, 2), 13: (22,)}


@dataclass(frozen=True)
class Fixture:
    id: str
    kind: str
    inputs: dict
    expected: dict
    source: str


@dataclass
class FixtureResult:
    id: str
    status: str
    seconds: float = 0.0
    detail: str = ""
    actual: dict = field(default_factory=dict)


@dataclass
class RunReport:
    results: list[FixtureResult]

    @property
    def failed(self) -> list[FixtureResult]:
        return [r for r in self.results if r.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for r in self.results:
            out[r.status] += 1
        return out


def _embedded() -> list[Fixture]:
    raw = json.loads(resources.files("oddhit").joinpath("data/fixtures.json").read_text("utf-8"))
    return [Fixture(**f) for f in raw["fixtures"]]


def _rank2_table() -> list[Fixture]:
    out = []
    for p, ns in RANK2_RANGE.items():
        for n in ns:
            c = rank2_expected(n, p)
            if c is None:
                continue
            src = f"rank-2 table, {c.family} {c.params}"
            inputs = dict(n=n, p=p)
            out.append(Fixture(f"rank2-dim-{p}-{n}", "rank2_dim", inputs, dict(dim=c.dim), src))
            out.append(Fixture(f"rank2-inv-{p}-{n}", "rank2_inv", inputs, dict(dimension=c.invariants), src))
    return out


def all_fixtures() -> list[Fixture]:
    return sorted(_embedded() + _rank2_table(), key=lambda f: f.id)


def select(pattern: str | None = None) -> list[Fixture]:
    fx = all_fixtures()
    if not pattern:
        return fx
    if not any(ch in pattern for ch in "*?["):
        exact = [f for f in fx if f.id == pattern]
        if exact:
            return exact
        pattern = f"*{pattern}*"
    return [f for f in fx if fnmatch.fnmatchcase(f.id, pattern)]


@lru_cache(maxsize=None)
def _blocks(h, p, m, mode="edge_sum", order="balanced"):
    return build_quotient_blocks(h, p, m, mode, order)


@lru_cache(maxsize=None)
def _inv(h, p, m, twist, mode="edge_sum", order="balanced"):
    return invariants_of(_blocks(h, p, m, mode, order), twist)


def normalize_vector(vec: dict, p: int) -> dict:
    """Drop zeros and scale so the first nonzero coordinate (in key order) is 1."""
    vec = {tuple(k): c % p for k, c in sorted(vec.items()) if c % p}
    if not vec:
        return {}
    inv = pow(next(iter(vec.values())), -1, p)
    return {k: c * inv % p for k, c in vec.items()}


def same_up_to_scalar(a: dict, b: dict, p: int) -> bool:
    """Sparse vectors equal up to one global nonzero scalar."""
    return normalize_vector(a, p) == normalize_vector(b, p)


def _check(f: Fixture) -> tuple[str, str, dict]:
    I, E = f.inputs, f.expected
    if f.kind == "basis":
        B = _blocks(I["h"], I["p"], I["m"], I["mode"], I["order"]).basis
        act = dict(dim=B.dim, ambient=B.ambient, rank=B.rank, representatives=[list(e) for e in B.monomials])
        return (PASS if act == E else FAIL), "", act
    if f.kind == "invariants":
        S = _inv(I["h"], I["p"], I["m"], "none", I["mode"], I["order"])
        act = dict(dimension=S.dimension)
        return (PASS if act == E else FAIL), "", act
    if f.kind == "slice":
        sd = slice_degree(I["n"], I["h"])
        S = _inv(I["h"], I["p"], sd.m, "det_inverse", I["mode"], I["order"])
        act = dict(dim=S.blocks.dim, dimension=S.dimension)
        ok = act["dim"] == E["dim"] and act["dimension"] == E["dimension"]
        if "vector" in E:
            got = S.support(0) if S.dimension else {}
            act["vector"] = [[list(k), c] for k, c in got.items()]
            want = {tuple(k): c for k, c in E["vector"]}
            ok = ok and same_up_to_scalar(got, want, I["p"])
        return (PASS if ok else FAIL), "", act
    if f.kind == "mode":
        d, _, r = cohit_dimension(I["h"], I["p"], I["m"], I["mode"])
        act = dict(rank=r, dim=d)
        return (PASS if act == E else FAIL), "", act
    if f.kind == "digits":
        levels = [dict(s=L.s, d=L.digit, pivots=[list(x) for x in L.pivots], kept=[list(x) for x in L.kept])
                  for L in digit_report(I["h"], I["p"], I["m"])]
        act = dict(levels=levels)
        return (PASS if act == E else FAIL), "", act
    if f.kind == "lemma":
        if "X" in I:
            ok = top_edge_P_on_product(I["X"], I["Y"], I["p"], I["s"])[0]
        else:
            ok = graded_additivity_test(I["A"], I["B"], I["p"], I["s1"], I["s2"])[0]
        act = dict(ok=ok)
        return (PASS if act == E else FAIL), ("OK" if ok else "FAIL"), act
    if f.kind in ("rank2_dim", "rank2_inv"):
        n, p = I["n"], I["p"]
        want = E["dim"] if f.kind == "rank2_dim" else E["dimension"]
        if want == UNSPECIFIED:
            return SKIPPED, "table condition not fully specified", {}
        m = slice_degree(n, 2).m
        if f.kind == "rank2_dim":
            act = dict(dim=cohit_dimension(2, p, m)[0])
            return (PASS if act["dim"] == want else FAIL), "", act
        act = dict(dimension=_inv(2, p, m, "det_inverse").dimension)
        return (PASS if act["dimension"] == want else FAIL), "", act
    raise ValueError(f"unknown fixture kind {f.kind!r}")


def run_fixture(f: Fixture) -> FixtureResult:
    t0 = time.perf_counter()
    try:
        status, detail, act = _check(f)
    except Exception as exc:  # a crash is a failure of that fixture, not of the run
        status, detail, act = FAIL, f"{type(exc).__name__}: {exc}", {}
    if status == FAIL and not detail:
        detail = f"expected {f.expected}, got {act}"
    return FixtureResult(f.id, status, time.perf_counter() - t0, detail, act)


def run(pattern: str | None = None) -> RunReport:
    return RunReport([run_fixture(f) for f in select(pattern)])
