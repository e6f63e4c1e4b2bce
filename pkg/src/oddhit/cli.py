"""Command-line interface: ``oddhit {basis,invariants,slice,digit-report,verify}``."""
from __future__ import annotations

import argparse
import json
import sys

from .arith import PrimeError, check_prime
from .cohit import build_quotient_blocks
from .glinv import invariants_of
from .monomials import exterior_symbol, monomial_str
from .report import ParityError, digit_report, slice_degree, triangularity_report
from .steenrod import normalize_mode

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

MODE_CHOICES = ("graded", "edge-sum", "full")
ORDER_CHOICES = ("lex", "antilex", "balanced")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- rendering helpers

def _short(e) -> str:
    return "[" + ", ".join(str(a) for a in e) + "]"


def _render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2)


def parse_json(text: str) -> dict:
    return json.loads(text)


def _positive(name):
    def conv(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {s!r}")
        if v < 0:
            raise argparse.ArgumentTypeError(f"{name} must be nonnegative, got {v}")
        return v
    return conv


def _check_common(args) -> None:
    try:
        check_prime(args.p)
    except PrimeError as exc:
        raise UsageError(str(exc)) from exc
    if args.h < 1:
        raise UsageError(f"--h must be at least 1, got {args.h}")


# ---------------------------------------------------------------- commands

def _basis_doc(blocks, args, limit) -> dict:
    B = blocks.basis
    return {
        "schema": SCHEMA, "command": "basis", "h": B.h, "p": B.p, "m": B.m,
        "mode": B.mode, "order": B.order, "dim": B.dim, "ambient": B.ambient, "rank": B.rank,
        "representatives": [list(e) for e in B.monomials[:limit]],
    }


def cmd_basis(args, out) -> int:
    _check_common(args)
    mode = normalize_mode(args.mode)
    blocks = build_quotient_blocks(args.h, args.p, args.m, mode, args.order)
    B = blocks.basis
    limit = B.dim if args.limit is None else min(args.limit, B.dim)
    tri = triangularity_report(args.h, args.p, args.m, mode) if args.assert_triangular else None
    if args.format == "json":
        doc = _basis_doc(blocks, args, limit)
        if tri is not None:
            doc["triangular"] = {"ok": tri.ok, "levels": {str(s): list(v) for s, v in tri.levels.items()}}
        out.write(_render_json(doc) + "\n")
    else:
        out.write(f"Q(P_{B.h})_m over F_{B.p}: dim = {B.dim} (ambient {B.ambient}, rank(Im) {B.rank})\n")
        if B.dim == 0:
            out.write("  Basis: [empty]\n")
        else:
            out.write(f"  Admissible monomial basis (order={B.order}; showing {limit} of {B.dim}):\n")
            for t, e in enumerate(B.monomials[:limit], 1):
                out.write(f"    e_{t} := {_short(e)}   ( {monomial_str(e)} )\n")
        if tri is not None:
            for s, (r, c) in tri.levels.items():
                out.write(f"  level s={s}: rank {r}, distinct Cartan-lex leading rows {c}\n")
            out.write(f"  triangular: {'OK' if tri.ok else 'FAIL'}\n")
    return EXIT_FAIL if tri is not None and not tri.ok else EXIT_OK


def _inv_terms(vec, symbol: str) -> str:
    return " + ".join(f"{int(c)}*{symbol}_{j + 1}" for j, c in enumerate(vec) if c)


def cmd_invariants(args, out) -> int:
    _check_common(args)
    blocks = build_quotient_blocks(args.h, args.p, args.m, normalize_mode(args.mode), args.order)
    S = invariants_of(blocks, "none")
    reps = S.representatives
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "invariants", "h": args.h, "p": args.p, "m": args.m,
               "mode": blocks.basis.mode, "order": args.order, "dim": blocks.dim, "dimension": S.dimension,
               "vector": None, "support": []}
        if S.dimension:
            doc["vector"] = [int(c) for c in S.kernel_vectors[0]]
            doc["support"] = [[list(e), c] for e, c in S.support(0).items()]
        out.write(_render_json(doc) + "\n")
        return EXIT_OK
    out.write(f">> Invariants in Q(P_{args.h})_m over F_{args.p} (m={args.m})\n")
    if blocks.dim == 0:
        out.write("    Quotient is zero; invariants dim = 0.\n")
        return EXIT_OK
    out.write(f"    dim Invariants = {S.dimension}\n")
    if S.dimension:
        v = S.kernel_vectors[0]
        out.write(f"    INV = {_inv_terms(v, 'e')}\n")
        for j, c in enumerate(v):
            if c:
                out.write(f"      e_{j + 1} := {_short(reps[j])}   ( {monomial_str(reps[j])} )\n")
    return EXIT_OK


def cmd_slice(args, out) -> int:
    _check_common(args)
    try:
        sd = slice_degree(args.n, args.h)
    except ParityError as exc:
        raise UsageError(str(exc)) from exc
    blocks = build_quotient_blocks(args.h, args.p, sd.m, normalize_mode(args.mode), args.order)
    B = blocks.basis
    S = invariants_of(blocks, "det_inverse")
    limit = B.dim if args.limit is None else min(args.limit, B.dim)
    U = exterior_symbol(args.h)
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "slice", "n": sd.n, "h": sd.h, "p": args.p, "m": sd.m,
               "mode": B.mode, "order": B.order, "exterior": U, "dim": B.dim, "ambient": B.ambient,
               "rank": B.rank, "basis": [list(e) for e in B.monomials[:limit]],
               "dimension": S.dimension, "vector": None, "support": []}
        if S.dimension:
            doc["vector"] = [int(c) for c in S.kernel_vectors[0]]
            doc["support"] = [[list(e), c] for e, c in S.support(0).items()]
        out.write(_render_json(doc) + "\n")
        return EXIT_OK
    h, n = sd.h, sd.n
    out.write(f"== QH^{n}({h})^(Lambda^{h}) over F_{args.p} (top exterior) with n=2m+h, m={sd.m} ==\n")
    out.write(f"    dim QH^{n}({h})^(Lambda^{h}) = {B.dim}   (ambient {B.ambient}, rank(Im) {B.rank})\n")
    if B.dim == 0:
        out.write(f"Invariant subspace in QH^{n}({h})^(Lambda^{h}): dim = 0\n")
        return EXIT_OK
    out.write(f"  Admissible basis of the slice (write U:={U}). Showing {limit} of {B.dim}:\n")
    for t, e in enumerate(B.monomials[:limit], 1):
        out.write(f"    E_{t} := [({monomial_str(e, sep='*')})U]\n")
    out.write(f"  Invariant subspace in QH^{n}({h})^(Lambda^{h}): dim = {S.dimension}\n")
    if S.dimension:
        out.write(f"    INV = {_inv_terms(S.kernel_vectors[0], 'E')}\n")
    return EXIT_OK


def cmd_digit_report(args, out) -> int:
    _check_common(args)
    levels = digit_report(args.h, args.p, args.m)
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "digit-report", "h": args.h, "p": args.p, "m": args.m,
               "levels": [{"s": L.s, "d": L.digit, "pivots": [list(x) for x in L.pivots],
                           "kept": [list(x) for x in L.kept]} for L in levels]}
        out.write(_render_json(doc) + "\n")
        return EXIT_OK
    out.write(f"p={args.p}, h={args.h}, m={args.m}\n")
    for L in levels:
        out.write(f" Level s={L.s}: d_s={L.digit}\n")
        out.write(f"   Pure pivot signatures (annihilated by H_s): {L.pivots}\n")
        out.write(f"   Non-pivot signatures kept (count={len(L.kept)}): {L.kept}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from .fixtures import FAIL, run

    report = run(args.filter)
    if not report.results:
        raise UsageError(f"no fixture matches {args.filter!r}")
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "verify", "filter": args.filter, "counts": report.counts(),
               "results": [{"id": r.id, "status": r.status, "seconds": round(r.seconds, 4), "detail": r.detail}
                           for r in report.results]}
        out.write(_render_json(doc) + "\n")
    else:
        for r in report.results:
            tag = r.status.upper()
            extra = f"  {r.detail}" if r.detail else ""
            out.write(f"{tag:8s} {r.id:28s} {r.seconds:7.3f}s{extra}\n")
        c = report.counts()
        out.write(f"{c['pass']} passed, {c[FAIL]} failed, {c['skipped']} skipped\n")
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oddhit", description="Cohit bases and GL invariants over odd primes.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, degree: str):
        sp.add_argument("--h", type=_positive("--h"), required=True, help="number of variables")
        sp.add_argument("--p", type=_positive("--p"), required=True, help="odd prime")
        if degree == "m":
            sp.add_argument("--m", type=_positive("--m"), required=True, help="polynomial degree")
        else:
            sp.add_argument("--n", type=_positive("--n"), required=True, help="total degree, n = 2m + h")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    def algebra(sp):
        sp.add_argument("--mode", choices=MODE_CHOICES, default="edge-sum")
        sp.add_argument("--order", choices=ORDER_CHOICES, default="balanced")

    b = sub.add_parser("basis", help="cohit dimension and admissible monomial basis")
    common(b, "m")
    algebra(b)
    b.add_argument("--limit", type=_positive("--limit"), default=None)
    b.add_argument("--assert-triangular", action="store_true",
                   help="check Cartan-lex triangularity of each level block; exit 1 if it fails")
    b.set_defaults(func=cmd_basis)

    i = sub.add_parser("invariants", help="GL(h, F_p)-invariants of the cohit quotient")
    common(i, "m")
    algebra(i)
    i.set_defaults(func=cmd_invariants)

    s = sub.add_parser("slice", help="top-exterior slice with the determinant twist")
    common(s, "n")
    algebra(s)
    s.add_argument("--limit", type=_positive("--limit"), default=None)
    s.set_defaults(func=cmd_slice)

    d = sub.add_parser("digit-report", help="pivot and kept digit signatures per level")
    common(d, "m")
    d.set_defaults(func=cmd_digit_report)

    v = sub.add_parser("verify", help="replay the embedded reference fixtures")
    v.add_argument("--filter", default=None, help="fixture id or glob, e.g. 'lemma-*'")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"oddhit {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
