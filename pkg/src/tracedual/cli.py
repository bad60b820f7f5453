"""Command-line front end: ``tracedual dual|canonicalize|sweep``.

Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .codespace import NotAModule, SpecViolation, canonical_decomposition
from .dual import DualReport, trace_dual
from .gf import FieldError, make_field
from .polyring import Poly
from .skewring import Form
from .specfile import (
    SpecFileError,
    format_poly,
    format_spec,
    parse_generators,
    parse_q,
    parse_spec,
)
from .sweep import default_seed, run_sweep, write_csv

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

REPORT_KEYS = ("h", "k", "cprime", "dprime", "dual_gen1_c", "dual_gen1_d", "dual_gen2_c",
               "dual_gen2_d", "dim_code", "dim_dual", "verified")


def _coeff_list(poly: Poly | None):
    if poly is None:
        return None
    F = poly.field
    if F.e == 1:
        return list(poly.coeffs)
    return [F.digits(c) for c in poly.coeffs]


def report_dict(rep: DualReport) -> dict:
    """JSON-ready view of a report: polynomials as ascending coefficient lists."""
    return {
        "construction": rep.construction,
        "form": rep.form.value,
        "n": rep.spec.n,
        "variant": rep.spec.variant.value,
        "q": rep.spec.field.describe_q(),
        "h": _coeff_list(rep.h),
        "k": _coeff_list(rep.k),
        "cprime": _coeff_list(rep.cprime),
        "dprime": _coeff_list(rep.dprime),
        "dual_gen1_c": _coeff_list(rep.gen1.c),
        "dual_gen1_d": _coeff_list(rep.gen1.d),
        "dual_gen2_c": _coeff_list(rep.gen2.c),
        "dual_gen2_d": _coeff_list(rep.gen2.d),
        "dim_code": rep.dim_code,
        "dim_dual": rep.dim_dual,
        "verified": rep.verified,
    }


def format_report(rep: DualReport) -> str:
    polys = {"h": rep.h, "k": rep.k, "cprime": rep.cprime, "dprime": rep.dprime,
             "dual_gen1_c": rep.gen1.c, "dual_gen1_d": rep.gen1.d,
             "dual_gen2_c": rep.gen2.c, "dual_gen2_d": rep.gen2.d}
    lines = [f"construction: {rep.construction}", f"form: {rep.form.value}"]
    for key in REPORT_KEYS:
        if key in polys:
            val = polys[key]
            lines.append(f"{key}: {'none' if val is None else format_poly(val)}")
    lines.append(f"dim_code: {rep.dim_code}")
    lines.append(f"dim_dual: {rep.dim_dual}")
    v = rep.verified
    lines.append(f"verified: {'skipped' if v is None else str(v).lower()}")
    return "\n".join(lines) + "\n"


def dumps_report(rep: DualReport) -> str:
    return json.dumps(report_dict(rep), sort_keys=True, indent=2) + "\n"


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")


def cmd_dual(args) -> int:
    try:
        parsed = parse_spec(_read(args.spec))
    except (OSError, SpecFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    form = Form.parse(args.form) if args.form else (parsed.form or Form.TE)
    try:
        rep = trace_dual(parsed.spec, form, verify=not args.no_verify)
    except SpecViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(dumps_report(rep) if args.json else format_report(rep))
    if rep.verification is not None and not rep.verification.equal:
        print(rep.verification.summary(), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_canonicalize(args) -> int:
    try:
        parsed = parse_generators(_read(args.generators))
        spec = canonical_decomposition(parsed.generators, parsed.variant, parsed.field, parsed.n)
    except (OSError, SpecFileError, NotAModule, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(format_spec(spec))
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        p, e = parse_q(args.q)
        mod = [int(c) for c in args.modulus.split(",")] if args.modulus else None
        field = make_field(p, e, mod)
        if not 1 <= args.nmax <= 64:
            raise ValueError(f"--nmax must be between 1 and 64, got {args.nmax}")
    except (ValueError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    forms = (Form.TE, Form.TH) if args.form == "both" else (Form.parse(args.form),)
    seed = default_seed() if args.seed is None else args.seed
    rows = run_sweep(field, args.nmax, args.variant, forms, seed, args.qcount)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            ok, bad = write_csv(rows, fh)
    else:
        ok = bad = 0
        for row in rows:
            ok += row.verified
            bad += not row.verified
    print(f"q={field.describe_q()} variant={args.variant} form={args.form} nmax={args.nmax} "
          f"seed={seed}: {ok} verified, {bad} failed")
    return EXIT_VERIFY if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tracedual",
                                 description="Trace duals of additive cyclic and skew cyclic codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dual", help="closed-form dual of the code in a spec file")
    d.add_argument("spec", help="spec file ('-' for stdin)")
    d.add_argument("--form", choices=("te", "th"), help="trace Euclidean or trace Hermitian "
                   "(default: the file's form key, else te)")
    d.add_argument("--no-verify", action="store_true", help="skip the brute-force check")
    d.add_argument("--json", action="store_true", help="machine-readable output")
    d.set_defaults(func=cmd_dual)

    c = sub.add_parser("canonicalize", help="recover (w, l, f, g, qpoly) from generators")
    c.add_argument("generators", help="generator file ('-' for stdin)")
    c.set_defaults(func=cmd_canonicalize)

    s = sub.add_parser("sweep", help="seeded oracle sweep over all factorizations")
    s.add_argument("--q", required=True, help="field size as p or p^e")
    s.add_argument("--modulus", help="base modulus for e > 1, ascending coefficients")
    s.add_argument("--nmax", type=int, required=True)
    s.add_argument("--variant", choices=("cyclic", "skew"), required=True)
    s.add_argument("--form", choices=("te", "th", "both"), default="te")
    s.add_argument("--seed", type=int, default=None,
                   help="qpoly seed (default: $TRACEDUAL_SEED, else a fixed constant)")
    s.add_argument("--qcount", type=int, default=5, help="qpoly choices per factorization")
    s.add_argument("--csv", help="write one row per spec to this path")
    s.set_defaults(func=cmd_sweep)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad flags; input errors are 1 here
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    return args.func(args)


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
