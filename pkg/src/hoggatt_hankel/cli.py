"""Command-line surface: triangles, determinant sequences, sweeps, gamma vectors.

Subcommands:

* ``triangle`` -- emit rows of an r-Hoggatt triangle as CSV or JSON;
* ``hankel``   -- emit d_k(s, m, r) over a range of k;
* ``verify``   -- run identity checks over a parameter grid and write a
  report (exit 0 if everything passed, 1 on any failure or mismatch,
  2 on bad configuration);
* ``gamma``    -- decompose a palindromic coefficient list into its
  gamma vector and report positivity.

All values are exact; in JSON output integers and rationals are rendered
as decimal/fraction strings so nothing is ever squeezed through a float.
Range flags accept ``lo:hi`` (inclusive), a single value, or a comma list.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .conjectures import CHECK_IDS, DEFAULT_BUDGET, DEFAULT_MARGIN, GridSpec, sweep
from .exact import DomainError
from .hankel import hankel_determinant
from .hoggatt import triangle
from .polyring import NotPalindromic, Poly, gamma_decompose
from .reports import reports_to_csv, reports_to_json, summarize

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_ARGS = 2


@dataclass(frozen=True)
class SweepConfig:
    """Validated verify-run configuration: grid, checks, and output."""

    grid: GridSpec
    checks: tuple[str, ...]
    out: str | None
    fmt: str

    def as_dict(self) -> dict:
        return {
            "checks": list(self.checks),
            "s": list(self.grid.s_values),
            "m": list(self.grid.m_values),
            "r": list(self.grid.r_values),
            "k": list(self.grid.k_values),
            "margin": self.grid.margin,
            "budget": self.grid.budget,
            "format": self.fmt,
        }


def parse_range(text: str) -> tuple[int, ...]:
    """Parse 'lo:hi' (inclusive), 'a,b,c', or a single integer."""
    text = text.strip()
    if ":" in text:
        lo_text, hi_text = text.split(":", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return tuple(range(lo, hi + 1))
    if "," in text:
        return tuple(sorted({int(part) for part in text.split(",") if part.strip()}))
    return (int(text),)


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _triangle_csv(rows: list[list[int]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n"] + [f"k{j}" for j in range(len(rows))])
    for n, row in enumerate(rows):
        writer.writerow([n] + [str(v) for v in row])
    return buf.getvalue()


def _triangle_json(r: int, rows: list[list[int]]) -> str:
    doc = {"r": r, "rows": [[str(v) for v in row] for row in rows]}
    return json.dumps(doc, indent=2) + "\n"


def cmd_triangle(args: argparse.Namespace) -> int:
    rows = triangle(args.r, args.rows)
    if args.format == "csv":
        text = _triangle_csv(rows)
    else:
        text = _triangle_json(args.r, rows)
    _write_output(text, args.out)
    return EXIT_OK


def cmd_hankel(args: argparse.Namespace) -> int:
    ks = parse_range(args.k_range)
    values = [(k, hankel_determinant(k, args.m, args.r, args.s)) for k in ks]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "d"])
        for k, v in values:
            writer.writerow([k, str(v)])
        text = buf.getvalue()
    else:
        doc = {
            "s": args.s,
            "m": args.m,
            "r": args.r,
            "values": [{"k": k, "d": str(v)} for k, v in values],
        }
        text = json.dumps(doc, indent=2) + "\n"
    _write_output(text, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    unknown = [c for c in checks if c not in CHECK_IDS]
    if unknown:
        print(f"unknown checks: {', '.join(unknown)}", file=sys.stderr)
        print(f"known checks: {', '.join(CHECK_IDS)}", file=sys.stderr)
        return EXIT_BAD_ARGS
    try:
        grid = GridSpec.make(
            s_values=parse_range(args.s),
            m_values=parse_range(args.m),
            r_values=parse_range(args.r),
            k_values=parse_range(args.k_range),
            margin=args.margin,
            budget=args.budget,
        )
        config = SweepConfig(grid=grid, checks=checks, out=args.out, fmt=args.format)
    except (ValueError, DomainError) as exc:
        print(f"bad configuration: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    reports = sweep(checks, grid)
    if config.fmt == "csv":
        text = reports_to_csv(reports)
    else:
        text = reports_to_json(reports, config.as_dict())
    _write_output(text, config.out)
    counts = summarize(reports)
    print(
        f"{len(reports)} checks: {counts['pass']} pass, {counts['fail']} fail, "
        f"{counts['mismatch']} mismatch, {counts['skipped']} skipped",
        file=sys.stderr,
    )
    failed = counts["fail"] + counts["mismatch"]
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_gamma(args: argparse.Namespace) -> int:
    try:
        coeffs = [Fraction(part.strip()) for part in args.coeffs.split(",") if part.strip()]
        if not coeffs:
            raise ValueError("empty coefficient list")
    except (ValueError, ZeroDivisionError) as exc:
        print(f"malformed coefficients: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    poly = Poly(coeffs)
    n = args.n if args.n is not None else len(coeffs) - 1
    if not poly.is_zero() and n < poly.degree:
        print(f"center {n} is below the degree {poly.degree}", file=sys.stderr)
        return EXIT_BAD_ARGS
    try:
        gv = gamma_decompose(poly, n)
    except NotPalindromic:
        print(f"not palindromic around {n}/2; no gamma vector exists")
        return EXIT_OK
    verdict = "gamma-positive" if gv.is_positive else "not gamma-positive"
    print(",".join(str(g) for g in gv.gammas) + f"; {verdict}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hoggatt-hankel",
        description=(
            "Exact Hoggatt triangles, Hankel determinants of binomial columns, "
            "Narayana/Catalan numbers, and identity verification sweeps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tri = sub.add_parser("triangle", help="emit rows of an r-Hoggatt triangle")
    p_tri.add_argument("--r", type=int, required=True, help="triangle dimension (>= 1)")
    p_tri.add_argument("--rows", type=int, default=8, help="number of rows (default 8)")
    p_tri.add_argument("--format", choices=("csv", "json"), default="csv")
    p_tri.add_argument("--out", default=None, help="output path (default stdout)")
    p_tri.set_defaults(func=cmd_triangle)

    p_han = sub.add_parser("hankel", help="emit d_k(s, m, r) over a k range")
    p_han.add_argument("--s", type=int, default=1, help="entry dimension (1 = binomials)")
    p_han.add_argument("--m", type=int, required=True, help="column index")
    p_han.add_argument("--r", type=int, required=True, help="matrix size")
    p_han.add_argument("--k-range", default="0:6", help="shift range, e.g. 0:6")
    p_han.add_argument("--format", choices=("csv", "json"), default="csv")
    p_han.add_argument("--out", default=None)
    p_han.set_defaults(func=cmd_hankel)

    p_ver = sub.add_parser("verify", help="run identity checks over a grid")
    p_ver.add_argument(
        "--checks",
        default=",".join(CHECK_IDS),
        help=f"comma list from: {', '.join(CHECK_IDS)} (default: all)",
    )
    p_ver.add_argument("--s", default="1:3", help="entry-dimension range")
    p_ver.add_argument("--m", default="0:8", help="column range")
    p_ver.add_argument("--r", default="1:4", help="size/dimension range")
    p_ver.add_argument("--k-range", default="0:10", help="shift range")
    p_ver.add_argument("--margin", type=int, default=DEFAULT_MARGIN,
                       help="series certification margin (>= 1)")
    p_ver.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="cap on the determinant polynomial degree per point")
    p_ver.add_argument("--format", choices=("json", "csv"), default="json")
    p_ver.add_argument("--out", default=None, help="report path (default stdout)")
    p_ver.set_defaults(func=cmd_verify)

    p_gam = sub.add_parser("gamma", help="gamma-decompose a palindromic polynomial")
    p_gam.add_argument("--coeffs", required=True,
                       help="comma list of rational coefficients, lowest power first")
    p_gam.add_argument("--n", type=int, default=None,
                       help="center degree (default: length of list minus 1)")
    p_gam.set_defaults(func=cmd_gamma)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS


if __name__ == "__main__":
    sys.exit(main())
