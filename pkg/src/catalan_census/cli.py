"""Command-line entry point: ``catalan-census {classify,census,density,verify}``.

Rows go to stdout as CSV or JSON lines; diagnostics go to stderr.
Ranges are half-open: ``0..8`` means n = 0, ..., 7.
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from catalan_census import census, density, oracle
from catalan_census.classifier import (
    catalan_mod3,
    classify_two_adic,
    divisible_by_2k,
    is_half_residue_2k,
)

MAX_RANGE_END = 2**62
SIG_DIGITS = 12

_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


class UsageError(Exception):
    pass


def parse_range(text: str) -> Tuple[int, int]:
    m = _RANGE.match(text)
    if not m:
        raise UsageError(f"malformed range {text!r}; expected a..b")
    a, b = int(m.group(1)), int(m.group(2))
    if a >= b:
        raise UsageError(f"empty range {text!r}; need a < b")
    if b > MAX_RANGE_END:
        raise UsageError(f"range end {b} exceeds 2^62")
    return a, b


def parse_n_values(text: str) -> List[int]:
    """``pow2:a..b``, ``pow3:a..b`` or a comma-separated list of integers."""
    text = text.strip()
    if text.startswith(("pow2:", "pow3:")):
        base = 2 if text[3] == "2" else 3
        a, b = parse_range(text[5:])
        return [base**e for e in range(a, b)]
    values = []
    for part in text.split(","):
        part = part.strip()
        if not re.fullmatch(r"\d+", part):
            raise UsageError(f"malformed N list {text!r}")
        values.append(int(part))
    if any(v < 1 for v in values):
        raise UsageError("every N must be >= 1")
    return values


def format_decimal(q: Fraction, sig: int = SIG_DIGITS) -> str:
    """Render ``q`` with ``sig`` significant digits (zero as 0.000000000000)."""
    if q == 0:
        return "0." + "0" * sig
    with localcontext() as ctx:
        ctx.prec = sig
        d = Decimal(q.numerator) / Decimal(q.denominator)
        # pad with trailing zeros to exactly `sig` digits
        ctx.prec = sig + 2
        d = d.quantize(Decimal(1).scaleb(d.adjusted() - sig + 1))
    return f"{d:f}"


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit(rows: Iterable[Dict[str, object]], columns: Sequence[str], fmt: str, out=None) -> int:
    out = out or sys.stdout
    n = 0
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row[c]) for c in columns])
            n += 1
    else:
        for row in rows:
            out.write(json.dumps({c: row[c] for c in columns}) + "\n")
            n += 1
    return n


def cmd_classify(args) -> int:
    a, b = parse_range(args.range)
    if b - a > args.max_n_guard:
        raise UsageError(f"range length {b - a} exceeds --max-n-guard {args.max_n_guard}")
    columns = ["n", "alpha", "valuation", "mod3_residue", "in_tstar_shifted"]
    if args.k is not None:
        columns += ["divisible_2k", "half_residue_2k"]

    def rows():
        for n in range(a, b):
            two = classify_two_adic(n)
            three = catalan_mod3(n)
            row = {
                "n": n,
                "alpha": two.alpha,
                "valuation": two.valuation,
                "mod3_residue": three.residue,
                "in_tstar_shifted": three.in_shifted_tstar,
            }
            if args.k is not None:
                row["divisible_2k"] = divisible_by_2k(n, args.k)
                row["half_residue_2k"] = is_half_residue_2k(n, args.k)
            yield row

    emit(rows(), columns, args.format)
    return 0


def cmd_census(args) -> int:
    t = args.t
    if t < 1:
        raise UsageError("--t must be >= 1")
    if args.enumerate and t > args.max_t:
        raise UsageError(f"--t {t} exceeds enumeration guard --max-t {args.max_t}")
    k_lo, k_hi = parse_range(args.k) if args.k else (0, t + 1)

    columns = ["t", "k", "formula_valuation", "formula_divisible", "formula_half"]
    enumerated: Dict[int, int] = {}
    if args.enumerate:
        columns += ["enumerated_valuation", "agrees"]
        enumerated = census.enumerate_valuation_census(t, args.max_t, workers=args.threads)

    rows = []
    for k in range(k_lo, k_hi):
        row = {
            "t": t,
            "k": k,
            "formula_valuation": census.count_valuation_formula(t, k),
            "formula_divisible": census.count_divisible_formula(t, k) if k >= 1 else None,
            "formula_half": census.count_half_residue_formula(t, k) if k >= 1 else None,
        }
        if args.enumerate:
            row["enumerated_valuation"] = enumerated.get(k, 0)
            row["agrees"] = row["formula_valuation"] == row["enumerated_valuation"]
        rows.append(row)
    emit(rows, columns, args.format)

    if args.enumerate:
        bad = [r["k"] for r in rows if not r["agrees"]]
        print(
            f"census t={t}: {len(bad)} of {len(rows)} rows disagree with enumeration"
            + (f" (k={','.join(map(str, bad))})" if bad else ""),
            file=sys.stderr,
        )
    return 0


def cmd_density(args) -> int:
    N_values = parse_n_values(args.N)
    if args.mod3 == (args.k is not None):
        raise UsageError("give exactly one of --k or --mod3")
    if args.k is not None and args.k < 1:
        raise UsageError("--k must be >= 1")
    if max(N_values) > args.max_n_guard:
        raise UsageError(f"N={max(N_values)} exceeds --max-n-guard {args.max_n_guard}")
    if args.mod3:
        table = density.density_sweep_mod3(N_values, args.max_n_guard, args.threads)
    else:
        table = density.density_sweep_mod2k(N_values, args.k, args.max_n_guard, args.threads)
    columns = ["N", "modulus", "count", "density", "lower_bound", "density_exact", "lower_bound_exact"]
    rows = (
        {
            "N": r.N,
            "modulus": r.modulus_value,
            "count": r.divisible_count,
            "density": format_decimal(r.empirical_density),
            "lower_bound": format_decimal(r.analytic_lower_bound),
            "density_exact": format_fraction(r.empirical_density),
            "lower_bound_exact": format_fraction(r.analytic_lower_bound),
        }
        for r in table
    )
    emit(rows, columns, args.format)
    return 0


def cmd_verify(args) -> int:
    if args.n_max < 0 or args.n_max > args.oracle_bound:
        raise UsageError(f"--n-max {args.n_max} exceeds oracle bound {args.oracle_bound}")
    report = oracle.verify_range(args.n_max, args.k_max, args.oracle_bound, workers=args.threads)
    row = {
        "n_checked": report.n_checked,
        "checks": report.checks,
        "mismatches": len(report.mismatches),
    }
    emit([row], ["n_checked", "checks", "mismatches"], args.format)
    for n, what in report.mismatches[:20]:
        print(f"mismatch at n={n}: {what}", file=sys.stderr)
    return 0 if report.ok else 1


def _int_expr(text: str) -> int:
    """Accept plain integers plus ``a^b`` / ``a**b`` for convenience."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:(?:\^|\*\*)\s*(\d+))?\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    base = int(m.group(1))
    return base ** int(m.group(2)) if m.group(2) else base


def _add_global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    # Subcommands repeat the flags with SUPPRESS so they don't reset a value given earlier.
    def default(v):
        return argparse.SUPPRESS if suppress else v

    p.add_argument("--format", choices=["csv", "json-lines"], default=default("csv"))
    p.add_argument("--threads", type=int, default=default(1))
    p.add_argument("--max-n-guard", type=_int_expr, default=default(density.DEFAULT_MAX_N))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)

    parser = argparse.ArgumentParser(
        prog="catalan-census",
        description="Catalan numbers modulo 2^k and 3 via digit arithmetic.",
    )
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="per-n valuation and mod-3 residue")
    p.add_argument("range", help="half-open range a..b")
    p.add_argument("--k", type=int, help="also report 2^k divisibility / half-residue")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", parents=[common], help="closed-form counts below 2^t")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", help="half-open k range (default 0..t+1)")
    p.add_argument("--enumerate", action="store_true", help="add enumerated counts")
    p.add_argument("--max-t", type=int, default=census.DEFAULT_MAX_T)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("density", parents=[common], help="density sweep with lower bounds")
    p.add_argument("N", help="comma list, pow2:a..b or pow3:a..b")
    p.add_argument("--k", type=int)
    p.add_argument("--mod3", action="store_true")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", parents=[common], help="check classifier against exact C_n")
    p.add_argument("--n-max", type=_int_expr, required=True)
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--oracle-bound", type=_int_expr, default=oracle.DEFAULT_ORACLE_BOUND)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except (UsageError, census.EnumerationGuardError, density.DensityGuardError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
