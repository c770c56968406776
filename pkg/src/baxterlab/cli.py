"""Command-line front end emitting machine-readable verification reports.

Every subcommand produces a report with the same top-level shape —
``{"command", "params", "pass", "rows"}`` — rendered as JSON (default),
CSV (header plus data rows), or plain text.  Exact rationals cross the
boundary as strings like ``"-22/3"`` so downstream tools can re-verify
without rounding; double-precision values are rendered with 17 significant
digits.  Exit status: 0 when all requested verifications pass, 1 on any
verification failure, 2 on usage errors.

The environment variable ``PREC_ASYM_THREADS`` (a positive integer) caps
the number of worker threads used for independent per-index checks; the
default of 1 runs them sequentially.  Output order is independent of the
thread count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Sequence

from .asymptotics import expand_branch
from .exact import baxter_number, baxter_polynomial, refined_baxter_row
from .limitstats import limit_ratio_report, normality_report
from .permoracle import MAX_DEFAULT_LENGTH, MAX_OPT_IN_LENGTH, enumerate_counts
from .realroots import check_baxter_real_rooted
from .recurrences import (
    MIXED_IDENTITIES,
    SeedMismatchError,
    annihilator_operators,
    apply_ore_operator,
    builtin_recurrence,
    franel_number,
    verify_mixed_identity,
    verify_recurrence,
)

RECURRENCE_NAMES = ("baxter", "d1", "d2", "franel")

THREADS_ENV_VAR = "PREC_ASYM_THREADS"


class UsageError(ValueError):
    pass


def _worker_limit() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise UsageError(f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}")
    return value


def _pmap(fn: Callable[[Any], Any], items: Sequence[Any]) -> list[Any]:
    """Apply fn over items, optionally threaded, preserving input order."""
    workers = min(_worker_limit(), len(items)) if items else 1
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _rat(value: Fraction | int) -> str:
    return str(Fraction(value))


def _dbl(value: float) -> str:
    return format(value, ".17g")


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (passed, rows)
# ---------------------------------------------------------------------------


def _cmd_numbers(args: argparse.Namespace) -> tuple[bool, list[dict]]:
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    rows = [{"n": 0, "baxter": 1, "refined": []}]
    for n in range(1, args.max_n + 1):
        row = refined_baxter_row(n)
        rows.append({"n": n, "baxter": sum(row), "refined": row[1:]})
    return True, rows


def _cmd_poly(args: argparse.Namespace) -> tuple[bool, list[dict]]:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    coeffs = [int(c) for c in baxter_polynomial(args.n).coefficients]
    return True, [{"n": args.n, "coefficients": coeffs}]


def _direct_oracle(name: str) -> Callable[[int], int]:
    if name == "baxter":
        return baxter_number
    if name == "franel":
        return franel_number
    order = 1 if name == "d1" else 2

    def oracle(n: int) -> int:
        row = refined_baxter_row(n)
        if order == 1:
            return sum(k * d for k, d in enumerate(row))
        return sum(k * (k - 1) * d for k, d in enumerate(row))

    return oracle


def _cmd_verify_rec(args: argparse.Namespace) -> tuple[bool, list[dict]]:
    rec = builtin_recurrence(args.name, seed_check=args.seed_check)
    if args.to < rec.valid_from:
        raise UsageError(f"--to must be >= {rec.valid_from} for {args.name}")
    report = verify_recurrence(rec, _direct_oracle(args.name), rec.valid_from, args.to)
    row = {
        "name": report.name,
        "from": report.start,
        "to": report.stop,
        "checked": report.checked,
        "failures": [{"n": n, "residual": _rat(r)} for n, r in report.failures],
    }
    return report.passed, [row]


def _cmd_verify_mixed(args: argparse.Namespace) -> tuple[bool, list[dict]]:
    if args.to < 2:
        raise UsageError("--to must be >= 2")
    rows = []
    passed = True
    for which in MIXED_IDENTITIES:
        reports = _pmap(
            lambda n, w=which: verify_mixed_identity(n, w), range(2, args.to + 1)
        )
        failures = [r.n for r in reports if not r.passed]
        passed = passed and not failures
        rows.append(
            {
                "identity": which,
                "from": 2,
                "to": args.to,
                "checked": len(reports),
                "failures": failures,
            }
        )
    return passed, rows


def _cmd_verify_ore(args: argparse.Namespace) -> tuple[bool, list[dict]]:
    if args.to < 2:
        raise UsageError("--to must be >= 2")

    @lru_cache(maxsize=None)
    def family(n: int):
        return baxter_polynomial(n)

    rows = []
    passed = True
    for op in annihilator_operators():
        results = _pmap(
            lambda n, o=op: apply_ore_operator(o, n, family).is_zero(),
            range(2, args.to + 1),
        )
        failures = [n for n, ok in zip(range(2, args.to + 1), results) if not ok]
        passed = passed and not failures
        rows.append(
            {
                "operator": op.name,
                "from": 2,
                "to": args.to,
                "checked": len(results),
                "failures": failures,
            }
        )
    return passed, rows


def _cmd_asym(args: argparse.Namespace) -> tuple[bool, list[dict]]:
    rec = builtin_recurrence(args.name, seed_check=args.seed_check)
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    try:
        root = Fraction(args.root)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational root {args.root!r}") from exc
    branches = expand_branch(rec, root, args.order)
    rows = [
        {
            "lambda": _rat(b.lam),
            "nu": _rat(b.nu),
            "coeffs": [_rat(c) for c in b.coeffs],
            "order": b.order,
            "status": b.status.value,
        }
        for b in branches
    ]
    return True, rows


def _cmd_roots(args: argparse.Namespace) -> tuple[bool, list[dict]]:
    if args.to < 2:
        raise UsageError("--to must be >= 2")
    reports = _pmap(check_baxter_real_rooted, range(2, args.to + 1))
    rows = [
        {
            "n": r.n,
            "degree": r.degree,
            "squarefree_degree": r.squarefree_degree,
            "repeated_factor_degree": r.repeated_factor_degree,
            "real_roots": r.real_roots,
            "positive_roots": r.positive_roots,
            "constant_term_zero": r.constant_term_zero,
            "pass": r.passed,
        }
        for r in reports
    ]
    return all(r.passed for r in reports), rows


def _cmd_clt(args: argparse.Namespace) -> tuple[bool, list[dict]]:
    try:
        values = [int(tok) for tok in args.n.split(",") if tok]
    except ValueError as exc:
        raise UsageError(f"malformed n list {args.n!r}") from exc
    if not values or any(v < 3 for v in values):
        raise UsageError("--n must list integers >= 3")
    rows: list[dict] = []
    for report in _pmap(normality_report, values):
        rows.append(
            {
                "kind": "normality",
                "n": report.n,
                "kolmogorov": _dbl(report.kolmogorov),
                "local_sup": _dbl(report.local_sup),
            }
        )
    for ratio in (limit_ratio_report(n) for n in values):
        rows.append(
            {
                "kind": "limit_ratio",
                "n": ratio.n,
                "slope_step": ratio.slope_step,
                "mean_ratio": _dbl(ratio.mean_ratio),
                "second_moment_ratio": _dbl(ratio.second_moment_ratio),
                "variance_slope": _dbl(ratio.variance_slope),
                "mean_is_exact_half": ratio.mean_is_exact_half,
            }
        )
    return True, rows


def _cmd_enum(args: argparse.Namespace) -> tuple[bool, list[dict]]:
    limit = MAX_OPT_IN_LENGTH if args.allow_large else MAX_DEFAULT_LENGTH
    if not 2 <= args.n <= limit:
        raise UsageError(
            f"--n must satisfy 2 <= n <= {limit}"
            + ("" if args.allow_large else " (use --allow-large for 9)")
        )
    table = enumerate_counts(args.n, allow_large=args.allow_large)
    formula = refined_baxter_row(args.n)
    rows = []
    passed = True
    for d, count in enumerate(table.counts):
        expected = formula[d + 1] if d + 1 <= args.n else 0
        ok = count == expected
        passed = passed and ok
        rows.append({"descents": d, "enumerated": count, "formula": expected, "pass": ok})
    total_row = {
        "descents": "total",
        "enumerated": table.total,
        "formula": sum(formula),
        "pass": table.total == sum(formula),
    }
    passed = passed and total_row["pass"]
    rows.append(total_row)
    return passed, rows


# ---------------------------------------------------------------------------
# output rendering
# ---------------------------------------------------------------------------


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={_cell(v)}" for k, v in sorted(value.items()))
    return str(value)


def _render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        rows = doc["rows"]
        fields: list[str] = []
        for row in rows:
            for key in row:
                if key not in fields:
                    fields.append(key)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_cell(row[k]) if k in row else "" for k in fields])
        return buf.getvalue()
    lines = [f"command: {doc['command']}"]
    params = " ".join(f"{k}={_cell(v)}" for k, v in sorted(doc["params"].items()))
    lines.append(f"params: {params}")
    for row in doc["rows"]:
        lines.append("row: " + " ".join(f"{k}={_cell(v)}" for k, v in row.items()))
    lines.append(f"pass: {_cell(doc['pass'])}")
    return "\n".join(lines) + "\n"


_HANDLERS = {
    "numbers": _cmd_numbers,
    "poly": _cmd_poly,
    "verify-rec": _cmd_verify_rec,
    "verify-mixed": _cmd_verify_mixed,
    "verify-ore": _cmd_verify_ore,
    "asym": _cmd_asym,
    "roots": _cmd_roots,
    "clt": _cmd_clt,
    "enum": _cmd_enum,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="baxterlab",
        description="Exact Baxter-number toolkit: tables, recurrence and "
        "annihilator verification, asymptotic branches, real-rootedness, and "
        "normal-limit diagnostics.",
    )
    parser.add_argument(
        "--format", choices=("json", "csv", "text"), default="json",
        help="output format (default: json)",
    )
    parser.add_argument(
        "--seed-check", action="store_true",
        help="re-derive recurrence seeds from the exact closed forms instead "
        "of trusting stored constants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("numbers", help="table of Baxter numbers and refined counts")
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("poly", help="coefficient vector of the degree-n polynomial")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify-rec", help="exact residual check of a built-in recurrence")
    p.add_argument("--name", choices=RECURRENCE_NAMES, required=True)
    p.add_argument("--to", type=int, required=True)

    p = sub.add_parser("verify-mixed", help="exact check of the mixed identities")
    p.add_argument("--to", type=int, required=True)

    p = sub.add_parser("verify-ore", help="annihilator operator check")
    p.add_argument("--to", type=int, required=True)

    p = sub.add_parser("asym", help="asymptotic branch at a characteristic root")
    p.add_argument("--name", choices=RECURRENCE_NAMES, required=True)
    p.add_argument("--root", type=str, required=True)
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("roots", help="real-rootedness verification")
    p.add_argument("--to", type=int, required=True)

    p = sub.add_parser("clt", help="normal-limit distances and limit ratios")
    p.add_argument("--n", type=str, required=True, help="comma-separated list")

    p = sub.add_parser("enum", help="brute-force oracle comparison table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--allow-large", action="store_true")

    return parser


def _params_of(args: argparse.Namespace) -> dict:
    skip = {"command", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.seed_check:
            for name in RECURRENCE_NAMES:
                builtin_recurrence(name, seed_check=True)
        passed, rows = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SeedMismatchError as exc:
        print(f"seed check failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = {
        "command": args.command,
        "params": _params_of(args),
        "pass": passed,
        "rows": rows,
    }
    sys.stdout.write(_render(doc, args.format))
    return 0 if passed else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
