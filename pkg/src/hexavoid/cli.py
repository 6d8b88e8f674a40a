"""Command-line front end: ``hexavoid {count,table,verify,roots}``.

Payloads go to stdout, diagnostics to stderr.  Exit status: 0 success,
1 failed check, 2 usage error, 3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any

from . import published
from .closed_form import DegenerateSpectrum, PrecisionExhausted, eval_rounded, format_polynomial, solve_model
from .label_dp import totals_through
from .oracle import DEFAULT_MAX_N, BudgetExceeded, enumerate_level
from .perm import PatternFamily
from .recurrences import RECURRENCES, SEQUENCE_NAMES, alpha_via_recurrence, five_sequences
from .verify import Check, run_checks, spectral_deltas

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
METHODS = ("oracle", "dp", "recurrence", "closedform")
CLOSEDFORM_MAX_N = 40

log = logging.getLogger("hexavoid")


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    family: str
    parameters: dict[str, Any]
    results: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "family": self.family,
            "parameters": self.parameters,
            "results": self.results,
            "checks": [{"name": c.name, "passed": c.passed, "details": c.details} for c in self.checks],
        }


def _csv(rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _check_lines(checks: list[Check]) -> list[str]:
    return [f"{'PASS' if c.passed else 'FAIL'}  {c.name}  {c.details}" for c in checks]


def _fmt(z: complex) -> str:
    return f"{z.real:.5f}" if z.imag == 0 else f"{z.real:.5f}{z.imag:+.5f}i"


# -- commands ------------------------------------------------------------------------

def count_with(method: str, family: PatternFamily, n: int, budget_nodes: int | None, jobs: int) -> int:
    if method == "oracle":
        return enumerate_level(n, family, max_nodes=budget_nodes, jobs=jobs).count
    if method == "dp":
        return totals_through(n, family)[-1]
    if method == "recurrence":
        return alpha_via_recurrence(n, RECURRENCES[family])
    if n > CLOSEDFORM_MAX_N:
        raise BudgetExceeded(f"closed-form evaluation is limited to n <= {CLOSEDFORM_MAX_N}", 0, 0)
    return eval_rounded(solve_model(family), n)


def cmd_count(args) -> RunReport:
    family = PatternFamily.from_name(args.family)
    params = {"n": args.n, "method": "all" if args.all_methods else args.method}
    report = RunReport("count", family.name.lower(), params)
    if not args.all_methods:
        report.results["count"] = str(count_with(args.method, family, args.n, args.budget_nodes, args.jobs))
        return report
    counts = {}
    for method in METHODS:
        if method == "oracle" and args.n > DEFAULT_MAX_N:
            continue
        if method == "closedform" and (family is PatternFamily.HEX4 or args.n > CLOSEDFORM_MAX_N):
            continue
        try:
            counts[method] = count_with(method, family, args.n, args.budget_nodes, args.jobs)
        except BudgetExceeded as exc:
            log.warning("skipping %s: %s", method, exc)
    report.results["counts"] = {m: str(c) for m, c in counts.items()}
    values = set(counts.values())
    report.results["count"] = str(next(iter(values))) if len(values) == 1 else None
    report.checks.append(Check("methods-agree", len(values) == 1, ", ".join(f"{m}={c}" for m, c in counts.items())))
    return report


def cmd_table(args) -> RunReport:
    n_max = args.n_max
    if n_max < 6:
        raise UsageError("table needs --n-max >= 6")
    table = five_sequences(n_max)
    report = RunReport("table", "hex8", {"n_max": n_max})
    report.results["sequences"] = {name: [str(v) for v in table.row(name)] for name in SEQUENCE_NAMES}
    upto = min(n_max, 12)
    mismatched = [name for name in SEQUENCE_NAMES if table.row(name)[:upto] != published.HEX8_TABLE[name][:upto]]
    report.checks.append(
        Check("matches-published", not mismatched, f"n=1..{upto}" if not mismatched else "rows differ: " + ", ".join(mismatched))
    )
    return report


def cmd_verify(args) -> RunReport:
    # --jobs is deliberately not echoed: it must not change the output
    report = RunReport("verify", "all", {"level": args.level})
    report.checks = run_checks(args.level, jobs=args.jobs)
    report.results["passed"] = sum(c.passed for c in report.checks)
    report.results["total"] = len(report.checks)
    return report


def cmd_roots(args) -> RunReport:
    family = PatternFamily.from_name(args.family)
    model = solve_model(family)
    root_delta, coeff_delta, residual = spectral_deltas(family)
    report = RunReport("roots", family.name.lower(), {})
    report.results = {
        "polynomial": [str(c) for c in model.char_coeffs],
        "roots": [_fmt(r) for r in model.roots],
        "coeffs": [_fmt(c) for c in model.coeffs],
        "residual": f"{residual:.1e}",
        "published_root_delta": f"{root_delta:.1e}",
        "published_coeff_delta": f"{coeff_delta:.1e}",
    }
    report.checks.append(Check("residual", residual <= 1e-12, f"max |p(R)| = {residual:.1e}"))
    return report


# -- rendering -----------------------------------------------------------------------

def render(report: RunReport, fmt: str) -> str:
    if fmt == "json":
        data = report.to_json()
        if report.command == "table":
            data = {
                "command": "table",
                "family": report.family,
                "n_max": report.parameters["n_max"],
                "sequences": report.results["sequences"],
                "checks": data["checks"],
            }
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    if report.command == "table":
        seqs = report.results["sequences"]
        k = report.parameters["n_max"]
        if fmt == "csv":
            return _csv([["sequence"] + [f"n{i}" for i in range(1, k + 1)]] + [[name] + vals for name, vals in seqs.items()])
        width = max(len(v) for vals in seqs.values() for v in vals)
        lines = ["n".ljust(8) + " ".join(str(i).rjust(width) for i in range(1, k + 1))]
        lines += [name.ljust(8) + " ".join(v.rjust(width) for v in vals) for name, vals in seqs.items()]
        return "\n".join(lines + _check_lines(report.checks)) + "\n"
    if report.command == "count":
        if fmt == "csv":
            counts = report.results.get("counts") or {report.parameters["method"]: report.results["count"]}
            return _csv([["family", "n", "method", "count"]] + [[report.family, report.parameters["n"], m, c] for m, c in counts.items()])
        if "counts" not in report.results:
            return f"{report.results['count']}\n"
        lines = [f"{m}: {c}" for m, c in report.results["counts"].items()]
        return "\n".join(lines + _check_lines(report.checks)) + "\n"
    if report.command == "verify":
        if fmt == "csv":
            return _csv([["check", "status", "details"]] + [[c.name, "pass" if c.passed else "fail", c.details] for c in report.checks])
        res = report.results
        return "\n".join(_check_lines(report.checks) + [f"{res['passed']}/{res['total']} checks passed"]) + "\n"
    # roots
    res = report.results
    if fmt == "csv":
        rows = [["index", "root", "coeff"]] + [[i, r, c] for i, (r, c) in enumerate(zip(res["roots"], res["coeffs"]), start=1)]
        return _csv(rows)
    family = PatternFamily.from_name(report.family)
    lines = [f"{family.name}: {format_polynomial(tuple(int(c) for c in res['polynomial']))}"]
    lines += [f"R{i} ≈ {r}  c{i} ≈ {c}" for i, (r, c) in enumerate(zip(res["roots"], res["coeffs"]), start=1)]
    lines.append("alpha_n = sum c_i R_i^(n-1), conjugate terms included")
    lines.append(f"residual max|p(R)| = {res['residual']}")
    lines.append(f"delta vs published: roots {res['published_root_delta']}, coefficients {res['published_coeff_delta']}")
    return "\n".join(lines + _check_lines(report.checks)) + "\n"


# -- entry point ---------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 2, as argparse does, but via our handler
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hexavoid", description="Enumerate and cross-check 321,hexagon-avoiding permutations.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    families = ["hex8", "hex6", "hex4"]

    p = sub.add_parser("count", help="count family members of length n")
    p.add_argument("--family", choices=families, default="hex8")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="dp")
    p.add_argument("--all-methods", action="store_true", help="run every feasible method and compare")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--budget-nodes", type=int, default=None, help="cap on oracle tree nodes")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="alpha..epsilon for n = 1..n_max")
    p.add_argument("--n-max", "--n", dest="n_max", type=int, default=12)
    p.add_argument("--format", choices=["text", "csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the cross-method checks")
    p.add_argument("--level", choices=["fast", "full"], default="fast")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roots", help="characteristic roots and closed-form coefficients")
    p.add_argument("--family", choices=families, default="hex8")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_roots)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"hexavoid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        if args.command == "count" and args.n < 1:
            raise UsageError("--n must be at least 1")
        report = args.func(args)
    except (UsageError, DegenerateSpectrum, ValueError) as exc:
        print(f"hexavoid: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"hexavoid: budget exceeded: {exc} (last complete level {exc.completed_level}, "
              f"{exc.completed_count} members)", file=sys.stderr)
        return EXIT_BUDGET
    except PrecisionExhausted as exc:
        print(f"hexavoid: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    sys.stdout.write(render(report, args.format))
    return EXIT_OK if report.ok else EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
