"""Command line front end: verify, scan, table.

``verify`` computes one identity cell four independent ways (product
recursion, partition DP, standard-monomial count, coefficient-family limit)
and certifies that all four series agree to the chosen order. ``scan`` runs
that over a parameter grid, optionally with extra property suites and worker
processes. ``table`` dumps one series as CSV or JSON.

Exit codes: 0 all checks passed, 1 some check failed, 2 usage error.
JSON and CSV output is byte-deterministic; wall times appear in text mode
only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .families import (
    Side,
    family_at_stage,
    family_limit,
    family_step,
    verify_expansion,
    verify_family_match,
)
from .hilbert import QuotientSpec, gordon_quotient, hp_series, verify_hp_identities, verify_hp_recursion
from .partitions import GordonParams, gordon_series
from .products import ProductIndex, product_series
from .qseries import INFINITE, NonDivisibleError, TruncatedSeries, first_mismatch

DEFAULT_ORDER = 50
ORDER_ENV_VAR = "RRGORDON_ORDER"

# the four independent routes to the same series; tests may patch entries
SERIES_ROUTES = {
    "product": lambda p, N: product_series(ProductIndex(p.r, p.product_index), N),
    "partition": lambda p, N: gordon_series(p, N),
    "hilbert": lambda p, N: hp_series(gordon_quotient(p), N),
    "family": lambda p, N: family_limit(Side.HILBERT, p, N),
}

SUITES = ("hp-identities", "hp-recursion", "family-match", "expansion", "valuation")


@dataclass
class RouteResult:
    fingerprint: str
    leading: list[str]
    seconds: float
    error: str | None = None


@dataclass
class VerificationReport:
    params: GordonParams
    order: int
    routes: dict[str, RouteResult] = field(default_factory=dict)
    verdict: bool = False
    mismatch: dict | None = None


def build_report(params: GordonParams, order: int) -> VerificationReport:
    report = VerificationReport(params=params, order=order)
    series: dict[str, TruncatedSeries] = {}
    for name, route in SERIES_ROUTES.items():
        start = time.perf_counter()
        try:
            s = route(params, order)
        except NonDivisibleError as exc:
            report.routes[name] = RouteResult("-", [], time.perf_counter() - start, str(exc))
            continue
        series[name] = s
        head = [str(c) for c in s.coeffs[: min(8, order + 1)]]
        report.routes[name] = RouteResult(s.fingerprint(), head, time.perf_counter() - start)

    names = [n for n in SERIES_ROUTES if n in series]
    for a_idx in range(len(names)):
        for b_idx in range(a_idx + 1, len(names)):
            a, b = names[a_idx], names[b_idx]
            n = first_mismatch(series[a], series[b])
            if n is not None:
                report.mismatch = {
                    "exponent": n,
                    "routes": [a, b],
                    "coefficients": [str(series[a].coeffs[n]), str(series[b].coeffs[n])],
                }
                report.verdict = False
                return report
    report.verdict = len(series) == len(SERIES_ROUTES)
    return report


def report_json_dict(report: VerificationReport) -> dict:
    p = report.params
    return {
        "params": {"r": p.r, "i": p.i, "J": p.J, "ell": p.ell, "index": p.product_index},
        "order": report.order,
        "routes": {
            name: {"fingerprint": rr.fingerprint, "leading": rr.leading, "error": rr.error}
            for name, rr in report.routes.items()
        },
        "verdict": "pass" if report.verdict else "fail",
        "mismatch": report.mismatch,
    }


def render_report_text(report: VerificationReport) -> str:
    p = report.params
    lines = [
        f"params     r={p.r} i={p.i} J={p.J} (ell={p.ell}, product index {p.product_index}), order {report.order}"
    ]
    for name, rr in report.routes.items():
        if rr.error:
            lines.append(f"{name:<10} ERROR {rr.error}")
        else:
            head = ", ".join(rr.leading)
            lines.append(f"{name:<10} {rr.fingerprint} [{head}, ...] {rr.seconds:.3f}s")
    if report.mismatch:
        m = report.mismatch
        a, b = m["routes"]
        ca, cb = m["coefficients"]
        lines.append(
            f"first mismatch at exponent {m['exponent']}: {a}={ca} {b}={cb}"
        )
    lines.append(f"verdict: {'PASS' if report.verdict else 'FAIL'}")
    return "\n".join(lines)


def _parse_range(text: str, what: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise UsageError(f"bad {what} range {text!r}; use an integer or lo..hi")


class UsageError(Exception):
    pass


def _order_from(args) -> int:
    if args.order is not None:
        return args.order
    env = os.environ.get(ORDER_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ORDER_ENV_VAR} must be an integer, got {env!r}")
    return DEFAULT_ORDER


def cmd_verify(args) -> int:
    try:
        params = GordonParams(args.r, args.i, args.J)
        order = _order_from(args)
        if order < 0:
            raise ValueError("order must be non-negative")
    except ValueError as exc:
        raise UsageError(str(exc))
    report = build_report(params, order)
    if args.format == "json":
        print(json.dumps(report_json_dict(report), indent=2, sort_keys=True))
    else:
        print(render_report_text(report))
    return 0 if report.verdict else 1


def _run_suites(params: GordonParams, order: int, suites: tuple[str, ...], d_max: int) -> dict[str, bool]:
    out = {}
    for suite in suites:
        if suite == "hp-identities":
            out[suite] = verify_hp_identities(params.r, params.J + 1, order)
        elif suite == "hp-recursion":
            out[suite] = verify_hp_recursion(params.r, params.J + 1, params.i, order)
        elif suite == "family-match":
            out[suite] = verify_family_match(params, max(d_max, params.J + 1), order)
        elif suite == "expansion":
            out[suite] = all(
                verify_expansion(params, d, order)
                for d in range(params.J + 1, params.J + 4)
            )
        elif suite == "valuation":
            out[suite] = _valuation_suite(params, order)
    return out


def _valuation_suite(params: GordonParams, order: int) -> bool:
    # uncapped quotient one floor up is 1 + O(q^(J+2))
    tail = hp_series(QuotientSpec(params.r, params.J + 2), order) - TruncatedSeries.one(order)
    val = tail.valuation()
    if not (val == INFINITE or val >= params.J + 2):
        return False
    # family entries keep valuation >= stage * (position - 1)
    fam = family_at_stage(Side.HILBERT, params, params.J + 1, order)
    for _ in range(5):
        for j, entry in enumerate(fam.entries, start=1):
            val = entry.valuation()
            if not (val == INFINITE or val >= fam.stage * (j - 1)):
                return False
        fam = family_step(fam)
    return True


def _scan_cell(cell: tuple[int, int, int, int, tuple[str, ...], int]) -> dict:
    r, i, J, order, suites, d_max = cell
    params = GordonParams(r, i, J)
    report = build_report(params, order)
    suite_results = _run_suites(params, order, suites, d_max)
    passed = report.verdict and all(suite_results.values())
    return {
        "r": r,
        "i": i,
        "J": J,
        "verdict": "pass" if passed else "fail",
        "identity": "pass" if report.verdict else "fail",
        "suites": {k: ("pass" if v else "fail") for k, v in sorted(suite_results.items())},
        "mismatch": report.mismatch,
    }


def cmd_scan(args) -> int:
    try:
        r_lo, r_hi = _parse_range(args.r, "--r")
        j_lo, j_hi = _parse_range(args.J, "--J")
        order = _order_from(args)
        if r_lo < 2:
            raise UsageError("r must be at least 2")
        if j_lo < 0:
            raise UsageError("J must be non-negative")
        if order < 0:
            raise UsageError("order must be non-negative")
        if args.jobs < 1:
            raise UsageError("jobs must be at least 1")
        suites = tuple(s for s in args.suites.split(",") if s) if args.suites else ()
        for s in suites:
            if s not in SUITES:
                raise UsageError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    except ValueError as exc:
        raise UsageError(str(exc))

    cells = []
    for r in range(r_lo, r_hi + 1):
        if args.i == "all":
            i_values = range(1, r + 1)
        else:
            i_lo, i_hi = _parse_range(args.i, "--i")
            i_values = range(max(1, i_lo), min(r, i_hi) + 1)
        for i in i_values:
            for J in range(j_lo, j_hi + 1):
                cells.append((r, i, J, order, suites, args.d_max))

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_scan_cell, cells))
    else:
        results = [_scan_cell(c) for c in cells]
    results.sort(key=lambda c: (c["r"], c["i"], c["J"]))

    failed = [c for c in results if c["verdict"] != "pass"]
    if args.format == "json":
        payload = {
            "order": order,
            "suites": list(suites),
            "cells": results,
            "passed": len(results) - len(failed),
            "failed": len(failed),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for c in results:
            extra = ""
            if c["suites"]:
                extra = " " + " ".join(f"{k}={v}" for k, v in c["suites"].items())
            print(f"r={c['r']} i={c['i']} J={c['J']}: {c['verdict'].upper()}{extra}")
        print(f"{len(results) - len(failed)}/{len(results)} cells passed at order {order}")
    return 1 if failed else 0


TABLE_KINDS = ("counts", "product", "hilbert")


def cmd_table(args) -> int:
    try:
        params = GordonParams(args.r, args.i, args.J)
        order = _order_from(args)
        if order < 0:
            raise ValueError("order must be non-negative")
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.kind == "counts":
        series = gordon_series(params, order)
    elif args.kind == "product":
        series = product_series(ProductIndex(params.r, params.product_index), order)
    else:
        series = hp_series(gordon_quotient(params), order)

    if args.format == "json":
        text = json.dumps(series.as_json_dict(), indent=2, sort_keys=True) + "\n"
    else:
        rows = [f"{n},{c}" for n, c in enumerate(series.coeffs)]
        text = "n,value\n" + "\n".join(rows) + "\n"

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrgordon",
        description="Exact verification of the shifted Rogers-Ramanujan-Gordon identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="check one (r, i, J) cell via four independent computations"
    )
    p_verify.add_argument("--r", type=int, required=True, help="modulus parameter, >= 2")
    p_verify.add_argument("--i", type=int, required=True, help="cap parameter, 1..r")
    p_verify.add_argument("--J", type=int, required=True, help="shift parameter, >= 0")
    p_verify.add_argument("--order", type=int, default=None, help=f"truncation order (default {DEFAULT_ORDER}, or ${ORDER_ENV_VAR})")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="verify a grid of cells, optionally with property suites")
    p_scan.add_argument("--r", default="2..4", help="r range, e.g. 3 or 2..5")
    p_scan.add_argument("--i", default="all", help="i range, e.g. 1..2, or 'all' (clipped to 1..r)")
    p_scan.add_argument("--J", default="0..2", help="J range, e.g. 0 or 0..3")
    p_scan.add_argument("--order", type=int, default=None)
    p_scan.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_scan.add_argument(
        "--suites",
        default="",
        help="comma-separated extra checks: " + ",".join(SUITES),
    )
    p_scan.add_argument("--d-max", type=int, default=10, help="stage bound for family-match")
    p_scan.add_argument("--format", choices=("text", "json"), default="text")
    p_scan.set_defaults(func=cmd_scan)

    p_table = sub.add_parser("table", help="emit one series as CSV or JSON")
    p_table.add_argument("--kind", choices=TABLE_KINDS, required=True)
    p_table.add_argument("--r", type=int, required=True)
    p_table.add_argument("--i", type=int, required=True)
    p_table.add_argument("--J", type=int, required=True)
    p_table.add_argument("--order", type=int, default=None)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", default=None, help="write to a file instead of stdout")
    p_table.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
