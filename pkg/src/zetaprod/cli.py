"""Command-line front end.

Subcommands:
  eval        evaluate log z_alpha(u) by one route or all applicable routes,
              with pairwise cross-checking and a pass/fail verdict
  constants   print the named-constants table; every value is re-derived at
              startup and compared against the golden file at 1e-12
  crosscheck  run the route-agreement matrix over a (d, u) grid
  stirling    shifted r-Stirling row entries at shift 1-u (exact or float)
  zeta        Hurwitz zeta values and s-derivatives

Exit codes: 0 = pass, 1 = numeric verdict failure, 2 = usage or domain
error, 3 = I/O error (golden file missing or corrupt).

JSON output is schema-versioned (schema_version = 1), byte-deterministic
(no timestamps or timings in JSON; wall times appear only in plain output),
and rejects unknown fields on validation.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .closedform import log_z_closed
from .hurwitz import (agm, euler_gamma, hurwitz_zeta, hurwitz_zeta_deriv,
                      log_bendersky)
from .quad import (QuadConfig, QuadratureNonConvergence, integrate_double,
                   integrate_prelim, integrate_single_d)
from .rstirling import row_by_gf
from .series import Approximation, DifferenceMethod, EvalParams, log_z_direct

__all__ = [
    "main",
    "EvalReport",
    "GoldenEntry",
    "EXIT_PASS",
    "EXIT_NUMERIC_FAIL",
    "EXIT_USAGE",
    "EXIT_IO",
    "REPORT_SCHEMA_V1",
    "CONSTANTS_SCHEMA_V1",
    "ROUTE_CHOICES",
    "derive_constants",
    "golden_path",
]

EXIT_PASS = 0
EXIT_NUMERIC_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

ROUTE_CHOICES = ("closed", "series", "integral-single", "integral-double",
                 "integral-prelim", "all")

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class GoldenEntry:
    name: str
    expression: str
    value: float
    source: str  # paper_closed_form | derived_oracle

    def __post_init__(self):
        if self.source not in ("paper_closed_form", "derived_oracle"):
            raise ValueError(f"GoldenEntry: bad source tag {self.source!r}")
        if not math.isfinite(self.value):
            raise ValueError("GoldenEntry: value must be finite")


@dataclass
class EvalReport:
    """One evaluation or cross-check: inputs, per-route results, verdict."""

    request: dict
    results: list = field(default_factory=list)   # (route, value, err, terms, ms)
    skipped: list = field(default_factory=list)   # (route, reason)
    deviations: list = field(default_factory=list)  # (route_a, route_b, absdiff, allowed)
    verdict: str | None = None                     # pass | fail | None
    schema_version: int = SCHEMA_VERSION

    def finish(self, tol: float) -> None:
        """Fill pairwise deviations; pass iff every |diff| fits within
        max(tol, combined reported error)."""
        self.deviations = []
        ok = True
        for i in range(len(self.results)):
            for j in range(i + 1, len(self.results)):
                ra, rb = self.results[i], self.results[j]
                diff = abs(ra[1] - rb[1])
                allowed = max(tol, ra[2] + rb[2])
                self.deviations.append((ra[0], rb[0], diff, allowed))
                ok = ok and diff <= allowed
        self.verdict = "pass" if ok else "fail"

    def to_json_obj(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "request": self.request,
            "results": [
                {"route": r, "value": v, "err_est": e, "terms": t}
                for (r, v, e, t, _ms) in self.results
            ],
            "skipped": [{"route": r, "reason": why} for (r, why) in self.skipped],
            "deviations": [
                {"a": a, "b": b, "abs_diff": d, "allowed": al}
                for (a, b, d, al) in self.deviations
            ],
            "verdict": self.verdict,
        }


# JSON schemas (draft-07 style), versioned from 1; unknown fields rejected.
_RESULT_SCHEMA = {
    "type": "object",
    "properties": {
        "route": {"type": "string"},
        "value": {"type": "number"},
        "err_est": {"type": "number"},
        "terms": {"type": "integer"},
    },
    "required": ["route", "value", "err_est", "terms"],
    "additionalProperties": False,
}

REPORT_SCHEMA_V1 = {
    "type": "object",
    "properties": {
        "schema_version": {"const": 1},
        "request": {"type": "object"},
        "results": {"type": "array", "items": _RESULT_SCHEMA},
        "skipped": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"route": {"type": "string"},
                               "reason": {"type": "string"}},
                "required": ["route", "reason"],
                "additionalProperties": False,
            },
        },
        "deviations": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"a": {"type": "string"}, "b": {"type": "string"},
                               "abs_diff": {"type": "number"},
                               "allowed": {"type": "number"}},
                "required": ["a", "b", "abs_diff", "allowed"],
                "additionalProperties": False,
            },
        },
        "verdict": {"enum": ["pass", "fail", None]},
    },
    "required": ["schema_version", "request", "results", "skipped",
                 "deviations", "verdict"],
    "additionalProperties": False,
}

CONSTANTS_SCHEMA_V1 = {
    "type": "object",
    "properties": {
        "schema_version": {"const": 1},
        "constants": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "expression": {"type": "string"},
                    "value": {"type": "number"},
                    "source": {"enum": ["paper_closed_form", "derived_oracle"]},
                    "rederived": {"type": "number"},
                    "abs_diff": {"type": "number"},
                    "ok": {"type": "boolean"},
                },
                "required": ["name", "expression", "value", "source",
                             "rederived", "abs_diff", "ok"],
                "additionalProperties": False,
            },
        },
        "verdict": {"enum": ["pass", "fail"]},
    },
    "required": ["schema_version", "constants", "verdict"],
    "additionalProperties": False,
}


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# --------------------------------------------------------------------------
# constants / golden file
# --------------------------------------------------------------------------

def derive_constants() -> list[GoldenEntry]:
    """Re-derive every golden constant through its defining route."""
    g = euler_gamma()
    z3 = hurwitz_zeta(3.0, 1.0).value
    log_a = log_bendersky(1)
    m = agm(2.0, math.sqrt(2.0 + math.sqrt(3.0)))
    g13 = 2.0 ** (7.0 / 9.0) * math.pi ** (2.0 / 3.0) / (
        3.0 ** (1.0 / 12.0) * m ** (1.0 / 3.0))
    return [
        GoldenEntry("euler_gamma", "-digamma(1)", g, "derived_oracle"),
        GoldenEntry("log_two_pi", "log(2*pi)", math.log(2.0 * math.pi),
                    "derived_oracle"),
        GoldenEntry("log_glaisher_A", "1/12 - zeta_deriv(-1)", log_a,
                    "derived_oracle"),
        GoldenEntry("glaisher_A", "exp(1/12 - zeta_deriv(-1))", math.exp(log_a),
                    "derived_oracle"),
        GoldenEntry("zeta3", "zeta(3)", z3, "derived_oracle"),
        GoldenEntry("log_A2", "zeta(3)/(4*pi^2)", z3 / (4.0 * math.pi ** 2),
                    "paper_closed_form"),
        GoldenEntry("gamma_one_third",
                    "2^(7/9)*pi^(2/3) / (3^(1/12)*AGM(2,sqrt(2+sqrt(3)))^(1/3))",
                    g13, "paper_closed_form"),
    ]


def golden_path() -> str:
    return str(resources.files("zetaprod").joinpath("data/golden.csv"))


def write_golden(path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["name", "expression", "value", "source"])
        for e in derive_constants():
            w.writerow([e.name, e.expression, repr(e.value), e.source])


def read_golden(path: str) -> list[GoldenEntry]:
    """Parse the golden CSV; any structural problem raises OSError."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError:
        raise
    if not rows or rows[0] != ["name", "expression", "value", "source"]:
        raise OSError(f"golden file {path}: bad or missing header")
    out = []
    seen = set()
    for row in rows[1:]:
        if len(row) != 4:
            raise OSError(f"golden file {path}: malformed row {row!r}")
        name, expression, value_s, source = row
        try:
            value = float(value_s)
            entry = GoldenEntry(name, expression, value, source)
        except ValueError as exc:
            raise OSError(f"golden file {path}: {exc}") from exc
        if not math.isfinite(value):
            raise OSError(f"golden file {path}: non-finite value for {name}")
        if name in seen:
            raise OSError(f"golden file {path}: duplicate name {name}")
        seen.add(name)
        out.append(entry)
    return out


GOLDEN_TOL = 1e-12


# --------------------------------------------------------------------------
# eval plumbing
# --------------------------------------------------------------------------

def _applicable_routes(alpha: float):
    """Map each route to a callable target -> Approximation, or a skip reason.

    The integral routes carry the one-step index shift: the integrand index
    d (or a) computes log z_{d-1}, so target alpha needs index alpha + 1.
    """
    is_int = float(alpha) == int(alpha)
    routes = {}
    if is_int and alpha >= 0:
        routes["closed"] = lambda u, n, q: log_z_closed(int(alpha), u)
    else:
        routes["closed"] = "closed form needs integer alpha >= 0"
    if is_int and alpha <= -2:
        reason = f"alpha = {alpha} is an excluded negative integer"
        routes["series"] = reason
        routes["integral-double"] = reason
        routes["integral-prelim"] = reason
        routes["integral-single"] = reason
        return routes
    routes["series"] = lambda u, n, q: log_z_direct(
        EvalParams(alpha, u), n, DifferenceMethod.FRULLANI, tightened=True)
    if is_int and alpha >= -1:
        routes["integral-single"] = lambda u, n, q: integrate_single_d(
            int(alpha) + 1, u, q)
    else:
        routes["integral-single"] = "single integral needs integer alpha >= -1"
    if alpha > -2:
        routes["integral-double"] = lambda u, n, q: integrate_double(
            alpha + 1.0, u, q)
        routes["integral-prelim"] = lambda u, n, q: integrate_prelim(
            alpha + 1.0, u, q)
    else:
        routes["integral-double"] = "double integral needs alpha > -2"
        routes["integral-prelim"] = "preliminary integral needs alpha > -2"
    return routes


def _run_eval(alpha: float, u: float, route: str, tol: float,
              max_terms: int) -> EvalReport:
    report = EvalReport(request={
        "command": "eval", "alpha": alpha, "u": u, "route": route,
        "tol": tol, "max_terms": max_terms,
    })
    table = _applicable_routes(alpha)
    wanted = [r for r in ROUTE_CHOICES[:-1]] if route == "all" else [route]
    qcfg = QuadConfig()
    for name in wanted:
        fn = table[name]
        if isinstance(fn, str):
            if route != "all":
                raise ValueError(f"route {name} inapplicable: {fn}")
            report.skipped.append((name, fn))
            continue
        t0 = time.perf_counter()
        approx: Approximation = fn(u, max_terms, qcfg)
        ms = 1000.0 * (time.perf_counter() - t0)
        report.results.append((name, approx.value, approx.err_est,
                               approx.terms_used, ms))
    if not report.results:
        raise ValueError(f"no route applies to alpha = {alpha}: "
                         + "; ".join(f"{r}: {why}" for r, why in report.skipped))
    report.finish(tol)
    return report


def _render_eval_plain(report: EvalReport, out) -> None:
    req = report.request
    print(f"log z_alpha(u) at alpha={req['alpha']} u={req['u']}", file=out)
    print(f"{'route':<17}{'value':<24}{'err_est':<12}{'terms':<9}ms", file=out)
    for (r, v, e, t, ms) in report.results:
        print(f"{r:<17}{v:<24.16g}{e:<12.3g}{t:<9d}{ms:.1f}", file=out)
    for (r, why) in report.skipped:
        print(f"{r:<17}skipped: {why}", file=out)
    for (a, b, d, al) in report.deviations:
        print(f"|{a} - {b}| = {d:.3g} (allowed {al:.3g})", file=out)
    print(f"verdict: {report.verdict} (tol {req['tol']:g})", file=out)


def _render_eval_csv(report: EvalReport, out) -> None:
    w = csv.writer(out)
    w.writerow(["route", "value", "err_est", "terms"])
    for (r, v, e, t, _ms) in report.results:
        w.writerow([r, repr(v), repr(e), t])


def cmd_eval(args, out) -> int:
    if (args.d is None) == (args.alpha is None):
        raise ValueError("exactly one of --d / --alpha is required")
    alpha = float(args.d) if args.d is not None else args.alpha
    if not args.u > 0:
        raise ValueError("u must be > 0")
    if not args.tol > 0:
        raise ValueError("tol must be > 0")
    if args.max_terms < 2:
        raise ValueError("max-terms must be >= 2")
    report = _run_eval(alpha, args.u, args.route, args.tol, args.max_terms)
    if args.format == "json":
        out.write(_dump_json(report.to_json_obj()))
    elif args.format == "csv":
        _render_eval_csv(report, out)
    else:
        _render_eval_plain(report, out)
    return EXIT_PASS if report.verdict == "pass" else EXIT_NUMERIC_FAIL


# --------------------------------------------------------------------------
# constants
# --------------------------------------------------------------------------

def cmd_constants(args, out) -> int:
    if args.regen:
        path = args.golden or golden_path()
        write_golden(path)
        print(f"golden file written: {path}", file=out)
        return EXIT_PASS
    path = args.golden or golden_path()
    golden = read_golden(path)
    derived = {e.name: e for e in derive_constants()}
    if set(derived) != {e.name for e in golden}:
        raise OSError(f"golden file {path}: entry names do not match the "
                      "derivable constants")
    rows = []
    ok_all = True
    for e in golden:
        re_derived = derived[e.name].value
        diff = abs(re_derived - e.value)
        ok = diff <= GOLDEN_TOL
        ok_all = ok_all and ok
        rows.append({"name": e.name, "expression": e.expression,
                     "value": e.value, "source": e.source,
                     "rederived": re_derived, "abs_diff": diff, "ok": ok})
    if args.format == "json":
        obj = {"schema_version": SCHEMA_VERSION, "constants": rows,
               "verdict": "pass" if ok_all else "fail"}
        out.write(_dump_json(obj))
    elif args.format == "csv":
        w = csv.writer(out)
        w.writerow(["name", "expression", "value", "source"])
        for r in rows:
            w.writerow([r["name"], r["expression"], repr(r["value"]),
                        r["source"]])
    else:
        print(f"{'name':<18}{'value':<24}{'check':<10}expression", file=out)
        for r in rows:
            mark = "ok" if r["ok"] else f"FAIL {r['abs_diff']:.2e}"
            print(f"{r['name']:<18}{r['value']:<24.16g}{mark:<10}"
                  f"{r['expression']}", file=out)
        print(f"verdict: {'pass' if ok_all else 'fail'} "
              f"(round-trip tol {GOLDEN_TOL:g})", file=out)
    return EXIT_PASS if ok_all else EXIT_NUMERIC_FAIL


# --------------------------------------------------------------------------
# crosscheck
# --------------------------------------------------------------------------

def _parse_grid_d(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(p) for p in text.split(",") if p != ""] or _bad()
    except ValueError:
        raise ValueError(f"malformed --grid-d {text!r}: use e.g. 0..5 or 0,2,4")


def _bad():
    raise ValueError


def _parse_grid_u(text: str) -> list[float]:
    try:
        vals = [float(p) for p in text.split(",") if p != ""]
        if not vals or any(v <= 0 for v in vals):
            raise ValueError
        return vals
    except ValueError:
        raise ValueError(f"malformed --grid-u {text!r}: use e.g. 0.5,1,2")


def _crosscheck_cell(d: int, u: float, tol: float, max_terms: int) -> EvalReport:
    return _run_eval(float(d), u, "all", tol, max_terms)


def cmd_crosscheck(args, out) -> int:
    ds = _parse_grid_d(args.grid_d)
    us = _parse_grid_u(args.grid_u)
    if not args.tol > 0:
        raise ValueError("tol must be > 0")
    cells = [(d, u) for d in ds for u in us]
    if args.parallel:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=4) as pool:
            reports = list(pool.map(
                lambda c: _crosscheck_cell(c[0], c[1], args.tol, args.max_terms),
                cells))
    else:
        reports = [_crosscheck_cell(d, u, args.tol, args.max_terms)
                   for (d, u) in cells]
    failures = sum(r.verdict != "pass" for r in reports)
    if args.format == "json":
        obj = {
            "schema_version": SCHEMA_VERSION,
            "cells": [r.to_json_obj() for r in reports],
            "pass_count": len(reports) - failures,
            "fail_count": failures,
            "verdict": "pass" if failures == 0 else "fail",
        }
        out.write(_dump_json(obj))
    elif args.format == "csv":
        w = csv.writer(out)
        w.writerow(["d", "u", "route", "value", "err_est", "terms"])
        for (d, u), r in zip(cells, reports):
            for (name, v, e, t, _ms) in r.results:
                w.writerow([d, u, name, repr(v), repr(e), t])
    else:
        for (d, u), r in zip(cells, reports):
            worst = max((dev[2] for dev in r.deviations), default=0.0)
            print(f"d={d} u={u}: {r.verdict} (worst |diff| {worst:.3g})",
                  file=out)
        print(f"summary: {len(reports) - failures} pass, {failures} fail",
              file=out)
    return EXIT_PASS if failures == 0 else EXIT_NUMERIC_FAIL


# --------------------------------------------------------------------------
# stirling / zeta
# --------------------------------------------------------------------------

def _parse_exact(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(text)  # exact decimal-string parse


def cmd_stirling(args, out) -> int:
    if args.n < 0:
        raise ValueError("n must be >= 0")
    if not 0 <= args.k <= args.n:
        raise ValueError("k must satisfy 0 <= k <= n")
    if args.exact:
        u = _parse_exact(args.u)
        row = row_by_gf(args.n, Fraction(1) - u)
        print(str(row.coeffs[args.k]), file=out)
    else:
        u = float(_parse_exact(args.u)) if ("/" in args.u) else float(args.u)
        if not math.isfinite(u):
            raise ValueError("u must be finite")
        row = row_by_gf(args.n, 1.0 - u)
        print(repr(row.coeffs[args.k]), file=out)
    return EXIT_PASS


def cmd_zeta(args, out) -> int:
    if args.s == 1.0:
        raise ValueError("s = 1 is the zeta pole (the regularized value "
                         "there is -digamma(u))")
    if not args.u > 0:
        raise ValueError("u must be > 0")
    if args.deriv:
        z = hurwitz_zeta_deriv(args.s, args.u)
        print(repr(z.deriv), file=out)
    else:
        z = hurwitz_zeta(args.s, args.u)
        print(repr(z.value), file=out)
    return EXIT_PASS


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zetaprod",
        description="Cross-validated evaluation of alternating-binomial "
                    "infinite products and their Hurwitz-zeta closed forms.")
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate log z_alpha(u) by route(s)")
    pe.add_argument("--d", type=int, default=None,
                    help="integer product shift (target log z_d(u))")
    pe.add_argument("--alpha", type=float, default=None,
                    help="real product shift (target log z_alpha(u))")
    pe.add_argument("--u", type=float, default=1.0)
    pe.add_argument("--route", choices=ROUTE_CHOICES, default="all")
    pe.add_argument("--tol", type=float, default=1e-6,
                    help="pairwise deviation tolerance; a pair passes when "
                         "|diff| <= max(tol, combined err_est)")
    pe.add_argument("--max-terms", type=int, default=10000)
    pe.add_argument("--format", choices=("plain", "json", "csv"),
                    default="plain")
    pe.set_defaults(fn=cmd_eval)

    pc = sub.add_parser("constants", help="named constants table + golden check")
    pc.add_argument("--format", choices=("plain", "json", "csv"),
                    default="plain")
    pc.add_argument("--golden", default=None, help="override golden CSV path")
    pc.add_argument("--regen", action="store_true",
                    help="regenerate the golden CSV from the oracles")
    pc.set_defaults(fn=cmd_constants)

    px = sub.add_parser("crosscheck", help="route-agreement matrix")
    px.add_argument("--grid-d", default="0..5")
    px.add_argument("--grid-u", default="0.5,1,2")
    px.add_argument("--tol", type=float, default=1e-6)
    px.add_argument("--max-terms", type=int, default=10000)
    px.add_argument("--parallel", action="store_true")
    px.add_argument("--format", choices=("plain", "json", "csv"),
                    default="plain")
    px.set_defaults(fn=cmd_crosscheck)

    ps = sub.add_parser("stirling", help="shifted r-Stirling row entry")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--k", type=int, required=True)
    ps.add_argument("--u", type=str, required=True,
                    help="shift parameter; fractions like 1/3 are exact")
    ps.add_argument("--exact", action="store_true",
                    help="exact rational arithmetic, output as p/q")
    ps.set_defaults(fn=cmd_stirling)

    pz = sub.add_parser("zeta", help="Hurwitz zeta value / derivative")
    pz.add_argument("--s", type=float, required=True)
    pz.add_argument("--u", type=float, default=1.0)
    pz.add_argument("--deriv", action="store_true")
    pz.set_defaults(fn=cmd_zeta)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors already; normalize --help to 0
        return int(exc.code or 0)
    out = sys.stdout
    try:
        return args.fn(args, out)
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except QuadratureNonConvergence as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
