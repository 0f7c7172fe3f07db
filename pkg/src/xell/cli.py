"""Command-line front end: ``xell {coeffs|verify|scan|limit|ortho}``.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 degenerate
parameters.  JSON output carries ``"schema": "xell/1"``; with a fixed
command line the output is byte-identical across runs and ``--jobs``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import analysis, classical, exceptional
from .numfield import parse_gr, parse_rat
from .params import (
    ASKEY_WILSON,
    WILSON,
    DegenerateParameterError,
    ParameterError,
    ParamSet,
)
from .report import SCHEMA, VerificationReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3

ALL_CHECKS = ("difference-eq", "shape-invariance", "forward-backward", "rodrigues",
              "eigencheck", "zero-count", "hermiticity", "orthogonality",
              "missing-degrees", "degeneration")
DEFAULT_CHECKS = ALL_CHECKS
PER_N = {"difference-eq", "forward-backward", "rodrigues", "eigencheck", "zero-count"}
NEEDS_HERMITIAN = {"zero-count", "orthogonality"}


class UsageError(Exception):
    pass


# argument parsing ---------------------------------------------------------------


def parse_range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise UsageError(f"bad range {text!r}; expected A or A..B")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _parse_exact(text: str):
    try:
        return parse_gr(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_params(args, allow_decimal: bool = False) -> ParamSet:
    if args.a is None:
        raise UsageError("--a is required")
    parts = [p for p in args.a.split(",")]
    if len(parts) != 4 or not all(p.strip() for p in parts):
        raise UsageError(f"--a needs four comma-separated values, got {args.a!r}")
    if allow_decimal:
        a = [_parse_decimal(p) for p in parts]
    else:
        a = [_parse_exact(p) for p in parts]
    try:
        if args.family == WILSON:
            return ParamSet.wilson(*a)
        if args.q is None:
            raise UsageError("--q is required for the Askey-Wilson family")
        q = _rat(args.q)
        s = _rat(args.s) if args.s is not None else None
        return ParamSet.askey_wilson(a, q, s)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_decimal(text: str):
    """Rationals, or decimals taken at face value (``"0.5"`` is ``1/2``)."""
    text = text.strip()
    try:
        return parse_gr(text)
    except ValueError:
        pass
    try:
        return Fraction(text)
    except ValueError:
        raise UsageError(f"cannot parse parameter {text!r}") from None


def _common(p: argparse.ArgumentParser, ell_default="1", n_default="0..3"):
    p.add_argument("--family", choices=[WILSON, ASKEY_WILSON], default=WILSON)
    p.add_argument("--a", help="four parameters, e.g. 1,1,2+i,2-i")
    p.add_argument("--q", help="Askey-Wilson base q (exact rational)")
    p.add_argument("--s", help="exact positive square root of q (optional)")
    p.add_argument("--ell", default=ell_default, help="A or A..B")
    p.add_argument("--n", default=n_default, help="A or A..B")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--timing", action="store_true", help="include runtime_ms (not reproducible)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="coefficient tables")
    _common(p)

    p = sub.add_parser("classical", help="coefficient tables of the undeformed system")
    _common(p, ell_default="0")

    p = sub.add_parser("exceptional", help="alias of coeffs")
    _common(p)

    p = sub.add_parser("verify", help="run identity checks")
    _common(p, ell_default="0..2", n_default="0..4")
    p.add_argument("--checks", default=",".join(DEFAULT_CHECKS),
                   help="comma list from: " + ", ".join(ALL_CHECKS))
    p.add_argument("--tol", type=float, default=1e-8, help="orthogonality tolerance")

    p = sub.add_parser("scan", help="hermiticity scan over one or two parameter axes")
    _common(p, ell_default="1")
    p.add_argument("--axis", action="append", default=[],
                   help="NAME=LO:HI:COUNT with NAME in a1..a4, a12, a34 (repeatable, max 2)")

    p = sub.add_parser("limit", help="Askey-Wilson to Wilson limit sweep")
    _common(p, ell_default="1", n_default="0")
    p.add_argument("--L", default="20,40,80,160", help="increasing list of L")
    p.add_argument("--min-ratio", type=float, default=1.5)

    p = sub.add_parser("ortho", help="quadrature Gram matrices against the norm formulas")
    _common(p, ell_default="0..2", n_default="0..4")
    p.add_argument("--tol", type=float, default=1e-8)
    return parser


# output ---------------------------------------------------------------------------


def _emit(args, payload: dict, rows: list[dict] | None = None) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        rows = rows or []
        fields: list[str] = []
        for r in rows:
            fields.extend(k for k in r if k not in fields)
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _csv_cell(v) for k, v in r.items()})
        text = buf.getvalue()
    else:
        text = json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=False) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_cell(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    if v is None:
        return ""
    return v


def _run_tasks(fn, tasks: list, jobs: int) -> list:
    """Map ``fn`` over ``tasks``; results always come back in task order."""
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=1))


# coeffs -----------------------------------------------------------------------------


def _coeff_entry(task):
    ell, n, lam = task
    P = exceptional.exceptional_poly(ell, n, lam)
    entry = {"ell": ell, "n": n, "P": P.to_json()["coeffs"]}
    if ell:
        entry["coeffs"] = exceptional.exceptional_coeffs(ell, n, lam).to_json()
    entry["energy"] = exceptional.exceptional_energy(ell, n, lam).to_json()
    entry["h_ratio"] = exceptional.exceptional_norm_ratio(ell, n, lam).to_json()
    entry["h"] = float(f"{exceptional.exceptional_norm_h(ell, n, lam):.15e}")
    return entry


def cmd_coeffs(args) -> int:
    lam = parse_params(args)
    ells, ns = parse_range(args.ell), parse_range(args.n)
    tasks = [(ell, n, lam) for ell in ells for n in ns]
    entries = _run_tasks(_coeff_entry, tasks, args.jobs)
    xis = {str(ell): exceptional.xi_poly(ell, lam).to_json()["coeffs"] for ell in ells}
    payload = {"command": args.command, "params": lam.to_json(), "xi": xis, "entries": entries}
    rows = []
    for e in entries:
        row = {"ell": e["ell"], "n": e["n"], "P": e["P"], "energy": e["energy"],
               "h": e["h"]}
        row.update(e.get("coeffs", {}))
        rows.append(row)
    _emit(args, payload, rows)
    return EXIT_OK


# verify -------------------------------------------------------------------------------


def _verify_task(task) -> VerificationReport:
    check, ell, n, lam, opts = task
    if check == "difference-eq":
        return classical.check_difference_eq(n, lam)
    if check == "shape-invariance":
        if ell == 0:
            return classical.check_shape_invariance(lam)
        return exceptional.check_shape_invariance_ell(ell, lam)
    if check == "forward-backward":
        return exceptional.check_ladder_ell(ell, n, lam)
    if check == "rodrigues":
        return exceptional.check_rodrigues(ell, n, lam)
    if check == "eigencheck":
        return exceptional.htilde_eigencheck(ell, n, lam)
    if check == "zero-count":
        return analysis.check_zero_count(ell, n, lam)
    if check == "hermiticity":
        return analysis.check_hermiticity(ell, lam)
    if check == "orthogonality":
        return analysis.check_orthogonality(ell, lam, opts["N"], opts["tol"])
    if check == "missing-degrees":
        return exceptional.missing_degrees_check(ell, lam)
    if check == "degeneration":
        return exceptional.check_ell0_degeneration(lam, opts["n_max"])
    raise AssertionError(check)


def _verify_tasks(lam, ells, ns, checks, tol) -> list:
    opts = {"N": max(ns) + 1, "tol": tol, "n_max": max(ns)}
    tasks = []
    for check in checks:
        if check == "degeneration":
            tasks.append((check, 0, None, lam, opts))
            continue
        for ell in ells:
            if check == "difference-eq" and ell != 0:
                continue
            if check in ("missing-degrees", "hermiticity") and ell == 0:
                continue
            if check in PER_N:
                tasks.extend((check, ell, n, lam, opts) for n in ns)
            else:
                tasks.append((check, ell, None, lam, opts))
    return tasks


def _skipped(check, ell, n, lam, why) -> VerificationReport:
    params = lam.to_json()
    params["ell"] = ell
    if n is not None:
        params["n"] = n
    return VerificationReport(check, "skipped", params, True, detail={"skipped": why})


def cmd_verify(args) -> int:
    lam = parse_params(args)
    ells, ns = parse_range(args.ell), parse_range(args.n)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in checks if c not in ALL_CHECKS]
    if bad or not checks:
        raise UsageError(f"unknown checks {bad}; choose from {', '.join(ALL_CHECKS)}")
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    tasks = _verify_tasks(lam, ells, ns, checks, args.tol)

    # numeric checks that presuppose hermiticity are skipped where it is not certified
    certified = {0: True}
    for ell in ells:
        if ell and any(c in NEEDS_HERMITIAN for c in checks):
            try:
                certified[ell] = analysis.zero_free_rectangle(ell, lam).zero_free
            except analysis.SingularConfigurationError:
                certified[ell] = False

    run, slots = [], []
    for t in tasks:
        check, ell, n = t[0], t[1], t[2]
        if check in NEEDS_HERMITIAN and not certified.get(ell, True):
            slots.append(_skipped(check, ell, n, lam, "hermiticity not certified"))
        else:
            slots.append(None)
            run.append(t)
    results = iter(_run_tasks(_verify_task, run, args.jobs))
    reports = [s if s is not None else next(results) for s in slots]

    failed = [r for r in reports if not r.passed]
    payload = {
        "command": "verify",
        "params": lam.to_json(),
        "checks": checks,
        "status": "fail" if failed else "pass",
        "summary": {"total": len(reports), "failed": len(failed)},
        "reports": [r.to_json(timing=args.timing) for r in reports],
    }
    rows = []
    for r in reports:
        j = r.to_json(timing=args.timing)
        rows.append({"check": j["check"], "identity": j["identity"],
                     "ell": r.params.get("ell", ""), "n": r.params.get("n", ""),
                     "status": j["status"], "residual": j["residual"],
                     **({"runtime_ms": j["runtime_ms"]} if args.timing else {})})
    _emit(args, payload, rows)
    return EXIT_FAIL if failed else EXIT_OK


# scan -----------------------------------------------------------------------------


_AXIS_TARGETS = {"a1": (0,), "a2": (1,), "a3": (2,), "a4": (3,), "a12": (0, 1), "a34": (2, 3)}


def parse_axis(text: str):
    m = re.fullmatch(r"\s*(\w+)\s*=\s*([^:]+):([^:]+):(\d+)\s*", text)
    if not m or m.group(1) not in _AXIS_TARGETS:
        raise UsageError(f"bad axis {text!r}; expected NAME=LO:HI:COUNT, NAME in "
                         + ", ".join(_AXIS_TARGETS))
    lo, hi, count = _rat(m.group(2)), _rat(m.group(3)), int(m.group(4))
    if count == 0:
        return m.group(1), []
    if count == 1:
        return m.group(1), [lo]
    step = (hi - lo) / (count - 1)
    return m.group(1), [lo + k * step for k in range(count)]


def _scan_task(task):
    ell, lam = task
    return analysis.scan_point(ell, lam)


def cmd_scan(args) -> int:
    base = parse_params(args)
    ells = parse_range(args.ell)
    if len(ells) != 1:
        raise UsageError("scan takes a single --ell")
    ell = ells[0]
    if not args.axis or len(args.axis) > 2:
        raise UsageError("scan needs one or two --axis options")
    axes = [parse_axis(a) for a in args.axis]
    if any(not vals for _, vals in axes):
        raise UsageError("empty grid")
    points = [()]
    for name, vals in axes:
        points = [p + ((name, v),) for p in points for v in vals]
    lams = []
    for p in points:
        a = list(base.a)
        for name, v in p:
            for idx in _AXIS_TARGETS[name]:
                a[idx] = v
        lam = ParamSet(base.family, tuple(a), base.q, base.s)
        try:
            lam.validate()
        except ParameterError as exc:
            raise UsageError(f"grid point {lam}: {exc}") from None
        lams.append(lam)
    rows = _run_tasks(_scan_task, [(ell, lam) for lam in lams], args.jobs)
    discrepancies = [r for r in rows if r.agree is False and not r.near_boundary]
    payload = {"command": "scan", "ell": ell, "points": [r.to_json() for r in rows],
               "discrepancies": len(discrepancies),
               "inconclusive": sum(r.inconclusive for r in rows)}
    csv_rows = []
    for r in rows:
        j = r.to_json()
        row = {f"a{k + 1}": v for k, v in enumerate(j["params"]["a"])}
        row.update({k: j[k] for k in ("hermiticity_l1", "margin", "zero_free", "count",
                                      "agree", "near_boundary")})
        row["inconclusive"] = r.inconclusive
        csv_rows.append(row)
    _emit(args, payload, csv_rows)
    return EXIT_FAIL if discrepancies else EXIT_OK


# limit ------------------------------------------------------------------------------


def _limit_task(task):
    ell, n, lam_w, L, min_ratio = task
    return analysis.aw_to_w_limit(ell, lam_w, L, n=n, min_ratio=min_ratio)


def cmd_limit(args) -> int:
    if args.family != WILSON:
        raise UsageError("limit takes the Wilson target parameters (--family wilson)")
    lam_w = parse_params(args, allow_decimal=True)
    try:
        L = [float(v) for v in args.L.split(",")]
    except ValueError:
        raise UsageError(f"bad --L {args.L!r}") from None
    if len(L) < 2 or L != sorted(L) or len(set(L)) != len(L) or L[0] <= 0:
        raise UsageError("--L must be at least two increasing positive values")
    tasks = [(ell, n, lam_w, L, args.min_ratio)
             for ell in parse_range(args.ell) for n in parse_range(args.n)]
    tables = _run_tasks(_limit_task, tasks, args.jobs)
    ok = all(t.passed for t in tables)
    payload = {"command": "limit", "params": lam_w.to_json(), "L": L,
               "status": "pass" if ok else "fail",
               "tables": [{"ell": t.ell, "n": t.n, "passed": t.passed,
                           "min_ratio": t.min_ratio, "rows": t.to_rows()} for t in tables]}
    rows = [{"ell": t.ell, "n": t.n, **r} for t in tables for r in t.to_rows()]
    _emit(args, payload, rows)
    return EXIT_OK if ok else EXIT_FAIL


# ortho -------------------------------------------------------------------------------


def _ortho_task(task):
    ell, lam, N, tol = task
    if ell and not analysis.zero_free_rectangle(ell, lam).zero_free:
        return _skipped("orthogonality", ell, None, lam, "hermiticity not certified")
    return analysis.check_orthogonality(ell, lam, N, tol)


def cmd_ortho(args) -> int:
    lam = parse_params(args)
    ns = parse_range(args.n)
    if ns[0] != 0:
        raise UsageError("--n must start at 0 for a Gram matrix")
    tasks = [(ell, lam, len(ns), args.tol) for ell in parse_range(args.ell)]
    reports = _run_tasks(_ortho_task, tasks, args.jobs)
    failed = [r for r in reports if not r.passed]
    payload = {"command": "ortho", "params": lam.to_json(),
               "status": "fail" if failed else "pass",
               "reports": [r.to_json(timing=args.timing) for r in reports]}
    rows = [{"ell": r.params.get("ell"), "status": r.status, **r.detail} for r in reports]
    _emit(args, payload, rows)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_classical(args) -> int:
    if args.ell != "0":
        raise UsageError("classical tables have ell = 0")
    return cmd_coeffs(args)


COMMANDS = {"coeffs": cmd_coeffs, "classical": cmd_classical, "exceptional": cmd_coeffs, "verify": cmd_verify, "scan": cmd_scan,
            "limit": cmd_limit, "ortho": cmd_ortho}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"xell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateParameterError as exc:
        print(f"xell: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
