"""Command-line front end: ``galois-polylog verify ...``, ``expand``, ``bch`` and ``selftest``.

Exit status is 0 when every requested check passes, 1 when one fails and 2 on
a usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from typing import Sequence

from . import associator, charconv, polylog_num, selftest, tensorcrit
from .freelie import LieElement, bch, bracket_string
from .ncpoly import word_key
from .report import VerificationReport, make_report
from .rings import PolynomialRing
from .symbols import NamedSymbols, Side

MAX_DEGREE = associator.MAX_TRUNC
DEFAULT_DEGREE = 6
ELLS = (2, 3, 5, 7)


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    # defaults are suppressed so flags given after the subcommand do not
    # clobber those given before it
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print JSON reports")
    p.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="numeric tolerance (default 1e-12)")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled points and property checks")
    p.add_argument("--degree", type=int, default=argparse.SUPPRESS,
                   help=f"truncation degree (default {DEFAULT_DEGREE}, at most {MAX_DEGREE})")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    # the top level gets its own copy: set_defaults would otherwise leak into the shared actions
    parser = argparse.ArgumentParser(prog="galois-polylog", parents=[_common()],
                                     description="Symbolic and numeric checks of polylogarithm functional equations.")
    parser.set_defaults(json=False, tol=1e-12, seed=0, degree=DEFAULT_DEGREE)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run a verification")
    checks = verify.add_subparsers(dest="check", required=True)
    side = dict(choices=["complex", "ladic", "both"], default="both")
    mode = dict(choices=["symbolic", "numeric"], default="symbolic")

    p = checks.add_parser("landen3", parents=[common], help="Landen trilogarithm equation")
    p.add_argument("--side", **side)
    p.add_argument("--mode", **mode)
    p.add_argument("--swapped-square", action="store_true",
                   help="l-adic side: compare against the variant with -rho_z^2/4 (expected to fail)")
    p = checks.add_parser("oiueno", parents=[common], help="Oi-Ueno functional equation")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--side", **side)
    p.add_argument("--mode", **mode)
    checks.add_parser("dilog-forms", parents=[common], help="character forms of the l-adic equations")
    checks.add_parser("tensor-criterion", parents=[common], help="tensor criterion for the Landen equation")
    checks.add_parser("error-term", parents=[common], help="l-adic error term")
    p = checks.add_parser("pipeline", parents=[common], help="weight 3 assembly of the Landen equation")
    p.add_argument("--side", **side)
    p.add_argument("--axioms", choices=["default", "none"], default="default",
                   help="Kummer cocycle rewrites for z/(z-1) and 1/(1-z)")
    p = checks.add_parser("integrality", parents=[common], help="Z_l-integrality of character-form terms")
    p.add_argument("--eq", choices=sorted(charconv.CHARACTER_EQUATIONS) + ["all"], default="all")
    p.add_argument("--ell", type=int, nargs="+", default=list(ELLS))

    p = sub.add_parser("expand", parents=[common], help="print a fixture associator series")
    p.add_argument("--which", choices=sorted(associator.FIXTURES), required=True)
    sub.add_parser("bch", parents=[common], help="print log(exp(X) exp(Y)) in the Lyndon basis")
    sub.add_parser("selftest", parents=[common], help="run the randomized property checks")
    return parser


# -- helpers ---------------------------------------------------------------------

def sample_points(seed: int, n: int, lo: float = 0.05, hi: float = 0.5) -> list[float]:
    """``n`` points in (lo, hi], always including hi."""
    rng = random.Random(f"points:{seed}")
    pts = {hi}
    while len(pts) < n:
        pts.add(round(rng.uniform(lo, hi), 6))
    return sorted(p for p in pts if lo < p <= hi)


def _sides(value: str) -> list[str]:
    return ["complex", "ladic"] if value == "both" else [value]


def _numeric_report(check_id: str, ref: str, rows: list[polylog_num.NumericRow], tol: float) -> VerificationReport:
    worst = max(r.residual for r in rows)
    rep = make_report(check_id, ref, f"{worst:.3e}")
    rep.tol = tol
    return rep


def _degree(args) -> int:
    if not 1 <= args.degree <= MAX_DEGREE:
        raise UsageError(f"--degree must lie between 1 and {MAX_DEGREE}")
    return args.degree


# -- commands ----------------------------------------------------------------------

def run_verify(args, out: dict) -> None:
    reports: list[VerificationReport] = out["reports"]
    rows: list[polylog_num.NumericRow] = out["rows"]
    check = args.check
    if check in ("landen3", "oiueno"):
        if check == "oiueno" and not 2 <= args.k <= MAX_DEGREE:
            raise UsageError(f"--k must lie between 2 and {MAX_DEGREE} (truncation limit)")
        if args.mode == "numeric":
            if args.side == "ladic":
                raise UsageError("numeric mode is only available on the complex side")
            if check == "landen3":
                pts = sample_points(args.seed, 10)
                new = [polylog_num.numeric_check("landen-1.3", z, args.tol) for z in pts]
                reports.append(_numeric_report("landen3-numeric", "Landen trilogarithm equation", new, args.tol))
            else:
                if args.k > 5:
                    raise UsageError("numeric Oi-Ueno checks are available for k <= 5")
                pts = sample_points(args.seed, 5, 0.05, 0.95)
                new = [polylog_num.numeric_check("oiueno-1.4", z, args.tol, k=args.k) for z in pts]
                reports.append(_numeric_report(f"oiueno-{args.k}-numeric",
                                               f"Oi-Ueno functional equation, weight {args.k}", new, args.tol))
            rows.extend(new)
            return
        for s in _sides(args.side):
            if check == "landen3":
                reports.append(associator.verify_landen3(s, swapped_square=args.swapped_square))
            else:
                reports.append(associator.verify_oiueno(args.k, s))
    elif check == "dilog-forms":
        reports.append(charconv.verify_dilog_forms())
    elif check == "tensor-criterion":
        reports.append(tensorcrit.tensor_criterion_report())
        out["text"].append(tensorcrit.verify_tensor_criterion().trace())
    elif check == "error-term":
        reports.append(tensorcrit.verify_error_term())
    elif check == "pipeline":
        for s in _sides(args.side):
            if s == "complex":
                rep, vals = tensorcrit.pipeline_complex_report(sample_points(args.seed, 20), args.tol)
                reports.append(rep)
                for v in vals:
                    terms = {f"term{i}": t for i, t in enumerate(v.terms, start=1)}
                    rows.append(polylog_num.NumericRow("pipeline-complex", v.z, v.residual, args.tol, terms))
            else:
                ns = NamedSymbols(PolynomialRing(), Side.LADIC)
                rep = tensorcrit.pipeline_ladic({} if args.axioms == "none" else None, ns)
                reports.append(rep)
                if rep.status == "fail":
                    mons = tensorcrit.axiom_sensitive_monomials(rep, ns)
                    out["text"].append("axiom-sensitive monomials: " + ", ".join(mons))
    elif check == "integrality":
        eqs = sorted(charconv.CHARACTER_EQUATIONS) if args.eq == "all" else [args.eq]
        for eq in eqs:
            bad = []
            rep = make_report(f"integrality-{eq}", f"integrality of the character-form equation {eq}", "0")
            for ell in args.ell:
                try:
                    table = charconv.integrality_table(eq, ell)
                except ValueError as exc:
                    raise UsageError(str(exc)) from exc
                for row in table:
                    res = "0" if row.status == "integral" else f"witness {row.witness}"
                    rep.add(f"{row.term} at l={ell} ({row.cases} residue cases mod {row.modulus})",
                            "integrality", res)
                    if row.status != "integral":
                        bad.append(f"{row.term} (l={ell})")
            rep.residual = "; ".join(bad) if bad else "0"
            reports.append(rep)


def run_expand(args, out: dict) -> None:
    n = _degree(args)
    f = associator.fixture(args.which, n)
    coeffs = {w: str(c) for w, c in sorted(f.series.coeffs.items(), key=lambda t: word_key(t[0]))}
    out["data"] = {"which": args.which, "degree": n, "group-like": f.certify().ok, "coefficients": coeffs}
    lines = [f"# {args.which} up to degree {n}"] + [f"{w or '1'}\t{c}" for w, c in coeffs.items()]
    out["text"].append("\n".join(lines))


def run_bch(args, out: dict) -> None:
    n = _degree(args)
    x = LieElement.generator("X", trunc=n)
    y = LieElement.generator("Y", trunc=n)
    L = bch(x, y)
    items = sorted(L.coeffs.items(), key=lambda t: word_key(t[0]))
    out["data"] = {"degree": n, "terms": [{"lyndon": w, "bracket": bracket_string(w), "coefficient": str(c)}
                                         for w, c in items]}
    out["text"].append("\n".join(f"{c}\t{bracket_string(w)}" for w, c in items))


def run_selftest(args, out: dict) -> None:
    results = selftest.run(args.seed)
    rep = make_report("selftest", f"randomized property checks, seed {args.seed}",
                      "0" if all(r.ok for r in results) else "; ".join(r.name for r in results if not r.ok))
    for r in results:
        rep.add(f"{r.name} ({r.detail})", "property check", "0" if r.ok else r.detail or "failed")
    out["reports"].append(rep)


COMMANDS = {"verify": run_verify, "expand": run_expand, "bch": run_bch, "selftest": run_selftest}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = {"reports": [], "rows": [], "text": [], "data": None}
    start = time.perf_counter()
    try:
        COMMANDS[args.command](args, out)
    except (UsageError, polylog_num.DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start
    reports = sorted(out["reports"], key=lambda r: r.check_id)
    if args.json:
        if out["data"] is not None:
            print(json.dumps(out["data"], indent=2))
        else:
            print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for t in out["text"]:
            print(t)
        if out["rows"]:
            w = csv.writer(sys.stdout, lineterminator="\n")
            w.writerow(["equation-id", "z", "residual", "terms"])
            for row in out["rows"]:
                w.writerow(row.to_csv_row())
        for r in reports:
            print(r.summary())
        if reports:
            print(f"{sum(r.ok for r in reports)}/{len(reports)} checks passed in {elapsed:.2f}s")
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
