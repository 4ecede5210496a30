"""Command-line front end.

    wrtwists canonical|twists|classes|verify|oracle-check --d D
             (--gens "p,q;p,q..." | --canonical "t,y,g")
             [--format json|csv|table] [--oracle-bound N]

Exit codes: 0 ok, 1 usage, 2 bad field, 3 zero ideal, 4 internal
invariant failure, 5 oracle mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .criteria import NotTwistable, cos_theta, f1_coeff, f2_coeff, twist_beta, twist_embed
from .enumeration import GoodTuple, InvariantViolation, all_good_tuples, basis_of, check_good_tuple
from .field import FieldDesc, FieldError, QuadElem, format_rat
from .ideal import IdealTriple, InconsistentIdeal, ZeroIdeal, canonical_basis
from .oracle import InsufficientBound, brute_force_good_tuples, is_well_rounded_numeric
from .similarity import classify, cos_abs_key

COMMANDS = ("canonical", "twists", "classes", "verify", "oracle-check")
EXIT_OK, EXIT_USAGE, EXIT_FIELD, EXIT_ZERO, EXIT_INVARIANT, EXIT_ORACLE = 0, 1, 2, 3, 4, 5


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    d: int
    generators: Optional[list[tuple[int, int]]] = None
    canonical: Optional[tuple[int, int, int]] = None
    output_format: str = "json"
    oracle_bound: Optional[int] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if (self.generators is None) == (self.canonical is None):
            raise UsageError("give exactly one of --gens and --canonical")


def parse_gens(text: str) -> list[tuple[int, int]]:
    gens = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [s.strip() for s in chunk.split(",")]
        if len(parts) != 2:
            raise UsageError(f"generator {chunk!r} is not of the form p,q")
        gens.append((int(parts[0]), int(parts[1])))
    if not gens:
        raise UsageError("no generators given")
    return gens


def parse_canonical(text: str) -> tuple[int, int, int]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 3:
        raise UsageError(f"canonical basis {text!r} is not of the form t,y,g")
    t, y, g = (int(s) for s in parts)
    return t, y, g


def resolve_ideal(cfg: RunConfig) -> IdealTriple:
    k = FieldDesc(cfg.d)
    if cfg.canonical is not None:
        return IdealTriple(k, *cfg.canonical)
    return canonical_basis([QuadElem(p, q) for p, q in cfg.generators], k)


# -- report assembly ---------------------------------------------------------


def _rat(x: Fraction) -> str:
    return format_rat(x)


def tuple_record(I: IdealTriple, t4: GoodTuple) -> dict:
    B = basis_of(I, t4)
    beta = twist_beta(B)
    v1, v2 = twist_embed(B)
    return {
        "a": t4.a,
        "c": t4.c,
        "b": t4.b,
        "d": t4.d,
        "f1": _rat(f1_coeff(B)),
        "f2": _rat(f2_coeff(B)),
        "beta": _rat(beta),
        "cos": _rat(cos_theta(B)),
        "alpha_float": float(beta) ** 0.25,
        "basis_float": [list(v1), list(v2)],
    }


def class_records(I: IdealTriple, tuples: list[GoodTuple]) -> list[dict]:
    index = {t4: i for i, t4 in enumerate(tuples)}
    return [
        {
            "cos_abs": _rat(cl.cos_abs),
            "label": cl.label.value,
            "members": [index[t4] for t4 in cl.representatives],
        }
        for cl in classify(I, tuples)
    ]


def base_report(I: IdealTriple) -> dict:
    return {
        "field": {"d": I.field.d, "case": I.field.case.value},
        "ideal": {"t": I.t, "y": I.y, "g": I.g},
    }


def verify_tuples(I: IdealTriple, tuples: list[GoodTuple]) -> list[dict]:
    results = []
    for t4 in tuples:
        problems = []
        try:
            check_good_tuple(I, t4)
            key = cos_abs_key(I, t4)
            B = basis_of(I, t4)
            exact_cos = cos_theta(B)
            if abs(exact_cos) != key:
                problems.append("cos key mismatch")
            v1, v2 = twist_embed(B)
            n1, n2 = math.hypot(*v1), math.hypot(*v2)
            if abs(n1 - n2) > 1e-9 * max(n1, n2):
                problems.append("twisted norms differ")
            fcos = (v1[0] * v2[0] + v1[1] * v2[1]) / (n1 * n2)
            if abs(fcos) > 0.5 + 1e-12:
                problems.append("|cos| above 1/2")
            if abs(fcos - float(exact_cos)) > 1e-9:
                problems.append("float cosine disagrees")
            if not is_well_rounded_numeric(v1, v2, 1e-9):
                problems.append("not well-rounded")
        except (InvariantViolation, NotTwistable, ArithmeticError) as exc:
            problems.append(str(exc))
        results.append({"tuple": list(t4), "ok": not problems, "problems": problems})
    return results


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Execute one command; returns (exit status, report)."""
    try:
        I = resolve_ideal(cfg)
    except FieldError as exc:
        return EXIT_FIELD, {"error": str(exc)}
    except ZeroIdeal as exc:
        return EXIT_ZERO, {"error": str(exc)}
    except InconsistentIdeal as exc:
        return EXIT_INVARIANT, {"error": str(exc)}

    if cfg.command == "canonical":
        return EXIT_OK, {"t": I.t, "y": I.y, "g": I.g}

    report = base_report(I)
    try:
        tuples = all_good_tuples(I)
        report["tuples"] = [tuple_record(I, t4) for t4 in tuples]
        if cfg.command in ("classes", "verify"):
            report["classes"] = class_records(I, tuples)
    except (InvariantViolation, ArithmeticError) as exc:
        report["error"] = str(exc)
        return EXIT_INVARIANT, report

    if cfg.command == "verify":
        checks = verify_tuples(I, tuples)
        report["verify"] = checks
        report["ok"] = all(c["ok"] for c in checks)
        return (EXIT_OK if report["ok"] else EXIT_INVARIANT), report

    if cfg.command == "oracle-check":
        try:
            expected = brute_force_good_tuples(I, cfg.oracle_bound)
        except InsufficientBound as exc:
            report["error"] = str(exc)
            report["safe_bound"] = exc.safe_bound
            return EXIT_USAGE, report
        got = set(tuples)
        report["oracle"] = {
            "algorithm_count": len(got),
            "oracle_count": len(expected),
            "missing": [list(t) for t in sorted(expected - got)],
            "extra": [list(t) for t in sorted(got - expected)],
        }
        report["ok"] = got == expected
        return (EXIT_OK if report["ok"] else EXIT_ORACLE), report

    return EXIT_OK, report


# -- rendering ---------------------------------------------------------------


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


_CSV_FIELDS = ["a", "c", "b", "d", "f1", "f2", "beta", "cos", "alpha_float", "class"]


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "tuples" not in report:
        keys = sorted(k for k in report if not isinstance(report[k], (dict, list)))
        w.writerow(keys)
        w.writerow([report[k] for k in keys])
        return buf.getvalue()
    member_class = {}
    for ci, cl in enumerate(report.get("classes", [])):
        for m in cl["members"]:
            member_class[m] = ci
    w.writerow(_CSV_FIELDS)
    for i, rec in enumerate(report["tuples"]):
        row = [rec[f] for f in _CSV_FIELDS[:-1]]
        row.append(member_class.get(i, ""))
        w.writerow(row)
    return buf.getvalue()


def to_table(report: dict) -> str:
    lines = []
    if "field" in report:
        f, i = report["field"], report["ideal"]
        lines.append(f"Q(sqrt(-{f['d']})) [{f['case']}]  ideal (t, y, g) = ({i['t']}, {i['y']}, {i['g']})")
    elif "t" in report:
        lines.append(f"(t, y, g) = ({report['t']}, {report['y']}, {report['g']})")
    if "error" in report:
        lines.append(f"error: {report['error']}")
    if report.get("tuples"):
        lines.append("")
        lines.append(f"{'#':>3}  {'(a, c, b, d)':<28} {'cos':>14} {'beta':>16} {'alpha':>12}")
        for n, rec in enumerate(report["tuples"]):
            tup = f"({rec['a']}, {rec['c']}, {rec['b']}, {rec['d']})"
            lines.append(
                f"{n:>3}  {tup:<28} {rec['cos']:>14} {str(rec['beta']):>16} {rec['alpha_float']:>12.6g}"
            )
    for cl in report.get("classes", []):
        lines.append(f"class |cos| = {cl['cos_abs']:<12} {cl['label']:<11} members {cl['members']}")
    if "oracle" in report:
        o = report["oracle"]
        lines.append(f"oracle: {o['oracle_count']} tuples, algorithm: {o['algorithm_count']}")
        if o["missing"] or o["extra"]:
            lines.append(f"  missing {o['missing']}  extra {o['extra']}")
    if "ok" in report:
        lines.append("OK" if report["ok"] else "FAILED")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": to_json, "csv": to_csv, "table": to_table}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wrtwists", description="Well-rounded twists of ideal lattices")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--d", type=int, required=True, help="squarefree D > 0 of Q(sqrt(-D))")
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--gens", help='O_K-generators as "p,q;p,q" meaning p + q*delta')
    src.add_argument("--canonical", help='canonical basis as "t,y,g"')
    parser.add_argument("--format", choices=sorted(RENDERERS), default="json")
    parser.add_argument("--oracle-bound", type=int, default=None)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse reports usage errors with 2, which is reserved for a bad field
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig(
            command=args.command,
            d=args.d,
            generators=parse_gens(args.gens) if args.gens is not None else None,
            canonical=parse_canonical(args.canonical) if args.canonical is not None else None,
            output_format=args.format,
            oracle_bound=args.oracle_bound,
        )
    except (UsageError, ValueError) as exc:
        print(f"wrtwists: {exc}", file=sys.stderr)
        return EXIT_USAGE
    status, report = run(cfg)
    if "error" in report:
        print(f"wrtwists: {report['error']}", file=sys.stderr)
    sys.stdout.write(RENDERERS[cfg.output_format](report))
    if cfg.output_format == "json":
        sys.stdout.write("\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
