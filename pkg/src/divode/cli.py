"""Command line: ``divode solve | pade | sum | expand``.

Exit status 0 on success, 2 for malformed input, 3 when a Euler sum (or
the Padé step behind it) is undefined, 4 when 1/phi has no Maclaurin
expansion, 5 when a solution fails exact verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .diffop import BasisTerm, canonical_term
from .errors import DivodeError, InvalidArgument, ParseError
from .expr import parse_rhs_expression, render_solution, render_term_body
from .pade import pade_approximant
from .rational import Poly, Q, fmt, ratfun_normalize
from .series import cesaro_means, convergence_radius, euler_sum, maclaurin_coeffs
from .solver import METHODS, ODEProblem, SolveOptions, solve


def parse_rational_list(text: str, what: str) -> list[Fraction]:
    items = [s.strip() for s in text.split(",")]
    try:
        return [Q(s) for s in items]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what}: expected comma-separated rationals, got {text!r}") from None


def parse_operator(items) -> Poly:
    if isinstance(items, str):
        coeffs = parse_rational_list(items, "operator")
    else:
        try:
            coeffs = [Q(c) for c in items]
        except (TypeError, ValueError, ZeroDivisionError):
            raise ParseError(f"operator: expected a list of rationals, got {items!r}") from None
    if len(coeffs) < 2:
        raise ParseError("operator needs at least a_0 and a_1")
    if coeffs[-1] == 0:
        raise ParseError("leading operator coefficient must be nonzero")
    return Poly(coeffs)


def parse_rhs(rhs) -> list[tuple[Fraction, BasisTerm]]:
    if isinstance(rhs, str):
        terms = parse_rhs_expression(rhs)
    elif isinstance(rhs, list):
        terms = []
        try:
            for item in rhs:
                sign, t = canonical_term(int(item.get("power", 0)), Q(item.get("alpha", "0")),
                                         Q(item.get("beta", "0")), item.get("kind", "exp"))
                if t is not None:
                    terms.append((sign * Q(item.get("coef", "1")), t))
        except (TypeError, ValueError, AttributeError, ZeroDivisionError) as exc:
            raise ParseError(f"rhs: malformed term list ({exc})") from None
    else:
        raise ParseError("rhs must be an expression string or a list of terms")
    if not any(c for c, _ in terms):
        raise ParseError("right-hand side is empty")
    return terms


def load_document(path: str) -> dict:
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read problem document: {exc}") from None
    if not isinstance(doc, dict) or "operator" not in doc or "rhs" not in doc:
        raise ParseError("problem document needs 'operator' and 'rhs'")
    return doc


def _decimal(terms) -> str:
    parts = []
    for c, t in terms:
        body = render_term_body(t)
        num = f"{abs(float(c)):.10g}"
        piece = f"{num}*{body}" if body else num
        if not parts:
            parts.append(piece if c > 0 else f"-{piece}")
        else:
            parts.append(("+ " if c > 0 else "- ") + piece)
    return " ".join(parts) if parts else "0"


def _emit_report(dest: Optional[str], payload: dict):
    text = json.dumps(payload, indent=2)
    if dest in (None, "-"):
        print(text)
    else:
        with open(dest, "w") as fh:
            fh.write(text + "\n")


def cmd_solve(args) -> int:
    if args.json:
        doc = load_document(args.json)
    elif args.expr is not None and args.operator is not None:
        doc = {"operator": args.operator, "rhs": args.expr, "options": {}}
    else:
        raise ParseError("give --json FILE, or both --expr and --operator")
    doc_opts = doc.get("options") or {}
    try:
        opts = SolveOptions(
            method=args.method or doc_opts.get("method", "auto"),
            truncation=args.truncation if args.truncation is not None else doc_opts.get("truncation"),
            reduce=not args.no_reduce and bool(doc_opts.get("reduce", True)))
    except InvalidArgument as exc:
        raise ParseError(str(exc)) from None
    want_report = args.report is not None or bool(doc_opts.get("report"))
    report_dest = args.report if args.report is not None else "-"

    problem = ODEProblem(parse_operator(doc["operator"]), tuple(parse_rhs(doc["rhs"])))
    try:
        y, report = solve(problem, opts.method, opts.truncation, opts.reduce)
    except DivodeError as exc:
        if want_report and exc.report is not None:
            payload = exc.report.to_json()
            payload["error"] = {"code": exc.code, "message": str(exc)}
            _emit_report(report_dest, payload)
        raise
    text = render_solution(y)
    print(text)
    if args.decimal:
        print(f"approx: {_decimal(y.terms())}")
    if want_report:
        payload = report.to_json()
        payload["solution"] = text
        payload["basis"] = [t.to_json() for t in y.basis]
        payload["coords"] = [fmt(c) for c in y.coords]
        _emit_report(report_dest, payload)
    return 0


def cmd_pade(args) -> int:
    coeffs = parse_rational_list(args.coeffs, "coeffs")
    res = pade_approximant(coeffs, args.L, args.M)
    if not res.exact:
        print("note: approximant only; expansion does not match every coefficient",
              file=sys.stderr)
    if args.json:
        payload = res.fraction.to_json()
        payload.update(exact=res.exact, L_used=res.L_used, M_used=res.M_used)
        print(json.dumps(payload))
    else:
        print(res.fraction)
    return 0


def cmd_sum(args) -> int:
    coeffs = parse_rational_list(args.coeffs, "coeffs")
    if args.cesaro:
        value = cesaro_means(coeffs, len(coeffs))[-1]
    else:
        L = args.L if args.L is not None else (len(coeffs) - 1) // 2
        M = args.M if args.M is not None else len(coeffs) - 1 - L
        value = euler_sum(coeffs, L, M)
    print(fmt(value))
    if args.decimal:
        print(f"approx: {float(value):.12g}")
    return 0


def cmd_expand(args) -> int:
    R = ratfun_normalize(Poly(parse_rational_list(args.num, "num")),
                         Poly(parse_rational_list(args.den, "den")))
    s = maclaurin_coeffs(R, args.order)
    print(", ".join(fmt(c) for c in s))
    if args.radius:
        print(f"radius (approx): {convergence_radius(R):.12g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="divode",
        description="Exact particular solutions of constant-coefficient linear ODEs.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="particular solution of phi(D) y = f")
    s.add_argument("--method", choices=METHODS)
    s.add_argument("--truncation", type=int, help="series degree (default L+M)")
    s.add_argument("--report", nargs="?", const="-", metavar="FILE",
                   help="write the JSON report to FILE (or stdout)")
    s.add_argument("--decimal", action="store_true", help="also print an approximate float form")
    s.add_argument("--no-reduce", action="store_true",
                   help="divergent path: skip the x^k resonance reduction")
    s.add_argument("--json", metavar="FILE", help="problem document ('-' for stdin)")
    s.add_argument("--expr", help='right-hand side, e.g. "exp(x)*sin(x) - 2*exp(x)*cos(x)"')
    s.add_argument("--operator", help='a_0,...,a_n, e.g. --operator=1,-1,-1')
    s.set_defaults(func=cmd_solve)

    p = sub.add_parser("pade", help="series coefficients -> R_[L/M]")
    p.add_argument("--coeffs", required=True, help="c_0,c_1,... (use --coeffs=-2,...)")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pade)

    u = sub.add_parser("sum", help="Euler (or Cesàro) sum of a series")
    u.add_argument("--coeffs", required=True)
    u.add_argument("--L", type=int)
    u.add_argument("--M", type=int)
    u.add_argument("--cesaro", action="store_true", help="last arithmetic mean instead")
    u.add_argument("--decimal", action="store_true")
    u.set_defaults(func=cmd_sum)

    e = sub.add_parser("expand", help="rational function -> Maclaurin coefficients")
    e.add_argument("--num", required=True)
    e.add_argument("--den", required=True)
    e.add_argument("-N", "--order", type=int, default=8)
    e.add_argument("--radius", action="store_true")
    e.set_defaults(func=cmd_expand)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DivodeError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return exc.exit_status


if __name__ == "__main__":
    sys.exit(main())
