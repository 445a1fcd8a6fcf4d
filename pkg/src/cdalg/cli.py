"""``cdalg`` command-line interface.

Examples::

    cdalg mul e1+e10 e7+e12 --gammas -1,-1,-1,-1
    cdalg poly companion --poly "-e7-e12; e1+e10" --gammas -1,-1,-1,-1
    cdalg roots --poly "e1; 1; 0; 1/3" --gammas -1,-1
    cdalg eig zero --matrix B.json
    cdalg repro --all --json report.json
"""

from __future__ import annotations

import csv
import json
import re
import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path

from cdalg import algebra as alg
from cdalg import eigen, poly, roots
from cdalg.parsing import (
    ParseError, element_to_json, parse_element, parse_gammas, parse_matrix,
    parse_poly, parse_scalar, poly_to_json,
)
from cdalg.repro import case_ids, repro_all

_NEGATIVE_LITERAL = re.compile(r"^-(?:\d|\.|e\d)")


def _shield_negative_literals(argv: list[str]) -> list[str]:
    # argparse treats "-e1" or "-1,-1" as options; a leading space hides them
    return [" " + a if _NEGATIVE_LITERAL.match(a) else a for a in argv]


def _algebra(args: Namespace) -> alg.Algebra:
    return alg.Algebra(parse_gammas(args.gammas, args.scalar), args.scalar, args.tol)


def _element_out(x: alg.Element) -> dict:
    return {"text": alg.format_element(x), "coords": element_to_json(x)}


def _scalar_out(v) -> str:
    return repr(float(v)) if isinstance(v, float) else str(v)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


# -- algebra commands -----------------------------------------------------------


def cmd_binary(args: Namespace) -> int:
    A = _algebra(args)
    x, y = parse_element(args.x, A), parse_element(args.y, A)
    if args.command == "mul":
        _emit({"result": _element_out(x * y)})
    else:
        sol = alg.solve_left(x, y)
        _emit({"solution": None if sol is None else _element_out(sol)})
    return 0


def cmd_unary(args: Namespace) -> int:
    A = _algebra(args)
    x = parse_element(args.x, A)
    if args.command == "conj":
        _emit({"result": _element_out(x.conj())})
    elif args.command == "norm":
        _emit({"result": _scalar_out(x.norm())})
    elif args.command == "trace":
        _emit({"result": _scalar_out(x.trace())})
    else:
        _emit({"result": _element_out(x.inverse())})
    return 0


def cmd_table(args: Namespace) -> int:
    A = _algebra(args)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow([""] + [f"e{j}" for j in range(A.dim)])
    for i in range(A.dim):
        row = [f"e{i}"]
        for j in range(A.dim):
            row.append(alg.format_element(A.basis(i) * A.basis(j)))
        w.writerow(row)
    return 0


def cmd_identities(args: Namespace) -> int:
    rep = alg.identity_report(_algebra(args), args.trials, args.seed)
    _emit(rep.to_dict())
    return 0


# -- polynomial commands ------------------------------------------------------------


def _poly_out(f: poly.CDPoly) -> dict:
    return {"text": poly.format_poly(f), "coeffs": poly_to_json(f)}


def cmd_poly(args: Namespace) -> int:
    A = _algebra(args)
    f = parse_poly(args.poly, A)
    op = args.poly_command
    if op == "eval":
        _emit({"value": _element_out(f(parse_element(args.at, A)))})
    elif op == "companion":
        _emit({"companion": [_scalar_out(c) for c in poly.companion(f).coeffs]})
    elif op == "divlin":
        g, r = poly.right_divide_linear(f, parse_element(args.at, A))
        _emit({"quotient": _poly_out(g), "remainder": _element_out(r)})
    elif op == "divquad":
        q, a, b = poly.divide_central_quadratic(f, parse_scalar(args.t, A), parse_scalar(args.n, A))
        _emit({"quotient": _poly_out(q), "a": _element_out(a), "b": _element_out(b)})
    else:
        _emit({"derivative": _poly_out(poly.derivative(f))})
    return 0


def cmd_roots(args: Namespace) -> int:
    A = _algebra(args)
    f = parse_poly(args.poly, A)
    _emit([c.to_dict() for c in roots.all_roots(f)])
    return 0


def cmd_factor(args: Namespace) -> int:
    A = _algebra(args)
    f = parse_poly(args.poly, A)
    _emit(roots.factorize(f).to_dict(f))
    return 0


# -- eigen commands -------------------------------------------------------------------


def cmd_eig(args: Namespace) -> int:
    A = _algebra(args)
    B = parse_matrix(Path(args.matrix).read_text(), A)
    op = args.eig_command
    if op == "exists":
        _emit(eigen.eig_exists(B).to_dict())
    elif op == "from-t":
        if args.t is None:
            raise ParseError("from-t needs --t")
        _emit([p.to_dict() for p in eigen.eig_from_t(B, parse_element(args.t, A))])
    elif op == "zero":
        res = eigen.zero_in_spectrum(B)
        _emit({"zero_in_spectrum": res.member,
               "witness": None if res.witness is None else _element_out(res.witness)})
    elif op == "oracle":
        if args.lam is None:
            raise ParseError("oracle needs --lambda")
        _emit({"singular": eigen.spectrum_oracle(B, parse_element(args.lam, A))})
    elif op == "assoc":
        sp = eigen.assoc_eig2x2(B)
        _emit({"points": [_element_out(p) for p in sp.points],
               "spheres": [{"t": t, "n": n} for t, n in sp.spheres]})
    else:
        lams = eigen.spectrum_sample(B, args.samples, args.seed)
        _emit({"approximate": True, "eigenvalues": [_element_out(x) for x in lams]})
    return 0


# -- repro ---------------------------------------------------------------------------


def cmd_repro(args: Namespace) -> int:
    only = None if args.all or not args.case else args.case
    if only:
        unknown = [c for c in only if c not in case_ids()]
        if unknown:
            print(f"unknown case(s): {', '.join(unknown)}", file=sys.stderr)
            return 2
    results = repro_all(args.seed, only)
    for r in results:
        print(r.line())
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} cases passed")
    if args.json:
        Path(args.json).write_text(json.dumps(
            {"seed": args.seed, "cases": [r.to_dict() for r in results]}, indent=2, default=str))
    return 0 if passed == len(results) else 1


# -- parser -----------------------------------------------------------------------------


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--gammas", default="-1,-1,-1",
                        help="comma-separated doubling parameters (default: octonions)")
    common.add_argument("--scalar", choices=("rational", "f64"), default="rational")
    common.add_argument("--tol", type=float, default=alg.DEFAULT_TOL)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=500)

    p = ArgumentParser(prog="cdalg", description="Cayley-Dickson algebra toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("mul", "solve-left"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("x")
        s.add_argument("y")
        s.set_defaults(func=cmd_binary)
    for name in ("conj", "norm", "trace", "inv"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("x")
        s.set_defaults(func=cmd_unary)
    sub.add_parser("table", parents=[common]).set_defaults(func=cmd_table)
    sub.add_parser("identities", parents=[common]).set_defaults(func=cmd_identities)

    sp = sub.add_parser("poly", parents=[common])
    sp.add_argument("poly_command", choices=("eval", "companion", "divlin", "divquad", "derive"))
    sp.add_argument("--poly", required=True, help="'c0; c1; ...' constant term first")
    sp.add_argument("--at", help="element for eval / divlin")
    sp.add_argument("--t", default="0")
    sp.add_argument("--n", default="1")
    sp.set_defaults(func=cmd_poly)

    for name, func in (("roots", cmd_roots), ("factor", cmd_factor)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--poly", required=True)
        s.set_defaults(func=func)

    se = sub.add_parser("eig", parents=[common])
    se.add_argument("eig_command", choices=("exists", "from-t", "zero", "oracle", "assoc", "sample"))
    se.add_argument("--matrix", required=True, help="JSON file with keys a, b, c, d")
    se.add_argument("--t")
    se.add_argument("--lambda", dest="lam")
    se.add_argument("--samples", type=int, default=eigen.DEFAULT_SAMPLES)
    se.set_defaults(func=cmd_eig)

    sr = sub.add_parser("repro")
    sr.add_argument("--all", action="store_true")
    sr.add_argument("--case", action="append", help="case id, e.g. R9 (repeatable)")
    sr.add_argument("--seed", type=int, default=42)
    sr.add_argument("--json", help="write the report as JSON to this path")
    sr.set_defaults(func=cmd_repro)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_shield_negative_literals(argv))
    try:
        return args.func(args)
    except (ParseError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
