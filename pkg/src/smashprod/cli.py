"""Command-line front end: ``smashprod eval|verify|tables``.

Exit status is 0 on success, 1 when a verification fails or an expression
cannot be evaluated, 2 on usage errors (bad arguments, syntax and type
errors).
"""

from __future__ import annotations

import argparse
import json
import sys

from smashprod import combinatorics as cb
from smashprod import expr as ex
from smashprod import nsym, sym, verify
from smashprod.formal import FormalSum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="smashprod", description="Smash, convolution and internal products on permutations, NSym, Sym and QSym.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate an expression")
    e.add_argument("expression")
    e.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    v.add_argument("--max-degree", type=int, required=True)
    v.add_argument("--json", action="store_true")

    t = sub.add_parser("tables", help="structure constants over all basis pairs of degrees p, q")
    t.add_argument("--op", required=True, choices=("smash", "conv", "internal"))
    t.add_argument("--algebra", required=True, choices=("nsym", "sym", "schur"))
    t.add_argument("--degrees", type=int, nargs=2, required=True, metavar=("P", "Q"))
    return p


def _emit(text: str, out) -> None:
    out.write(text + "\n")


def cmd_eval(args, out) -> int:
    try:
        value = ex.run(args.expression)
    except (ex.ParseError, ex.AlgebraError) as e:
        raise UsageError(str(e)) from None
    except ex.EvaluationError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_FAIL
    if args.format == "json":
        _emit(json.dumps(ex.to_json(value)), out)
    else:
        _emit(ex.render(value), out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    report = verify.run_suite(args.suite, args.max_degree)
    if args.json:
        _emit(json.dumps(report.to_json(), indent=2), out)
    else:
        for line in report.lines():
            _emit(line, out)
    return EXIT_OK if report.passed else EXIT_FAIL


_OPS = {
    ("smash", "nsym"): nsym.smash_X,
    ("conv", "nsym"): nsym.convolve_X,
    ("internal", "nsym"): nsym.internal_X,
    ("smash", "sym"): sym.smash_h,
    ("conv", "sym"): lambda a, b: FormalSum.basis(sym.external_h(a, b)),
    ("internal", "sym"): sym.internal_h,
}


def table(op: str, algebra: str, p: int, q: int) -> dict:
    """JSON table ``{"entries": [{"left", "right", "result", "text"}]}``."""
    if op == "internal" and p != q:
        raise UsageError(f"internal product needs equal degrees, got {p} and {q}")
    if p < 0 or q < 0:
        raise UsageError("degrees must be non-negative")
    if algebra == "nsym":
        keys, typ = cb.compositions_of, ex.Type("nsym")
        fn = _OPS[(op, "nsym")]
    else:
        keys, typ = cb.partitions_of, ex.Type(algebra)
        fn = _OPS[(op, "sym")]
        if algebra == "schur":
            base = fn

            def fn(a, b, base=base):
                lhs, rhs = sym.schur_to_h(FormalSum.basis(a)), sym.schur_to_h(FormalSum.basis(b))
                acc = FormalSum()
                for ka, ca in lhs.items():
                    for kb, cb_ in rhs.items():
                        acc = acc + (ca * cb_) * base(ka, kb)
                return sym.schur_expand(acc)

    entries = []
    for a in keys(p):
        for b in keys(q):
            value = ex.Value(typ, fn(a, b))
            entries.append({"left": list(a), "right": list(b), "result": ex.to_json(value), "text": ex.render(value)})
    return {"op": op, "algebra": algebra, "degrees": [p, q], "entries": entries}


def cmd_tables(args, out) -> int:
    p, q = args.degrees
    _emit(json.dumps(table(args.op, args.algebra, p, q), indent=2), out)
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    handler = {"eval": cmd_eval, "verify": cmd_verify, "tables": cmd_tables}[args.command]
    try:
        return handler(args, out)
    except UsageError as e:
        sys.stderr.write(f"smashprod: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
