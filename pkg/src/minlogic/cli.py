"""Command line front end.

Exit codes: 0 ok, 1 input error, 2 empty function, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .core import (
    BooleanFunction,
    EmptyFunctionError,
    MinlogicError,
    cube_members,
    default_alphabet,
    sop_to_text,
    term_to_text,
)
from .cover import Method, run_minimization
from .metrics import bench_worst_case, random_functions
from .parser import canonicalize, check_alphabet, parse_function_spec, parse_sop_expression
from .verify import check_function

EXIT_OK, EXIT_INPUT, EXIT_EMPTY, EXIT_VERIFY = 0, 1, 2, 3
COMPARE_MAX_VARIABLES = 6
_SPEC_START = re.compile(r"\s*n\s*=")


class _ArgumentParser(argparse.ArgumentParser):
    # usage errors are input errors; exit 2 is reserved for empty functions
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _expression_alphabet(text: str) -> str:
    body = text.split("=", 1)[1] if "=" in text else text
    return "".join(sorted({ch for ch in body if ch.isalpha()}))


def _load_function(text: str, vars_: str | None, as_expr: bool) -> tuple[BooleanFunction, str]:
    text = text.strip()
    if as_expr or not _SPEC_START.match(text):
        alphabet = vars_ or _expression_alphabet(text)
        f, _ = canonicalize(parse_sop_expression(text, alphabet))
        return f, alphabet
    f = parse_function_spec(text)
    alphabet = vars_ or default_alphabet(f.n)
    check_alphabet(alphabet)
    if len(alphabet) != f.n:
        raise MinlogicError(f"--vars names {len(alphabet)} variables but n={f.n}")
    return f, alphabet


def _cube_json(c, n):
    return {"least": c.least, "esum": c.esum, "minterms": cube_members(c, n)}


def _report(result, alphabet: str) -> dict:
    n = result.function.n
    return {
        "expression": sop_to_text(result.terms, alphabet),
        "terms": [term_to_text(t, alphabet) for t in result.terms],
        "prime_implicants": [_cube_json(c, n) for c in result.prime_implicants],
        "cover": [_cube_json(c, n) for c in result.cover],
        "literals": result.literal_count,
        "comparisons": result.counter.as_dict(),
        "method": result.method.value,
        "n": n,
    }


def _format_text(report: dict) -> str:
    per_pass = " ".join(str(x) for x in report["comparisons"]["per_pass"])
    return "\n".join([
        report["expression"],
        f"prime implicants: {len(report['prime_implicants'])}",
        f"selected cubes: {len(report['cover'])}",
        f"literals: {report['literals']}",
        f"comparisons per pass: {per_pass}",
        f"comparisons total: {report['comparisons']['total']}",
    ])


def cmd_minimize(args) -> int:
    if args.file:
        with open(args.file) as fh:
            inputs = [line for line in fh.read().splitlines() if line.strip()]
    elif args.expr is not None:
        inputs = [args.expr]
    elif args.function is not None:
        inputs = [args.function]
    else:
        print("error: no function given", file=sys.stderr)
        return EXIT_INPUT

    batch = bool(args.file)
    for text in inputs:
        try:
            f, alphabet = _load_function(text, args.vars, args.expr is not None)
            report = _report(run_minimization(f, args.method), alphabet)
        except EmptyFunctionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_EMPTY
        except MinlogicError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        if args.json:
            print(json.dumps(report, indent=None if batch else 2, sort_keys=True))
        elif batch:
            print(report["expression"])
        else:
            print(_format_text(report))
    return EXIT_OK


def cmd_expand(args) -> int:
    try:
        expr = parse_sop_expression(args.expr, args.vars)
    except MinlogicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    f, stats = canonicalize(expr)
    print(f"n={f.n} m({','.join(map(str, sorted(f.minterms)))})")
    print(
        f"terms={stats.input_term_count} minterms={stats.canonical_minterm_count} "
        f"added={stats.added}"
    )
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        rows = bench_worst_case(args.n_min, args.n_max)
    except MinlogicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    status = EXIT_OK
    for row in rows:
        line = (
            f"{row.n} {row.qm_formula} {row.mqm_formula} "
            f"{row.qm_measured} {row.mqm_measured} {row.ratio:.2f}"
        )
        if args.timing:
            line += f" {row.qm_seconds:.6f} {row.mqm_seconds:.6f}"
        print(line)
        if not row.matches:
            status = EXIT_VERIFY
    if status:
        print("error: measured comparisons diverge from the closed forms", file=sys.stderr)
    return status


def cmd_compare(args) -> int:
    if not 1 <= args.n <= COMPARE_MAX_VARIABLES or args.trials < 0:
        print(f"error: --n must be in [1, {COMPARE_MAX_VARIABLES}]", file=sys.stderr)
        return EXIT_INPUT
    ok = 0
    for f in random_functions(args.n, args.trials, args.seed):
        problems = check_function(f)
        if problems:
            print(f.to_spec())
            for p in problems:
                print(f"  {p}", file=sys.stderr)
            return EXIT_VERIFY
        ok += 1
    print(f"{ok}/{args.trials} ok")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="minlogic", description="Two-level Boolean minimization (QM and E-sum MQM)."
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("minimize", help="minimize a function or expression")
    p.add_argument("function", nargs="?", help='list-form spec, e.g. "n=3 m(1,3) d(7)"')
    p.add_argument("--expr", help="SOP expression instead of a list-form spec")
    p.add_argument("--file", help="read one spec or expression per line")
    p.add_argument("--vars", help="variable names, most significant first")
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.MQM.value)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("expand", help="expand an SOP expression to canonical minterms")
    p.add_argument("--expr", required=True)
    p.add_argument("--vars", required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("bench", help="worst-case first-pass comparison counts")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--timing", action="store_true", help="append wall-clock seconds")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("compare", help="cross-check QM, MQM and the oracle on random functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
