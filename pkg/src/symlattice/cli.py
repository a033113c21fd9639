"""Command-line front end.

Exit codes: 0 success, 1 semantic failure (no solution, failing suite),
2 input error.
"""

from __future__ import annotations

import argparse
import ast
import sys
import warnings
from pathlib import Path
from typing import Optional, Sequence

from . import capacity as cap
from . import checks
from . import mobius as mob
from .poset import LFunction, format_function, parse_function, parse_poset
from .rules import RuleId, apply_rule, parse_sequence
from .scale import Scale, sym_max, sym_min

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Anything wrong with the user's input; reported with exit code 2."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _rule(name: str) -> RuleId:
    try:
        return RuleId.from_name(name)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _scale_for(values: Sequence[int], k: Optional[int]) -> Scale:
    """Explicit ``--scale`` or the largest magnitude in the input (at least 1)."""
    scale = Scale(k if k is not None else max([1, *map(abs, values)]))
    for v in values:
        scale.check(v)
    return scale


def _eval_node(node: ast.AST, scale: Scale) -> int:
    if isinstance(node, ast.Expression):
        return _eval_node(node.body, scale)
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return scale.check(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _eval_node(node.operand, scale)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp) and isinstance(node.op, (ast.BitOr, ast.BitAnd)):
        a, b = _eval_node(node.left, scale), _eval_node(node.right, scale)
        return sym_max(a, b) if isinstance(node.op, ast.BitOr) else sym_min(a, b)
    raise InputError(f"unsupported expression element: {ast.dump(node)[:40]}")


def _literals(node: ast.AST) -> list[int]:
    return [n.value for n in ast.walk(node) if isinstance(n, ast.Constant) and type(n.value) is int]


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        tree = ast.parse(args.expr, mode="eval")
    except SyntaxError:
        raise InputError(f"cannot parse expression {args.expr!r}") from None
    scale = _scale_for(_literals(tree), args.scale)
    print(_eval_node(tree, scale))
    return EXIT_OK


def cmd_rule(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.seq)
    _scale_for(seq, args.scale)
    out = apply_rule(_rule(args.rule), seq)
    print(f"result: {out.result}")
    print("deleted:" + (" " + ",".join(map(str, sorted(out.deleted))) if out.deleted else ""))
    return EXIT_OK


def _load_function(args: argparse.Namespace) -> LFunction:
    poset = parse_poset(_read(args.poset))
    g = parse_function(_read(args.function), poset)
    _scale_for(g.values, args.scale)
    return g


def cmd_mobius(args: argparse.Namespace) -> int:
    g = _load_function(args)
    rule = _rule(args.rule)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", mob.NotAbsIsotoneWarning)
        m = mob.canonical_mobius(g, rule)
    if any(issubclass(w.category, mob.NotAbsIsotoneWarning) for w in caught):
        print("warning: |g| is not isotone")
    sys.stdout.write(format_function(m))
    if not mob.solves(m, g, rule):
        print("no solution")
        return EXIT_FAIL
    return EXIT_OK


def cmd_primitive(args: argparse.Namespace) -> int:
    f = _load_function(args)
    sys.stdout.write(format_function(mob.eval_primitive(f, _rule(args.rule))))
    return EXIT_OK


def cmd_capacity_mobius(args: argparse.Namespace) -> int:
    v = cap.parse_capacity(_read(args.capacity))
    m = cap.capacity_mobius_evenodd(v) if args.evenodd else cap.capacity_mobius(v, _rule(args.rule))
    sys.stdout.write(cap.format_set_function(m, v.n))
    return EXIT_OK


def cmd_sugeno(args: argparse.Namespace) -> int:
    v = cap.parse_capacity(_read(args.capacity))
    f = parse_sequence(args.profile)
    if args.symmetric:
        print(cap.symmetric_sugeno(v, f, _rule(args.rule)))
    else:
        print(cap.sugeno(v, f))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = checks.run_suite(args.suite)
    for chk in results:
        print(chk.line())
    ok = sum(chk.passed for chk in results)
    print(f"passed: {ok}/{len(results)} checks")
    return EXIT_OK if ok == len(results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symlattice",
        description="Symmetric maximum, computation rules and ordinal Möbius transforms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    rule_names = [r.value for r in RuleId]

    def add_scale(p: argparse.ArgumentParser) -> None:
        p.add_argument("--scale", type=int, metavar="K",
                       help="scale size k (levels -k..k); default: largest magnitude in the input")

    p = sub.add_parser("eval", help="evaluate an expression ('|' symmetric max, '&' symmetric min)")
    p.add_argument("expr", help="e.g. '(3 | -3) | 2' or '-2 & 3'")
    add_scale(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("rule", help="apply a computation rule to a sequence")
    p.add_argument("--rule", required=True, choices=rule_names)
    p.add_argument("--seq", required=True, help="comma-separated levels, e.g. 3,-3,2")
    add_scale(p)
    p.set_defaults(func=cmd_rule)

    for name, func, text in (
        ("mobius", cmd_mobius, "canonical Möbius transform of a function on a poset"),
        ("primitive", cmd_primitive, "g(x) = symmetric max of f over the down-set of x"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--poset", required=True, help="poset file")
        p.add_argument("--function", required=True, help="function file")
        p.add_argument("--rule", default="splitting", choices=rule_names)
        add_scale(p)
        p.set_defaults(func=func)

    p = sub.add_parser("capacity-mobius", help="Möbius transform of a capacity")
    p.add_argument("--capacity", required=True, help="capacity file")
    p.add_argument("--evenodd", action="store_true", help="use the even/odd subset formula")
    p.add_argument("--rule", default="splitting", choices=rule_names)
    p.set_defaults(func=cmd_capacity_mobius)

    p = sub.add_parser("sugeno", help="(symmetric) Sugeno integral of a profile")
    p.add_argument("--capacity", required=True, help="capacity file")
    p.add_argument("--profile", required=True, help="comma-separated scores, one per criterion")
    p.add_argument("--symmetric", action="store_true", help="allow negative scores")
    p.add_argument("--rule", default="splitting", choices=rule_names)
    p.set_defaults(func=cmd_sugeno)

    p = sub.add_parser("verify", help="run a brute-force verification suite")
    p.add_argument("--suite", required=True, choices=[*checks.SUITES, "all"])
    p.set_defaults(func=cmd_verify)
    return parser


def _glue_values(argv: Sequence[str]) -> list[str]:
    """``--seq -3,3`` -> ``--seq=-3,3`` so argparse does not read a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


VALUE_FLAGS = ("--seq", "--profile")


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_glue_values(argv))
    try:
        return args.func(args)
    except (InputError, ValueError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
