"""``gendiv`` command line.

Exit status: 0 on success, 1 on domain errors (validation, certification,
failed verification), 2 on usage and parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .curvemodel import ValidationError
from .divisors import (
    GeneralizedDivisor,
    degree_at_point,
    degree_total,
    divisor_add,
    gdiv_equal,
    is_cartier,
)
from .finitemap import norm_element
from .groebner import format_ideal
from .images import fiber_ideal, pullback_generalized, pushforward_generalized
from .polyring import PolySyntaxError
from .problemfile import ProblemFormatError, dump_problem, load_problem
from .randomgen import DEFAULT_SEED
from .verify import CHECKS, verify_suite


class UsageError(Exception):
    pass


def _divisor_lines(D: GeneralizedDivisor) -> list[str]:
    if D.minus.ideal.is_unit():
        return [f"ideal: {format_ideal(D.plus.ideal)}", f"degree: {degree_total(D)}"]
    return [
        f"plus: {format_ideal(D.plus.ideal)}",
        f"minus: {format_ideal(D.minus.ideal)}",
        f"degree: {degree_total(D)}",
    ]


def _fmt_scalar(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def cmd_check(args) -> list[str]:
    p = load_problem(args.file)
    return [
        f"field: {p.field}",
        f"curves: {len(p.curves)}",
        f"morphisms: {len(p.morphisms)}",
        f"divisors: {len(p.divisors)}",
        f"points: {len(p.points)}",
        "ok",
    ]


def cmd_check_morphism(args) -> list[str]:
    m = load_problem(args.file).morphism(args.morphism)
    return [
        f"morphism: {m.name}: {m.source.name} -> {m.target.name}",
        f"degree: {m.degree}",
        f"basis: {', '.join(str(e) for e in m.basis_elements)}",
        f"relations: {', '.join(str(g) for g in m.basis_J)}",
    ]


def cmd_pushforward(args) -> list[str]:
    p = load_problem(args.file)
    return _divisor_lines(pushforward_generalized(p.morphism(args.morphism), p.divisor(args.divisor)))


def cmd_pullback(args) -> list[str]:
    p = load_problem(args.file)
    return _divisor_lines(pullback_generalized(p.morphism(args.morphism), p.divisor(args.divisor)))


def cmd_norm(args) -> list[str]:
    p = load_problem(args.file)
    m = p.morphism(args.morphism)
    try:
        a = m.source.ring.parse(args.element)
    except PolySyntaxError as exc:
        raise UsageError(f"--element: {exc}") from exc
    return [str(norm_element(m, a))]


def cmd_cartier(args) -> list[str]:
    D = load_problem(args.file).divisor(args.divisor)
    # minus is invertible, so plus - minus is Cartier iff plus is
    return ["true" if is_cartier(D.plus) else "false"]


def cmd_degree(args) -> list[str]:
    p = load_problem(args.file)
    D = p.divisor(args.divisor)
    if args.point:
        return [str(degree_at_point(D, p.point(args.point)))]
    return [str(degree_total(D))]


def cmd_fiber(args) -> list[str]:
    p = load_problem(args.file)
    fib = fiber_ideal(p.morphism(args.morphism), p.point(args.point))
    pts = "; ".join("(" + ", ".join(_fmt_scalar(c) for c in pt) + ")" for pt in fib.points)
    return [
        f"ideal: {format_ideal(fib.ideal)}",
        f"points: {pts or 'none'}",
        f"search: {'complete' if fib.complete else 'incomplete'}",
    ]


def cmd_add(args) -> list[str]:
    p = load_problem(args.file)
    if len(args.divisor) != 2:
        raise UsageError("add needs exactly two --divisor options")
    D, E = (p.divisor(n) for n in args.divisor)
    return _divisor_lines(divisor_add(D, E))


def cmd_equal(args) -> list[str]:
    p = load_problem(args.file)
    if len(args.divisor) != 2:
        raise UsageError("equal needs exactly two --divisor options")
    D, E = (p.divisor(n) for n in args.divisor)
    return ["true" if gdiv_equal(D, E) else "false"]


def cmd_dump(args) -> list[str]:
    return [dump_problem(load_problem(args.file)).rstrip("\n")]


def cmd_verify(args) -> list[str]:
    if args.suite != "builtin":
        raise UsageError(f"unknown suite {args.suite!r}")
    report = verify_suite(seed=args.seed, only=args.check or None)
    args._exit = 0 if report.ok else 1
    return report.lines(timings=not args.no_timings)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gendiv",
        description="Direct and inverse images of generalized divisors under finite free maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *opts):
        sp = sub.add_parser(name, help=help_)
        if name != "verify":
            sp.add_argument("-f", "--file", required=True, help="problem file (or bundled fixture name)")
        for o in opts:
            o(sp)
        sp.set_defaults(func=fn)
        return sp

    morphism = lambda sp: sp.add_argument("--morphism", required=True)
    divisor = lambda sp: sp.add_argument("--divisor", required=True)
    two_divisors = lambda sp: sp.add_argument("--divisor", action="append", required=True)
    point_req = lambda sp: sp.add_argument("--point", required=True)
    point_opt = lambda sp: sp.add_argument("--point")
    element = lambda sp: sp.add_argument("--element", required=True)

    add("check", cmd_check, "validate a problem file")
    add("check-morphism", cmd_check_morphism, "certify a morphism and show its module basis", morphism)
    add("pushforward", cmd_pushforward, "direct image of a divisor", morphism, divisor)
    add("pullback", cmd_pullback, "inverse image of a divisor", morphism, divisor)
    add("norm", cmd_norm, "norm of a source ring element", morphism, element)
    add("cartier", cmd_cartier, "test whether a divisor is Cartier", divisor)
    add("degree", cmd_degree, "total degree, or degree at a rational point", divisor, point_opt)
    add("fiber", cmd_fiber, "fiber over a rational point of the target", morphism, point_req)
    add("add", cmd_add, "sum of two divisors", two_divisors)
    add("equal", cmd_equal, "equality of two divisors", two_divisors)
    add("dump", cmd_dump, "print the problem file in canonical form")
    vp = add("verify", cmd_verify, "run the built-in verification suite")
    vp.add_argument("--suite", default="builtin")
    vp.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    vp.add_argument("--check", action="append", choices=[n for n, _ in CHECKS])
    vp.add_argument("--no-timings", action="store_true", help="omit durations for byte-stable output")
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        lines = args.func(args)
    except (UsageError, ProblemFormatError, FileNotFoundError) as exc:
        print(f"gendiv: error: {exc}", file=err)
        return 2
    except ValidationError as exc:
        print(f"gendiv: {exc}", file=err)
        return 1
    for line in lines:
        print(line, file=out)
    return getattr(args, "_exit", 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
