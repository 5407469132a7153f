"""Seeded random polynomials, points and divisors for the property checks."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .curvemodel import Curve
from .divisors import DivisorError, EffectiveDivisor, degree_effective, effective_add, make_effective
from .groebner import Ideal, is_nonzerodivisor
from .images import _solve_triangular
from .polyring import Poly, PolyRing

DEFAULT_SEED = 0xC0FFEE


def monomials_up_to(nvars: int, degree: int) -> list[tuple[int, ...]]:
    return [
        m
        for d in range(degree + 1)
        for m in itertools.product(range(d + 1), repeat=nvars)
        if sum(m) == d
    ]


def random_poly(
    ring: PolyRing,
    rng: random.Random,
    max_degree: int = 3,
    max_terms: int = 4,
    coeff_range: int = 5,
) -> Poly:
    monos = monomials_up_to(ring.nvars, max_degree)
    k = rng.randint(1, min(max_terms, len(monos)))
    terms = {}
    for m in rng.sample(monos, k):
        c = rng.randint(-coeff_range, coeff_range)
        if c:
            terms[m] = c
    return ring.from_dict(terms)


def random_nonzero_poly(ring: PolyRing, rng: random.Random, **kw) -> Poly:
    while True:
        p = random_poly(ring, rng, **kw)
        if p:
            return p


def rational_points(curve: Curve, rng: random.Random, count: int = 4, span: int = 4) -> list[tuple]:
    """Rational points found by fixing the first coordinate and solving."""
    R = curve.ring
    first = R.var(R.variables[0])
    found: list[tuple] = []
    values = list(range(-span, span + 1))
    rng.shuffle(values)
    for a in values:
        I = curve.ambient([first - R.const(a)])
        sols, _ = _solve_triangular(Ideal(R, I.basis))
        for s in sols:
            pt = tuple(Fraction(s[v]) if R.field.modulus is None else s[v] for v in R.variables)
            if pt not in found:
                found.append(pt)
        if len(found) >= count:
            break
    return found


def point_divisor(curve: Curve, pt: tuple) -> EffectiveDivisor:
    R = curve.ring
    return make_effective(curve, [R.var(v) - R.const(a) for v, a in zip(R.variables, pt)])


def random_nonzerodivisor(curve: Curve, rng: random.Random, max_degree: int = 2) -> Poly:
    while True:
        f = curve.reduce(random_nonzero_poly(curve.ring, rng, max_degree=max_degree, max_terms=3))
        if f and not f.is_constant() and is_nonzerodivisor(f, curve.ideal):
            return f


def random_effective(
    curve: Curve,
    rng: random.Random,
    max_degree: int = 4,
    min_degree: int = 1,
    points: list[tuple] | None = None,
) -> EffectiveDivisor:
    """A random effective divisor with ``min_degree <= deg <= max_degree``.

    Candidates are point divisors, principal divisors of low-degree
    nonzerodivisors, two-generator ideals, and sums of two of these.
    """
    R = curve.ring
    if points is None:
        points = rational_points(curve, rng)

    def atom() -> EffectiveDivisor | None:
        kind = rng.choice(("point", "principal", "pair"))
        try:
            if kind == "point" and points:
                return point_divisor(curve, rng.choice(points))
            if kind == "principal":
                return make_effective(curve, [random_nonzerodivisor(curve, rng, max_degree=rng.choice((1, 1, 2)))])
            f = random_nonzero_poly(R, rng, max_degree=2, max_terms=3)
            g = random_nonzero_poly(R, rng, max_degree=2, max_terms=3)
            return make_effective(curve, [f, g])
        except DivisorError:
            return None

    while True:
        D = atom()
        if D is None:
            continue
        if rng.random() < 0.3:
            E = atom()
            if E is None:
                continue
            D = effective_add(D, E)
        d = degree_effective(D)
        if min_degree <= d <= max_degree:
            return D
