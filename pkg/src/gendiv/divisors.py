"""Generalized divisors on a single affine curve.

Effective divisors are ideals of ``k[vars]`` containing ``I_X`` with a
finite-dimensional quotient. A general divisor is stored as a formal
difference ``plus - minus`` with ``minus`` Cartier; fractional ideals are
pairs ``(1/f)·I`` with ``f`` a nonzerodivisor.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .curvemodel import Curve, RationalPoint, ValidationError
from .groebner import (
    Ideal,
    ideal_equal,
    ideal_quotient,
    is_nonzerodivisor,
    kdim_quotient,
    saturate,
)
from .polyring import Poly

#: coefficient range and budget for the nonzerodivisor search
NZD_COEFFS = range(-3, 4)
NZD_BUDGET = 200


class DivisorError(ValidationError):
    pass


def _check_curve(a: Curve, b: Curve) -> None:
    if a is not b and (a.ring != b.ring or not ideal_equal(a.ideal, b.ideal)):
        raise DivisorError(f"curve mismatch: {a.name} vs {b.name}")


@dataclass(frozen=True, eq=False)
class EffectiveDivisor:
    curve: Curve
    gens: tuple[Poly, ...]

    @property
    def ideal(self) -> Ideal:
        """Ambient ideal ``(gens) + I_X``."""
        return self.curve.ambient(self.gens)

    def __repr__(self) -> str:
        return f"EffectiveDivisor({self.curve.name}: {self.ideal})"


def make_effective(curve: Curve, gens: Iterable[Poly | str]) -> EffectiveDivisor:
    R = curve.ring
    polys = [R.parse(g) if isinstance(g, str) else R.convert(g) for g in gens]
    polys = [curve.reduce(p) for p in polys]
    polys = [p for p in polys if p]
    D = EffectiveDivisor(curve, tuple(polys))
    if math.isinf(kdim_quotient(D.ideal)):
        raise DivisorError(
            f"ideal ({', '.join(map(str, polys))}) does not cut a 0-dimensional subscheme of {curve.name}"
        )
    return D


def zero_divisor(curve: Curve) -> EffectiveDivisor:
    return EffectiveDivisor(curve, (curve.ring.one,))


def principal(curve: Curve, f: Poly | str) -> EffectiveDivisor:
    return make_effective(curve, [f])


def effective_add(D: EffectiveDivisor, E: EffectiveDivisor) -> EffectiveDivisor:
    """Product of the ideals; generators are the reduced basis of the product."""
    _check_curve(D.curve, E.curve)
    C = D.curve
    prod = Ideal(C.ring, [a * b for a in D.gens for b in E.gens]) + C.ideal
    gens = [C.reduce(g) for g in prod.basis]
    return EffectiveDivisor(C, tuple(g for g in gens if g))


def effective_power(D: EffectiveDivisor, k: int) -> EffectiveDivisor:
    result = zero_divisor(D.curve)
    for _ in range(k):
        result = effective_add(result, D)
    return result


# ---------------------------------------------------------------------------
# fractional ideals


@dataclass(frozen=True, eq=False)
class FractionalIdeal:
    """``(1/denominator) · numerator`` with ``numerator`` an ambient ideal."""

    curve: Curve
    numerator: Ideal
    denominator: Poly

    def __post_init__(self) -> None:
        C = self.curve
        if not is_nonzerodivisor(self.denominator, C.ideal):
            raise DivisorError(f"denominator {self.denominator} is a zero divisor on {C.name}")
        if self.numerator <= C.ideal:
            raise DivisorError("numerator is zero on the curve")

    def __repr__(self) -> str:
        return f"FractionalIdeal((1/{self.denominator})·({self.numerator}))"


def fractional(curve: Curve, gens: Iterable[Poly | str], denominator: Poly | str = "1") -> FractionalIdeal:
    R = curve.ring
    polys = [R.parse(g) if isinstance(g, str) else R.convert(g) for g in gens]
    den = R.parse(denominator) if isinstance(denominator, str) else R.convert(denominator)
    return FractionalIdeal(curve, curve.ambient(polys), den)


def _candidates(gens: Sequence[Poly]) -> Iterable[Poly]:
    yield from gens
    if len(gens) < 2:
        return
    count = 0
    for coeffs in itertools.product(NZD_COEFFS, repeat=len(gens)):
        if sum(1 for c in coeffs if c) < 2:
            continue
        yield sum((g.scale(c) for g, c in zip(gens, coeffs) if c), gens[0].ring.zero)
        count += 1
        if count >= NZD_BUDGET:
            return


def find_nonzerodivisor(curve: Curve, gens: Sequence[Poly]) -> Poly:
    """First nonzerodivisor among ``gens``, then among small integer combinations."""
    gens = [g for g in (curve.reduce(g) for g in gens) if g]
    for g in _candidates(gens):
        if g and is_nonzerodivisor(g, curve.ideal):
            return g
    raise DivisorError("no nonzerodivisor found within the search budget")


def fractional_inverse(J: FractionalIdeal) -> FractionalIdeal:
    """``J^{-1} = (f/g)·((g) : I)`` for ``J = (1/f)·I`` and a nonzerodivisor ``g ∈ I``."""
    C = J.curve
    num_gens = [g for g in J.numerator.gens if not C.reduce(g).is_zero()]
    g = find_nonzerodivisor(C, num_gens)
    colon = ideal_quotient(C.ambient([g]), J.numerator)
    numerator = Ideal(C.ring, [J.denominator * h for h in colon.basis]) + C.ideal
    return FractionalIdeal(C, numerator, g)


def fractional_product(J: FractionalIdeal, K: FractionalIdeal) -> FractionalIdeal:
    _check_curve(J.curve, K.curve)
    return FractionalIdeal(
        J.curve, J.numerator * K.numerator + J.curve.ideal, J.denominator * K.denominator
    )


def fractional_equal(J: FractionalIdeal, K: FractionalIdeal) -> bool:
    """``(1/f)I = (1/g)L`` iff ``g·I = f·L`` as ambient ideals."""
    _check_curve(J.curve, K.curve)
    C = J.curve
    lhs = Ideal(C.ring, [K.denominator * h for h in J.numerator.gens]) + C.ideal
    rhs = Ideal(C.ring, [J.denominator * h for h in K.numerator.gens]) + C.ideal
    return ideal_equal(lhs, rhs)


def is_cartier(D: EffectiveDivisor) -> bool:
    """True iff ``I·I^{-1} = O_X``."""
    C = D.curve
    J = FractionalIdeal(C, D.ideal, C.ring.one)
    K = fractional_inverse(J)
    prod = D.ideal * K.numerator + C.ideal
    return ideal_equal(prod, C.ambient([K.denominator]))


# ---------------------------------------------------------------------------
# generalized divisors


@dataclass(frozen=True, eq=False)
class GeneralizedDivisor:
    plus: EffectiveDivisor
    minus: EffectiveDivisor

    @property
    def curve(self) -> Curve:
        return self.plus.curve

    def __repr__(self) -> str:
        return f"GeneralizedDivisor(({self.plus.ideal}) - ({self.minus.ideal}))"


def make_generalized(
    plus: EffectiveDivisor, minus: EffectiveDivisor | None = None, *, check: bool = True
) -> GeneralizedDivisor:
    if minus is None:
        minus = zero_divisor(plus.curve)
    _check_curve(plus.curve, minus.curve)
    if check and not is_cartier(minus):
        raise DivisorError(f"subtracted divisor {minus.ideal} is not Cartier")
    return GeneralizedDivisor(plus, minus)


def divisor_add(D: GeneralizedDivisor, E: GeneralizedDivisor) -> GeneralizedDivisor:
    _check_curve(D.curve, E.curve)
    return make_generalized(
        effective_add(D.plus, E.plus), effective_add(D.minus, E.minus), check=False
    )


def clear_denominators(J: FractionalIdeal) -> GeneralizedDivisor:
    C = J.curve
    plus = make_effective(C, J.numerator.gens)
    minus = make_effective(C, [J.denominator])
    return make_generalized(plus, minus, check=False)


def to_fractional(D: GeneralizedDivisor) -> FractionalIdeal:
    """Fractional ideal of ``D`` as ``(1/g)·(I_plus · (g):I_minus)``."""
    C = D.curve
    inv = fractional_inverse(FractionalIdeal(C, D.minus.ideal, C.ring.one))
    return FractionalIdeal(C, D.plus.ideal * inv.numerator + C.ideal, inv.denominator)


def degree_effective(D: EffectiveDivisor) -> int:
    return int(kdim_quotient(D.ideal))


def degree_total(D: GeneralizedDivisor | EffectiveDivisor) -> int:
    if isinstance(D, EffectiveDivisor):
        return degree_effective(D)
    return degree_effective(D.plus) - degree_effective(D.minus)


def degree_at_point(D: EffectiveDivisor | GeneralizedDivisor, P: RationalPoint) -> int:
    """Length of the local component of ``O_X/I`` at the rational point ``P``."""
    if isinstance(D, GeneralizedDivisor):
        return degree_at_point(D.plus, P) - degree_at_point(D.minus, P)
    _check_curve(D.curve, P.curve)
    I = D.ideal
    away = saturate(I, P.max_ideal)
    return int(kdim_quotient(I) - kdim_quotient(away))


def gdiv_equal(D: GeneralizedDivisor, E: GeneralizedDivisor) -> bool:
    _check_curve(D.curve, E.curve)
    C = D.curve
    lhs = D.plus.ideal * E.minus.ideal + C.ideal
    rhs = E.plus.ideal * D.minus.ideal + C.ideal
    return ideal_equal(lhs, rhs)
