"""Direct and inverse images of divisors under a finite free morphism.

The direct image of an effective divisor with ideal ``(f_1, ..., f_r)`` is cut
out by the 0-th Fitting ideal of ``A/I`` viewed as a ``B``-module, presented
by the ``n x nr`` matrix ``[S_1 | ... | S_r]`` of multiplication matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .curvemodel import RationalPoint, ValidationError
from .divisors import (
    DivisorError,
    EffectiveDivisor,
    GeneralizedDivisor,
    effective_add,
    is_cartier,
    make_effective,
    make_generalized,
)
from .finitemap import FiniteMorphism, mult_matrix
from .groebner import Ideal, eliminate
from .linalg import BMatrix
from .polyring import Poly, PolyRing


@dataclass(frozen=True, eq=False)
class PresentationMatrix:
    """Relations ``{f_j · e_i}`` of ``A/I`` over ``B`` as the blocks ``[S_1 | ... | S_r]``."""

    matrix: BMatrix
    n: int
    r: int
    modulus: Ideal | None = None

    @classmethod
    def of_divisor(cls, m: FiniteMorphism, gens: Sequence[Poly]) -> "PresentationMatrix":
        blocks = [mult_matrix(m, f) for f in gens]
        if not blocks:
            raise ValueError("a presentation needs at least one relation block")
        M = blocks[0].hstack(*blocks[1:])
        return cls(M, m.degree, len(blocks), m.target.ideal)


def _minor_size(M: PresentationMatrix) -> int:
    return M.n


def maximal_minors(M: PresentationMatrix) -> list[Poly]:
    """All ``k x k`` minors (``k = n`` for a presentation), reduced by the modulus."""
    k = _minor_size(M)
    ring = M.matrix.ring
    if k == 0:
        return [ring.one]
    rows = M.matrix.rows
    reduce = M.modulus.reduce if M.modulus is not None else (lambda p: p)
    out = []
    for rsel in itertools.combinations(range(len(rows)), k):
        for csel in itertools.combinations(range(M.matrix.shape[1]), k):
            sub = BMatrix(ring, [[rows[i][j] for j in csel] for i in rsel])
            d = reduce(sub.det())
            if d and d not in out:
                out.append(d)
    return out


def fitting0(M: PresentationMatrix) -> Ideal:
    """0-th Fitting ideal: the ideal of maximal minors (plus the modulus)."""
    ring = M.matrix.ring
    extra = list(M.modulus.gens) if M.modulus is not None else []
    return Ideal(ring, maximal_minors(M) + extra)


def _source_gens(D: EffectiveDivisor) -> list[Poly]:
    gens = [g for g in (D.curve.reduce(g) for g in D.gens) if g]
    return gens


def pushforward_effective(m: FiniteMorphism, D: EffectiveDivisor) -> EffectiveDivisor:
    if D.curve is not m.source:
        raise DivisorError(f"divisor lives on {D.curve.name}, not on {m.source.name}")
    gens = _source_gens(D)
    if not gens:
        raise DivisorError("the zero ideal is not a divisor")
    M = PresentationMatrix.of_divisor(m, gens)
    F = fitting0(M)
    return make_effective(m.target, F.basis)


def pushforward_generalized(m: FiniteMorphism, D: GeneralizedDivisor) -> GeneralizedDivisor:
    plus = pushforward_effective(m, D.plus)
    minus = pushforward_effective(m, D.minus)
    if not is_cartier(minus):
        raise DivisorError(f"direct image {minus.ideal} of a Cartier divisor is not Cartier")
    return make_generalized(plus, minus, check=False)


def pullback_effective(m: FiniteMorphism, D: EffectiveDivisor) -> EffectiveDivisor:
    if D.curve is not m.target:
        raise DivisorError(f"divisor lives on {D.curve.name}, not on {m.target.name}")
    return make_effective(m.source, [m.pullback_poly(g) for g in D.gens])


def pullback_generalized(m: FiniteMorphism, D: GeneralizedDivisor) -> GeneralizedDivisor:
    plus = pullback_effective(m, D.plus)
    minus = pullback_effective(m, D.minus)
    if not is_cartier(minus):
        raise DivisorError(f"inverse image {minus.ideal} of a Cartier divisor is not Cartier")
    return make_generalized(plus, minus, check=False)


def annihilator(m: FiniteMorphism, D: EffectiveDivisor) -> Ideal:
    """``Ann_B(A/I) = I ∩ B``, computed by eliminating the source variables."""
    R = m.ring
    J = Ideal(
        R,
        [R.convert(g) for g in D.ideal.gens]
        + [R.var(v) - R.convert(p) for v, p in m.images.items()],
    )
    ann = eliminate(J, m.source.variables)
    T = m.target.ring
    return Ideal(T, [T.convert(g) for g in ann.gens]) + m.target.ideal


# ---------------------------------------------------------------------------
# fibers


@dataclass(frozen=True)
class Fiber:
    ideal: Ideal
    points: tuple[tuple, ...]
    complete: bool = field(default=True)


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _univariate_roots(f: Poly, var: int) -> list | None:
    """Roots in the base field of a polynomial in the single variable ``var``;
    ``None`` when no exhaustive search is available."""
    K = f.ring.field
    coeffs: dict[int, object] = {m[var]: c for m, c in f.terms.items()}
    if K.modulus is not None:
        if K.modulus > 100_000:
            return None
        p = K.modulus
        return [
            a for a in range(p)
            if sum(c * pow(a, e, p) for e, c in coeffs.items()) % p == 0
        ]
    roots = []
    low = min(coeffs)
    if low > 0:
        roots.append(Fraction(0))
        coeffs = {e - low: c for e, c in coeffs.items()}
    if max(coeffs) == 0:
        return roots
    den = 1
    for c in coeffs.values():
        den = den * Fraction(c).denominator // _gcd(den, Fraction(c).denominator)
    ints = {e: int(c * den) for e, c in coeffs.items()}
    lead, const = ints[max(ints)], ints[0]
    for pnum in _int_divisors(const):
        for q in _int_divisors(lead):
            for sgn in (1, -1):
                a = Fraction(sgn * pnum, q)
                if a not in roots and sum(c * a**e for e, c in ints.items()) == 0:
                    roots.append(a)
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _solve_triangular(ideal: Ideal) -> tuple[list[dict], bool]:
    """Rational solutions of a 0-dimensional system by back-substitution through
    lex Gröbner bases; the flag is False if some step had no univariate pivot."""
    R = ideal.ring
    if ideal.is_unit():
        return [], True
    if R.nvars == 0:
        return [{}], True
    last = R.nvars - 1
    lex = R.lex_order()
    G = ideal.groebner(lex)
    uni = [g for g in G if g.support_variables() <= {R.variables[last]}]
    uni = [g for g in uni if not g.is_constant()]
    if not uni:
        return [], False
    roots = _univariate_roots(uni[0], last)
    if roots is None:
        return [], False
    name = R.variables[last]
    if R.nvars == 1:
        return [{name: a} for a in roots], True
    sub = PolyRing(R.variables[:last], R.field)
    sols, complete = [], True
    for a in roots:
        images = {name: sub.const(a)}
        reduced = Ideal(sub, [g.subs(images, sub) for g in G])
        rest, ok = _solve_triangular(reduced)
        complete = complete and ok
        for s in rest:
            s = dict(s)
            s[name] = a
            sols.append(s)
    return sols, complete


def fiber_ideal(m: FiniteMorphism, Q: RationalPoint) -> Fiber:
    """Scheme-theoretic fiber over ``Q`` and the rational points found on it."""
    if Q.curve is not m.target:
        raise ValidationError(f"point is not on {m.target.name}")
    S = m.source.ring
    ideal = m.source.ambient([m.pullback_poly(g) for g in Q.max_ideal.gens])
    ideal = Ideal(S, ideal.basis)
    sols, complete = _solve_triangular(ideal)
    points = sorted(
        tuple(s[v] for v in S.variables) for s in sols
    )
    return Fiber(ideal, tuple(points), complete)


def effective_sum_of_images(m: FiniteMorphism, D: EffectiveDivisor, E: EffectiveDivisor):
    """Both sides of additivity: ``pi_*(D + E)`` and ``pi_*(D) + pi_*(E)``."""
    return (
        pushforward_effective(m, effective_add(D, E)),
        effective_add(pushforward_effective(m, D), pushforward_effective(m, E)),
    )
