"""Gröbner-basis kernel.

Buchberger's algorithm with the product and chain criteria and the normal
selection strategy, plus the ideal operations built on it: membership,
equality, elimination, intersection, quotient, saturation and the
dimension counts of quotient rings.
"""

from __future__ import annotations

import itertools
import math
import threading
from typing import Iterable, Sequence

from .polyring import Monomial, MonomialOrder, Poly, PolyRing, RingMismatchError

# ---------------------------------------------------------------------------
# monomial helpers


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _quo(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# division


def _reduce(f: Poly, basis: Sequence[Poly], lms: Sequence[Monomial], order: MonomialOrder) -> Poly:
    """Full reduction of ``f`` by ``basis`` whose leading monomials are ``lms``
    (each element assumed monic)."""
    ring = f.ring
    K = ring.field
    p = K.modulus
    key = order.key
    rest = dict(f.terms)
    rem: dict[Monomial, object] = {}
    while rest:
        m = max(rest, key=key)
        c = rest[m]
        for g, lm in zip(basis, lms):
            if _divides(lm, m):
                shift = _quo(m, lm)
                for gm, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    v = rest.get(t, 0) - c * gc
                    if p is not None:
                        v %= p
                    if v:
                        rest[t] = v
                    else:
                        rest.pop(t, None)
                break
        else:
            rem[m] = c
            del rest[m]
    return Poly(ring, rem)


def normal_form(f: Poly, G: Sequence[Poly], order: MonomialOrder | None = None) -> Poly:
    """Remainder of ``f`` on division by the Gröbner basis ``G``.

    >>> from gendiv.polyring import PolyRing
    >>> R = PolyRing("xy")
    >>> print(normal_form(R.parse("x^4"), [R.parse("y^2 - x^4")]))
    y^2
    """
    order = order or f.ring.order
    for g in G:
        if g.ring != f.ring:
            raise RingMismatchError(f"{g.ring} vs {f.ring}")
    basis = [g.monic(order) for g in G if g]
    lms = [g.leading_monomial(order) for g in basis]
    return _reduce(f, basis, lms, order)


def exact_divide(h: Poly, g: Poly) -> Poly:
    """Return ``h / g``; raises ``ArithmeticError`` if ``g`` does not divide ``h``."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    order = h.ring.order
    K = h.ring.field
    lm = g.leading_monomial(order)
    lc = g.terms[lm]
    rest = h
    quotient: dict[Monomial, object] = {}
    while rest:
        m = rest.leading_monomial(order)
        if not _divides(lm, m):
            raise ArithmeticError(f"{g} does not divide {h}")
        c = K.div(rest.terms[m], lc)
        shift = _quo(m, lm)
        quotient[shift] = c
        rest = rest - g.mul_term(shift, c)
    return Poly(h.ring, quotient)


# ---------------------------------------------------------------------------
# Buchberger


def _spoly(f: Poly, g: Poly, lf: Monomial, lg: Monomial) -> Poly:
    lcm = _lcm(lf, lg)
    one = f.ring.field(1)
    return f.mul_term(_quo(lcm, lf), one) - g.mul_term(_quo(lcm, lg), one)


def _autoreduce(G: list[Poly], order: MonomialOrder) -> list[Poly]:
    key = order.key
    lms = [g.leading_monomial(order) for g in G]
    keep = []
    for i, (g, lm) in enumerate(zip(G, lms)):
        dominated = False
        for j, other in enumerate(lms):
            if j == i:
                continue
            if _divides(other, lm) and (other != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    keep.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        olms = [h.leading_monomial(order) for h in others]
        lm = g.leading_monomial(order)
        tail = Poly(g.ring, {m: c for m, c in g.terms.items() if m != lm})
        tail = _reduce(tail, others, olms, order)
        out.append((tail + Poly(g.ring, {lm: g.terms[lm]})).monic(order))
    return out


def reduced_groebner(gens: Iterable[Poly], order: MonomialOrder | None = None) -> tuple[Poly, ...]:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Elements are monic and sorted by descending leading monomial, so the
    output is a canonical form of the ideal for the given order.
    """
    gens = [g for g in gens if g]
    if not gens:
        return ()
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError(f"{g.ring} vs {ring}")
    order = order or ring.order
    key = order.key

    G: list[Poly] = []
    lms: list[Monomial] = []
    pairs: set[tuple[int, int]] = set()
    done: set[tuple[int, int]] = set()

    def add(h: Poly) -> None:
        h = h.monic(order)
        G.append(h)
        lms.append(h.leading_monomial(order))
        k = len(G) - 1
        for i in range(k):
            pairs.add((i, k))

    for g in gens:
        h = _reduce(g, G, lms, order)
        if h:
            add(h)
        if G and not any(lms[-1]):
            return (ring.one,)

    def chain_skip(i: int, j: int, lcm: Monomial) -> bool:
        for k in range(len(G)):
            if k in (i, j) or not _divides(lms[k], lcm):
                continue
            ik = (min(i, k), max(i, k))
            jk = (min(j, k), max(j, k))
            if ik not in pairs and jk not in pairs:
                return True
        return False

    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (
                sum(_lcm(lms[ij[0]], lms[ij[1]])),
                key(_lcm(lms[ij[0]], lms[ij[1]])),
                ij,
            ),
        )
        pairs.discard((i, j))
        done.add((i, j))
        a, b = lms[i], lms[j]
        lcm = _lcm(a, b)
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue  # product criterion
        if chain_skip(i, j, lcm):
            continue
        h = _reduce(_spoly(G[i], G[j], a, b), G, lms, order)
        if h:
            add(h)
            if not any(lms[-1]):
                return (ring.one,)
    return tuple(_autoreduce(G, order))


# ---------------------------------------------------------------------------
# Ideals


class Ideal:
    """An ideal of a polynomial ring given by generators.

    Reduced Gröbner bases are cached per monomial order; ``==`` compares
    ideals (not generator lists) through the default-order reduced basis.
    """

    def __init__(self, ring: PolyRing, gens: Iterable[Poly] = ()) -> None:
        out = []
        for g in gens:
            if not isinstance(g, Poly):
                g = ring.const(g)
            if g.ring != ring:
                raise RingMismatchError(f"{g.ring} vs {ring}")
            if g and g not in out:
                out.append(g)
        self.ring = ring
        self.gens: tuple[Poly, ...] = tuple(out)
        self._gb: dict[MonomialOrder, tuple[Poly, ...]] = {}
        self._lock = threading.Lock()

    @classmethod
    def parse(cls, ring: PolyRing, exprs: Iterable[str]) -> "Ideal":
        return cls(ring, [ring.parse(e) for e in exprs])

    def groebner(self, order: MonomialOrder | None = None) -> tuple[Poly, ...]:
        order = order or self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            with self._lock:
                gb = self._gb.get(order)
                if gb is None:
                    gb = reduced_groebner(self.gens, order)
                    self._gb[order] = gb
        return gb

    @property
    def basis(self) -> tuple[Poly, ...]:
        return self.groebner()

    def reduce(self, f: Poly) -> Poly:
        G = self.basis
        return _reduce(f, G, [g.leading_monomial(self.ring.order) for g in G], self.ring.order)

    def __contains__(self, f: Poly) -> bool:
        return ideal_membership(f, self)

    def is_unit(self) -> bool:
        gb = self.basis
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gens

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self) -> int:
        return hash((self.ring, self.basis))

    def __le__(self, other: "Ideal") -> bool:
        """Containment ``self ⊆ other``."""
        return all(g in other for g in self.gens)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.gens + _same_ring(self, other).gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        other = _same_ring(self, other)
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def __pow__(self, k: int) -> "Ideal":
        result = Ideal(self.ring, [self.ring.one])
        for _ in range(k):
            result = Ideal(self.ring, (result * self).basis)
        return result

    def __repr__(self) -> str:
        return f"Ideal({', '.join(map(str, self.gens))})"

    def __str__(self) -> str:
        return format_ideal(self)


def format_ideal(I: Ideal) -> str:
    """Canonical text: reduced default-order basis, leading terms descending."""
    gb = I.basis
    if not gb:
        return "0"
    return ", ".join(str(g) for g in gb)


def _same_ring(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")
    return J


def ideal_membership(f: Poly, I: Ideal) -> bool:
    if f.ring != I.ring:
        raise RingMismatchError(f"{f.ring} vs {I.ring}")
    return not I.reduce(f)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    return I.basis == J.basis


# ---------------------------------------------------------------------------
# elimination, intersection, quotient


def eliminate(I: Ideal, drop: Iterable[str]) -> Ideal:
    """``I ∩ k[remaining variables]``, returned as an ideal of that subring.

    With nothing to drop, ``I`` itself is returned.
    """
    drop = set(drop)
    unknown = drop - set(I.ring.variables)
    if unknown:
        raise ValueError(f"cannot eliminate unknown variables {sorted(unknown)}")
    if not drop:
        return I
    keep = [v for v in I.ring.variables if v not in drop]
    if not keep:
        raise ValueError("cannot eliminate every variable")
    front = [v for v in I.ring.variables if v in drop]
    order = I.ring.block_order(front, keep)
    sub = PolyRing(keep, I.ring.field)
    kept = [g for g in I.groebner(order) if not (g.support_variables() & drop)]
    return Ideal(sub, [sub.convert(g) for g in kept])


def _fresh_name(ring: PolyRing, stem: str = "_t") -> str:
    name = stem
    n = 0
    while name in ring.index:
        n += 1
        name = f"{stem}{n}"
    return name


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` via elimination of a tag variable from ``t·I + (1 - t)·J``."""
    _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.ring)
    t = _fresh_name(I.ring)
    ext = PolyRing((t,) + I.ring.variables, I.ring.field)
    tv = ext.var(t)
    gens = [tv * ext.convert(g) for g in I.gens] + [(1 - tv) * ext.convert(g) for g in J.gens]
    res = eliminate(Ideal(ext, gens), [t])
    return Ideal(I.ring, [I.ring.convert(g) for g in res.gens])


def quotient_by_element(I: Ideal, g: Poly) -> Ideal:
    ring = I.ring
    if not g:
        return Ideal(ring, [ring.one])
    if I.is_zero():
        return Ideal(ring)
    inter = intersect(I, Ideal(ring, [g]))
    return Ideal(ring, [exact_divide(h, g) for h in inter.basis])


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """``(I : J) = {a : a·J ⊆ I}``, intersected over the generators of ``J``."""
    _same_ring(I, J)
    ring = I.ring
    result: Ideal | None = None
    for g in J.basis:
        q = quotient_by_element(I, g)
        result = q if result is None else intersect(result, q)
        if result.is_zero():
            break
    if result is None:
        return Ideal(ring, [ring.one])
    return Ideal(ring, result.basis)


def saturate(I: Ideal, J: Ideal) -> Ideal:
    """``(I : J^∞)`` by iterated quotients until the ideal stops growing."""
    current = I
    while True:
        nxt = ideal_quotient(current, J)
        if ideal_equal(nxt, current):
            return current
        current = nxt


# ---------------------------------------------------------------------------
# dimension counts


def leading_monomials(I: Ideal) -> list[Monomial]:
    order = I.ring.order
    return [g.leading_monomial(order) for g in I.basis]


def krull_dim(I: Ideal) -> int:
    """Krull dimension of ``k[vars]/I``; ``-1`` when ``I`` is the unit ideal."""
    if I.is_unit():
        return -1
    lms = leading_monomials(I)
    n = I.ring.nvars
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lms]
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def standard_monomials(I: Ideal) -> list[Monomial] | None:
    """Monomials outside the leading-term ideal, ascending in the default order;
    ``None`` when there are infinitely many."""
    lms = leading_monomials(I)
    n = I.ring.nvars
    bounds = []
    for i in range(n):
        powers = [m[i] for m in lms if m[i] and all(e == 0 for j, e in enumerate(m) if j != i)]
        if not powers:
            return None
        bounds.append(min(powers))
    out = []
    for m in itertools.product(*(range(b) for b in bounds)):
        if not any(_divides(lm, m) for lm in lms):
            out.append(m)
    out.sort(key=I.ring.order.key)
    return out


def kdim_quotient(I: Ideal) -> int | float:
    """``dim_k k[vars]/I``; ``math.inf`` when the quotient is not finite-dimensional."""
    if I.is_unit():
        return 0
    sm = standard_monomials(I)
    return math.inf if sm is None else len(sm)


def is_nonzerodivisor(f: Poly, I: Ideal) -> bool:
    """True iff ``f`` is a nonzerodivisor of ``k[vars]/I``, i.e. ``(I : f) = I``."""
    if f.ring != I.ring:
        raise RingMismatchError(f"{f.ring} vs {I.ring}")
    if f in I:
        return False
    return ideal_equal(quotient_by_element(I, f), I)
