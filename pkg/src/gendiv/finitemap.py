"""Finite free morphisms of affine curves and the norm of ring elements.

A morphism ``X -> Y`` is given by the images of the target coordinates as
polynomials in the source coordinates. Certification computes the reduced
Gröbner basis ``G_J`` of ``J = I_X + (y_j - phi_j)`` for a block order with
the source variables in front; when every leading monomial is pure in one
block the standard source monomials form a basis of ``A`` over ``B``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .curvemodel import Curve, ValidationError
from .groebner import Ideal, _reduce, eliminate, ideal_equal
from .linalg import BMatrix
from .polyring import Monomial, MonomialOrder, Poly, PolyRing


class MorphismError(ValidationError):
    """``reason`` is one of ``not-well-defined``, ``target-mismatch``,
    ``freeness-not-certified``, ``not-finite`` or ``bad-input``."""

    def __init__(self, reason: str, message: str) -> None:
        super().__init__(f"{reason}: {message}")
        self.reason = reason


@dataclass(frozen=True, eq=False)
class FiniteMorphism:
    name: str
    source: Curve
    target: Curve
    images: Mapping[str, Poly]
    ring: PolyRing
    order: MonomialOrder
    basis_J: tuple[Poly, ...]
    module_basis: tuple[Monomial, ...]

    @property
    def degree(self) -> int:
        return len(self.module_basis)

    @property
    def basis_elements(self) -> list[Poly]:
        return [self.source.ring.monomial(e) for e in self.module_basis]

    def pullback_poly(self, mu: Poly) -> Poly:
        """``phi(mu)``: substitute the images of the target coordinates into ``mu``."""
        mu = self.target.ring.convert(mu)
        return mu.subs(self.images, self.source.ring)

    def __repr__(self) -> str:
        m = ", ".join(f"{v} -> {p}" for v, p in self.images.items())
        return f"FiniteMorphism({self.name}: {self.source.name} -> {self.target.name}; {m}; n={self.degree})"


def build_morphism(
    source: Curve,
    target: Curve,
    images: Mapping[str, Poly | str],
    name: str = "pi",
) -> FiniteMorphism:
    if source.field != target.field:
        raise MorphismError("bad-input", "source and target fields differ")
    clash = set(source.variables) & set(target.variables)
    if clash:
        raise MorphismError("bad-input", f"source and target share variables {sorted(clash)}")
    if set(images) != set(target.variables):
        raise MorphismError(
            "bad-input", f"need exactly one image per target variable {target.variables}"
        )
    SX = source.ring
    phi = {
        v: (SX.parse(p) if isinstance(p, str) else SX.convert(p)) for v, p in images.items()
    }
    phi = {v: phi[v] for v in target.variables}

    for g in target.ideal.gens:
        if g.subs(phi, SX) not in source.ideal:
            raise MorphismError("not-well-defined", f"{g} does not pull back into I_{source.name}")

    R = PolyRing(source.variables + target.variables, source.field)
    order = R.block_order(source.variables, target.variables)
    J = Ideal(
        R,
        [R.convert(g) for g in source.ideal.gens]
        + [R.var(v) - R.convert(phi[v]) for v in target.variables],
    )
    if not ideal_equal(eliminate(J, source.variables), target.ideal):
        raise MorphismError(
            "target-mismatch", f"the image does not present I_{target.name} exactly"
        )

    G = J.groebner(order)
    nx = source.ring.nvars
    x_lms = []
    for g in G:
        lm = g.leading_monomial(order)
        in_x = any(lm[:nx])
        in_y = any(lm[nx:])
        if in_x and in_y:
            raise MorphismError(
                "freeness-not-certified", f"mixed leading monomial in {g}"
            )
        if in_x:
            x_lms.append(lm[:nx])

    bounds = []
    for i in range(nx):
        pure = [m[i] for m in x_lms if m[i] and not any(e for j, e in enumerate(m) if j != i)]
        if not pure:
            raise MorphismError(
                "not-finite", f"no pure power of {source.variables[i]} among leading terms"
            )
        bounds.append(min(pure))
    E = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(all(a <= b for a, b in zip(lm, m)) for lm in x_lms)
    ]
    E.sort(key=source.ring.order.key)
    return FiniteMorphism(name, source, target, phi, R, order, G, tuple(E))


def _nf_combined(m: FiniteMorphism, a: Poly) -> Poly:
    a = m.ring.convert(a)
    G = m.basis_J
    return _reduce(a, G, [g.leading_monomial(m.order) for g in G], m.order)


def decompose(m: FiniteMorphism, a: Poly) -> tuple[Poly, ...]:
    """Coordinates ``c`` in ``B`` with ``a = sum c_i e_i`` in ``A``."""
    nf = _nf_combined(m, a)
    nx = m.source.ring.nvars
    TY = m.target.ring
    index = {e: i for i, e in enumerate(m.module_basis)}
    parts: list[dict] = [{} for _ in m.module_basis]
    for mono, c in nf.terms.items():
        i = index.get(mono[:nx])
        if i is None:
            raise RuntimeError(f"normal form left a non-basis monomial in {nf}")
        parts[i][mono[nx:]] = c
    return tuple(Poly(TY, p) for p in parts)


def recompose(m: FiniteMorphism, coords) -> Poly:
    """``sum c_i e_i`` in the combined ring; inverse of :func:`decompose` modulo ``J``."""
    R = m.ring
    return sum(
        (R.convert(c) * R.convert(e) for c, e in zip(coords, m.basis_elements)), R.zero
    )


def mult_matrix(m: FiniteMorphism, a: Poly) -> BMatrix:
    """Matrix of multiplication by ``a`` on the basis; column ``i`` is ``a·e_i``."""
    a = m.source.ring.convert(a)
    cols = [decompose(m, a * e) for e in m.basis_elements]
    return BMatrix.from_columns(m.target.ring, cols, m.target.reduce)


def norm_element(m: FiniteMorphism, a: Poly) -> Poly:
    """Determinant of multiplication by ``a``, reduced modulo ``I_Y``."""
    return mult_matrix(m, a).det()
