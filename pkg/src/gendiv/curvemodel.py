"""Affine curve presentations and their rational points."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groebner import Ideal, krull_dim
from .polyring import QQ, Field, Poly, PolyRing


class ValidationError(ValueError):
    """An object failed one of its construction-time checks."""


@dataclass(frozen=True, eq=False)
class Curve:
    """``X = Spec k[vars]/I_X`` with ``dim = 1``.

    Reducedness and absence of embedded points are not checked.
    """

    name: str
    ring: PolyRing
    ideal: Ideal

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ring.variables

    @property
    def field(self) -> Field:
        return self.ring.field

    def ambient(self, gens: Iterable[Poly]) -> Ideal:
        """Ideal of the ambient ring generated by ``gens`` together with ``I_X``."""
        return Ideal(self.ring, list(gens) + list(self.ideal.gens))

    def reduce(self, f: Poly) -> Poly:
        return self.ideal.reduce(f)

    def __repr__(self) -> str:
        return f"Curve({self.name}: {', '.join(self.variables)} / ({self.ideal}))"


def validate_curve(
    variables: Sequence[str],
    gens: Iterable[Poly | str],
    field: Field = QQ,
    name: str = "X",
) -> Curve:
    ring = PolyRing(variables, field)
    polys = [ring.parse(g) if isinstance(g, str) else ring.convert(g) for g in gens]
    ideal = Ideal(ring, polys)
    if ideal.is_unit():
        raise ValidationError(f"curve {name}: defining ideal is the unit ideal")
    d = krull_dim(ideal)
    if d != 1:
        raise ValidationError(f"curve {name}: dimension {d}, expected 1")
    return Curve(name, ring, ideal)


@dataclass(frozen=True, eq=False)
class RationalPoint:
    curve: Curve
    coords: tuple
    max_ideal: Ideal = field(repr=False)

    def as_dict(self) -> dict:
        return dict(zip(self.curve.variables, self.coords))


def validate_point(curve: Curve, coords: Sequence) -> RationalPoint:
    K = curve.field
    if len(coords) != curve.ring.nvars:
        raise ValidationError(
            f"point needs {curve.ring.nvars} coordinates, got {len(coords)}"
        )
    vals = tuple(K(c) for c in coords)
    at = dict(zip(curve.variables, vals))
    for g in curve.ideal.gens:
        if g.evaluate(at):
            raise ValidationError(f"point {tuple(map(str, vals))} is not on {curve.name}: {g} != 0")
    R = curve.ring
    m = Ideal(R, [R.var(v) - R.const(a) for v, a in at.items()])
    return RationalPoint(curve, vals, m)
