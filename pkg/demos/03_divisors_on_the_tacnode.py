"""Effective, fractional and generalized divisors on a singular curve."""

from gendiv.groebner import format_ideal
from gendiv.curvemodel import validate_curve, validate_point
from gendiv.divisors import (
    clear_denominators,
    degree_at_point,
    degree_total,
    divisor_add,
    fractional,
    fractional_inverse,
    gdiv_equal,
    is_cartier,
    make_effective,
    make_generalized,
)

X = validate_curve("xy", ["y^2 - x^4"], name="X")
origin = validate_point(X, [0, 0])

# (x) is cut out by one equation; (x^2, y) is not locally principal at the cusp
D = make_effective(X, ["x^2", "y"])
E = make_effective(X, ["x"])
print("deg D =", degree_total(D), " Cartier:", is_cartier(D))
print("deg E =", degree_total(E), " Cartier:", is_cartier(E))
print("deg of D at the origin:", degree_at_point(D, origin))

# the inverse of a fractional ideal, written as (1/g)*J
inv = fractional_inverse(fractional(X, ["x^2", "y"]))
print(f"inverse of (x^2, y): (1/{inv.denominator})*({format_ideal(inv.numerator)})")
print("as plus/minus:", clear_denominators(inv))

# generalized divisors subtract Cartier parts
G = make_generalized(D, E)
print("deg(D - E) =", degree_total(G))
print(gdiv_equal(divisor_add(G, make_generalized(E)), make_generalized(D)))

# two far-away points of the curve
P = make_effective(X, ["x - 1", "y - 1"])
Q = make_effective(X, ["x + 1", "y - 1"])
S = divisor_add(make_generalized(P), make_generalized(Q))
print("P + Q:", format_ideal(S.plus.ideal), " degree", degree_total(S))
