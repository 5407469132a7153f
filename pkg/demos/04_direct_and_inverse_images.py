"""Pushing divisors forward through Fitting ideals and pulling them back."""

from gendiv.divisors import degree_total, effective_power, is_cartier
from gendiv.groebner import format_ideal
from gendiv.images import (
    PresentationMatrix,
    fitting0,
    pullback_effective,
    pushforward_effective,
    pushforward_generalized,
)
from gendiv.problemfile import load_problem

prob = load_problem("tacnode.toml")
pi = prob.morphism("pi")

# the module k[X]/(x^2, y) over k[Y] is presented by a 2 x 4 matrix
D = prob.divisor("D").plus
M = PresentationMatrix.of_divisor(pi, D.gens)
print(M.matrix.tolist())
print("Fitt_0 =", format_ideal(fitting0(M)))

# its degree jumps from 2 to 3 and the image is no longer Cartier
img = pushforward_effective(pi, D)
print("deg", degree_total(D), "->", degree_total(img), " Cartier:", is_cartier(img))

# principal divisors behave: (x) goes to (s) and keeps degree 2
Dp = prob.divisor("Dprime").plus
img = pushforward_effective(pi, Dp)
print(format_ideal(img.ideal), " degree", degree_total(img))

# so the generalized divisor D - (x) of degree 0 lands in degree 1
G = prob.divisor("G")
print("deg G =", degree_total(G), " deg pi_* G =", degree_total(pushforward_generalized(pi, G)))

# pulling back the origin of the node and pushing forward again squares it
Q = prob.divisor("Q").plus
back = pullback_effective(pi, Q)
print("pi^* Q =", format_ideal(back.ideal))
print(pushforward_effective(pi, back).ideal == effective_power(Q, pi.degree).ideal)
