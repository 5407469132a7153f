"""Exact polynomials and the Groebner kernel."""

from gendiv.groebner import (
    Ideal,
    format_ideal,
    eliminate,
    intersect,
    kdim_quotient,
    krull_dim,
    normal_form,
    saturate,
)
from gendiv.polyring import GF, QQ, PolyRing

R = PolyRing("xy", QQ)
f = R.parse("(x + y)^3 - 3/2*x*y")
print(f)
print(f.subs({"x": R.parse("y"), "y": R.parse("2")}, R))

# same ideal, two monomial orders
I = Ideal(R, [R.parse("x^2 - y"), R.parse("x*y - 1")])
print("grevlex:", format_ideal(I))
print("lex:    ", ", ".join(map(str, I.groebner(R.lex_order()))))
print("NF(y^3) =", normal_form(R.parse("y^3"), I.basis))

# finite quotient: k[x,y]/I has dimension 3
print("dim =", krull_dim(I), " kdim =", kdim_quotient(I))

# the tacnode curve is one-dimensional and its quotient is infinite
T = Ideal(R, [R.parse("y^2 - x^4")])
print("tacnode: dim =", krull_dim(T), " kdim =", kdim_quotient(T))

# projection onto x
print("I ∩ k[x] =", format_ideal(eliminate(I, ["y"])))

# the node splits into two branches; removing the origin changes nothing here
N = Ideal(R, [R.parse("y^2 - x^2")])
print(intersect(Ideal(R, [R.parse("y - x")]), Ideal(R, [R.parse("y + x")])) == N)
print(saturate(N, Ideal(R, [R.parse("x"), R.parse("y")])) == N)

# modular arithmetic works the same way
S = PolyRing("xy", GF(7))
print(S.parse("8*x + 13*y") * S.parse("x - y"))
