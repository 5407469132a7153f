"""A degree-two cover of the node by the tacnode, and the norm of functions."""

from gendiv.curvemodel import validate_curve
from gendiv.finitemap import build_morphism, decompose, mult_matrix, norm_element

X = validate_curve("xy", ["y^2 - x^4"], name="X")
Y = validate_curve("st", ["t^2 - s^2"], name="Y")

# s = x^2, t = y makes k[x,y]/(y^2 - x^4) free of rank 2 over k[s,t]/(t^2 - s^2)
pi = build_morphism(X, Y, {"s": "x^2", "t": "y"})
print("degree", pi.degree, "basis", ", ".join(map(str, pi.basis_elements)))

# every function upstairs has coordinates in the basis {1, x}
a = X.ring.parse("x^3 + y")
print("coordinates of", a, ":", [str(c) for c in decompose(pi, a)])

# multiplication by x swaps the basis elements up to a factor of s
print(mult_matrix(pi, X.ring.parse("x")).tolist())

# the norm is the determinant of that matrix
for g in ("x", "y", "x + y", "x^3"):
    print(f"N({g}) =", norm_element(pi, X.ring.parse(g)))

# the norm is multiplicative modulo the equation of the node
u, v = X.ring.parse("x + 1"), X.ring.parse("y - x")
print(norm_element(pi, u * v) == Y.reduce(norm_element(pi, u) * norm_element(pi, v)))

# a map that is not finite is refused with a reason
from gendiv.finitemap import MorphismError

H = validate_curve("xy", ["x*y - 1"], name="H")
L = validate_curve("s", [], name="L")
try:
    build_morphism(H, L, {"s": "x"})
except MorphismError as exc:
    print(exc)
