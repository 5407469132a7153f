import random

import pytest

from gendiv.curvemodel import validate_curve
from gendiv.finitemap import (
    MorphismError,
    build_morphism,
    decompose,
    mult_matrix,
    norm_element,
    recompose,
)
from gendiv.groebner import Ideal, ideal_membership
from gendiv.linalg import bareiss_det
from gendiv.polyring import PolyRing
from gendiv.randomgen import random_poly

X = validate_curve("xy", ["y^2 - x^4"], name="X")
Y = validate_curve("st", ["t^2 - s^2"], name="Y")
PI = build_morphism(X, Y, {"s": "x^2", "t": "y"})
A, B = X.ring, Y.ring


def _fixture_morphisms():
    return [
        build_morphism(X, Y, {"s": "x^2", "t": "y"}),
        build_morphism(validate_curve("xy", ["y^2 - x^3 + x"]), validate_curve("s", []), {"s": "x"}),
        build_morphism(validate_curve("xy", ["y^3 + x*y + x^2"]), validate_curve("s", []), {"s": "x"}),
        build_morphism(X, validate_curve("uv", ["v^2 - u^4"]), {"u": "x", "v": "y"}),
    ]


MORPHISMS = _fixture_morphisms()


def test_tacnode_cover():
    assert PI.degree == 2
    assert PI.basis_elements == [A.one, A.parse("x")]


def test_elliptic_double_cover():
    m = MORPHISMS[1]
    assert m.degree == 2
    assert [str(e) for e in m.basis_elements] == ["1", "y"]
    R = m.ring
    assert set(m.basis_J) == {R.parse("x - s"), R.parse("y^2 - (s^3 - s)")}


def test_renamed_identity():
    m = MORPHISMS[3]
    assert m.degree == 1
    assert m.basis_elements == [A.one]


def test_spectral_cover_has_degree_three():
    assert MORPHISMS[2].degree == 3


def test_rejections():
    L = validate_curve("s", [])
    with pytest.raises(MorphismError) as exc:
        build_morphism(X, Y, {"s": "x", "t": "y"})
    assert exc.value.reason == "not-well-defined"
    # x -> s only hits the line, but Y here is the node
    with pytest.raises(MorphismError) as exc:
        build_morphism(validate_curve("xy", ["y - x"]), validate_curve("st", ["t^2 - s^2"]), {"s": "x", "t": "y"})
    assert exc.value.reason == "target-mismatch"
    # projection of the hyperbola xy = 1 to the x-line is not finite
    with pytest.raises(MorphismError) as exc:
        build_morphism(validate_curve("xy", ["x*y - 1"]), L, {"s": "x"})
    assert exc.value.reason in ("not-finite", "freeness-not-certified")
    with pytest.raises(MorphismError) as exc:
        build_morphism(X, validate_curve("xy", ["y^2 - x^4"]), {"x": "x", "y": "y"})
    assert exc.value.reason == "bad-input"


def test_decompose_examples():
    assert decompose(PI, A.parse("x^3")) == (B.zero, B.parse("s"))
    assert decompose(PI, A.one) == (B.one, B.zero)
    assert decompose(PI, A.parse("x*y")) == (B.zero, B.parse("t"))


def test_mult_matrix_examples():
    assert mult_matrix(PI, A.parse("x")).rows == ((B.zero, B.parse("s")), (B.one, B.zero))
    assert mult_matrix(PI, A.one).rows == ((B.one, B.zero), (B.zero, B.one))
    t = B.parse("t")
    assert mult_matrix(PI, A.parse("y")).rows == ((t, B.zero), (B.zero, t))


def test_norm_examples():
    assert norm_element(PI, A.parse("x")) == B.parse("-s")
    assert norm_element(PI, A.one) == B.one
    assert norm_element(PI, A.parse("y")) == B.parse("t^2")


def test_bareiss_against_cofactor_expansion():
    rng = random.Random(4)
    R = PolyRing("st")

    def cofactor(M):
        if len(M) == 1:
            return M[0][0]
        total = R.zero
        for j in range(len(M)):
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            term = M[0][j] * cofactor(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    for n in range(1, 5):
        for _ in range(5):
            M = [[random_poly(R, rng, max_degree=2, max_terms=2) for _ in range(n)] for _ in range(n)]
            assert bareiss_det(M, R) == cofactor(M)
    assert bareiss_det([], R) == R.one


@pytest.mark.parametrize("m", MORPHISMS, ids=["tacnode", "elliptic", "spectral3", "identity"])
def test_module_properties(m):
    rng = random.Random(17)
    S, T = m.source.ring, m.target.ring
    J = Ideal(m.ring, m.basis_J)
    red = m.target.reduce
    for _ in range(20):
        a = random_poly(S, rng, max_degree=4, max_terms=4)
        b = random_poly(S, rng, max_degree=3, max_terms=3)
        mu = random_poly(T, rng, max_degree=2, max_terms=3)
        # reconstruction
        assert ideal_membership(recompose(m, decompose(m, a)) - m.ring.convert(a), J)
        # linearity
        assert decompose(m, a + b) == tuple(p + q for p, q in zip(decompose(m, a), decompose(m, b)))
        assert decompose(m, m.pullback_poly(mu) * a) == tuple(red(mu * c) for c in decompose(m, a))


@pytest.mark.parametrize("m", MORPHISMS, ids=["tacnode", "elliptic", "spectral3", "identity"])
def test_multiplication_is_a_homomorphism(m):
    rng = random.Random(23)
    for _ in range(50):
        a = random_poly(m.source.ring, rng, max_degree=3, max_terms=3)
        b = random_poly(m.source.ring, rng, max_degree=3, max_terms=3)
        assert mult_matrix(m, a * b) == mult_matrix(m, a) @ mult_matrix(m, b)


@pytest.mark.parametrize("m", MORPHISMS, ids=["tacnode", "elliptic", "spectral3", "identity"])
def test_norm_is_multiplicative_and_scales(m):
    rng = random.Random(29)
    red = m.target.reduce
    for _ in range(100):
        a = random_poly(m.source.ring, rng, max_degree=3, max_terms=3)
        b = random_poly(m.source.ring, rng, max_degree=3, max_terms=3)
        assert norm_element(m, a * b) == red(norm_element(m, a) * norm_element(m, b))
    for _ in range(50):
        mu = random_poly(m.target.ring, rng, max_degree=3, max_terms=3)
        assert norm_element(m, m.pullback_poly(mu)) == red(mu ** m.degree)
