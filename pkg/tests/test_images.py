import random

import pytest

from gendiv.curvemodel import ValidationError, validate_point
from gendiv.divisors import (
    DivisorError,
    degree_total,
    effective_add,
    effective_power,
    is_cartier,
    make_effective,
    make_generalized,
    zero_divisor,
)
from gendiv.finitemap import norm_element
from gendiv.groebner import Ideal, ideal_equal
from gendiv.images import (
    PresentationMatrix,
    annihilator,
    fiber_ideal,
    fitting0,
    pullback_effective,
    pullback_generalized,
    pushforward_effective,
    pushforward_generalized,
)
from gendiv.linalg import BMatrix
from gendiv.randomgen import random_effective, random_nonzerodivisor


def ideal_of(curve, *gens):
    return curve.ambient([curve.ring.parse(g) for g in gens])


def presentation(curve, rows, n, r):
    R = curve.ring
    M = BMatrix(R, [[R.parse(e) for e in row] for row in rows])
    return PresentationMatrix(M, n, r, curve.ideal)


# -- fitting ideals


def test_fitting0_node_matrix(tacnode):
    Y = tacnode.curve("Y")
    F = fitting0(presentation(Y, [["s", "0", "t", "0"], ["0", "s", "0", "t"]], 2, 2))
    assert ideal_equal(F, ideal_of(Y, "s^2", "s*t", "t^2"))


def test_fitting0_identity_and_scalar(tacnode):
    Y = tacnode.curve("Y")
    assert fitting0(presentation(Y, [["1", "0"], ["0", "1"]], 2, 1)).is_unit()
    F = fitting0(presentation(Y, [["s + t"]], 1, 1))
    assert ideal_equal(F, ideal_of(Y, "s + t"))


def test_fitting0_of_empty_module_is_unit(tacnode):
    Y = tacnode.curve("Y")
    M = PresentationMatrix(BMatrix(Y.ring, []), 0, 1, Y.ideal)
    assert fitting0(M).is_unit()


def test_fitting0_ignores_redundant_generator(fixtures):
    rng = random.Random(5)
    for prob in fixtures.values():
        m = next(iter(prob.morphisms.values()))
        X = m.source
        for _ in range(3):
            D = random_effective(X, rng, max_degree=3)
            gens = [g for g in (X.reduce(g) for g in D.gens) if g]
            if len(gens) < 2:
                continue
            extra = X.reduce(gens[0] * gens[1])
            F1 = fitting0(PresentationMatrix.of_divisor(m, gens))
            F2 = fitting0(PresentationMatrix.of_divisor(m, gens + [extra]))
            assert ideal_equal(F1, F2)


# -- pushforward


def test_pushforward_tacnode_examples(tacnode):
    m, X, Y = tacnode.morphism("pi"), tacnode.curve("X"), tacnode.curve("Y")
    D = pushforward_effective(m, make_effective(X, ["x^2", "y"]))
    assert ideal_equal(D.ideal, ideal_of(Y, "s^2", "s*t", "t^2"))
    assert degree_total(D) == 3
    D = pushforward_effective(m, make_effective(X, ["x"]))
    assert ideal_equal(D.ideal, ideal_of(Y, "s")) and degree_total(D) == 2
    assert pushforward_effective(m, zero_divisor(X)).ideal.is_unit()


def test_pushforward_elliptic_point(elliptic):
    m, X, L = elliptic.morphism("pi"), elliptic.curve("X"), elliptic.curve("L")
    D = pushforward_effective(m, make_effective(X, ["x", "y"]))
    assert ideal_equal(D.ideal, ideal_of(L, "s")) and degree_total(D) == 1


def test_pushforward_generalized_examples(tacnode):
    m, X = tacnode.morphism("pi"), tacnode.curve("X")
    Y = tacnode.curve("Y")
    G = make_generalized(make_effective(X, ["x^2", "y"]), make_effective(X, ["x"]))
    assert degree_total(G) == 0
    H = pushforward_generalized(m, G)
    assert ideal_equal(H.plus.ideal, ideal_of(Y, "s^2", "s*t", "t^2"))
    assert ideal_equal(H.minus.ideal, ideal_of(Y, "s"))
    assert degree_total(H) == 1
    H = pushforward_generalized(m, make_generalized(make_effective(X, ["x"])))
    assert ideal_equal(H.plus.ideal, ideal_of(Y, "s")) and H.minus.ideal.is_unit()
    Z = pushforward_generalized(m, make_generalized(zero_divisor(X)))
    assert Z.plus.ideal.is_unit() and Z.minus.ideal.is_unit()


def test_pushforward_rejects_wrong_curve(tacnode):
    m, Y = tacnode.morphism("pi"), tacnode.curve("Y")
    with pytest.raises(DivisorError):
        pushforward_effective(m, make_effective(Y, ["s"]))


# -- pullback


def test_pullback_examples(tacnode, elliptic):
    m, X, Y = tacnode.morphism("pi"), tacnode.curve("X"), tacnode.curve("Y")
    assert ideal_equal(pullback_effective(m, make_effective(Y, ["s", "t"])).ideal, ideal_of(X, "x^2", "y"))
    assert pullback_effective(m, zero_divisor(Y)).ideal.is_unit()
    e, EX, L = elliptic.morphism("pi"), elliptic.curve("X"), elliptic.curve("L")
    F = make_effective(L, ["s - 2"])
    P = pullback_effective(e, F)
    assert ideal_equal(P.ideal, ideal_of(EX, "x - 2", "y^2 - 6"))
    assert (degree_total(F), degree_total(P)) == (1, 2)


def test_pullback_generalized_examples(tacnode):
    m, X, Y = tacnode.morphism("pi"), tacnode.curve("X"), tacnode.curve("Y")
    G = pullback_generalized(m, make_generalized(make_effective(Y, ["s", "t"]), make_effective(Y, ["s"])))
    assert ideal_equal(G.plus.ideal, ideal_of(X, "x^2", "y"))
    assert ideal_equal(G.minus.ideal, ideal_of(X, "x^2"))
    G = pullback_generalized(m, make_generalized(make_effective(Y, ["s"]), make_effective(Y, ["t"])))
    assert ideal_equal(G.plus.ideal, ideal_of(X, "x^2"))
    assert ideal_equal(G.minus.ideal, ideal_of(X, "y"))
    Z = pullback_generalized(m, make_generalized(zero_divisor(Y)))
    assert Z.plus.ideal.is_unit() and Z.minus.ideal.is_unit()


def test_pullback_is_additive(fixtures):
    rng = random.Random(13)
    for prob in fixtures.values():
        for m in prob.morphisms.values():
            for _ in range(4):
                F = random_effective(m.target, rng, max_degree=3)
                G = random_effective(m.target, rng, max_degree=3)
                lhs = pullback_effective(m, effective_add(F, G))
                rhs = effective_add(pullback_effective(m, F), pullback_effective(m, G))
                assert ideal_equal(lhs.ideal, rhs.ideal)


def test_push_pull_is_multiplication_by_degree(tacnode):
    m, Y = tacnode.morphism("pi"), tacnode.curve("Y")
    M = make_effective(Y, ["s", "t"])
    pushed = pushforward_effective(m, pullback_effective(m, M))
    assert ideal_equal(pushed.ideal, effective_power(M, m.degree).ideal)
    assert ideal_equal(pushed.ideal, ideal_of(Y, "s^2", "s*t", "t^2"))


# -- degree and norm relations


def test_degree_preserved_when_image_is_cartier(tacnode):
    m, X = tacnode.morphism("pi"), tacnode.curve("X")
    rng = random.Random(17)
    seen = 0
    for _ in range(15):
        D = random_effective(X, rng, max_degree=4)
        image = pushforward_effective(m, D)
        if is_cartier(image):
            seen += 1
            assert degree_total(image) == degree_total(D)
    assert seen > 0
    D = make_effective(X, ["x^2", "y"])
    image = pushforward_effective(m, D)
    assert not is_cartier(image)
    assert (degree_total(D), degree_total(image)) == (2, 3)


def test_principal_pushforward_is_norm(fixtures):
    rng = random.Random(19)
    for prob in fixtures.values():
        for m in prob.morphisms.values():
            for _ in range(4):
                f = random_nonzerodivisor(m.source, rng)
                image = pushforward_effective(m, make_effective(m.source, [f]))
                assert ideal_equal(image.ideal, m.target.ambient([norm_element(m, f)]))
                assert is_cartier(image)


def test_fitting_sandwich(fixtures):
    rng = random.Random(23)
    for prob in fixtures.values():
        for m in prob.morphisms.values():
            for _ in range(3):
                D = random_effective(m.source, rng, max_degree=3)
                F = pushforward_effective(m, D).ideal
                ann = annihilator(m, D)
                assert F <= ann
                assert ann ** m.degree <= F


# -- fibers


def test_fiber_over_node_origin(tacnode):
    m, X = tacnode.morphism("pi"), tacnode.curve("X")
    fib = fiber_ideal(m, tacnode.point("Q0"))
    assert ideal_equal(fib.ideal, ideal_of(X, "x^2", "y"))
    assert fib.points == ((0, 0),) and fib.complete


def test_fiber_without_rational_points(elliptic):
    m, X = elliptic.morphism("pi"), elliptic.curve("X")
    fib = fiber_ideal(m, elliptic.point("Q2"))
    assert ideal_equal(fib.ideal, ideal_of(X, "x - 2", "y^2 - 6"))
    assert fib.points == () and fib.complete


def test_fiber_of_identity(identity):
    m = identity.morphism("id")
    Q = identity.point("Q0")
    fib = fiber_ideal(m, Q)
    P = validate_point(m.source, Q.coords)
    assert ideal_equal(fib.ideal, P.max_ideal)
    assert fib.points == (tuple(Q.coords),)


def test_fiber_points_lie_over_the_point(elliptic):
    m, L = elliptic.morphism("pi"), elliptic.curve("L")
    fib = fiber_ideal(m, validate_point(L, [0]))
    assert set(fib.points) == {(0, 0)}
    fib = fiber_ideal(m, validate_point(L, [1]))
    assert set(fib.points) == {(1, 0)}


def test_fiber_rejects_source_point(tacnode):
    with pytest.raises(ValidationError):
        fiber_ideal(tacnode.morphism("pi"), tacnode.point("P0"))
