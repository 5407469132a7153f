"""Fibers of covers of the affine line, where degrees are always preserved."""

import random

from gendiv.curvemodel import validate_point
from gendiv.divisors import degree_total
from gendiv.groebner import format_ideal
from gendiv.images import fiber_ideal, pushforward_effective
from gendiv.problemfile import load_problem
from gendiv.randomgen import random_effective

for name in ("elliptic", "spectral3"):
    prob = load_problem(name)
    pi = prob.morphism("pi")
    L = pi.target
    print(f"{name}: degree {pi.degree} over {L.name}")

    # fibers over a few integer points, with any rational points found
    for s in range(-2, 3):
        fib = fiber_ideal(pi, validate_point(L, [s]))
        pts = ", ".join("(" + ", ".join(str(c) for c in p) + ")" for p in fib.points) or "none"
        print(f"  s = {s}: ({format_ideal(fib.ideal)})  rational points: {pts}")

    # the line is smooth, so direct images never change the degree
    rng = random.Random(7)
    for _ in range(3):
        D = random_effective(pi.source, rng, max_degree=4)
        img = pushforward_effective(pi, D)
        print(f"  ({format_ideal(D.ideal)}) deg {degree_total(D)} -> ({format_ideal(img.ideal)}) deg {degree_total(img)}")
