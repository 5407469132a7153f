"""Built-in verification suite.

Every check replays one identity of the divisor calculus on the bundled
fixtures with seeded random inputs and returns a :class:`CheckResult`.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .divisors import (
    degree_total,
    effective_add,
    effective_power,
    is_cartier,
    make_effective,
    make_generalized,
    principal,
)
from .finitemap import FiniteMorphism, norm_element
from .groebner import Ideal, ideal_equal, ideal_membership, reduced_groebner
from .images import annihilator, pullback_effective, pushforward_effective, pushforward_generalized
from .oracles import membership_oracle
from .polyring import GF, QQ, PolyRing
from .problemfile import Problem, bundled_fixtures, load_problem
from .randomgen import (
    DEFAULT_SEED,
    random_effective,
    random_nonzero_poly,
    random_nonzerodivisor,
    random_poly,
)

FIXTURE_NAMES = ("tacnode", "elliptic", "spectral3", "identity")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witness: str = ""
    duration: float = 0.0


@dataclass
class VerifyReport:
    seed: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def ok(self) -> bool:
        return self.passed == len(self.results)

    def lines(self, timings: bool = True) -> list[str]:
        out = [f"seed: {self.seed:#x}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.name}: {r.detail}"
            if timings:
                line += f" ({r.duration:.2f}s)"
            out.append(line)
            if not r.passed and r.witness:
                out.append(f"  witness: {r.witness}")
        out.append(f"{self.passed}/{len(self.results)} checks passed")
        return out


class CheckFailure(AssertionError):
    def __init__(self, witness: str) -> None:
        super().__init__(witness)
        self.witness = witness


def _expect(cond: bool, witness: str) -> None:
    if not cond:
        raise CheckFailure(witness)


def load_fixtures() -> dict[str, Problem]:
    paths = bundled_fixtures()
    return {name: load_problem(paths[name]) for name in FIXTURE_NAMES}


def _morphism(prob: Problem) -> FiniteMorphism:
    return next(iter(prob.morphisms.values()))


# ---------------------------------------------------------------------------
# checks


def check_tacnode_cover(fx: dict[str, Problem], rng: random.Random) -> str:
    prob = fx["tacnode"]
    pi = _morphism(prob)
    X, Y = pi.source, pi.target
    D = prob.divisor("D").plus
    Dp = prob.divisor("Dprime").plus

    img = pushforward_effective(pi, D)
    want = Y.ambient([Y.ring.parse(g) for g in ("s^2", "s*t", "t^2")])
    _expect(ideal_equal(img.ideal, want), f"pi_*(x^2, y) = ({img.ideal}), expected (s^2, s*t, t^2)")
    _expect(degree_total(D) == 2, f"deg(x^2, y) = {degree_total(D)}")
    _expect(degree_total(img) == 3, f"deg pi_*(x^2, y) = {degree_total(img)}")

    img2 = pushforward_effective(pi, Dp)
    want2 = Y.ambient([Y.ring.parse("s")])
    _expect(ideal_equal(img2.ideal, want2), f"pi_*(x) = ({img2.ideal}), expected (s)")
    _expect((degree_total(Dp), degree_total(img2)) == (2, 2), "degrees of (x) and pi_*(x) differ from 2, 2")

    G = make_generalized(D, principal(X, "x"))
    PG = pushforward_generalized(pi, G)
    _expect(degree_total(G) == 0, f"deg((x^2, y) - (x)) = {degree_total(G)}")
    _expect(degree_total(PG) == 1, f"deg pi_*((x^2, y) - (x)) = {degree_total(PG)}")
    _expect(not is_cartier(img), "pi_*(x^2, y) reported Cartier")
    return "pi_*(x^2,y) = (s^2,s*t,t^2), deg 2 -> 3; pi_*(x) = (s), deg 2 -> 2; jump 0 -> 1"


def check_direct_of_inverse(fx, rng, per_fixture: int = 25) -> str:
    total = 0
    for name in FIXTURE_NAMES:
        pi = _morphism(fx[name])
        n = pi.degree
        for _ in range(per_fixture):
            M = random_effective(pi.target, rng, max_degree=4)
            lhs = pushforward_effective(pi, pullback_effective(pi, M))
            rhs = effective_power(M, n)
            _expect(
                ideal_equal(lhs.ideal, rhs.ideal),
                f"{name}: M = ({M.ideal}): pi_*pi^*M = ({lhs.ideal}) vs M^{n} = ({rhs.ideal})",
            )
            total += 1
    return f"{total} divisors over {len(FIXTURE_NAMES)} fixtures"


def check_norm_laws(fx, rng, pairs: int = 100, scalars: int = 50) -> str:
    for name in FIXTURE_NAMES:
        pi = _morphism(fx[name])
        S, T = pi.source.ring, pi.target.ring
        red = pi.target.reduce
        for _ in range(pairs):
            a = random_poly(S, rng, max_degree=3, max_terms=3)
            b = random_poly(S, rng, max_degree=3, max_terms=3)
            lhs = norm_element(pi, a * b)
            rhs = red(norm_element(pi, a) * norm_element(pi, b))
            _expect(lhs == rhs, f"{name}: N(({a})*({b})) = {lhs} but N(a)N(b) = {rhs}")
        for _ in range(scalars):
            mu = random_poly(T, rng, max_degree=3, max_terms=3)
            lhs = norm_element(pi, pi.pullback_poly(mu))
            rhs = red(mu**pi.degree)
            _expect(lhs == rhs, f"{name}: N(phi({mu})) = {lhs} but mu^n = {rhs}")
    return f"{pairs} pairs and {scalars} pullbacks per fixture"


def check_smooth_target_degree(fx, rng, count: int = 25) -> str:
    for name in ("elliptic", "spectral3"):
        pi = _morphism(fx[name])
        for _ in range(count):
            D = random_effective(pi.source, rng, max_degree=6)
            img = pushforward_effective(pi, D)
            _expect(
                degree_total(img) == degree_total(D),
                f"{name}: deg({D.ideal}) = {degree_total(D)} but deg pi_* = {degree_total(img)}",
            )
    return f"{count} divisors on each smooth-target fixture"


def check_cartier_additivity(fx, rng, per_fixture: int = 5) -> str:
    total = 0
    for name in FIXTURE_NAMES:
        pi = _morphism(fx[name])
        X = pi.source
        for _ in range(per_fixture):
            D = random_effective(X, rng, max_degree=4)
            E = make_effective(X, [random_nonzerodivisor(X, rng, max_degree=1)])
            pE = pushforward_effective(pi, E)
            lhs = pushforward_effective(pi, effective_add(D, E))
            rhs = effective_add(pushforward_effective(pi, D), pE)
            _expect(
                ideal_equal(lhs.ideal, rhs.ideal),
                f"{name}: D = ({D.ideal}), E = ({E.ideal}): ({lhs.ideal}) vs ({rhs.ideal})",
            )
            _expect(is_cartier(pE), f"{name}: pi_*({E.ideal}) = ({pE.ideal}) not Cartier")
            total += 1
    return f"{total} pairs"


def check_norm_pushforward(fx, rng, per_fixture: int = 5) -> str:
    total = 0
    for name in FIXTURE_NAMES:
        pi = _morphism(fx[name])
        X, Y = pi.source, pi.target
        for _ in range(per_fixture):
            f = random_nonzerodivisor(X, rng, max_degree=2)
            img = pushforward_effective(pi, make_effective(X, [f]))
            nf = norm_element(pi, f)
            _expect(
                ideal_equal(img.ideal, Y.ambient([nf])),
                f"{name}: pi_*({f}) = ({img.ideal}) but N(f) = {nf}",
            )
            total += 1
    return f"{total} principal divisors"


def check_fitting_sandwich(fx, rng, per_fixture: int = 3) -> str:
    total = 0
    for name in FIXTURE_NAMES:
        pi = _morphism(fx[name])
        n = pi.degree
        Y = pi.target
        for _ in range(per_fixture):
            D = random_effective(pi.source, rng, max_degree=4)
            F = pushforward_effective(pi, D).ideal
            A = annihilator(pi, D)
            An = Ideal(Y.ring, (A**n).basis) + Y.ideal
            for g in F.gens:
                _expect(ideal_membership(g, A), f"{name}: {g} in Fitt_0 but not in Ann = ({A})")
            for g in An.gens:
                _expect(ideal_membership(g, F), f"{name}: {g} in Ann^{n} but not in Fitt_0 = ({F})")
            total += 1
    return f"{total} pushforward modules"


def _kernel_ideals(fx) -> list[tuple[str, list, object]]:
    out = []
    for name in FIXTURE_NAMES:
        prob = fx[name]
        for cname, C in prob.curves.items():
            if C.ideal.gens:
                out.append((f"{name}:I_{cname}", list(C.ideal.gens), C.ring.order))
        for mname, m in prob.morphisms.items():
            J = [m.ring.convert(g) for g in m.source.ideal.gens] + [
                m.ring.var(v) - m.ring.convert(p) for v, p in m.images.items()
            ]
            out.append((f"{name}:J_{mname}", J, m.order))
        for dname, D in prob.divisors.items():
            out.append((f"{name}:{dname}", list(D.plus.ideal.gens), D.curve.ring.order))
    return out


def _oracle_instances(rng: random.Random, count: int):
    for k in range(count):
        if k % 2 == 0:
            ring = PolyRing(("x", "y", "z")[: rng.randint(1, 2)], QQ)
            maxdeg, ngens = 2, rng.randint(1, 2)
        else:
            ring = PolyRing(("x", "y", "z")[: rng.randint(1, 3)], GF(32003))
            maxdeg = rng.randint(1, 4) if ring.nvars < 3 else rng.randint(1, 2)
            ngens = rng.randint(1, 2)
        gens = [random_nonzero_poly(ring, rng, max_degree=maxdeg, max_terms=3) for _ in range(ngens)]
        if k % 4 < 2:
            f = sum((random_poly(ring, rng, max_degree=2, max_terms=2) * g for g in gens), ring.zero)
        else:
            f = random_poly(ring, rng, max_degree=maxdeg, max_terms=3)
        yield ring, gens, f


def check_kernel(fx, rng, trials: int = 20, oracle_count: int = 50) -> str:
    ideals = _kernel_ideals(fx)
    for label, gens, order in ideals:
        ref = reduced_groebner(gens, order)
        for _ in range(trials):
            perm = list(gens)
            rng.shuffle(perm)
            scaled = [g.scale(Fraction(rng.choice((-1, 1)) * rng.randint(1, 7), rng.randint(1, 5))) for g in perm]
            got = reduced_groebner(scaled, order)
            _expect(got == ref, f"{label}: basis changed under permutation/scaling")
    members = 0
    for ring, gens, f in _oracle_instances(rng, oracle_count):
        via_gb = ideal_membership(f, Ideal(ring, gens))
        via_la = membership_oracle(f, gens)
        _expect(
            via_gb == via_la,
            f"{ring}: f = {f}, gens = {[str(g) for g in gens]}: Groebner {via_gb}, oracle {via_la}",
        )
        members += via_gb
    return f"{len(ideals)} ideals x {trials} trials; {oracle_count} oracle instances ({members} members)"


CHECKS: list[tuple[str, Callable]] = [
    ("tacnode-cover", check_tacnode_cover),
    ("direct-of-inverse-image", check_direct_of_inverse),
    ("norm-laws", check_norm_laws),
    ("smooth-target-degree", check_smooth_target_degree),
    ("cartier-additivity", check_cartier_additivity),
    ("norm-pushforward", check_norm_pushforward),
    ("fitting-sandwich", check_fitting_sandwich),
    ("kernel", check_kernel),
]


def run_check(name: str, fn: Callable, fx, seed: int) -> CheckResult:
    # each check gets its own stream so results do not depend on check order
    rng = random.Random(f"{seed}:{name}")
    start = time.perf_counter()
    try:
        detail = fn(fx, rng)
        ok, witness = True, ""
    except CheckFailure as exc:
        ok, detail, witness = False, "identity violated", exc.witness
    except Exception as exc:  # noqa: BLE001 - a crash is a failed check
        ok, detail, witness = False, "error", f"{type(exc).__name__}: {exc}"
    return CheckResult(name, ok, detail, witness, time.perf_counter() - start)


def verify_suite(seed: int = DEFAULT_SEED, only: list[str] | None = None) -> VerifyReport:
    fx = load_fixtures()
    report = VerifyReport(seed)
    for name, fn in CHECKS:
        if only and name not in only:
            continue
        report.results.append(run_check(name, fn, fx, seed))
    return report
