"""Randomized instance generators and self-checking suites.

Shared by the ``test ideals`` command and the test-suite.  Every generator
takes an explicit ``random.Random`` so runs are reproducible from a seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import piecewise, stanley_reisner
from .errors import ContractViolation, NotInIdealError
from .fan import Fan
from .ideal_lemmas import decompose_intersection, product_factorization
from .laurent import LaurentPoly, UnitEndedPoly, divide_by_unit_ended, product, x_minus_one
from .piecewise import PiecewiseElement

DEFAULT_SEED = 7919

# axis pairs whose span has finite index > 1, or with a non-primitive member
SPECIAL_AXES = (
    ((1, 1), (1, -1)),
    ((2, 0), (0, 1)),
    ((2, 1), (1, 3)),
    ((1, 1, 0), (1, -1, 0), (0, 0, 2)),
)


def random_laurent(rng: random.Random, nvars: int, terms: int = 4, exp: int = 2, coeff: int = 9) -> LaurentPoly:
    out = {}
    for _ in range(rng.randint(1, terms)):
        e = tuple(rng.randint(-exp, exp) for _ in range(nvars))
        out[e] = out.get(e, 0) + rng.randint(-coeff, coeff)
    return LaurentPoly(nvars, out)


# -- product = intersection for unit-ended polynomials ----------------------------


def _independent(a, b) -> bool:
    n = len(a)
    return any(a[k] * b[l] != a[l] * b[k] for k in range(n) for l in range(k + 1, n))


def random_axes(rng: random.Random, nvars: int, r: int) -> list[tuple[int, ...]]:
    axes: list[tuple[int, ...]] = []
    while len(axes) < r:
        v = tuple(rng.randint(-2, 2) for _ in range(nvars))
        if any(v) and all(_independent(v, w) for w in axes):
            axes.append(v)
    return axes


def random_unit_ended(rng: random.Random, axis, max_span: int = 3) -> UnitEndedPoly:
    s = rng.randint(0, max_span)
    coeffs = [rng.choice((1, -1))]
    if s:
        coeffs += [rng.randint(-3, 3) for _ in range(s - 1)] + [rng.choice((1, -1))]
    return UnitEndedPoly(len(axis), tuple(axis), rng.randint(-2, 2), tuple(coeffs))


@dataclass
class FactorInstance:
    p: LaurentPoly
    gammas: list[UnitEndedPoly]
    kind: str


def factor_instance(rng: random.Random, index: int = 0) -> FactorInstance:
    """Member of the product ideal, of only some principal ideals, or random."""
    if index % 5 == 0:
        axes = list(SPECIAL_AXES[(index // 5) % len(SPECIAL_AXES)])
        nvars = len(axes[0])
        rng.shuffle(axes)
        axes = axes[: rng.randint(2, len(axes))]
    else:
        nvars = rng.randint(2, 3)
        axes = random_axes(rng, nvars, rng.randint(1, 3))
    gammas = [random_unit_ended(rng, a) for a in axes]
    s = random_laurent(rng, nvars, terms=3)
    roll = rng.random()
    if roll < 0.5:
        p, kind = s * product((g.poly for g in gammas), nvars), "product"
    elif roll < 0.8:
        some = [g for g in gammas if rng.random() < 0.5]
        p, kind = s * product((g.poly for g in some), nvars), "partial"
    else:
        p, kind = random_laurent(rng, nvars, terms=5), "random"
    return FactorInstance(p, gammas, kind)


@dataclass
class SuiteReport:
    name: str
    count: int = 0
    passed: int = 0
    members: int = 0
    contract_violations: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.count and self.contract_violations == 0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "count": self.count,
            "passed": self.passed,
            "members": self.members,
            "contract_violations": self.contract_violations,
            "failures": self.failures[:10],
            "ok": self.ok,
        }


def check_factor_instance(inst: FactorInstance) -> tuple[bool, bool, str]:
    """(passed, was member, message) for one instance."""
    member = True
    for g in inst.gammas:
        q, r = divide_by_unit_ended(inst.p, g)
        if q * g.poly + r != inst.p:
            return False, False, "division does not reconstruct"
        member = member and r.is_zero()
    if inst.kind == "product" and not member:
        return False, False, "constructed multiple reported as non-member"
    try:
        q = product_factorization(inst.p, inst.gammas)
    except NotInIdealError:
        return (not member), member, "member rejected" if member else ""
    if not member:
        return False, member, "non-member factored"
    nv = inst.p.nvars
    if q * product((g.poly for g in inst.gammas), nv) != inst.p:
        return False, member, "reconstruction mismatch"
    return True, member, ""


def run_factorization_suite(seed: int = DEFAULT_SEED, count: int = 1000) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("product_equals_intersection")
    for i in range(count):
        inst = factor_instance(rng, i)
        rep.count += 1
        try:
            ok, member, msg = check_factor_instance(inst)
        except ContractViolation as exc:
            rep.contract_violations += 1
            rep.failures.append(f"instance {i}: {exc}")
            continue
        rep.members += member
        if ok:
            rep.passed += 1
        else:
            rep.failures.append(f"instance {i} ({inst.kind}): {msg}")
    return rep


# -- intersections of the ideals I_A ----------------------------------------------


@dataclass
class IntersectionInstance:
    p: LaurentPoly
    sets: list[tuple[int, ...]]


def hitting_sets(nvars: int, sets) -> list[tuple[int, ...]]:
    """Ray sets meeting every given set; inclusion-minimal ones only."""
    out = []
    for k in range(nvars + 1):
        for S in combinations(range(nvars), k):
            if all(set(S) & set(A) for A in sets) and not any(set(T) <= set(S) for T in out):
                out.append(S)
    return out


def intersection_instance(rng: random.Random) -> IntersectionInstance:
    nvars = rng.randint(2, 5)
    r = rng.randint(1, 3)
    sets = [tuple(sorted(rng.sample(range(nvars), rng.randint(1, min(3, nvars))))) for _ in range(r)]
    gens = hitting_sets(nvars, sets)
    p = LaurentPoly.zero(nvars)
    for _ in range(rng.randint(1, 3)):
        S = rng.choice(gens)
        # extra factors keep the term inside every ideal
        S = tuple(sorted(set(S) | {v for v in range(nvars) if rng.random() < 0.2}))
        g = product((x_minus_one(nvars, v) for v in S), nvars)
        p = p + g * random_laurent(rng, nvars, terms=3, exp=2)
    return IntersectionInstance(p, sets)


def check_intersection_instance(inst: IntersectionInstance) -> tuple[bool, str]:
    w = decompose_intersection(inst.p, inst.sets)
    if w.reconstruct() != inst.p:
        return False, "reconstruction mismatch"
    for S in w.coefficients:
        if not all(S & set(A) for A in inst.sets):
            return False, f"set {sorted(S)} misses some A"
    return True, ""


def run_intersection_suite(seed: int = DEFAULT_SEED, count: int = 1000) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("intersection_generators")
    for i in range(count):
        inst = intersection_instance(rng)
        rep.count += 1
        rep.members += 1
        try:
            ok, msg = check_intersection_instance(inst)
        except (NotInIdealError, ContractViolation) as exc:
            ok, msg = False, str(exc)
        if ok:
            rep.passed += 1
        else:
            rep.failures.append(f"instance {i}: {msg}")
    return rep


# -- random piecewise elements ------------------------------------------------------


def random_compatible(fan: Fan, rng: random.Random, degree: int = 3, terms: int = 4) -> PiecewiseElement:
    """Random integer polynomial in the ``u_rho^{+-1}`` and character images.

    Built with ring operations on known members only, so compatibility holds
    by construction and does not depend on the presentation map.
    """
    gens = []
    for rho in range(fan.num_rays):
        u = piecewise.u_rho(fan, rho)
        gens += [u, u ** -1]
    for _ in range(3):
        gens.append(piecewise.embed_character(fan, [rng.randint(-2, 2) for _ in range(fan.rank)]))
    out = piecewise.zero(fan)
    for _ in range(rng.randint(1, terms)):
        t = piecewise.constant(fan, rng.randint(-9, 9))
        for _ in range(rng.randint(0, degree)):
            t = t * rng.choice(gens)
        out = out + t
    return out


def corrupt_at_wall(fan: Fan, elt: PiecewiseElement, rng: random.Random) -> tuple[PiecewiseElement, int, int]:
    """Break compatibility across exactly one facet of one maximal cone.

    Adds ``prod_{j != k}(x_j - 1) * r`` to the component of cone ``i``: it
    vanishes on every face missing some ray other than slot ``k`` and
    restricts to a nonzero polynomial on the facet opposite slot ``k``.
    Returns (element, i, k).
    """
    i = rng.randrange(len(fan.max_cones))
    n = len(fan.max_cones[i])
    k = rng.randrange(n)
    while True:
        r = random_laurent(rng, n, terms=2)
        if not r.substitute_ones([k]).is_zero():
            break
    bump = product((x_minus_one(n, j) for j in range(n) if j != k), n) * r
    comps = list(elt.components)
    comps[i] = comps[i] + bump
    return PiecewiseElement(tuple(comps)), i, k


def random_tuple(fan: Fan, rng: random.Random) -> tuple[PiecewiseElement, str]:
    """Compatible, corrupted at one wall, or shifted by a constant on one cone."""
    a = random_compatible(fan, rng)
    roll = rng.random()
    if roll < 0.45:
        return a, "compatible"
    if roll < 0.9:
        return corrupt_at_wall(fan, a, rng)[0], "wall"
    comps = list(a.components)
    i = rng.randrange(len(comps))
    comps[i] = comps[i] + rng.choice((-2, -1, 1, 2))
    return PiecewiseElement(tuple(comps)), "constant"


def random_sr_ideal_element(fan: Fan, rng: random.Random) -> LaurentPoly:
    rels = stanley_reisner.relations(fan)
    p = LaurentPoly.zero(fan.num_rays)
    for _ in range(rng.randint(1, 3)):
        p = p + rng.choice(rels) * random_laurent(rng, fan.num_rays, terms=3)
    return p


def random_unit_monomial(rng: random.Random, nvars: int) -> LaurentPoly:
    return LaurentPoly.monomial([rng.randint(-3, 3) for _ in range(nvars)], rng.choice((1, -1)))
