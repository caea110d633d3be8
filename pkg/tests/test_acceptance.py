"""Acceptance criteria, run at zero tolerance with a fixed seed.

Each test prints one ``PASS``/``FAIL`` line; the lines are also collected
and repeated in the pytest terminal summary.  Run this file directly for a
plain report.
"""

from __future__ import annotations

import random
import time

from toric_kt import corpus, gkm, limits, ordinary, piecewise, suites, zlattice
from toric_kt import stanley_reisner as sr
from toric_kt.errors import InvalidFanError
from toric_kt.fan import Fan, require_valid, validate
from toric_kt.laurent import LaurentPoly

SEED = suites.DEFAULT_SEED
RESULTS: dict[int, tuple[str, bool, str]] = {}

ROUND_TRIP_FANS = ("P1", "P2", "P1xP1", "F1", "A2", "A1xP1")


def record(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS[number] = (title, ok, detail)
    print(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")


def test_criterion_01_sr_round_trip():
    rng = random.Random(SEED + 1)
    start = time.perf_counter()
    bad = []
    for name in ROUND_TRIP_FANS:
        f = corpus.SMOOTH_CORPUS[name]()
        for k in range(200):
            a = suites.random_compatible(f, rng)
            if not piecewise.is_compatible(f, a) or sr.phi(f, sr.express(f, a)) != a:
                bad.append((name, k))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    record(1, "SR round trip", ok, f"{len(ROUND_TRIP_FANS)} fans x 200 elements, {len(bad)} mismatches, {elapsed:.1f}s")
    assert ok, bad[:5]


def test_criterion_02_kernel():
    rng = random.Random(SEED + 2)
    wrong = []
    for name in ROUND_TRIP_FANS:
        f = corpus.SMOOTH_CORPUS[name]()
        n = f.num_rays
        for _ in range(200):
            p = suites.random_sr_ideal_element(f, rng) if sr.relations(f) else LaurentPoly.zero(n)
            if not sr.sr_is_zero(f, p):
                wrong.append((name, "ideal element not zero"))
        for _ in range(200):
            rho = rng.randrange(n)
            p = suites.random_unit_monomial(rng, n) * LaurentPoly.variable(n, rho)
            if sr.sr_is_zero(f, p):
                wrong.append((name, "unit multiple zero"))
    ok = not wrong
    record(2, "kernel characterization", ok, f"{len(ROUND_TRIP_FANS)} fans x (200 + 200), {len(wrong)} wrong")
    assert ok, wrong[:5]


def _witness_ok(f: Fan, res: piecewise.BasisCheck) -> bool:
    if not res.is_basis or res.witness is None:
        return False
    if len(res.witness) != res.rank or abs(zlattice.det(res.witness)) != 1:
        return False
    K = res.kernel_basis
    for rho, coords in enumerate(res.witness):
        v = tuple(sum(c * K[j][i] for j, c in enumerate(coords)) for i in range(len(K[0])))
        if v != piecewise.exponent_vector(f, piecewise.u_rho(f, rho)):
            return False
    return True


def test_criterion_03_v_delta_basis():
    rng = random.Random(SEED + 3)
    fans = list(corpus.corpus().items())
    for k in range(50):
        f = corpus.random_smooth_fan(rng, max_rank=3, max_rays=7)
        fans.append((f"random{k}", f))
    failed = []
    for name, f in fans:
        if not validate(f).ok or not _witness_ok(f, piecewise.v_delta_basis_check(f)):
            failed.append(name)
    ok = not failed
    record(3, "u_rho basis of V_Delta", ok, f"{len(fans)} fans (50 random), failed {failed}")
    assert ok


def test_criterion_04_product_equals_intersection():
    rep = suites.run_factorization_suite(SEED, 1000)
    ok = rep.ok and rep.count == 1000 and rep.contract_violations == 0
    record(
        4, "product of unit-ended equals intersection", ok,
        f"{rep.passed}/{rep.count} passed, {rep.members} members, {rep.contract_violations} later-stage failures",
    )
    assert ok, rep.failures[:5]


def test_criterion_05_intersection_generators():
    rep = suites.run_intersection_suite(SEED, 1000)
    ok = rep.ok and rep.count == 1000
    record(5, "intersection ideal generators", ok, f"{rep.passed}/{rep.count} reconstructed exactly")
    assert ok, rep.failures[:5]


def test_criterion_06_enough_limits():
    cases = [(n, corpus.SMOOTH_CORPUS[n](), True) for n in corpus.COMPLETE]
    cases += [
        ("torus", corpus.torus(), False),
        ("A2", corpus.a2(), True),
        ("A2minus0", corpus.a2_minus_origin(), False),
        ("A1xP1", corpus.a1xp1(), True),
    ]
    wrong, slowest = [], 0.0
    for name, f, expected in cases:
        start = time.perf_counter()
        got = limits.enough_limits(f)
        slowest = max(slowest, time.perf_counter() - start)
        if got != expected:
            wrong.append(name)
    ok = not wrong and slowest < 5
    record(6, "enough limits", ok, f"{len(cases)} fans, wrong {wrong}, slowest {slowest:.2f}s")
    assert ok


def _tuples(f: Fan, rng: random.Random, count: int):
    return [suites.random_tuple(f, rng) for _ in range(count)]


def test_criterion_07_adjacency():
    rng = random.Random(SEED + 7)
    disagree, kinds = [], {}
    for name in corpus.COMPLETE:
        f = corpus.SMOOTH_CORPUS[name]()
        for a, kind in _tuples(f, rng, 500):
            kinds[kind] = kinds.get(kind, 0) + 1
            if piecewise.is_compatible(f, a, "all_pairs") != piecewise.is_compatible(f, a, "adjacent_only"):
                disagree.append(name)
    ok = not disagree and kinds.get("compatible", 0) > 0 and kinds.get("wall", 0) > 0
    record(7, "adjacent walls suffice", ok, f"{len(corpus.COMPLETE)} fans x 500 tuples {kinds}, {len(disagree)} disagreements")
    assert ok


def test_criterion_08_gkm():
    rng = random.Random(SEED + 8)
    disagree, members = [], 0
    for name in corpus.COMPLETE:
        f = corpus.SMOOTH_CORPUS[name]()
        g = gkm.from_fan(f)
        for a, _ in _tuples(f, rng, 500):
            m = gkm.is_gkm_member(g, gkm.chart_to_global(f, a))
            members += m
            if m != piecewise.is_compatible(f, a, "adjacent_only"):
                disagree.append(name)
    ok = not disagree and 0 < members < 500 * len(corpus.COMPLETE)
    record(8, "GKM congruences", ok, f"{len(corpus.COMPLETE)} fans x 500 tuples, {members} members, {len(disagree)} disagreements")
    assert ok


def test_criterion_09_k0_rank():
    expected = {"P1": 2, "P2": 3, "P1xP1": 4, "F1": 4, "A2": 1}
    got, slowest = {}, 0.0
    for name in expected:
        f = corpus.SMOOTH_CORPUS[name]()
        start = time.perf_counter()
        got[name] = ordinary.k0_rank_over_Q(f)
        slowest = max(slowest, time.perf_counter() - start)
        assert len(f.max_cones) == expected[name]
    ok = got == expected and slowest < 60
    record(9, "K_0 rank equals number of maximal cones", ok, f"{got}, slowest {slowest:.2f}s")
    assert ok


def test_criterion_10_smoothness_gate():
    f = Fan(2, [(1, 0), (1, 2)], [(0, 1)])
    issues = validate(f).failed("smooth")
    named = len(issues) == 1 and issues[0].cones == [[0, 1]] and "cone [0, 1]" in issues[0].message
    try:
        require_valid(f)
        rejected = False
    except InvalidFanError:
        rejected = True
    ok = named and rejected
    record(10, "smoothness gate", ok, issues[0].message if issues else "no smoothness issue reported")
    assert ok


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
