import random

import pytest

from toric_kt import corpus, piecewise, stanley_reisner as sr, suites
from toric_kt.errors import IncompatibleElementError, NotInIdealError
from toric_kt.ideal_lemmas import decompose_intersection
from toric_kt.laurent import LaurentPoly, x_minus_one
from toric_kt.piecewise import PiecewiseElement


def test_minimal_nonfaces_examples():
    assert sr.minimal_nonfaces(corpus.p1()) == [(0, 1)]
    assert sr.minimal_nonfaces(corpus.p2()) == [(0, 1, 2)]
    assert sr.minimal_nonfaces(corpus.p1xp1()) == [(0, 2), (1, 3)]
    assert sr.minimal_nonfaces(corpus.a2()) == []
    assert sr.minimal_nonfaces(corpus.a2_minus_origin()) == [(0, 1)]
    assert sr.minimal_nonfaces(corpus.p3()) == [(0, 1, 2, 3)]


def brute_minimal_nonfaces(fan):
    from itertools import combinations

    non = [
        S for k in range(1, fan.num_rays + 1) for S in combinations(range(fan.num_rays), k)
        if not sr.is_face(fan, S)
    ]
    return [S for S in non if not any(set(T) < set(S) for T in non)]


def test_minimal_nonfaces_brute_force():
    rng = random.Random(5)
    fans = list(corpus.corpus().values()) + [corpus.random_smooth_fan(rng) for _ in range(10)]
    for f in fans:
        assert sorted(sr.minimal_nonfaces(f)) == sorted(brute_minimal_nonfaces(f))


def test_relations_vanish(smooth_fan):
    for rel in sr.relations(smooth_fan):
        assert sr.sr_is_zero(smooth_fan, rel)


def test_phi_is_ring_homomorphism(smooth_fan):
    rng = random.Random(9)
    n = smooth_fan.num_rays
    for _ in range(20):
        p, q = suites.random_laurent(rng, n), suites.random_laurent(rng, n)
        assert sr.phi(smooth_fan, p * q) == sr.phi(smooth_fan, p) * sr.phi(smooth_fan, q)
        assert sr.phi(smooth_fan, p + q) == sr.phi(smooth_fan, p) + sr.phi(smooth_fan, q)


def test_phi_of_variables_is_u(smooth_fan):
    for rho in range(smooth_fan.num_rays):
        x = LaurentPoly.variable(smooth_fan.num_rays, rho)
        assert sr.phi(smooth_fan, x) == piecewise.u_rho(smooth_fan, rho)


def test_character_monomial(smooth_fan):
    rng = random.Random(2)
    for _ in range(20):
        m = [rng.randint(-3, 3) for _ in range(smooth_fan.rank)]
        assert sr.phi(smooth_fan, sr.character_monomial(smooth_fan, m)) == piecewise.embed_character(smooth_fan, m)


def test_express_examples():
    f = corpus.p1()
    t = LaurentPoly.variable(1, 0)
    assert sr.express(f, PiecewiseElement((t, LaurentPoly.one(1)))) == LaurentPoly.variable(2, 0)
    assert sr.express(f, piecewise.constant(f, 1)) == 1
    with pytest.raises(IncompatibleElementError) as exc:
        sr.express(f, PiecewiseElement((t, LaurentPoly.zero(1))))
    assert exc.value.failing_pair == (0, 1)


def test_express_character_is_phi_equal():
    f = corpus.p2()
    a = piecewise.embed_character(f, [2, -1])
    q = sr.express(f, a)
    assert sr.phi(f, q) == a
    assert sr.sr_equal(f, q, sr.character_monomial(f, [2, -1]))


def test_express_round_trip(smooth_fan):
    rng = random.Random(13)
    for _ in range(30):
        a = suites.random_compatible(smooth_fan, rng)
        assert sr.phi(smooth_fan, sr.express(smooth_fan, a)) == a


def test_express_round_trip_rank3():
    rng = random.Random(17)
    for f in (corpus.p3(), corpus.p1_cubed(), corpus.p2xp1()):
        for _ in range(5):
            a = suites.random_compatible(f, rng)
            assert sr.phi(f, sr.express(f, a)) == a


def test_kernel_equals_intersection_of_cone_ideals(smooth_fan):
    # phi(p) = 0 iff p lies in every I_A with A the rays outside a maximal cone;
    # the intersection lemma then writes p over the nonface products
    rng = random.Random(21)
    f = smooth_fan
    sets = [tuple(r for r in range(f.num_rays) if r not in s) for s in f.max_cones]
    for k in range(40):
        p = suites.random_sr_ideal_element(f, rng) if sr.relations(f) else LaurentPoly.zero(f.num_rays)
        if k % 2:
            p = p + suites.random_laurent(rng, f.num_rays)
        zero = sr.sr_is_zero(f, p)
        try:
            w = decompose_intersection(p, sets)
        except NotInIdealError:
            assert not zero
            continue
        assert zero
        assert w.reconstruct() == p
        for S in w.coefficients:
            assert not sr.is_face(f, S)


def test_nonzero_units():
    f = corpus.p1xp1()
    rng = random.Random(4)
    for _ in range(20):
        rho = rng.randrange(f.num_rays)
        m = suites.random_unit_monomial(rng, f.num_rays)
        assert not sr.sr_is_zero(f, m * LaurentPoly.variable(f.num_rays, rho))
        assert not sr.sr_is_zero(f, m * x_minus_one(f.num_rays, rho))
