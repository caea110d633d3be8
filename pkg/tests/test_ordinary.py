from fractions import Fraction

import pytest
import sympy

from toric_kt import corpus, ordinary
from toric_kt.errors import ResourceLimitError
from toric_kt.fan import Fan

EXPECTED = {"P1": 2, "P2": 3, "P1xP1": 4, "F1": 4, "A2": 1, "A1xP1": 2}


def test_character_relation_examples():
    nv = 4
    [rel] = ordinary.character_relations(corpus.p1())
    assert rel == {(1, 0, 0, 1): 1, (0,) * nv: -1}
    rels = ordinary.character_relations(corpus.p2())
    assert rels[0] == {(1, 0, 0, 0, 0, 1): 1, (0,) * 6: -1}
    # a coordinate no ray touches gives no relation
    f = Fan(2, [(1, 0)], [(0,)])
    assert len(ordinary.character_relations(f)) == 1


def test_presentation_contains_inverse_relations(smooth_fan):
    alg = ordinary.presentation(smooth_fan)
    for r in range(smooth_fan.num_rays):
        e = [0] * alg.nvars
        e[2 * r] = e[2 * r + 1] = 1
        assert {tuple(e): 1, (0,) * alg.nvars: -1} in alg.generators


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_k0_rank(name):
    f = corpus.SMOOTH_CORPUS[name]()
    assert ordinary.k0_rank_over_Q(f) == EXPECTED[name] == len(f.max_cones)
    rep = ordinary.k0_report(f)
    assert rep.enough_limits and rep.verified_against_max_cones


def test_k0_rank_without_enough_limits_is_flagged():
    rep = ordinary.k0_report(corpus.a2_minus_origin())
    assert not rep.enough_limits and not rep.verified_against_max_cones


def test_rank3():
    assert ordinary.k0_rank_over_Q(corpus.p3()) == 4
    assert ordinary.k0_rank_over_Q(corpus.p1_cubed()) == 8


def _to_sympy(f, gens):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[g**k for g, k in zip(gens, e)])
         for e, c in f.items()),
        sympy.Integer(0),
    )


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_groebner_matches_sympy(name):
    f = corpus.SMOOTH_CORPUS[name]()
    alg = ordinary.presentation(f)
    gens = sympy.symbols(" ".join(alg.names))
    # sympy treats its first generator as the largest; ours is the smallest
    sgens = list(reversed(gens))
    ref = sympy.groebner([_to_sympy(g, gens) for g in alg.generators], *sgens, order="grevlex")
    ours = ordinary.groebner_basis(alg.generators)
    assert sorted(map(str, ref.exprs)) == sorted(str(sympy.expand(_to_sympy(g, gens))) for g in ours)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_groebner_self_check(name):
    alg = ordinary.presentation(corpus.SMOOTH_CORPUS[name]())
    G = ordinary.groebner_basis(alg.generators)
    for g in alg.generators:
        assert ordinary.reduce(g, G) == {}
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            assert ordinary.reduce(ordinary.s_polynomial(G[i], G[j]), G) == {}


def test_standard_monomials_infinite():
    G = [{(2, 0): Fraction(1)}]
    assert ordinary.standard_monomials(G, 2) is None
    G = [{(2, 0): Fraction(1)}, {(0, 3): Fraction(1)}]
    assert len(ordinary.standard_monomials(G, 2)) == 6


def test_degrevlex_order():
    key = ordinary.order_key
    # x0 is the smallest variable
    assert key((0, 1)) > key((1, 0))
    assert key((2, 0)) < key((1, 1)) < key((0, 2))
    assert key((0, 0, 1)) < key((1, 1, 0))


def test_resource_limit():
    # seven rays give fourteen doubled variables
    f = Fan(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1), (1, 1, 1)], [(0, 1, 6)])
    with pytest.raises(ResourceLimitError):
        ordinary.k0_rank_over_Q(f)
