import random

import pytest

from toric_kt import corpus, gkm, piecewise, suites
from toric_kt.errors import InvalidFanError
from toric_kt.gkm import GkmEdge, GkmElement, GkmGraph
from toric_kt.laurent import LaurentPoly


def test_from_fan_shapes():
    g = gkm.from_fan(corpus.p1())
    assert len(g.vertices) == 2 and len(g.edges) == 1
    assert g.edges[0].proj == ()
    g = gkm.from_fan(corpus.p2())
    assert len(g.vertices) == 3 and gkm.vertex_degrees(g) == [2, 2, 2]
    g = gkm.from_fan(corpus.p1xp1())
    assert len(g.vertices) == 4 and gkm.vertex_degrees(g) == [2, 2, 2, 2]
    assert all(len(e.proj) == 1 for e in g.edges)
    g = gkm.from_fan(corpus.p1_cubed())
    assert len(g.edges) == 12 and all(len(e.proj) == 2 for e in g.edges)


def test_from_fan_rejects_non_complete():
    for f in (corpus.a2(), corpus.a1xp1(), corpus.a2_minus_origin()):
        with pytest.raises(InvalidFanError):
            gkm.from_fan(f)


def test_p1_membership_examples():
    g = gkm.from_fan(corpus.p1())
    t = LaurentPoly.variable(1, 0)
    assert gkm.is_gkm_member(g, gkm.constant_element(g, 5))
    assert gkm.is_gkm_member(g, GkmElement((t, LaurentPoly.one(1))))
    assert not gkm.is_gkm_member(g, GkmElement((t, LaurentPoly.zero(1))))


def test_arity_errors():
    g = gkm.from_fan(corpus.p2())
    with pytest.raises(ValueError):
        gkm.is_gkm_member(g, GkmElement((LaurentPoly.one(2),)))
    with pytest.raises(ValueError):
        gkm.is_gkm_member(g, GkmElement((LaurentPoly.one(1),) * 3))


def test_graph_validation_and_json():
    with pytest.raises(ValueError):
        GkmGraph(1, ["a", "b"], [GkmEdge(0, 0, ())])
    with pytest.raises(ValueError):
        GkmGraph(2, ["a", "b"], [GkmEdge(0, 1, ((1, 0, 0),))])
    g = gkm.from_fan(corpus.f1())
    assert GkmGraph.from_dict(g.to_dict()) == g


def test_hand_entered_graph():
    # edge kernel whose characters see only m1 + m2
    g = GkmGraph(2, ["p", "q"], [GkmEdge(0, 1, ((1, 1),))])
    x, y = LaurentPoly.variable(2, 0), LaurentPoly.variable(2, 1)
    assert gkm.is_gkm_member(g, GkmElement((x + 2, y + 2)))
    assert not gkm.is_gkm_member(g, GkmElement((x, x**-1)))


@pytest.mark.parametrize("name", corpus.COMPLETE)
def test_chart_conversion_round_trip(name):
    f = corpus.SMOOTH_CORPUS[name]()
    rng = random.Random(name)
    for _ in range(10):
        a, _ = suites.random_tuple(f, rng)
        assert gkm.global_to_chart(f, gkm.chart_to_global(f, a)) == a


@pytest.mark.parametrize("name", corpus.COMPLETE)
def test_gkm_agrees_with_adjacent_compatibility(name):
    f = corpus.SMOOTH_CORPUS[name]()
    g = gkm.from_fan(f)
    rng = random.Random(name)
    for _ in range(60):
        a, _ = suites.random_tuple(f, rng)
        assert gkm.is_gkm_member(g, gkm.chart_to_global(f, a)) == piecewise.is_compatible(f, a, "adjacent_only")


def test_members_closed_under_ring_operations():
    f = corpus.p2()
    g = gkm.from_fan(f)
    rng = random.Random(4)
    for _ in range(20):
        a = gkm.chart_to_global(f, suites.random_compatible(f, rng))
        b = gkm.chart_to_global(f, suites.random_compatible(f, rng))
        for c in (a + b, a - b, a * b):
            assert gkm.is_gkm_member(g, c)


def test_character_elements_are_members():
    g = gkm.from_fan(corpus.p1_cubed())
    assert gkm.is_gkm_member(g, gkm.character_element(g, (1, -2, 3)))


def test_tuple_json():
    f = corpus.p1xp1()
    g = gkm.from_fan(f)
    e = gkm.chart_to_global(f, suites.random_compatible(f, random.Random(0)))
    assert gkm.element_from_json(g, gkm.element_to_json(g, e)) == e
    with pytest.raises(ValueError):
        gkm.element_from_json(g, {"components": {"nope": []}})
