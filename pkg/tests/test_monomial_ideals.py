"""Monomial-ideal arithmetic and the support-disjointness criterion."""

import random

import pytest

from transversal.errors import ContextMismatchError, PreconditionError
from transversal.monomial_ideals import (MonomialIdeal, is_transversal_monomial,
                                         minimalize)
from transversal.rings import VarContext
from transversal.selftest import random_monomial, random_monomial_ideal


@pytest.fixture
def ctx():
    return VarContext(["x1", "x2", "x3", "x4"])


def _ideal(ctx, *monos):
    return MonomialIdeal(ctx, [ctx.monomial(**powers) for powers in monos])


def test_minimalize_examples(ctx):
    I = _ideal(ctx, {"x1": 1}, {"x1": 1, "x2": 1}, {"x2": 2})
    assert I == _ideal(ctx, {"x1": 1}, {"x2": 2})
    assert _ideal(ctx, {"x1": 1, "x2": 1}).gens == (ctx.monomial(x1=1, x2=1),)
    I = _ideal(ctx, {"x1": 2, "x2": 1}, {"x1": 1, "x2": 2}, {"x1": 2, "x2": 2})
    assert I == _ideal(ctx, {"x1": 2, "x2": 1}, {"x1": 1, "x2": 2})


def test_minimalize_idempotent_and_order_independent(ctx):
    rng = random.Random(5)
    for _ in range(100):
        monos = [random_monomial(rng, 4) for _ in range(rng.randint(1, 8))]
        monos = [m for m in monos if any(m)] or [(1, 0, 0, 0)]
        once = minimalize(monos)
        assert minimalize(once) == once
        shuffled = list(monos)
        rng.shuffle(shuffled)
        assert minimalize(shuffled) == once


def test_contains(ctx):
    I = _ideal(ctx, {"x1": 1, "x2": 1})
    assert I.contains(ctx.monomial(x1=1, x2=1, x3=1))
    assert not I.contains(ctx.monomial(x1=1))
    unit = MonomialIdeal(ctx, [ctx.unit_monomial])
    assert unit.contains(ctx.monomial(x3=5))


def test_intersect_examples(ctx):
    A = _ideal(ctx, {"x1": 1}, {"x2": 1})
    B = _ideal(ctx, {"x3": 1})
    assert A.intersect(B) == _ideal(ctx, {"x1": 1, "x3": 1}, {"x2": 1, "x3": 1})
    assert _ideal(ctx, {"x1": 1}).intersect(_ideal(ctx, {"x1": 1, "x2": 1})) \
        == _ideal(ctx, {"x1": 1, "x2": 1})
    assert _ideal(ctx, {"x1": 2}).intersect(_ideal(ctx, {"x1": 3})) \
        == _ideal(ctx, {"x1": 3})


def test_multiply_examples(ctx):
    A = _ideal(ctx, {"x1": 1}, {"x2": 1})
    B = _ideal(ctx, {"x3": 1})
    assert A.multiply(B) == _ideal(ctx, {"x1": 1, "x3": 1}, {"x2": 1, "x3": 1})
    assert _ideal(ctx, {"x1": 1}).multiply(_ideal(ctx, {"x1": 1, "x2": 1})) \
        == _ideal(ctx, {"x1": 2, "x2": 1})
    unit = MonomialIdeal(ctx, [ctx.unit_monomial])
    I = _ideal(ctx, {"x1": 1, "x3": 1}, {"x2": 1})
    assert I.multiply(unit) == I


def test_sum_equals_support(ctx):
    assert _ideal(ctx, {"x1": 1}) + _ideal(ctx, {"x2": 1}) \
        == _ideal(ctx, {"x1": 1}, {"x2": 1})
    assert _ideal(ctx, {"x1": 1}, {"x1": 1, "x2": 1}) == _ideal(ctx, {"x1": 1})
    assert _ideal(ctx, {"x1": 1, "x3": 1}, {"x2": 1}).support() == {0, 1, 2}


def test_membership_characterizes_intersection(ctx):
    rng = random.Random(23)
    for _ in range(40):
        I = random_monomial_ideal(rng, ctx, max_gens=4)
        J = random_monomial_ideal(rng, ctx, max_gens=4)
        inter = I.intersect(J)
        for _ in range(25):
            m = random_monomial(rng, 4, max_exp=4)
            assert inter.contains(m) == (I.contains(m) and J.contains(m))


def test_product_inside_intersection(ctx):
    rng = random.Random(29)
    for _ in range(60):
        I = random_monomial_ideal(rng, ctx)
        J = random_monomial_ideal(rng, ctx)
        inter = I.intersect(J)
        assert all(inter.contains(g) for g in I.multiply(J).gens)


def test_transversal_examples(ctx):
    res = is_transversal_monomial(_ideal(ctx, {"x1": 1}, {"x2": 1}),
                                  _ideal(ctx, {"x3": 1}, {"x4": 1}))
    assert res.transversal and res.support_disjoint
    res = is_transversal_monomial(_ideal(ctx, {"x1": 1}),
                                  _ideal(ctx, {"x1": 1, "x2": 1}))
    assert not res.transversal and not res.support_disjoint


def test_transversal_headline_property(ctx):
    # the two routes must agree on every random pair (the predicate raises
    # InternalConsistencyError otherwise)
    rng = random.Random(31)
    seen_true = seen_false = 0
    for _ in range(150):
        I = random_monomial_ideal(rng, ctx)
        J = random_monomial_ideal(rng, ctx)
        res = is_transversal_monomial(I, J)
        assert res.transversal == res.support_disjoint
        seen_true += res.transversal
        seen_false += not res.transversal
    assert seen_true and seen_false  # both outcomes exercised


def test_transversal_edge_cases(ctx):
    zero = MonomialIdeal(ctx, [])
    I = _ideal(ctx, {"x1": 1})
    res = is_transversal_monomial(zero, I)
    assert res.transversal and res.support_disjoint
    unit = MonomialIdeal(ctx, [ctx.unit_monomial])
    with pytest.raises(PreconditionError):
        is_transversal_monomial(unit, I)


def test_context_mismatch(ctx):
    other = VarContext(["y1", "y2", "y3", "y4"])
    with pytest.raises(ContextMismatchError):
        _ideal(ctx, {"x1": 1}).intersect(
            MonomialIdeal(other, [other.monomial(y1=1)]))


def test_canonical_generator_order(ctx):
    # grevlex-descending storage makes equal ideals structurally identical
    a = MonomialIdeal(ctx, [ctx.monomial(x2=1, x3=1), ctx.monomial(x1=1, x2=1)])
    b = MonomialIdeal(ctx, [ctx.monomial(x1=1, x2=1), ctx.monomial(x2=1, x3=1)])
    assert a.gens == b.gens == (ctx.monomial(x1=1, x2=1), ctx.monomial(x2=1, x3=1))
