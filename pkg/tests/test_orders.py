"""Monomial order semantics against independent textbook oracles."""

import random
from itertools import product

from transversal.orders import (EQ, GT, LT, BlockOrder, GrevLex, GrLex, Lex,
                                WeightOrder, compare, elimination_order)
from transversal.rings import mono_mul
from transversal.errors import ContextMismatchError

import pytest


def grevlex_oracle(a, b):
    """Textbook definition: higher total degree wins; on ties the rightmost
    nonzero entry of a - b decides, negative meaning a is larger."""
    if sum(a) != sum(b):
        return GT if sum(a) > sum(b) else LT
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return GT if x < y else LT
    return EQ


def grlex_oracle(a, b):
    if sum(a) != sum(b):
        return GT if sum(a) > sum(b) else LT
    return lex_oracle(a, b)


def lex_oracle(a, b):
    for x, y in zip(a, b):
        if x != y:
            return GT if x > y else LT
    return EQ


def test_grevlex_matches_oracle_on_all_small_monomials():
    monos = [m for m in product(range(4), repeat=3) if sum(m) <= 4]
    order = GrevLex()
    for a in monos:
        for b in monos:
            assert compare(order, a, b) == grevlex_oracle(a, b), (a, b)


def test_grevlex_degree_two_tiebreak():
    # x*z against y^2 with x > y > z: same degree, grevlex prefers the
    # smaller exponent on the last variable
    assert compare(GrevLex(), (1, 0, 1), (0, 2, 0)) == LT


def test_lex_dominance_of_first_variable():
    assert compare(Lex(), (1, 0), (0, 2)) == GT


def test_compare_reflexive():
    for order in (Lex(), GrLex(), GrevLex()):
        assert compare(order, (2, 1, 0), (2, 1, 0)) == EQ


def test_grlex_matches_oracle():
    monos = [m for m in product(range(3), repeat=3)]
    for a in monos:
        for b in monos:
            assert compare(GrLex(), a, b) == grlex_oracle(a, b)


def test_lex_matches_oracle():
    monos = [m for m in product(range(3), repeat=3)]
    for a in monos:
        for b in monos:
            assert compare(Lex(), a, b) == lex_oracle(a, b)


def _sample_orders(nvars, rng):
    idxs = list(range(nvars))
    rng.shuffle(idxs)
    split = max(1, nvars // 2)
    return [
        Lex(), GrLex(), GrevLex(),
        WeightOrder(tuple(rng.randint(0, 4) for _ in range(nvars))),
        BlockOrder(((tuple(idxs[:split]), Lex()),
                    (tuple(idxs[split:]), GrevLex()))),
    ]


def test_order_axioms_randomized():
    rng = random.Random(7)
    nvars = 4
    one = (0,) * nvars
    for _ in range(200):
        a = tuple(rng.randint(0, 4) for _ in range(nvars))
        b = tuple(rng.randint(0, 4) for _ in range(nvars))
        w = tuple(rng.randint(0, 3) for _ in range(nvars))
        for order in _sample_orders(nvars, rng):
            c = compare(order, a, b)
            assert (c == EQ) == (a == b)
            assert compare(order, b, a) == -c
            if a != one:
                assert compare(order, a, one) == GT
            assert compare(order, mono_mul(a, w), mono_mul(b, w)) == c


def test_elimination_order_dominates_on_fresh_variable():
    order = elimination_order(3)
    with_t = (0, 0, 0, 1)
    without = (5, 5, 5, 0)
    assert compare(order, with_t, without) == GT


def test_block_order_validation():
    with pytest.raises(ValueError):
        BlockOrder((((0, 1), Lex()), ((1, 2), Lex())))  # overlap
    with pytest.raises(ValueError):
        BlockOrder((((0, 2), Lex()),))  # gap


def test_weight_order_rejects_negative_weights():
    with pytest.raises(ValueError):
        WeightOrder((1, -1))


def test_length_mismatch_rejected():
    with pytest.raises(ContextMismatchError):
        compare(GrevLex(), (1, 0), (1, 0, 0))
    with pytest.raises(ContextMismatchError):
        compare(WeightOrder((1, 2)), (1, 0, 0), (0, 1, 0))
