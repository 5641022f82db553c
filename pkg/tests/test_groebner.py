"""Buchberger engine and derived predicates, checked against hand-computed
S-pairs, membership by construction, parametrization arguments, brute-force
independent-set enumeration, and the monomial-ideal route."""

import random
from itertools import combinations

import pytest

from transversal.errors import (ExactDivisionError, InternalConsistencyError,
                                PreconditionError)
from transversal.groebner import (Ideal, buchberger, check_regular_sequence,
                                  dimension, divmod_poly, elim_intersect,
                                  ideal_equal, ideal_quotient, is_member,
                                  is_nzd, is_regular_sequence,
                                  lt_support_transversal, normal_form,
                                  poly_exact_div, power_transversal,
                                  product_ideal, s_polynomial, transversal)
from transversal.monomial_ideals import MonomialIdeal, is_transversal_monomial
from transversal.orders import GrevLex, GrLex, Lex
from transversal.rings import Polynomial, VarContext, mono_divides
from transversal.selftest import random_monomial_ideal, random_polynomial


@pytest.fixture
def ctx4():
    return VarContext(["x1", "x2", "x3", "x4"])


@pytest.fixture
def cubic(ctx4):
    """Twisted cubic: 2x2 minors of the Hankel matrix on x1..x4."""
    return Ideal(ctx4, [ctx4.parse("x1*x3 - x2^2"),
                        ctx4.parse("x1*x4 - x2*x3"),
                        ctx4.parse("x2*x4 - x3^2")])


# ---------------------------------------------------------------------------
# normal forms and division
# ---------------------------------------------------------------------------

def test_normal_form_one_step_lex(ctx4):
    # under lex the divisor leads with x1*x3, so x1*x3 reduces in one step
    g = [ctx4.parse("x1*x3 - x2^2")]
    assert normal_form(ctx4.parse("x1*x3"), g, Lex()) == ctx4.parse("x2^2")


def test_normal_form_one_step_grevlex(ctx4):
    # under grevlex the same divisor leads with x2^2 (textbook tie-break),
    # so the roles flip
    g = [ctx4.parse("x1*x3 - x2^2")]
    assert normal_form(ctx4.parse("x2^2"), g, GrevLex()) == ctx4.parse("x1*x3")
    assert normal_form(ctx4.parse("x1*x3"), g, GrevLex()) == ctx4.parse("x1*x3")


def test_normal_form_irreducible(ctx4):
    g = [ctx4.parse("x1*x3 - x2^2")]
    assert normal_form(ctx4.parse("x2"), g) == ctx4.parse("x2")


def test_normal_form_of_constructed_members(cubic, ctx4):
    # membership by construction: combinations of a Groebner basis reduce to 0
    rng = random.Random(41)
    gb = list(cubic.groebner().polys)
    for _ in range(25):
        f = ctx4.zero()
        for g in gb:
            f = f + random_polynomial(rng, ctx4) * g
        assert normal_form(f, gb).is_zero()


def test_divmod_reconstructs(ctx4):
    rng = random.Random(43)
    G = [ctx4.parse("x1*x3 - x2^2"), ctx4.parse("x2*x4 - x3^2")]
    for _ in range(30):
        f = random_polynomial(rng, ctx4, max_terms=5)
        quots, r = divmod_poly(f, G)
        assert sum((q * g for q, g in zip(quots, G)), r) == f
        lead = [g.leading_monomial(GrevLex()) for g in G]
        assert all(not any(mono_divides(lt, m) for lt in lead) for m in r.terms)


def test_exact_division(ctx4):
    f = ctx4.parse("x1 + x2")
    g = ctx4.parse("x1^2 - x2^2")
    assert poly_exact_div(g, f) == ctx4.parse("x1 - x2")
    with pytest.raises(ExactDivisionError):
        poly_exact_div(ctx4.parse("x1^2 + 1"), f)


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def test_principal_ideal_is_own_basis(ctx4):
    f = ctx4.parse("x1^2 - x2")
    for order in (Lex(), GrLex(), GrevLex()):
        gb = buchberger([2 * f], order)
        assert gb.polys == (f.monic(order),)


def test_twisted_cubic_grevlex(cubic, ctx4):
    gb = cubic.groebner()
    # the reduced basis is the same three quadrics, normalized monic and
    # sorted by leading term descending
    expected = (ctx4.parse("x2^2 - x1*x3"), ctx4.parse("x2*x3 - x1*x4"),
                ctx4.parse("x3^2 - x2*x4"))
    assert gb.polys == expected
    # oracle: every S-pair of the three generators reduces to 0 by division
    for f, g in combinations(cubic.gens, 2):
        assert normal_form(s_polynomial(f, g), list(cubic.gens)).is_zero()


def test_lex_basis_contains_hand_computed_spair(ctx4):
    ctx = VarContext(["x1", "x2", "x3"])
    I = Ideal(ctx, [ctx.parse("x1^2 - x2"), ctx.parse("x1*x2 - x3")])
    # S(f1, f2) = x2*f1 - x1*f2 = x1*x3 - x2^2 by hand
    s = s_polynomial(I.gens[0], I.gens[1], Lex())
    assert s == ctx.parse("x1*x3 - x2^2")
    assert ctx.parse("x1*x3 - x2^2") in I.groebner(Lex()).polys


def test_reduced_basis_is_canonical(cubic, ctx4):
    rng = random.Random(47)
    reference = cubic.groebner().polys
    for trial in range(6):
        gens = list(cubic.gens)
        rng.shuffle(gens)
        gens = [g * rng.choice([1, 2, -3, 5]) for g in gens]
        # redundant generators must not change the reduced basis either
        gens.append(gens[0] * ctx4.parse("x4") + gens[-1])
        assert buchberger(gens, GrevLex()).polys == reference


def test_criteria_toggles_agree(cubic):
    ctx = VarContext(["x1", "x2", "x3"])
    samples = [
        cubic,
        Ideal(ctx, [ctx.parse("x1^2 - x2"), ctx.parse("x1*x2 - x3")]),
        Ideal(ctx, [ctx.parse("x1*x2 - x3^2"), ctx.parse("x2^2 + x1"),
                    ctx.parse("x1*x3 + 2")]),
    ]
    for I in samples:
        for order in (Lex(), GrevLex()):
            bases = [buchberger(I, order, use_coprime=co, use_chain=ch).polys
                     for co in (True, False) for ch in (True, False)]
            assert all(b == bases[0] for b in bases)


def test_unit_ideal_basis(ctx4):
    gb = buchberger([ctx4.parse("x1"), ctx4.parse("x1 + 1")], GrevLex())
    assert gb.is_unit_ideal()
    assert gb.polys == (ctx4.one(),)


def test_groebner_certifying_property(ctx4):
    # every S-pair of the returned basis reduces to zero modulo the basis
    rng = random.Random(53)
    for _ in range(5):
        I = Ideal(ctx4, [random_polynomial(rng, ctx4, max_terms=3)
                         for _ in range(2)])
        gb = I.groebner()
        polys = list(gb.polys)
        for f, g in combinations(polys, 2):
            assert normal_form(s_polynomial(f, g), polys).is_zero()


# ---------------------------------------------------------------------------
# membership and equality
# ---------------------------------------------------------------------------

def test_is_member_generator(cubic):
    assert is_member(cubic.gens[0], cubic)


def test_x1_not_member_via_parametrization(cubic, ctx4):
    # oracle: the cubic is the kernel of x_i -> s^(n-i+1) t^(i-1); x1 maps to
    # s^3 != 0, hence cannot lie in the ideal
    from transversal.gallery import parametrization_images
    image = parametrization_images(3, Ideal(ctx4, [ctx4.parse("x1")]))[0]
    assert not image.is_zero()
    assert not is_member(ctx4.parse("x1"), cubic)


def test_ideal_equal_row_operation(ctx4):
    ctx = VarContext(["x1", "x2"])
    assert ideal_equal(Ideal(ctx, [ctx.parse("x1"), ctx.parse("x2")]),
                       Ideal(ctx, [ctx.parse("x1 + x2"), ctx.parse("x2")]))


# ---------------------------------------------------------------------------
# elimination intersection and quotients
# ---------------------------------------------------------------------------

def test_elim_intersect_principal(ctx4):
    ctx = VarContext(["x1", "x2", "x3"])
    inter = elim_intersect(Ideal(ctx, [ctx.parse("x1")]),
                           Ideal(ctx, [ctx.parse("x2")]))
    assert ideal_equal(inter, Ideal(ctx, [ctx.parse("x1*x2")]))


def test_elim_intersect_conic_with_hyperplane():
    # the conic x1*x3 - x2^2 and the nonzerodivisor x1 + x3 intersect
    # transversally, so the intersection is the principal product
    ctx = VarContext(["x1", "x2", "x3"])
    I = Ideal(ctx, [ctx.parse("x1*x3 - x2^2")])
    J = Ideal(ctx, [ctx.parse("x1 + x3")])
    inter = elim_intersect(I, J)
    product = Ideal(ctx, [I.gens[0] * J.gens[0]])
    assert ideal_equal(inter, product)


def test_elim_intersect_idempotent(cubic):
    assert ideal_equal(elim_intersect(cubic, cubic), cubic)


def test_elim_intersect_double_inclusion(ctx4):
    # multilinear random inputs: dense high-degree pairs make the
    # elimination basis blow up far beyond desk scale
    rng = random.Random(59)
    for _ in range(15):
        I = Ideal(ctx4, [random_polynomial(rng, ctx4, max_exp=1)
                         for _ in range(2)])
        J = Ideal(ctx4, [random_polynomial(rng, ctx4, max_exp=1)
                         for _ in range(2)])
        inter = elim_intersect(I, J)
        for g in inter.gens:
            assert is_member(g, I) and is_member(g, J)
        for f in I.gens:
            for g in J.gens:
                assert is_member(f * g, inter)


def test_ideal_quotient_examples(cubic, ctx4):
    ctx = VarContext(["x1", "x2"])
    q = ideal_quotient(Ideal(ctx, [ctx.parse("x1*x2")]), ctx.parse("x1"))
    assert ideal_equal(q, Ideal(ctx, [ctx.parse("x2")]))
    q = ideal_quotient(Ideal(ctx, [ctx.parse("x1^2")]), ctx.parse("x1"))
    assert ideal_equal(q, Ideal(ctx, [ctx.parse("x1")]))
    # the cubic is prime and x1 lies outside, so (I : x1) = I
    q = ideal_quotient(cubic, ctx4.parse("x1"))
    assert ideal_equal(q, cubic)


# ---------------------------------------------------------------------------
# nonzerodivisors and regular sequences
# ---------------------------------------------------------------------------

def test_is_nzd(cubic, ctx4):
    assert is_nzd(ctx4.parse("x1 + x4"), cubic)
    ctx = VarContext(["x1", "x2"])
    assert not is_nzd(ctx.parse("x1"), Ideal(ctx, [ctx.parse("x1*x2")]))
    bigger = Ideal(ctx4, cubic.gens + (ctx4.parse("x1 + x4"),))
    assert is_nzd(ctx4.parse("x3"), bigger)


def test_is_nzd_preconditions(ctx4):
    with pytest.raises(PreconditionError):
        is_nzd(ctx4.zero(), Ideal(ctx4, [ctx4.parse("x1")]))
    with pytest.raises(PreconditionError):
        is_nzd(ctx4.parse("x1"), Ideal(ctx4, [ctx4.one()]))


def test_regular_sequences(cubic, ctx4):
    assert is_regular_sequence([ctx4.parse("x1 + x4"), ctx4.parse("x3")], cubic)
    report = check_regular_sequence([ctx4.parse("x1"), ctx4.parse("x1")],
                                    Ideal(ctx4, [ctx4.parse("x2*x3 - x4^2")]))
    assert not report.ok and report.failed_stage == 2
    ctx = VarContext(["x1", "x2", "x3"])
    assert is_regular_sequence([ctx.parse("x1"), ctx.parse("x3")],
                               Ideal(ctx, [ctx.parse("x1*x3 - x2^2")]))


# ---------------------------------------------------------------------------
# transversality
# ---------------------------------------------------------------------------

def test_lt_support_transversal(ctx4):
    ctx = VarContext(["x1", "x2", "x3", "x4"])
    I = Ideal(ctx, [ctx.parse("x1*x3 - x2^2")])
    J = Ideal(ctx, [ctx.parse("x4^2")])
    assert lt_support_transversal(I, J)
    P = Ideal(ctx, [ctx.parse("x1")])
    assert not lt_support_transversal(P, P)


def test_transversal_certificates(cubic, ctx4):
    J = Ideal(ctx4, [ctx4.parse("x1 + x4"), ctx4.parse("x3")])
    cert = transversal(cubic, J)
    assert cert.result
    assert cert.lhs_basis == cert.rhs_basis
    P = Ideal(ctx4, [ctx4.parse("x1")])
    cert = transversal(P, P)
    assert not cert.result
    assert cert.to_json()["lhs_basis"] == ["x1"]
    assert cert.to_json()["rhs_basis"] == ["x1^2"]


def test_transversal_agrees_with_monomial_route(ctx4):
    rng = random.Random(61)
    for _ in range(100):
        MI = random_monomial_ideal(rng, ctx4, max_gens=3, max_exp=2)
        MJ = random_monomial_ideal(rng, ctx4, max_gens=3, max_exp=2)
        I = Ideal(ctx4, MI.gen_polynomials())
        J = Ideal(ctx4, MJ.gen_polynomials())
        assert transversal(I, J).result == is_transversal_monomial(MI, MJ).transversal


def test_dissup_one_way(ctx4):
    # whenever leading-term supports are disjoint, transversality must hold
    rng = random.Random(67)
    hits = 0
    for _ in range(25):
        I = Ideal(ctx4, [random_polynomial(rng, ctx4, indices=[0, 1])])
        J = Ideal(ctx4, [random_polynomial(rng, ctx4, indices=[2, 3])])
        if lt_support_transversal(I, J):
            hits += 1
            assert transversal(I, J).result
    assert hits > 0


def test_power_transversal(ctx4):
    ctx = VarContext(["x1", "x2", "x3"])
    I = Ideal(ctx, [ctx.parse("x1*x3 - x2^2")])
    gs = [ctx.parse("x1"), ctx.parse("x3")]
    for r in (1, 2):
        assert power_transversal(I, gs, r)
    with pytest.raises(PreconditionError):
        power_transversal(Ideal(ctx, [ctx.parse("x1")]), [ctx.parse("x1")], 2)


# ---------------------------------------------------------------------------
# dimension
# ---------------------------------------------------------------------------

def _dimension_bruteforce(I, order):
    """Independent oracle: enumerate all variable subsets and keep the largest
    containing no minimal Lt-generator support."""
    n = I.ctx.nvars
    supports = [set(i for i, e in enumerate(g) if e)
                for g in I.groebner(order).lt_ideal().gens]
    best = 0
    for mask in range(2 ** n):
        S = {i for i in range(n) if mask >> i & 1}
        if not any(s <= S for s in supports):
            best = max(best, len(S))
    return best


def test_dimension_twisted_cubic(cubic):
    assert dimension(cubic) == 2
    assert _dimension_bruteforce(cubic, GrevLex()) == 2


def test_dimension_zero_for_cubic_plus_system(cubic, ctx4):
    J = Ideal(ctx4, [ctx4.parse("x1 + x4"), ctx4.parse("x3")])
    assert dimension(cubic + J) == 0


def test_dimension_hyperplane():
    ctx = VarContext(["x1", "x2", "x3"])
    assert dimension(Ideal(ctx, [ctx.parse("x1")])) == 2


def test_dimension_order_independent(cubic, ctx4):
    rng = random.Random(71)
    ideals = [cubic,
              cubic + Ideal(ctx4, [ctx4.parse("x1 + x4"), ctx4.parse("x3")]),
              Ideal(ctx4, [ctx4.parse("x1*x2 - x3^2")])]
    for _ in range(5):
        ideals.append(Ideal(ctx4, [random_polynomial(rng, ctx4, max_exp=1)
                                   for _ in range(2)]))
    for I in ideals:
        try:
            dims = {dimension(I, o) for o in (Lex(), GrLex(), GrevLex())}
        except PreconditionError:
            continue  # random pair generated the unit ideal
        assert len(dims) == 1
        assert dimension(I) == _dimension_bruteforce(I, GrevLex())


def test_dimension_rejects_unit_ideal(ctx4):
    with pytest.raises(PreconditionError):
        dimension(Ideal(ctx4, [ctx4.one()]))


def test_zero_ideal_edge_cases(ctx4):
    zero = Ideal(ctx4, ())
    assert zero.groebner().is_zero_ideal()
    assert dimension(zero) == 4
    I = Ideal(ctx4, [ctx4.parse("x1")])
    assert elim_intersect(I, zero).is_zero()
    assert transversal(I, zero).result
