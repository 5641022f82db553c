"""Taylor complexes, tensor products, the wedge isomorphism, lcm-lattice
acyclicity, pruning, and K-polynomials, all with exact arithmetic."""

import random
from math import comb

import pytest

from transversal.complexes import (FreeComplex, PolyMatrix, betti_numbers,
                                   betti_table, complex_to_json,
                                   is_acyclic_multigraded, is_minimal,
                                   k_polynomial, lcm_lattice, prune, taylor,
                                   taylor_iso_check, taylor_on_generators,
                                   tensor, verify_complex)
from transversal.errors import CapExceededError, PreconditionError
from transversal.monomial_ideals import MonomialIdeal
from transversal.rings import VarContext
from transversal.selftest import random_monomial_ideal


@pytest.fixture
def ctx():
    return VarContext(["x1", "x2", "x3", "x4", "x5"])


def _ideal(ctx, *monos):
    return MonomialIdeal(ctx, [ctx.monomial(**p) for p in monos])


def _entry_terms(C, i, r, c):
    p = C.diff(i).entry(r, c)
    return None if p is None else dict(p.terms)


# ---------------------------------------------------------------------------
# Taylor construction
# ---------------------------------------------------------------------------

def test_taylor_two_generators_exact_matrices(ctx):
    # generators sort to (x1*x2, x2*x3); removing the k-th wedge slot carries
    # sign (-1)^(k-1) and the lcm quotient
    M = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1})
    T = taylor(M)
    assert T.ranks() == [1, 2, 1]
    one = ctx.field.one
    assert _entry_terms(T, 1, 0, 0) == {ctx.monomial(x1=1, x2=1): one}
    assert _entry_terms(T, 1, 0, 1) == {ctx.monomial(x2=1, x3=1): one}
    # d2(e1^e2) = x3*e1... with our canonical order: +lcm/m2 on e2, -lcm/m1 on e1
    assert _entry_terms(T, 2, 1, 0) == {ctx.monomial(x1=1): one}
    assert _entry_terms(T, 2, 0, 0) == {ctx.monomial(x3=1): -one}
    assert (T.diff(1).matmul(T.diff(2))).is_zero()


def test_taylor_koszul_two_variables(ctx):
    M = _ideal(ctx, {"x1": 1}, {"x2": 1})
    T = taylor(M)
    one = ctx.field.one
    assert _entry_terms(T, 2, 1, 0) == {ctx.monomial(x1=1): one}   # +x1 e2
    assert _entry_terms(T, 2, 0, 0) == {ctx.monomial(x2=1): -one}  # -x2 e1
    assert is_minimal(T)


def test_taylor_binomial_ranks(ctx):
    M = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1}, {"x3": 1, "x4": 1})
    assert taylor(M).ranks() == [comb(3, i) for i in range(4)]


def test_taylor_mdeg_labels(ctx):
    M = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1})
    T = taylor(M)
    assert T.levels[0][0].mdeg == ctx.unit_monomial
    assert T.levels[2][0].mdeg == ctx.monomial(x1=1, x2=1, x3=1)


def test_taylor_preconditions(ctx):
    with pytest.raises(PreconditionError):
        taylor(MonomialIdeal(ctx, []))
    with pytest.raises(PreconditionError):
        taylor(MonomialIdeal(ctx, [ctx.unit_monomial]))
    with pytest.raises(CapExceededError):
        taylor_on_generators(VarContext([f"z{i}" for i in range(25)]),
                             [tuple(1 if j == i else 0 for j in range(25))
                              for i in range(25)])


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def test_verify_random_taylor(ctx):
    rng = random.Random(101)
    for _ in range(50):
        M = random_monomial_ideal(rng, ctx, max_gens=5)
        assert verify_complex(taylor(M))


def test_verify_detects_corrupted_sign(ctx):
    M = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1})
    T = taylor(M)
    bad_entries = dict(T.diff(2).entries)
    bad_entries[(0, 0)] = -bad_entries[(0, 0)]
    bad = FreeComplex(ctx, T.levels,
                      [T.diff(1), PolyMatrix(2, 1, bad_entries)])
    check = verify_complex(bad)
    assert not check and check.position == 2


def test_verify_trivial_complexes(ctx):
    from transversal.complexes import BasisLabel
    zero = FreeComplex(ctx, [[]], [])
    assert verify_complex(zero)
    just_r = FreeComplex(ctx, [[BasisLabel((), ctx.unit_monomial)]], [])
    assert verify_complex(just_r)


# ---------------------------------------------------------------------------
# acyclicity over the lcm lattice
# ---------------------------------------------------------------------------

def test_lcm_lattice(ctx):
    M = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1})
    lattice = lcm_lattice(M)
    assert set(lattice) == {ctx.unit_monomial, ctx.monomial(x1=1, x2=1),
                            ctx.monomial(x2=1, x3=1),
                            ctx.monomial(x1=1, x2=1, x3=1)}


def test_taylor_acyclic(ctx):
    M = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1}, {"x3": 1, "x4": 1})
    assert is_acyclic_multigraded(taylor(M), M)


def test_taylor_acyclic_randomized(ctx):
    rng = random.Random(103)
    for _ in range(30):
        M = random_monomial_ideal(rng, ctx, max_gens=6)
        assert is_acyclic_multigraded(taylor(M), M)


def test_truncated_koszul_not_acyclic(ctx):
    # dropping the top level leaves a hole at the lattice degree x1*x2
    M = _ideal(ctx, {"x1": 1}, {"x2": 1})
    T = taylor(M)
    truncated = FreeComplex(ctx, T.levels[:2], [T.diff(1)])
    assert verify_complex(truncated)
    assert not is_acyclic_multigraded(truncated, M)


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------

def test_tensor_vandermonde_ranks(ctx):
    rng = random.Random(107)
    for _ in range(10):
        I = random_monomial_ideal(rng, ctx, max_gens=4, indices=[0, 1])
        J = random_monomial_ideal(rng, ctx, max_gens=4, indices=[2, 3])
        T = tensor(taylor(I), taylor(J))
        p, q = I.num_gens(), J.num_gens()
        assert T.ranks() == [comb(p + q, r) for r in range(p + q + 1)]
        assert verify_complex(T)


def test_tensor_unit(ctx):
    from transversal.complexes import BasisLabel
    M = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1})
    T = taylor(M)
    unit = FreeComplex(ctx, [[BasisLabel((), ctx.unit_monomial)]], [])
    left = tensor(T, unit)
    assert left.ranks() == T.ranks()
    for i in range(1, T.length + 1):
        assert left.diff(i).entries == T.diff(i).entries
    right = tensor(unit, T)
    assert right.ranks() == T.ranks()
    for i in range(1, T.length + 1):
        assert right.diff(i).entries == T.diff(i).entries


def test_tensor_of_single_variables_is_koszul(ctx):
    # isomorphic to the Koszul complex: same ranks, same entry multisets per
    # level (the basis permutation is the wedge bijection, verified exactly
    # by taylor_iso_check)
    A = _ideal(ctx, {"x1": 1})
    B = _ideal(ctx, {"x2": 1})
    T = tensor(taylor(A), taylor(B))
    K = taylor(_ideal(ctx, {"x1": 1}, {"x2": 1}))
    assert T.ranks() == K.ranks()
    for i in (1, 2):
        assert sorted(str(p) for p in T.diff(i).entries.values()) \
            == sorted(str(p) for p in K.diff(i).entries.values())
    assert taylor_iso_check(A, B)


# ---------------------------------------------------------------------------
# the wedge-concatenation isomorphism
# ---------------------------------------------------------------------------

def test_iso_koszul_case(ctx):
    assert taylor_iso_check(_ideal(ctx, {"x1": 1}), _ideal(ctx, {"x2": 1}))


def test_iso_example(ctx):
    I = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1})
    J = _ideal(ctx, {"x4": 1, "x5": 1})
    assert taylor_iso_check(I, J)


def test_iso_randomized(ctx):
    rng = random.Random(109)
    for _ in range(20):
        I = random_monomial_ideal(rng, ctx, max_gens=4, indices=[0, 1])
        J = random_monomial_ideal(rng, ctx, max_gens=4, indices=[2, 3, 4])
        if I.num_gens() + J.num_gens() <= 8:
            assert taylor_iso_check(I, J)


def test_iso_rejects_shared_support(ctx):
    with pytest.raises(PreconditionError):
        taylor_iso_check(_ideal(ctx, {"x1": 1}), _ideal(ctx, {"x1": 1, "x2": 1}))


# ---------------------------------------------------------------------------
# minimality and pruning
# ---------------------------------------------------------------------------

def test_koszul_already_minimal(ctx):
    T = taylor(_ideal(ctx, {"x1": 1}, {"x2": 1}))
    assert is_minimal(T)
    P = prune(T)
    assert P.ranks() == T.ranks()
    for i in range(1, T.length + 1):
        assert P.diff(i).entries == T.diff(i).entries


def test_cycle_ideal_betti(ctx):
    # the three pairwise lcms all equal the total lcm, so the top level
    # cancels: Betti numbers (1, 3, 2)
    M = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1}, {"x1": 1, "x3": 1})
    T = taylor(M)
    assert not is_minimal(T)
    P = prune(T)
    assert is_minimal(P)
    assert betti_numbers(T) == [1, 3, 2]
    assert verify_complex(P)
    assert is_acyclic_multigraded(P, M)


def test_prune_preserves_k_polynomial_and_acyclicity(ctx):
    rng = random.Random(113)
    for _ in range(15):
        M = random_monomial_ideal(rng, ctx, max_gens=5)
        T = taylor(M)
        P = prune(T)
        assert k_polynomial(P) == k_polynomial(T)
        assert is_acyclic_multigraded(P, M)


def test_tensor_of_pruned_is_minimal_for_disjoint_supports(ctx):
    rng = random.Random(127)
    for _ in range(10):
        I = random_monomial_ideal(rng, ctx, max_gens=3, indices=[0, 1])
        J = random_monomial_ideal(rng, ctx, max_gens=3, indices=[2, 3, 4])
        T = tensor(prune(taylor(I)), prune(taylor(J)))
        assert is_minimal(T)
        assert verify_complex(T)


def test_prune_requires_complex(ctx):
    M = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1})
    T = taylor(M)
    bad_entries = dict(T.diff(2).entries)
    bad_entries[(0, 0)] = -bad_entries[(0, 0)]
    bad = FreeComplex(ctx, T.levels, [T.diff(1), PolyMatrix(2, 1, bad_entries)])
    with pytest.raises(PreconditionError):
        prune(bad)


# ---------------------------------------------------------------------------
# K-polynomials
# ---------------------------------------------------------------------------

def test_koszul_k_polynomial(ctx):
    T = taylor(_ideal(ctx, {"x1": 1}, {"x2": 1}))
    assert k_polynomial(T) == ctx.parse("1 - x1 - x2 + x1*x2")


def test_k_polynomial_product_for_disjoint_pairs(ctx):
    # with disjoint supports the Taylor complex of the sum is isomorphic to
    # the tensor, so its K-polynomial factors exactly
    rng = random.Random(131)
    for _ in range(15):
        I = random_monomial_ideal(rng, ctx, max_gens=3, indices=[0, 1])
        J = random_monomial_ideal(rng, ctx, max_gens=3, indices=[2, 3, 4])
        S = I + J
        assert k_polynomial(taylor(S)) == k_polynomial(taylor(I)) * k_polynomial(taylor(J))


def test_betti_table(ctx):
    M = _ideal(ctx, {"x1": 1, "x2": 1}, {"x2": 1, "x3": 1}, {"x1": 1, "x3": 1})
    table = betti_table(taylor(M))
    assert table[0] == {0: 1}
    assert table[1] == {2: 3}
    assert table[2] == {3: 2}


def test_complex_json_shape(ctx):
    M = _ideal(ctx, {"x1": 1}, {"x2": 1})
    data = complex_to_json(taylor(M))
    assert data["ranks"] == [1, 2, 1]
    assert data["levels"][1][0]["mdeg"] == [1, 0, 0, 0, 0]
    assert all(isinstance(e[2], str) for d in data["diffs"] for e in d)
