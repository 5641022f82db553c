"""Seeded randomized property suites, exposed through the CLI and service.

Each suite replays a library invariant on freshly drawn random inputs:
monomial-order axioms, exact polynomial arithmetic laws, the two-route
monomial transversality agreement, Taylor complex verification, the one-way
leading-term-support implication, and the join chain isomorphism.  The random
generators here are also reused by the test suite.
"""

from __future__ import annotations

import random
from typing import Sequence

from .complexes import is_acyclic_multigraded, taylor, verify_complex
from .gallery import CheckResult
from .groebner import Ideal, lt_support_transversal, transversal
from .monomial_ideals import MonomialIdeal, is_transversal_monomial
from .orders import (BlockOrder, GrevLex, GrLex, Lex, MonomialOrder,
                     WeightOrder, compare, EQ)
from .rings import Polynomial, VarContext, mono_mul
from .simplicial import SimplicialComplex, join_iso_check


# ---------------------------------------------------------------------------
# random generators
# ---------------------------------------------------------------------------

def random_monomial(rng: random.Random, nvars: int, max_exp: int = 3,
                    max_total: int | None = None) -> tuple[int, ...]:
    while True:
        m = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        if max_total is None or sum(m) <= max_total:
            return m


def random_monomial_ideal(rng: random.Random, ctx: VarContext,
                          max_gens: int = 6, max_exp: int = 3,
                          indices: Sequence[int] | None = None) -> MonomialIdeal:
    """A random proper nonzero monomial ideal, optionally confined to a
    variable block."""
    idxs = list(indices) if indices is not None else list(range(ctx.nvars))
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        m = [0] * ctx.nvars
        total = 0
        for i in idxs:
            e = rng.randint(0, max_exp)
            m[i] = e
            total += e
        if total:
            gens.append(tuple(m))
    if not gens:
        m = [0] * ctx.nvars
        m[rng.choice(idxs)] = rng.randint(1, max_exp)
        gens.append(tuple(m))
    return MonomialIdeal(ctx, gens)


def random_polynomial(rng: random.Random, ctx: VarContext,
                      max_terms: int = 3, max_exp: int = 2,
                      indices: Sequence[int] | None = None) -> Polynomial:
    """A random nonzero polynomial supported on a variable block."""
    idxs = list(indices) if indices is not None else list(range(ctx.nvars))
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        m = [0] * ctx.nvars
        for i in idxs:
            m[i] = rng.randint(0, max_exp)
        c = rng.choice([-2, -1, 1, 2, 3])
        terms[tuple(m)] = ctx.field.from_int(c)
    if not any(terms.values()):
        terms[tuple(0 for _ in range(ctx.nvars))] = ctx.field.one
    return ctx.from_terms(terms)


def random_simplicial(rng: random.Random, vertices: Sequence[int],
                      max_facets: int = 4) -> SimplicialComplex:
    verts = list(vertices)
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, len(verts))
        facets.append(tuple(rng.sample(verts, size)))
    return SimplicialComplex(facets)


def _orders_for(nvars: int, rng: random.Random) -> list[MonomialOrder]:
    weights = tuple(rng.randint(0, 5) for _ in range(nvars))
    split = rng.randint(1, nvars - 1) if nvars > 1 else 1
    idxs = list(range(nvars))
    rng.shuffle(idxs)
    block = BlockOrder(((tuple(idxs[:split]), Lex()),
                        (tuple(idxs[split:]), GrevLex()))) if nvars > 1 else None
    out: list[MonomialOrder] = [Lex(), GrLex(), GrevLex(), WeightOrder(weights)]
    if block is not None:
        out.append(block)
    return out


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _suite_order_axioms(rng: random.Random) -> CheckResult:
    nvars = 4
    one = (0,) * nvars
    for trial in range(120):
        orders = _orders_for(nvars, rng)
        a = random_monomial(rng, nvars)
        b = random_monomial(rng, nvars)
        w = random_monomial(rng, nvars)
        for order in orders:
            cab = compare(order, a, b)
            if (cab == EQ) != (a == b):
                return CheckResult("order_axioms", "fail", f"EQ mismatch under {order}")
            if compare(order, b, a) != -cab:
                return CheckResult("order_axioms", "fail", f"antisymmetry under {order}")
            if a != one and compare(order, a, one) != 1:
                return CheckResult("order_axioms", "fail", f"1 not minimal under {order}")
            if compare(order, mono_mul(a, w), mono_mul(b, w)) != cab:
                return CheckResult("order_axioms", "fail", f"not multiplicative under {order}")
    return CheckResult("order_axioms", "pass", "totality, 1 minimal, multiplicativity")


def _suite_poly_arithmetic(rng: random.Random) -> CheckResult:
    ctx = VarContext(["x1", "x2", "x3"])
    for trial in range(60):
        f = random_polynomial(rng, ctx)
        g = random_polynomial(rng, ctx)
        h = random_polynomial(rng, ctx)
        if f + g != g + f or f * g != g * f:
            return CheckResult("poly_arithmetic", "fail", "commutativity")
        if (f + g) + h != f + (g + h) or (f * g) * h != f * (g * h):
            return CheckResult("poly_arithmetic", "fail", "associativity")
        if f * (g + h) != f * g + f * h:
            return CheckResult("poly_arithmetic", "fail", "distributivity")
        for order in _orders_for(3, rng):
            lt_fg = (f * g).leading_term(order)
            lf, lg = f.leading_term(order), g.leading_term(order)
            if lt_fg.monomial != mono_mul(lf.monomial, lg.monomial) \
                    or lt_fg.coeff != lf.coeff * lg.coeff:
                return CheckResult("poly_arithmetic", "fail",
                                   f"leading term not multiplicative under {order}")
    return CheckResult("poly_arithmetic", "pass",
                       "ring laws and leading-term multiplicativity")


def _suite_monomial_transversality(rng: random.Random) -> CheckResult:
    ctx = VarContext([f"x{i}" for i in range(1, 7)])
    for trial in range(60):
        I = random_monomial_ideal(rng, ctx)
        J = random_monomial_ideal(rng, ctx)
        is_transversal_monomial(I, J)  # raises InternalConsistencyError on a bug
    return CheckResult("monomial_transversality", "pass",
                       "lcm route and support route agree")


def _suite_taylor(rng: random.Random) -> CheckResult:
    ctx = VarContext([f"x{i}" for i in range(1, 6)])
    for trial in range(12):
        M = random_monomial_ideal(rng, ctx, max_gens=5)
        T = taylor(M)
        p = M.num_gens()
        from math import comb
        if T.ranks() != [comb(p, i) for i in range(p + 1)]:
            return CheckResult("taylor", "fail", "binomial ranks")
        if not verify_complex(T):
            return CheckResult("taylor", "fail", "d.d != 0")
        if not is_acyclic_multigraded(T, M):
            return CheckResult("taylor", "fail", "not acyclic on the lcm lattice")
    return CheckResult("taylor", "pass", "complex, ranks, and acyclicity")


def _suite_lt_support_one_way(rng: random.Random) -> CheckResult:
    ctx = VarContext([f"x{i}" for i in range(1, 7)])
    block_a, block_b = [0, 1, 2], [3, 4, 5]
    for trial in range(15):
        # multilinear generators keep the elimination bases at desk scale
        I = Ideal(ctx, [random_polynomial(rng, ctx, indices=block_a, max_exp=1)
                        for _ in range(rng.randint(1, 2))])
        J = Ideal(ctx, [random_polynomial(rng, ctx, indices=block_b, max_exp=1)
                        for _ in range(rng.randint(1, 2))])
        if lt_support_transversal(I, J):
            if not transversal(I, J).result:
                return CheckResult("lt_support_one_way", "fail",
                                   "disjoint Lt supports but not transversal")
    return CheckResult("lt_support_one_way", "pass",
                       "disjoint Lt supports imply intersection = product")


def _suite_join_iso(rng: random.Random) -> CheckResult:
    for trial in range(10):
        a = rng.randint(2, 4)
        b = rng.randint(2, 4)
        d1 = random_simplicial(rng, range(1, a + 1))
        d2 = random_simplicial(rng, range(a + 1, a + b + 1))
        if not join_iso_check(d1, d2):
            return CheckResult("join_iso", "fail", f"{d1!r} * {d2!r}")
    return CheckResult("join_iso", "pass", "tensor of chain complexes matches the join")


def run_selftest(seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    return [
        _suite_order_axioms(rng),
        _suite_poly_arithmetic(rng),
        _suite_monomial_transversality(rng),
        _suite_taylor(rng),
        _suite_lt_support_one_way(rng),
        _suite_join_iso(rng),
    ]
