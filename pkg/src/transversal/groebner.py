"""Buchberger engine and every Groebner-derived predicate the certificates
need: normal forms, reduced bases, elimination intersection, ideal quotient,
nonzerodivisor and regular-sequence tests, leading-term-support
transversality, the general transversality certificate, power transversality,
and Krull dimension via leading-term ideals.

The engine works on raw term dicts (exponent tuple -> coefficient) with monic
basis elements; :class:`~transversal.rings.Polynomial` wraps the results at
the API boundary.  Reduced Groebner bases are canonical: recomputing from
shuffled or rescaled generators yields the identical basis.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import CapExceededError, ExactDivisionError, PreconditionError
from .monomial_ideals import MonomialIdeal
from .orders import GrevLex, MonomialOrder, elimination_order
from .rings import (Polynomial, VarContext, mono_divides, mono_is_one,
                    mono_lcm, mono_mul)

_GREVLEX = GrevLex()

DIMENSION_VAR_CAP = 20


# ---------------------------------------------------------------------------
# raw-dict division algorithm
# ---------------------------------------------------------------------------

def _neg_key(k: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in k)


def _monic(d: dict, keyf) -> tuple[tuple[int, ...], dict]:
    lt = max(d, key=keyf)
    lc = d[lt]
    if lc != 1:
        d = {m: c / lc for m, c in d.items()}
    return lt, d


def _nf(p: dict, basis: Sequence[tuple[tuple[int, ...], dict]], keyf,
        quotients: list[dict] | None = None) -> dict:
    """Full normal form of the term dict ``p`` modulo monic basis elements.

    Monomials are processed largest first; among applicable divisors the
    earliest basis element wins, so the result is deterministic.  If
    ``quotients`` is given it accumulates, per basis element, the term
    multipliers used.
    """
    if not p or not basis:
        return dict(p)
    work = dict(p)
    heap = [(_neg_key(keyf(m)), m) for m in work]
    heapq.heapify(heap)
    out: dict = {}
    while heap:
        m = heapq.heappop(heap)[1]
        c = work.get(m)
        if c is None:
            continue
        del work[m]
        for gi, (lt, terms) in enumerate(basis):
            if mono_divides(lt, m):
                break
        else:
            out[m] = c
            continue
        shift = tuple(a - b for a, b in zip(m, lt))
        if quotients is not None:
            q = quotients[gi]
            q[shift] = q.get(shift, 0) + c
        for mg, cg in terms.items():
            if mg == lt:
                continue
            m2 = tuple(x + y for x, y in zip(shift, mg))
            s = work.get(m2)
            if s is None:
                v = -(c * cg)
                if v:
                    work[m2] = v
                    heapq.heappush(heap, (_neg_key(keyf(m2)), m2))
            else:
                s = s - c * cg
                if s:
                    work[m2] = s
                else:
                    del work[m2]
    return out


def _spoly(a: tuple[tuple[int, ...], dict], b: tuple[tuple[int, ...], dict]) -> dict:
    """S-polynomial of two monic basis elements."""
    lta, ta = a
    ltb, tb = b
    l = mono_lcm(lta, ltb)
    sa = tuple(x - y for x, y in zip(l, lta))
    sb = tuple(x - y for x, y in zip(l, ltb))
    out: dict = {}
    for m, c in ta.items():
        out[mono_mul(m, sa)] = c
    for m, c in tb.items():
        m2 = mono_mul(m, sb)
        s = out.get(m2)
        if s is None:
            out[m2] = -c
        else:
            s = s - c
            if s:
                out[m2] = s
            else:
                del out[m2]
    return out


def _buchberger_dicts(seeds: list[dict], order: MonomialOrder,
                      use_coprime: bool = True, use_chain: bool = True,
                      ) -> list[tuple[tuple[int, ...], dict]]:
    """Reduced Groebner basis of the ideal the seed dicts generate.

    Classical Buchberger with normal (minimal lcm degree) pair selection and
    the two standard pair-elimination criteria as toggles.
    """
    keyf = order.key
    G: list[tuple[tuple[int, ...], dict]] = []
    pairs: list[tuple[int, int, int]] = []
    done: set[tuple[int, int]] = set()

    def push_pairs(j: int) -> None:
        ltj = G[j][0]
        for i in range(j):
            l = mono_lcm(G[i][0], ltj)
            heapq.heappush(pairs, (sum(l), i, j))

    def unit_basis() -> list[tuple[tuple[int, ...], dict]]:
        one = G[-1][0]
        return [(one, {one: _one_like(G[-1][1])})]

    for d in seeds:
        r = _nf(d, G, keyf)
        if r:
            G.append(_monic(r, keyf))
            if mono_is_one(G[-1][0]):
                return unit_basis()
            push_pairs(len(G) - 1)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        done.add((i, j))
        lti, ltj = G[i][0], G[j][0]
        l = mono_lcm(lti, ltj)
        if use_coprime and l == mono_mul(lti, ltj):
            continue
        if use_chain and _chain_skip(G, done, i, j, l):
            continue
        r = _nf(_spoly(G[i], G[j]), G, keyf)
        if r:
            G.append(_monic(r, keyf))
            if mono_is_one(G[-1][0]):
                return unit_basis()
            push_pairs(len(G) - 1)

    # minimal basis: a leading term divisible by another element's is redundant
    by_lt = sorted(G, key=lambda g: keyf(g[0]))
    kept: list[tuple[tuple[int, ...], dict]] = []
    for lt, d in by_lt:
        if not any(mono_divides(l2, lt) for l2, _ in kept):
            kept.append((lt, d))
    # tail-reduce every element modulo the rest; leading terms survive
    reduced: list[tuple[tuple[int, ...], dict]] = []
    for idx, (lt, d) in enumerate(kept):
        others = kept[:idx] + kept[idx + 1:]
        reduced.append((lt, _nf(d, others, keyf)))
    reduced.sort(key=lambda g: keyf(g[0]), reverse=True)
    return reduced


def _chain_skip(G, done: set[tuple[int, int]], i: int, j: int,
                l: tuple[int, ...]) -> bool:
    """Buchberger's chain criterion: some already-treated k splits the pair."""
    for k in range(len(G)):
        if k == i or k == j or not mono_divides(G[k][0], l):
            continue
        if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
            return True
    return False


def _one_like(d: dict):
    """The multiplicative unit of the coefficient domain of a term dict."""
    c = next(iter(d.values()))
    return c / c


# ---------------------------------------------------------------------------
# public ideal / basis types
# ---------------------------------------------------------------------------

class Ideal:
    """A polynomial ideal given by an ordered list of nonzero generators.

    Generator order is preserved as given: it is user-meaningful for regular
    sequences.  Reduced Groebner bases are cached per order.
    """

    __slots__ = ("ctx", "gens", "_gb_cache")

    def __init__(self, ctx: VarContext, gens: Iterable[Polynomial] = ()):
        self.ctx = ctx
        gens = tuple(gens)
        for g in gens:
            ctx.check_same(g.ctx)
            if g.is_zero():
                raise PreconditionError("ideal generators must be nonzero")
        self.gens = gens
        self._gb_cache: dict[MonomialOrder, GroebnerBasis] = {}

    def is_zero(self) -> bool:
        return not self.gens

    def __add__(self, other: "Ideal") -> "Ideal":
        self.ctx.check_same(other.ctx)
        return Ideal(self.ctx, self.gens + other.gens)

    def groebner(self, order: MonomialOrder = _GREVLEX,
                 use_coprime: bool = True, use_chain: bool = True) -> "GroebnerBasis":
        cacheable = use_coprime and use_chain
        if cacheable and order in self._gb_cache:
            return self._gb_cache[order]
        gb = buchberger(self, order, use_coprime=use_coprime, use_chain=use_chain)
        if cacheable:
            self._gb_cache[order] = gb
        return gb

    def __repr__(self) -> str:
        return f"<ideal ({', '.join(str(g) for g in self.gens) or '0'})>"


class GroebnerBasis:
    """A reduced Groebner basis: monic, interreduced, sorted by leading term
    descending.  Unique for the (ideal, order) pair."""

    __slots__ = ("ctx", "polys", "order", "reduced")

    def __init__(self, ctx: VarContext, polys: tuple[Polynomial, ...],
                 order: MonomialOrder, reduced: bool = True):
        self.ctx = ctx
        self.polys = polys
        self.order = order
        self.reduced = reduced

    def is_unit_ideal(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant() and bool(self.polys[0])

    def is_zero_ideal(self) -> bool:
        return not self.polys

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def lt_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(
            self.ctx, (p.leading_monomial(self.order) for p in self.polys))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.ctx == other.ctx and self.order == other.order
                and self.polys == other.polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __repr__(self) -> str:
        return f"<reduced GB [{'; '.join(str(p) for p in self.polys)}] wrt {self.order}>"


def _as_dicts(polys: Iterable[Polynomial]) -> list[dict]:
    return [dict(p.terms) for p in polys if p.terms]


def buchberger(I: Ideal | Sequence[Polynomial], order: MonomialOrder = _GREVLEX,
               use_coprime: bool = True, use_chain: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal (unit ideal yields basis {1})."""
    if isinstance(I, Ideal):
        ctx, polys = I.ctx, I.gens
    else:
        polys = tuple(I)
        if not polys:
            raise PreconditionError("cannot infer context from an empty list")
        ctx = polys[0].ctx
        for p in polys:
            ctx.check_same(p.ctx)
    raw = _buchberger_dicts(_as_dicts(polys), order, use_coprime, use_chain)
    return GroebnerBasis(ctx, tuple(Polynomial(ctx, d) for _, d in raw), order)


# ---------------------------------------------------------------------------
# division-based operations
# ---------------------------------------------------------------------------

def _reducers(G: Iterable[Polynomial], keyf) -> list[tuple[tuple[int, ...], dict]]:
    out = []
    for g in G:
        if g.is_zero():
            raise PreconditionError("division by the zero polynomial")
        out.append(_monic(dict(g.terms), keyf))
    return out


def normal_form(f: Polynomial, G: Sequence[Polynomial] | GroebnerBasis,
                order: MonomialOrder = _GREVLEX) -> Polynomial:
    """Remainder of f on multivariate division by G: no monomial of the
    result is divisible by any leading term of G, and f minus the result
    lies in the ideal G generates."""
    if isinstance(G, GroebnerBasis):
        order = G.order
        G = G.polys
    keyf = order.key
    return Polynomial(f.ctx, _nf(dict(f.terms), _reducers(G, keyf), keyf))


def divmod_poly(f: Polynomial, G: Sequence[Polynomial],
                order: MonomialOrder = _GREVLEX) -> tuple[list[Polynomial], Polynomial]:
    """Quotients and remainder with f == sum(q_i * g_i) + r exactly."""
    keyf = order.key
    basis = _reducers(G, keyf)
    quots: list[dict] = [{} for _ in G]
    r = _nf(dict(f.terms), basis, keyf, quotients=quots)
    ctx = f.ctx
    out = []
    for g, q in zip(G, quots):
        lc = g.leading_term(order).coeff
        out.append(Polynomial(ctx, {m: c / lc for m, c in q.items()}))
    return out, Polynomial(ctx, r)


def s_polynomial(f: Polynomial, g: Polynomial,
                 order: MonomialOrder = _GREVLEX) -> Polynomial:
    keyf = order.key
    a = _monic(dict(f.terms), keyf)
    b = _monic(dict(g.terms), keyf)
    return Polynomial(f.ctx, _spoly(a, b))


def poly_exact_div(g: Polynomial, f: Polynomial,
                   order: MonomialOrder = _GREVLEX) -> Polynomial:
    """Exact quotient g / f; raises if f does not divide g."""
    quots, r = divmod_poly(g, [f], order)
    if not r.is_zero():
        raise ExactDivisionError("polynomial division left a remainder")
    return quots[0]


def is_member(f: Polynomial, I: Ideal, order: MonomialOrder = _GREVLEX) -> bool:
    return normal_form(f, I.groebner(order)).is_zero()


def ideal_equal(I: Ideal, J: Ideal, order: MonomialOrder = _GREVLEX) -> bool:
    """Ideal equality via identical reduced Groebner bases."""
    I.ctx.check_same(J.ctx)
    return I.groebner(order).polys == J.groebner(order).polys


# ---------------------------------------------------------------------------
# elimination intersection, quotient, nonzerodivisors
# ---------------------------------------------------------------------------

def elim_intersect(I: Ideal, J: Ideal, order: MonomialOrder = _GREVLEX) -> Ideal:
    """Generators of I cap J via the fresh-variable elimination ideal
    <t*I, (1-t)*J> cap R, using a block order that eliminates t."""
    I.ctx.check_same(J.ctx)
    ctx = I.ctx
    if I.is_zero() or J.is_zero():
        return Ideal(ctx, ())
    seeds: list[dict] = []
    for f in I.gens:
        seeds.append({m + (1,): c for m, c in f.terms.items()})
    for g in J.gens:
        d = {}
        for m, c in g.terms.items():
            d[m + (0,)] = c
            d[m + (1,)] = -c
        seeds.append(d)
    t_idx = ctx.nvars
    eorder = elimination_order(ctx.nvars, order)
    raw = _buchberger_dicts(seeds, eorder)
    kept: list[Polynomial] = []
    for lt, d in raw:
        if lt[t_idx] == 0:
            kept.append(Polynomial(ctx, {m[:-1]: c for m, c in d.items()}))
    kept.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    return Ideal(ctx, kept)


def ideal_quotient(I: Ideal, f: Polynomial, order: MonomialOrder = _GREVLEX) -> Ideal:
    """(I : f), computed as (I cap <f>) with every generator divided by f."""
    if f.is_zero():
        raise PreconditionError("ideal quotient by the zero polynomial")
    inter = elim_intersect(I, Ideal(I.ctx, (f,)), order)
    return Ideal(I.ctx, tuple(poly_exact_div(g, f, order) for g in inter.gens))


def is_nzd(f: Polynomial, I: Ideal, order: MonomialOrder = _GREVLEX) -> bool:
    """Whether f is a nonzerodivisor on R/I, i.e. (I : f) = I."""
    if f.is_zero():
        raise PreconditionError("nonzerodivisor test needs a nonzero polynomial")
    if I.groebner(order).is_unit_ideal():
        raise PreconditionError("nonzerodivisor test needs a proper ideal")
    return ideal_equal(ideal_quotient(I, f, order), I, order)


@dataclass(frozen=True)
class RegularSequenceReport:
    ok: bool
    failed_stage: int | None = None  # 1-based index into the sequence
    reason: str = ""


def check_regular_sequence(fs: Sequence[Polynomial], I: Ideal,
                           order: MonomialOrder = _GREVLEX) -> RegularSequenceReport:
    """Stagewise regular-sequence test on R/I: each prefix quotient must stay
    proper and each element must be a nonzerodivisor modulo the prefix."""
    if I.groebner(order).is_unit_ideal():
        raise PreconditionError("regular-sequence test needs a proper ideal")
    current = I
    for stage, f in enumerate(fs, start=1):
        if f.is_zero():
            return RegularSequenceReport(False, stage, "zero polynomial")
        if current.groebner(order).is_unit_ideal():
            return RegularSequenceReport(False, stage, "unit ideal reached")
        if not is_nzd(f, current, order):
            return RegularSequenceReport(False, stage, "zero divisor")
        current = Ideal(I.ctx, current.gens + (f,))
    return RegularSequenceReport(True)


def is_regular_sequence(fs: Sequence[Polynomial], I: Ideal,
                        order: MonomialOrder = _GREVLEX) -> bool:
    return check_regular_sequence(fs, I, order).ok


# ---------------------------------------------------------------------------
# transversality
# ---------------------------------------------------------------------------

def lt_support_transversal(I: Ideal, J: Ideal,
                           order: MonomialOrder = _GREVLEX) -> bool:
    """Sufficient criterion: disjoint supports of the leading-term ideals
    imply transversal intersection.  False does NOT refute transversality."""
    I.ctx.check_same(J.ctx)
    si = I.groebner(order).lt_ideal().support()
    sj = J.groebner(order).lt_ideal().support()
    return not (si & sj)


@dataclass(frozen=True)
class TransversalCertificate:
    result: bool
    lhs_basis: tuple[Polynomial, ...]  # reduced GB of the elimination intersection
    rhs_basis: tuple[Polynomial, ...]  # reduced GB of the product ideal
    order: MonomialOrder

    def to_json(self) -> dict:
        return {
            "lhs_basis": [p.to_str(self.order) for p in self.lhs_basis],
            "rhs_basis": [p.to_str(self.order) for p in self.rhs_basis],
            "equal": self.result,
            "order": str(self.order),
        }


def product_ideal(I: Ideal, J: Ideal) -> Ideal:
    I.ctx.check_same(J.ctx)
    return Ideal(I.ctx, tuple(f * g for f in I.gens for g in J.gens))


def transversal(I: Ideal, J: Ideal,
                order: MonomialOrder = _GREVLEX) -> TransversalCertificate:
    """Decide I cap J = I*J exactly: elimination intersection on the left,
    generator products on the right, equality by reduced Groebner bases."""
    I.ctx.check_same(J.ctx)
    lhs = elim_intersect(I, J, order).groebner(order)
    rhs = product_ideal(I, J).groebner(order)
    return TransversalCertificate(lhs.polys == rhs.polys, lhs.polys, rhs.polys, order)


def power_transversal(I: Ideal, gs: Sequence[Polynomial], r: int,
                      order: MonomialOrder = _GREVLEX) -> bool:
    """Check I cap J^r = I*J^r for J = <gs>, under the theorem's hypothesis
    that gs is a regular sequence on R/I (verified; error if it fails)."""
    if r < 1:
        raise PreconditionError("power must be a positive integer")
    report = check_regular_sequence(gs, I, order)
    if not report.ok:
        raise PreconditionError(
            f"gs is not a regular sequence modulo I "
            f"(stage {report.failed_stage}: {report.reason})")
    # J^r generated by all length-r generator products, matching the proof's
    # expansion; the polynomial generating set is deliberately not minimalized.
    jr_gens = tuple(_product(ps) for ps in combinations_with_replacement(gs, r))
    Jr = Ideal(I.ctx, jr_gens)
    lhs = elim_intersect(I, Jr, order)
    rhs = product_ideal(I, Jr)
    return ideal_equal(lhs, rhs, order)


def _product(ps: Sequence[Polynomial]) -> Polynomial:
    out = ps[0]
    for p in ps[1:]:
        out = out * p
    return out


# ---------------------------------------------------------------------------
# dimension via leading-term ideals
# ---------------------------------------------------------------------------

def dimension(I: Ideal, order: MonomialOrder = _GREVLEX) -> int:
    """Krull dimension of R/I: the maximum size of a variable set S such that
    no minimal generator of the leading-term ideal has support inside S.
    Uses dim R/I = dim R/Lt(I)."""
    n = I.ctx.nvars
    if n > DIMENSION_VAR_CAP:
        raise CapExceededError(
            f"dimension supports at most {DIMENSION_VAR_CAP} variables")
    gb = I.groebner(order)
    if gb.is_unit_ideal():
        raise PreconditionError("dimension needs a proper ideal")
    supports = [frozenset(i for i, e in enumerate(g) if e)
                for g in gb.lt_ideal().gens]
    return n - _min_hitting_set(supports)


def _min_hitting_set(supports: list[frozenset[int]]) -> int:
    """Minimum number of variables meeting every support set.

    A variable set S avoids every generator support exactly when its
    complement hits every support, so max independent size = n - minimum
    hitting set size.
    """
    kept: list[frozenset[int]] = []
    for s in sorted(set(supports), key=lambda t: (len(t), sorted(t))):
        if not any(t <= s for t in kept):
            kept.append(s)
    if not kept:
        return 0
    best = len(frozenset().union(*kept))

    def search(chosen: frozenset[int], count: int) -> None:
        nonlocal best
        if count >= best:
            return
        for s in kept:
            if not (s & chosen):
                for v in sorted(s):
                    search(chosen | {v}, count + 1)
                return
        best = count

    search(frozenset(), 0)
    return best
