"""Monomial ideals with minimal generating sets and the support-disjointness
transversality criterion.

A monomial ideal is stored by its unique minimal monomial generating set,
kept sorted under grevlex so equal ideals compare equal and display
reproducibly.  For monomial ideals, I and J intersect transversally
(I cap J = I*J) exactly when their generator supports are disjoint; the
predicate computes both sides and refuses to return if they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InternalConsistencyError, PreconditionError
from .orders import GrevLex
from .rings import (Polynomial, VarContext, mono_divides, mono_is_one,
                    mono_lcm, mono_mul, support)

_GREVLEX = GrevLex()


def minimalize(monomials: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """The unique minimal generating set of the ideal the monomials generate:
    pairwise incomparable under divisibility, sorted grevlex-descending."""
    pool = sorted(set(monomials), key=_GREVLEX.key)  # ascending: divisors first
    kept: list[tuple[int, ...]] = []
    for m in pool:
        if not any(mono_divides(g, m) for g in kept):
            kept.append(m)
    kept.sort(key=_GREVLEX.key, reverse=True)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal, held by its minimal generators G(I)."""

    __slots__ = ("ctx", "gens")

    def __init__(self, ctx: VarContext, monomials: Iterable[tuple[int, ...]] = ()):
        self.ctx = ctx
        mons = [tuple(m) for m in monomials]
        for m in mons:
            if len(m) != ctx.nvars or any(e < 0 for e in m):
                raise PreconditionError(f"bad exponent tuple {m}")
        self.gens = minimalize(mons)

    # -- basic structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and mono_is_one(self.gens[0])

    def is_proper(self) -> bool:
        return not self.is_unit()

    def num_gens(self) -> int:
        return len(self.gens)

    def support(self) -> frozenset[int]:
        return support(self.gens)

    def contains(self, m: tuple[int, ...]) -> bool:
        """Monomial membership: some generator divides m."""
        m = tuple(m)
        return any(mono_divides(g, m) for g in self.gens)

    def gen_polynomials(self) -> list[Polynomial]:
        one = self.ctx.field.one
        return [Polynomial(self.ctx, {g: one}) for g in self.gens]

    # -- ideal arithmetic ------------------------------------------------------

    def _check(self, other: "MonomialIdeal") -> None:
        self.ctx.check_same(other.ctx)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """I cap J, generated by the pairwise lcms of the generators."""
        self._check(other)
        return MonomialIdeal(
            self.ctx, (mono_lcm(u, v) for u in self.gens for v in other.gens))

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(
            self.ctx, (mono_mul(u, v) for u in self.gens for v in other.gens))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.ctx, self.gens + other.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ctx == other.ctx and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.ctx, self.gens))

    def __repr__(self) -> str:
        inner = ", ".join(self.ctx.mono_str(g) for g in self.gens) or "0"
        return f"({inner})"


@dataclass(frozen=True)
class TransversalMonomialResult:
    transversal: bool
    support_disjoint: bool


def is_transversal_monomial(I: MonomialIdeal, J: MonomialIdeal) -> TransversalMonomialResult:
    """Decide I cap J = I*J two ways and insist the answers agree.

    Route one compares the lcm-generated intersection with the product ideal;
    route two checks generator-support disjointness.  The two are equivalent
    for proper monomial ideals, so disagreement is an internal bug.  Zero
    ideals are vacuously transversal; unit ideals are outside the predicate's
    domain.
    """
    I._check(J)
    if I.is_unit() or J.is_unit():
        raise PreconditionError("transversality predicate requires proper ideals")
    if I.is_zero() or J.is_zero():
        return TransversalMonomialResult(True, True)
    transversal = I.intersect(J) == I.multiply(J)
    disjoint = not (I.support() & J.support())
    if transversal != disjoint:
        raise InternalConsistencyError(
            f"intersection-vs-product says {transversal} but support "
            f"disjointness says {disjoint} for {I!r}, {J!r}")
    return TransversalMonomialResult(transversal, disjoint)
