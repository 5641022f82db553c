"""Monomial orders on exponent tuples: lex, grlex, grevlex, weight, block.

Every order exposes ``key(m) -> tuple[int, ...]`` (a flat integer tuple) such
that monomial comparison is tuple comparison of keys.  Flat keys negate
componentwise, which the division algorithm exploits for its max-heap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContextMismatchError

LT, EQ, GT = -1, 0, 1


class MonomialOrder:
    name = "order"

    def key(self, m: tuple[int, ...]) -> tuple[int, ...]:
        raise NotImplementedError

    def nvars(self) -> int | None:
        """Required exponent-tuple length, or None if any length works."""
        return None

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Lex(MonomialOrder):
    name: str = field(default="lex", init=False)

    def key(self, m):
        return m


@dataclass(frozen=True)
class GrLex(MonomialOrder):
    name: str = field(default="grlex", init=False)

    def key(self, m):
        return (sum(m),) + m


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    name: str = field(default="grevlex", init=False)

    def key(self, m):
        return (sum(m),) + tuple(-e for e in reversed(m))


@dataclass(frozen=True)
class WeightOrder(MonomialOrder):
    """Compare by a non-negative integer weight vector, ties by ``tie``."""

    weights: tuple[int, ...]
    tie: MonomialOrder = GrevLex()

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be non-negative")

    @property
    def name(self):
        return f"weights({','.join(map(str, self.weights))})"

    def nvars(self):
        return len(self.weights)

    def key(self, m):
        w = self.weights
        if len(m) != len(w):
            raise ContextMismatchError(
                f"weight order expects {len(w)} variables, got {len(m)}")
        return (sum(wi * ei for wi, ei in zip(w, m)),) + self.tie.key(m)


@dataclass(frozen=True)
class BlockOrder(MonomialOrder):
    """Compare block by block; each block is (variable indices, inner order).

    The blocks must partition the variable indices.  A monomial involving an
    earlier block dominates every monomial confined to later blocks, which is
    what elimination needs.
    """

    blocks: tuple[tuple[tuple[int, ...], MonomialOrder], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for idxs, _ in self.blocks:
            if seen & set(idxs):
                raise ValueError("block index sets overlap")
            seen |= set(idxs)
        if seen != set(range(len(seen))):
            raise ValueError("blocks must partition 0..n-1")

    @property
    def name(self):
        parts = ",".join(f"[{','.join(map(str, idxs))}]:{o}" for idxs, o in self.blocks)
        return f"block({parts})"

    def nvars(self):
        return sum(len(idxs) for idxs, _ in self.blocks)

    def key(self, m):
        if len(m) != self.nvars():
            raise ContextMismatchError(
                f"block order expects {self.nvars()} variables, got {len(m)}")
        out: tuple[int, ...] = ()
        for idxs, inner in self.blocks:
            out += inner.key(tuple(m[i] for i in idxs))
        return out


def compare(order: MonomialOrder, a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Total comparison of two monomials: one of LT, EQ, GT."""
    if len(a) != len(b):
        raise ContextMismatchError("monomials from different contexts")
    n = order.nvars()
    if n is not None and n != len(a):
        raise ContextMismatchError(
            f"order expects {n} variables, monomials have {len(a)}")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return LT
    if ka > kb:
        return GT
    return EQ


def elimination_order(nvars: int, inner: MonomialOrder | None = None) -> BlockOrder:
    """Block order on ``nvars + 1`` variables putting the last (fresh) variable
    in a dominant singleton block, so it gets eliminated."""
    return BlockOrder((
        ((nvars,), Lex()),
        (tuple(range(nvars)), inner if inner is not None else GrevLex()),
    ))


def order_from_name(name: str) -> MonomialOrder:
    table = {"lex": Lex(), "grlex": GrLex(), "grevlex": GrevLex()}
    if name not in table:
        raise ValueError(f"unknown order {name!r}")
    return table[name]
