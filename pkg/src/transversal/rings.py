"""Sparse multivariate polynomial arithmetic over an exact coefficient field.

Monomials are exponent tuples tied to a :class:`VarContext`; polynomials are
term maps ``{exponent tuple: nonzero coefficient}``.  Values are immutable
after construction and every operation is pure, so sharing across threads is
safe.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

from .errors import CapExceededError, ContextMismatchError, PreconditionError
from .fields import Field, QQ
from .orders import GrevLex, MonomialOrder

MAX_VARS = 64
EXP_CAP = 2 ** 31 - 1  # hard failure instead of silent wraparound

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_ELIM_NAME = "@t"  # reserved; rejected in user contexts by the name regex

_GREVLEX = GrevLex()


# ---------------------------------------------------------------------------
# exponent-tuple helpers
# ---------------------------------------------------------------------------

def mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    m = tuple(x + y for x, y in zip(a, b))
    if any(e > EXP_CAP for e in m):
        raise CapExceededError("monomial exponent exceeds 2^31-1")
    return m


def mono_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mono_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Whether x^a divides x^b (componentwise <=)."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: tuple[int, ...], a: tuple[int, ...]) -> tuple[int, ...]:
    """Exact quotient x^b / x^a; requires divisibility."""
    if not mono_divides(a, b):
        raise PreconditionError("monomial quotient requires divisibility")
    return tuple(y - x for x, y in zip(a, b))


def mono_degree(m: tuple[int, ...]) -> int:
    return sum(m)


def mono_is_one(m: tuple[int, ...]) -> bool:
    return not any(m)


def mono_support(m: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e)


def support(monomials: Iterable[tuple[int, ...]]) -> frozenset[int]:
    """Variable indices dividing some monomial of the set; support({}) = {}."""
    out: set[int] = set()
    for m in monomials:
        out.update(i for i, e in enumerate(m) if e)
    return frozenset(out)


class Term(NamedTuple):
    monomial: tuple[int, ...]
    coeff: object


# ---------------------------------------------------------------------------
# variable contexts
# ---------------------------------------------------------------------------

class VarContext:
    """An ordered tuple of distinct variable names plus a coefficient field."""

    __slots__ = ("names", "field", "_index")

    def __init__(self, names: Iterable[str], field: Field = QQ, _allow_elim: bool = False):
        names = tuple(names)
        if not 1 <= len(names) <= MAX_VARS:
            raise CapExceededError(f"contexts support 1..{MAX_VARS} variables")
        for nm in names:
            if nm == _ELIM_NAME and _allow_elim:
                continue
            if not _NAME_RE.match(nm):
                raise PreconditionError(f"bad variable name {nm!r}")
        if len(set(names)) != len(names):
            raise PreconditionError("variable names must be distinct")
        self.names = names
        self.field = field
        self._index = {nm: i for i, nm in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PreconditionError(f"unknown variable {name!r}") from None

    def __eq__(self, other) -> bool:
        return (isinstance(other, VarContext)
                and self.names == other.names and self.field == other.field)

    def __hash__(self) -> int:
        return hash((self.names, self.field))

    def __repr__(self) -> str:
        return f"{self.field}[{','.join(self.names)}]"

    def check_same(self, other: "VarContext") -> None:
        if self != other:
            raise ContextMismatchError(f"context mismatch: {self!r} vs {other!r}")

    # -- constructors -------------------------------------------------------

    @property
    def unit_monomial(self) -> tuple[int, ...]:
        return (0,) * self.nvars

    def monomial(self, **powers: int) -> tuple[int, ...]:
        exps = [0] * self.nvars
        for nm, e in powers.items():
            if e < 0:
                raise PreconditionError("negative exponent")
            exps[self.index(nm)] = e
        return tuple(exps)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self.unit_monomial: self.field.one})

    def constant(self, c) -> "Polynomial":
        if isinstance(c, int):
            c = self.field.from_int(c)
        return Polynomial(self, {self.unit_monomial: c} if c else {})

    def var(self, name: str, power: int = 1) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = power
        return Polynomial(self, {tuple(exps): self.field.one})

    def from_terms(self, terms: dict) -> "Polynomial":
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.nvars or any(e < 0 for e in m):
                raise PreconditionError(f"bad exponent tuple {m}")
            if isinstance(c, int):
                c = self.field.from_int(c)
            if c:
                clean[m] = c
        return Polynomial(self, clean)

    def parse(self, text: str) -> "Polynomial":
        from .parsing import parse_polynomial
        return parse_polynomial(text, self)

    def with_elim_var(self) -> tuple["VarContext", int]:
        """Context extended by the reserved elimination variable (appended last)."""
        ext = VarContext(self.names + (_ELIM_NAME,), self.field, _allow_elim=True)
        return ext, self.nvars

    # -- display ------------------------------------------------------------

    def mono_str(self, m: tuple[int, ...]) -> str:
        parts = [f"{self.names[i]}^{e}" if e > 1 else self.names[i]
                 for i, e in enumerate(m) if e]
        return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to coefficients.

    Storage is order-agnostic; leading terms are computed on demand for any
    monomial order, so one value serves several order contexts.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: VarContext, terms: dict):
        self.ctx = ctx
        self.terms = terms

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(mono_is_one(m) for m in self.terms)

    def is_term(self) -> bool:
        return len(self.terms) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) == self.ctx.field.one

    # -- structure -----------------------------------------------------------

    def monomials(self) -> frozenset[tuple[int, ...]]:
        """m(f): the set of monomials occurring with nonzero coefficient."""
        return frozenset(self.terms)

    def coeff(self, m: tuple[int, ...]):
        return self.terms.get(tuple(m), self.ctx.field.zero)

    def constant_term(self):
        return self.terms.get(self.ctx.unit_monomial, self.ctx.field.zero)

    def support(self) -> frozenset[int]:
        return support(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def leading_term(self, order: MonomialOrder) -> Term:
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return Term(m, self.terms[m])

    def leading_monomial(self, order: MonomialOrder) -> tuple[int, ...]:
        return self.leading_term(order).monomial

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self.ctx.check_same(other.ctx)
            return other
        if isinstance(other, int):
            return self.ctx.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self.ctx.check_same(other.ctx)
            out: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    c = c1 * c2
                    s = out.get(m)
                    if s is None:
                        if c:
                            out[m] = c
                    else:
                        s = s + c
                        if s:
                            out[m] = s
                        else:
                            del out[m]
            return Polynomial(self.ctx, out)
        if isinstance(other, int):
            other = self.ctx.field.from_int(other)
        if not other:
            return self.ctx.zero()
        return Polynomial(self.ctx, {m: c * other for m, c in self.terms.items()})

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        return self * c

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise PreconditionError("negative polynomial power")
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, m: tuple[int, ...], c) -> "Polynomial":
        if not c:
            return self.ctx.zero()
        return Polynomial(self.ctx, {mono_mul(mm, m): cc * c for mm, cc in self.terms.items()})

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_term(order).coeff
        if lc == self.ctx.field.one:
            return self
        return Polynomial(self.ctx, {m: c / lc for m, c in self.terms.items()})

    # -- equality / display ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ctx.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    __hash__ = None  # value type, but dict payload; never used as a key

    def sorted_terms(self, order: MonomialOrder = _GREVLEX) -> list[Term]:
        return [Term(m, self.terms[m])
                for m in sorted(self.terms, key=order.key, reverse=True)]

    def to_str(self, order: MonomialOrder = _GREVLEX) -> str:
        if not self.terms:
            return "0"
        field = self.ctx.field
        parts: list[str] = []
        for m, c in self.sorted_terms(order):
            neg = field.is_negative(c)
            mag = -c if neg else c
            mono = self.ctx.mono_str(m)
            if mono == "1":
                body = str(mag)
            elif mag == field.one:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"<poly {self} over {self.ctx!r}>"
