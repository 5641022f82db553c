"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

All certificates in this package are exact, so coefficients are never floats.
Rationals use ``gmpy2.mpq`` when available and fall back to the stdlib
``fractions.Fraction``; both are arbitrary precision and interchangeable here.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError

try:
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _RAT = Fraction


class Field:
    """Common interface of the coefficient fields."""

    name: str

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def parse(self, text: str):
        """Parse an integer or ``p/q`` literal into a field element."""
        raise NotImplementedError

    def is_negative(self, c) -> bool:
        """Whether ``c`` prints with a leading minus sign."""
        return False

    def __str__(self) -> str:
        return self.name


class RationalField(Field):
    """The field of exact rationals.  A process-wide singleton ``QQ``."""

    name = "Q"
    characteristic = 0

    @property
    def zero(self):
        return _RAT(0)

    @property
    def one(self):
        return _RAT(1)

    def from_int(self, n: int):
        return _RAT(n)

    def parse(self, text: str):
        if "/" in text:
            num, den = text.split("/", 1)
            return _RAT(int(num), int(den))
        return _RAT(int(text))

    def is_negative(self, c) -> bool:
        return c < 0

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")


QQ = RationalField()


class ModP:
    """An element of Z/p.  Arithmetic stays reduced mod p."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _lift(self, other) -> "ModP":
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other
        if isinstance(other, int):
            return ModP(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else ModP(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else ModP(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else ModP(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else ModP(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.v == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return ModP(self.p, self.v * pow(o.v, self.p - 2, self.p))

    def __rtruediv__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else o / self

    def __neg__(self):
        return ModP(self.p, -self.v)

    def __pow__(self, n: int):
        return ModP(self.p, pow(self.v, n, self.p))

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    @property
    def denominator(self):  # display uniformity with rationals
        return 1

    def __repr__(self):
        return str(self.v)

    __str__ = __repr__


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24, far beyond the 2^31 cap
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField(Field):
    """The prime field Z/p for p < 2^31."""

    def __init__(self, p: int):
        if p >= 2 ** 31:
            raise PreconditionError(f"prime field characteristic {p} >= 2^31")
        if not _is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        self.p = p
        self.name = f"Fp({p})"
        self.characteristic = p

    @property
    def zero(self):
        return ModP(self.p, 0)

    @property
    def one(self):
        return ModP(self.p, 1)

    def from_int(self, n: int):
        return ModP(self.p, n)

    def parse(self, text: str):
        if "/" in text:
            num, den = text.split("/", 1)
            return ModP(self.p, int(num)) / ModP(self.p, int(den))
        return ModP(self.p, int(text))

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))
