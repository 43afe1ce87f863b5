"""Exact arithmetic in Q(sqrt(D)).

Elements are stored as ``a + b*sqrt(D)`` with ``a``, ``b`` reduced
fractions and ``D`` a squarefree integer.  Perfect-square radicands are
folded into the rational part at construction, so a rational value always
has ``b == 0`` and ``D == 1`` and structural equality is canonical.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = [
    "Kind",
    "QuadElement",
    "RadicandMismatchError",
    "SequenceParams",
    "add",
    "conjugate",
    "is_integer",
    "is_rational",
    "mul",
    "neg",
    "norm",
    "pow",
    "roots_of",
    "squarefree_split",
    "trace",
]

Number = Union[int, Fraction]


class RadicandMismatchError(ValueError):
    """Two irrational operands live in different quadratic fields."""


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, d)`` with ``n == k*k*d`` and ``d`` squarefree.

    The sign stays with ``d``.  Trial division runs up to the cube root of
    the unfactored part; whatever is left has at most two prime factors and
    is a square exactly when it is a perfect square.
    """
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    m = abs(n)
    k, d = 1, 1
    i = 2
    while i * i * i <= m:
        if m % i == 0:
            e = 0
            while m % i == 0:
                m //= i
                e += 1
            k *= i ** (e // 2)
            if e % 2:
                d *= i
        i += 1 if i == 2 else 2
    r = math.isqrt(m)
    if r * r == m:
        k *= r
    else:
        d *= m
    return k, sign * d


def _frac(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class QuadElement:
    """Immutable ``a + b*sqrt(D)``; see the module docstring for the canonical form."""

    __slots__ = ("_a", "_b", "_D")

    def __init__(self, a: Number = 0, b: Number = 0, D: int = 1) -> None:
        a = _frac(a)
        b = _frac(b)
        if not isinstance(D, int):
            raise TypeError("radicand must be an int")
        if b != 0:
            k, d = squarefree_split(D)
            if d in (0, 1):
                a, b, d = a + b * k, Fraction(0), 1
            else:
                b *= k
        else:
            d = 1
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_D", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadElement is immutable")

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def D(self) -> int:
        return self._D

    @classmethod
    def sqrt(cls, D: int) -> QuadElement:
        return cls(0, 1, D)

    # -- coercion -----------------------------------------------------------

    @classmethod
    def coerce(cls, x: QuadElement | Number) -> QuadElement:
        if isinstance(x, QuadElement):
            return x
        return cls(_frac(x))

    def _common_D(self, other: QuadElement) -> int:
        if self._b == 0:
            return other._D
        if other._b == 0 or other._D == self._D:
            return self._D
        raise RadicandMismatchError(
            f"cannot combine sqrt({self._D}) with sqrt({other._D})"
        )

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        try:
            other = QuadElement.coerce(other)
        except TypeError:
            return NotImplemented
        D = self._common_D(other)
        return QuadElement(self._a + other._a, self._b + other._b, D)

    __radd__ = __add__

    def __neg__(self) -> QuadElement:
        return QuadElement(-self._a, -self._b, self._D)

    def __sub__(self, other):
        try:
            other = QuadElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QuadElement.coerce(other)
        except TypeError:
            return NotImplemented
        D = self._common_D(other)
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return QuadElement(a1 * a2 + b1 * b2 * D, a1 * b2 + a2 * b1, D)

    __rmul__ = __mul__

    def inverse(self) -> QuadElement:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadElement division by zero")
        c = self.conjugate()
        return QuadElement(c._a / n, c._b / n, self._D)

    def __truediv__(self, other):
        try:
            other = QuadElement.coerce(other)
        except TypeError:
            return NotImplemented
        self._common_D(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadElement.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> QuadElement:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElement(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- field invariants ---------------------------------------------------

    def conjugate(self) -> QuadElement:
        return QuadElement(self._a, -self._b, self._D)

    def trace(self) -> Fraction:
        return 2 * self._a

    def norm(self) -> Fraction:
        return self._a * self._a - self._b * self._b * self._D

    def is_rational(self) -> bool:
        return self._b == 0

    def is_integer(self) -> bool:
        return self._b == 0 and self._a.denominator == 1

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self._a.numerator

    def to_complex(self) -> complex:
        root = complex(0, math.sqrt(-self._D)) if self._D < 0 else math.sqrt(self._D)
        return float(self._a) + float(self._b) * root

    # -- comparison / display -----------------------------------------------

    def _key(self):
        return (self._a, self._b, self._D)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElement):
            return self._key() == other._key()
        if isinstance(other, Rational):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash(self._key())

    def __repr__(self) -> str:
        return f"QuadElement({self._a!s}, {self._b!s}, {self._D})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        sign = "-" if self._b < 0 else "+"
        return f"{self._a} {sign} {abs(self._b)}*sqrt({self._D})"


# Functional aliases used by callers that prefer the operation names.

def add(x: QuadElement, y: QuadElement) -> QuadElement:
    return x + y


def mul(x: QuadElement, y: QuadElement) -> QuadElement:
    return x * y


def neg(x: QuadElement) -> QuadElement:
    return -x


def pow(x: QuadElement, n: int) -> QuadElement:  # noqa: A001 - mirrors the operator
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return x ** n


def conjugate(x: QuadElement) -> QuadElement:
    return x.conjugate()


def trace(x: QuadElement) -> Fraction:
    return x.trace()


def norm(x: QuadElement) -> Fraction:
    return x.norm()


def is_integer(x: QuadElement) -> bool:
    return x.is_integer()


def is_rational(x: QuadElement) -> bool:
    return x.is_rational()


class Kind(enum.Enum):
    V = "V"  # r^n + s^n
    U = "U"  # (r^n - s^n) / (r - s)


@dataclass(frozen=True)
class SequenceParams:
    """Integer coefficients of ``z^2 - p*z - q = 0`` and which sequence to build."""

    p: int
    q: int
    kind: Kind = Kind.V

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("p and q must be integers")
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", Kind(self.kind))

    @property
    def discriminant(self) -> int:
        return self.p * self.p + 4 * self.q

    def with_kind(self, kind: Kind) -> SequenceParams:
        return SequenceParams(self.p, self.q, kind)


def roots_of(params: SequenceParams) -> tuple[QuadElement, QuadElement]:
    """Roots ``r = (p + sqrt(D))/2`` and ``s = (p - sqrt(D))/2`` with ``D = p^2 + 4q``."""
    D = params.discriminant
    half = Fraction(1, 2)
    r = QuadElement(Fraction(params.p, 2), half, D)
    s = QuadElement(Fraction(params.p, 2), -half, D)
    return r, s
