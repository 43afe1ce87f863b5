"""Integrality decisions for alpha^n + beta^n and alpha^n - beta^n.

Sums.  alpha^n + beta^n is an integer for every n >= 1 exactly when
t = alpha + beta and u = alpha*beta are integers; alpha, beta are then the
roots of z^2 - t z + u.  When that fails, one of n = 1, 2, 4 already
exposes it: n = 1 tests t, n = 2 tests 2u (t^2 - 2u), and if 2u is an odd
integer then alpha^4 + beta^4 = t^4 - 4t^2 u + 2u^2 has a half-integer
part.  Witnesses are reported from that set even when n = 3 would also
fail.

Differences.  Apart from alpha = beta or two integers, alpha^n - beta^n
always leaves Z.  For surds (real or imaginary), alpha - beta in Z forces
equal surd parts and then alpha^2 - beta^2 is irrational, so n <= 2.  For
rationals x/z, y/z the witness is bounded by a prime p exceeding every
prime factor of z (with |z|^p > |x - y|): then z^p | x^p - y^p would force
z^p | x - y.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .engines import InternalConsistencyError
from .quadfield import QuadElement, SequenceParams

__all__ = [
    "DiffStatus",
    "DiffVerdict",
    "RationalPairZ",
    "SumVerdict",
    "WitnessSearchExhausted",
    "decide_diff",
    "decide_sum",
    "footnote_family",
    "footnote_minimal_x",
    "gcd_dichotomy_check",
    "is_prime",
    "p_poly",
    "prime_factors",
    "prime_witness",
]

SAFETY_CAP = 10_000
SUM_WITNESSES = (1, 2, 4)


class WitnessSearchExhausted(RuntimeError):
    """The caller's search cap is below the proven witness bound."""


@dataclass(frozen=True)
class SumVerdict:
    integral: bool
    recovered: Optional[SequenceParams] = None
    witness: Optional[int] = None

    def __post_init__(self):
        if (self.recovered is None) == (self.witness is None):
            raise ValueError("exactly one of recovered/witness must be set")


class DiffStatus(enum.Enum):
    TRIVIAL_EQUAL = "TRIVIAL_EQUAL"
    BOTH_INTEGERS = "BOTH_INTEGERS"
    NOT_INTEGRAL = "NOT_INTEGRAL"


@dataclass(frozen=True)
class DiffVerdict:
    status: DiffStatus
    witness: Optional[int] = None
    prime_bound: Optional[int] = None

    @property
    def integral(self) -> bool:
        return self.status is not DiffStatus.NOT_INTEGRAL


@dataclass(frozen=True)
class RationalPairZ:
    """alpha = x/z, beta = y/z over a shared positive denominator z."""

    x: int
    y: int
    z: int

    @classmethod
    def from_rationals(cls, alpha, beta) -> RationalPairZ:
        a, b = Fraction(alpha), Fraction(beta)
        z = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        return cls(a.numerator * (z // a.denominator), b.numerator * (z // b.denominator), z)

    def normalized(self) -> RationalPairZ:
        """Strip gcd(x, y, z), then gcd(x, y).

        The second step keeps z^n | x^n - y^n unchanged: a common factor of
        x and y is coprime to z once gcd(x, y, z) = 1.
        """
        x, y, z = self.x, self.y, self.z
        if z < 0:
            x, y, z = -x, -y, -z
        g = gcd(gcd(x, y), z)
        if g > 1:
            x, y, z = x // g, y // g, z // g
        g = gcd(x, y)
        if g > 1:
            x, y = x // g, y // g
        return RationalPairZ(x, y, z)

    def diff_is_integral(self, n: int) -> bool:
        return (self.x ** n - self.y ** n) % (self.z ** n) == 0


# -- small number theory ------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def prime_factors(n: int) -> list[int]:
    n = abs(n)
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_poly(x: int, y: int, p: int) -> int:
    """sum_{i<p} x^(p-1-i) y^i, i.e. (x^p - y^p)/(x - y)."""
    if x == y:
        raise ValueError("p_poly needs x != y")
    if p < 1:
        raise ValueError("p must be positive")
    return sum(x ** (p - 1 - i) * y ** i for i in range(p))


def gcd_dichotomy_check(x: int, y: int, p: int) -> int:
    """gcd(x - y, P_p(x, y)), which must be 1 or p for coprime x != y and prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if gcd(x, y) != 1:
        raise ValueError("x and y must be coprime")
    g = gcd(x - y, p_poly(x, y, p))
    if g not in (1, p):
        raise InternalConsistencyError(f"gcd(x-y, P_{p}({x},{y})) = {g} is neither 1 nor {p}")
    return g


def prime_witness(pair: RationalPairZ) -> tuple[int, bool]:
    """Smallest admissible prime p and whether z^p fails to divide x^p - y^p.

    Admissible: p exceeds every prime factor of z and |z|^p > |x - y| (after
    normalization).  Requires z | x - y; otherwise n = 1 is the witness.
    """
    pair = pair.normalized()
    x, y, z = pair.x, pair.y, pair.z
    if x == y:
        raise ValueError("prime_witness needs x != y")
    if abs(z) < 2:
        raise ValueError("prime_witness needs |z| >= 2")
    if (x - y) % z:
        raise ValueError("z does not divide x - y; n = 1 is already a witness")
    p = max(prime_factors(z)) + 1
    while not (is_prime(p) and abs(z) ** p > abs(x - y)):
        p += 1
    return p, not pair.diff_is_integral(p)


# -- decisions ----------------------------------------------------------------

def decide_sum(alpha: QuadElement, beta: QuadElement) -> SumVerdict:
    alpha, beta = QuadElement.coerce(alpha), QuadElement.coerce(beta)
    alpha + beta  # radicand compatibility
    for n in SUM_WITNESSES:
        if not (alpha ** n + beta ** n).is_integer():
            return SumVerdict(False, witness=n)
    t, u = alpha + beta, alpha * beta
    if not (t.is_integer() and u.is_integer()):
        raise InternalConsistencyError(f"n = 1, 2, 4 integral but t = {t}, u = {u}")
    return SumVerdict(True, recovered=SequenceParams(int(t), -int(u)))


def decide_diff(alpha: QuadElement, beta: QuadElement, cap: int = SAFETY_CAP) -> DiffVerdict:
    alpha, beta = QuadElement.coerce(alpha), QuadElement.coerce(beta)
    if alpha == beta:
        return DiffVerdict(DiffStatus.TRIVIAL_EQUAL)
    if alpha.is_integer() and beta.is_integer():
        return DiffVerdict(DiffStatus.BOTH_INTEGERS)

    prime_bound = None
    if alpha.is_rational() and beta.is_rational():
        pair = RationalPairZ.from_rationals(alpha.a, beta.a).normalized()
        if (pair.x - pair.y) % pair.z == 0:
            prime_bound, _ = prime_witness(pair)
        bound = prime_bound or 1
    else:
        alpha - beta  # radicand compatibility
        bound = 2

    limit = max(bound, 2)
    for n in range(1, min(limit, cap) + 1):
        if not (alpha ** n - beta ** n).is_integer():
            return DiffVerdict(DiffStatus.NOT_INTEGRAL, witness=n, prime_bound=prime_bound)
    if cap < limit:
        raise WitnessSearchExhausted(f"no witness up to n = {cap}; proven bound is {limit}")
    raise InternalConsistencyError(f"no witness for {alpha}, {beta} up to the bound n = {limit}")


def footnote_family(z: int, m: int, cap: int = SAFETY_CAP) -> tuple[int, int]:
    """For x = z^m + 1, y = 1: (last n with z^n | x^n - 1 for all smaller n, first failing n).

    Raises if integrality breaks at or before m.
    """
    if abs(z) < 2 or m < 1:
        raise ValueError("need |z| >= 2 and m >= 1")
    pair = RationalPairZ(z ** m + 1, 1, z)
    for n in range(1, m + 1):
        if not pair.diff_is_integral(n):
            raise InternalConsistencyError(f"x = z^m + 1 fails already at n = {n} <= m = {m}")
    p, _ = prime_witness(pair)
    for n in range(m + 1, min(max(p, m + 1), cap) + 1):
        if not pair.diff_is_integral(n):
            return n - 1, n
    raise InternalConsistencyError(f"no failure found for z={z}, m={m} up to the prime bound {p}")


def footnote_minimal_x(z: int, m: int, x_max: int, fixed_y: Optional[int] = None):
    """Smallest (x, y), 1 <= y < x <= x_max, with z^n | x^n - y^n for every n <= m.

    Only pairs with gcd(x, y) = 1 and gcd(x, y, z) = 1 count.  ``fixed_y``
    restricts the scan to one y.  Returns None if nothing is found.
    """
    for x in range(2, x_max + 1):
        ys = [fixed_y] if fixed_y is not None else range(1, x)
        for y in ys:
            if y >= x or gcd(x, y) != 1:
                continue
            pair = RationalPairZ(x, y, z)
            if all(pair.diff_is_integral(n) for n in range(1, m + 1)):
                return x, y
    return None
