"""Chebyshev polynomials T_n, U_n with exact integer coefficients, and their
bridge to the Lucas-type sequences.

With x^2 = -p^2/q,

    V_n     = 2 p^n x^-n T_n(x/2)
    U_{n+1} =   p^n x^-n U_n(x/2)

Only even powers of x survive because T_n, U_n have the parity of n, so
both right-hand sides are evaluated with x^2 substituted as an exact
rational and x itself is never formed.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .quadfield import SequenceParams

__all__ = [
    "ChebyshevDomainError",
    "IntPolynomial",
    "cheb_t",
    "cheb_u",
    "cycle_exact",
    "u_via_chebyshev",
    "v_trig_approx",
    "v_via_chebyshev",
]


class ChebyshevDomainError(ValueError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[j]`` multiplies x^j, no trailing zeros."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def scale(self, k: int) -> IntPolynomial:
        return IntPolynomial(tuple(k * c for c in self.coeffs))

    def shift(self, k: int = 1) -> IntPolynomial:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


# Single-writer cache: results never depend on whether it is warm.
_lock = threading.Lock()
_T: list[IntPolynomial] = [IntPolynomial((1,)), IntPolynomial((0, 1))]
_U: list[IntPolynomial] = [IntPolynomial((1,)), IntPolynomial((0, 2))]


def _extend(table: list[IntPolynomial], n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n < len(table):
        return table[n]
    with _lock:
        while len(table) <= n:
            table.append(table[-1].shift().scale(2) - table[-2])
        return table[n]


def cheb_t(n: int) -> IntPolynomial:
    return _extend(_T, n)


def cheb_u(n: int) -> IntPolynomial:
    return _extend(_U, n)


def _bridge(poly: IntPolynomial, p: int, q: int, n: int, scale: int) -> Fraction:
    # sum_j c_j * scale * 2^-j * p^n * (x^2)^((j-n)/2),  (x^2)^-1 = -q/p^2
    inv_x2 = Fraction(-q, p * p)
    total = Fraction(0)
    for j, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        if (n - j) % 2:
            raise AssertionError("Chebyshev parity violated")
        total += Fraction(c * scale * p ** n, 2 ** j) * inv_x2 ** ((n - j) // 2)
    return total


def _check_pq(params: SequenceParams):
    if params.p == 0 or params.q == 0:
        raise ChebyshevDomainError("Chebyshev bridge needs p != 0 and q != 0")


def v_via_chebyshev(params: SequenceParams, n: int) -> int:
    """V_n through T_n; n >= 1, p and q nonzero."""
    _check_pq(params)
    if n < 1:
        raise ValueError("n must be positive")
    value = _bridge(cheb_t(n), params.p, params.q, n, 2)
    if value.denominator != 1:
        raise ArithmeticError(f"Chebyshev V bridge gave non-integer {value}")
    return value.numerator


def u_via_chebyshev(params: SequenceParams, n: int) -> int:
    """U_{n+1} through U_n (note the index shift); n >= 0."""
    _check_pq(params)
    if n < 0:
        raise ValueError("n must be nonnegative")
    value = _bridge(cheb_u(n), params.p, params.q, n, 1)
    if value.denominator != 1:
        raise ArithmeticError(f"Chebyshev U bridge gave non-integer {value}")
    return value.numerator


def v_trig_approx(params: SequenceParams, n: int, dps: int = 50) -> float:
    """V_n ~ 2 p^n x^-n cos(n arccos(x/2)), for q < 0 and p^2 + 4q <= 0.

    ``p/x`` is evaluated as sign(p)*sqrt(-q), which is also the right limit
    at p = 0.  The cosine is taken at ``dps`` decimal digits: in double
    precision the n*arccos phase error is amplified by |q|^(n/2) and swamps
    small V_n.
    """
    p, q = params.p, params.q
    if q >= 0 or p * p + 4 * q > 0:
        raise ChebyshevDomainError("trig form needs q < 0 and p^2 + 4q <= 0")
    with mpmath.workdps(dps):
        half_x = mpmath.sqrt(mpmath.mpf(-p * p) / q) / 2
        ratio = mpmath.sqrt(-q) * (-1 if p < 0 else 1)
        value = 2 * ratio ** n * mpmath.cos(n * mpmath.acos(half_x))
        return float(value)


_CYCLE = (2, 1, -1, -2, -1, 1)  # 2 cos(n*pi/3), n mod 6


def cycle_exact(p: int, n: int) -> int:
    """V_n for q = -p^2, which is p^n * 2cos(n*pi/3)."""
    return _CYCLE[n % 6] * p ** n


def t_cos_check(n: int, theta: float) -> float:
    """|T_n(cos theta) - cos(n theta)| in floating point."""
    return abs(float(cheb_t(n)(math.cos(theta))) - math.cos(n * theta))
