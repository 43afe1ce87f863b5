"""Engines for V_n = r^n + s^n and U_n = (r^n - s^n)/(r - s).

Every engine returns plain Python ints.  They are deliberately independent
of each other (linear recurrence, index doubling, three binomial closed
forms for V, one for U, and exact powering in Q(sqrt(D))) so that
agreement between them is meaningful evidence.

Cost under big-integer arithmetic, for an n-bit-ish output:

* RECURRENCE   O(n) additions/multiplications by p, q
* DOUBLING     O(log n) full multiplications
* CLOSED_*     O(n) terms, each a product of large binomials and powers
* QUAD_TRACE   O(log n) multiplications of Fractions
* CHEBYSHEV    O(n) terms after building T_n / U_n (O(n^2) to build)
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .quadfield import Kind, QuadElement, SequenceParams, roots_of

__all__ = [
    "InternalConsistencyError",
    "Method",
    "SequenceSlice",
    "binom",
    "compute",
    "compute_slice",
    "hirschhorn_sides",
    "idenl_sides",
    "koshy_sides",
    "methods_for",
    "pair_doubling",
    "pair_recurrence",
    "u_closed",
    "u_ratio",
    "v_closed",
    "v_trace",
]


class InternalConsistencyError(ArithmeticError):
    """An identity that must hold exactly produced a non-integer or mismatch."""


class Method(enum.Enum):
    RECURRENCE = "recurrence"
    DOUBLING = "doubling"
    CLOSED_EXP1 = "exp1"
    CLOSED_EXP2 = "exp2"
    CLOSED_EXP3 = "exp3"
    CLOSED_IDENF = "idenf"
    QUAD_TRACE = "trace"
    CHEBYSHEV = "chebyshev"


_V_ONLY = {Method.CLOSED_EXP1, Method.CLOSED_EXP2, Method.CLOSED_EXP3}
_U_ONLY = {Method.CLOSED_IDENF}


def methods_for(params: SequenceParams) -> list[Method]:
    """Methods applicable to ``params.kind`` (Chebyshev also needs p, q != 0)."""
    out = []
    for m in Method:
        if params.kind is Kind.V and m in _U_ONLY:
            continue
        if params.kind is Kind.U and m in _V_ONLY:
            continue
        if m is Method.CHEBYSHEV and (params.p == 0 or params.q == 0):
            continue
        out.append(m)
    return out


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever either argument is negative or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class SequenceSlice:
    params: SequenceParams
    start: int
    values: list[int] = field(default_factory=list)

    def __getitem__(self, index: int) -> int:
        if not self.start <= index < self.start + len(self.values):
            raise IndexError(index)
        return self.values[index - self.start]

    def items(self):
        return [(self.start + i, v) for i, v in enumerate(self.values)]


# -- O(n) and O(log n) engines ----------------------------------------------

def pair_recurrence(params: SequenceParams, n: int) -> tuple[int, int]:
    """(U_n, V_n) by G_k = p*G_{k-1} + q*G_{k-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p, q = params.p, params.q
    u0, u1 = 0, 1
    v0, v1 = 2, p
    for _ in range(n):
        u0, u1 = u1, p * u1 + q * u0
        v0, v1 = v1, p * v1 + q * v0
    return u0, v0


def pair_doubling(params: SequenceParams, n: int) -> tuple[int, int]:
    """(U_n, V_n) by index doubling.

    Walks the bits of n keeping (U_k, U_{k+1}, V_k, V_{k+1}, Q^k) with
    Q = r*s = -q, using

        U_2k   = U_k V_k            V_2k   = V_k^2 - 2 Q^k
        U_2k+1 = U_{k+1} V_k - Q^k  V_2k+1 = V_{k+1} V_k - p Q^k
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    p, q = params.p, params.q
    Q = -q
    uk, uk1, vk, vk1, qk = 0, 1, 2, p, 1
    for bit in bin(n)[2:]:
        u2k = uk * vk
        u2k1 = uk1 * vk - qk
        v2k = vk * vk - 2 * qk
        v2k1 = vk1 * vk - p * qk
        qk = qk * qk
        if bit == "1":
            uk, uk1 = u2k1, p * u2k1 + q * u2k
            vk, vk1 = v2k1, p * v2k1 + q * v2k
            qk *= Q
        else:
            uk, uk1, vk, vk1 = u2k, u2k1, v2k, v2k1
    return uk, vk


# -- binomial closed forms ----------------------------------------------------

def _exp1(p: int, q: int, n: int) -> int:
    D = p * p + 4 * q
    total = sum(binom(n, 2 * i) * p ** (n - 2 * i) * D ** i for i in range(n // 2 + 1))
    value = Fraction(total, 2 ** (n - 1))
    if value.denominator != 1:
        raise InternalConsistencyError(f"Exp1 sum not integral at p={p}, q={q}, n={n}")
    return value.numerator


def _exp2(p: int, q: int, n: int) -> int:
    total = 0
    for k in range(n // 2 + 1):
        num = n * binom(n - k, k)
        coeff, rem = divmod(num, n - k)
        if rem:
            raise InternalConsistencyError(f"n/(n-k) C(n-k,k) not integral at n={n}, k={k}")
        total += coeff * p ** (n - 2 * k) * q ** k
    return total


def _exp3(p: int, q: int, n: int) -> int:
    return sum(
        (2 * binom(n - k, k) - binom(n - k - 1, k)) * p ** (n - 2 * k) * q ** k
        for k in range(n // 2 + 1)
    )


_V_CLOSED = {"EXP1": _exp1, "EXP2": _exp2, "EXP3": _exp3}


def v_closed(params: SequenceParams, n: int, variant: str = "EXP2") -> int:
    """V_n from one of the binomial closed forms; ``variant`` is EXP1, EXP2 or EXP3.

    Requires n >= 1: the EXP2 coefficient n/(n-k) is 0/0 at n = k = 0.
    """
    if n < 1:
        raise ValueError("closed forms are defined for n >= 1")
    try:
        fn = _V_CLOSED[variant.upper()]
    except KeyError:
        raise ValueError(f"unknown closed-form variant {variant!r}") from None
    return fn(params.p, params.q, n)


def u_closed(params: SequenceParams, n: int) -> int:
    """U_n = sum_k C(n-1-k, k) p^(n-1-2k) q^k, for n >= 1."""
    if n < 1:
        raise ValueError("closed form is defined for n >= 1")
    p, q, m = params.p, params.q, n - 1
    return sum(binom(m - k, k) * p ** (m - 2 * k) * q ** k for k in range(m // 2 + 1))


# -- Q(sqrt(D)) engines -------------------------------------------------------

def _as_int(x: QuadElement | Fraction, what: str) -> int:
    if isinstance(x, QuadElement):
        if not x.is_integer():
            raise InternalConsistencyError(f"{what} = {x} is not an integer")
        return int(x)
    if x.denominator != 1:
        raise InternalConsistencyError(f"{what} = {x} is not an integer")
    return x.numerator


def _root_powers(params: SequenceParams, n: int) -> tuple[QuadElement, QuadElement]:
    r, s = roots_of(params)
    rn = r ** n
    # rational roots (square discriminant) are not each other's conjugate
    sn = rn.conjugate() if not r.is_rational() else s ** n
    return rn, sn


def v_trace(params: SequenceParams, n: int) -> int:
    """r^n + s^n in Q(sqrt(D)); for irrational roots this is trace(r^n)."""
    rn, sn = _root_powers(params, n)
    return _as_int(rn + sn, "r^n + s^n")


def u_ratio(params: SequenceParams, n: int) -> int:
    """(r^n - s^n)/(r - s) by exact division in Q(sqrt(D)); D = 0 uses n r^(n-1)."""
    if n == 0:
        return 0
    r, s = roots_of(params)
    if r == s:
        return _as_int(n * r ** (n - 1), "n r^(n-1)")
    rn, sn = _root_powers(params, n)
    return _as_int((rn - sn) / (r - s), "(r^n - s^n)/(r - s)")


# -- coefficient identities ---------------------------------------------------

def idenl_sides(n: int, k: int) -> tuple[Fraction, int]:
    """Both sides of 2^(2k-n+1) sum_{i>=k} C(n,2i) C(i,k) = n/(n-k) C(n-k,k)."""
    if n < 1 or not 0 <= k <= n // 2:
        raise ValueError("need n >= 1 and 0 <= k <= n//2")
    s = sum(binom(n, 2 * i) * binom(i, k) for i in range(k, n // 2 + 1))
    lhs = Fraction(2) ** (2 * k - n + 1) * s
    rhs = Fraction(n * binom(n - k, k), n - k)
    if rhs.denominator != 1:
        raise InternalConsistencyError(f"n/(n-k) C(n-k,k) not integral at n={n}, k={k}")
    return lhs, rhs.numerator


def koshy_sides(n: int, k: int) -> tuple[int, Fraction]:
    """C(n-k,k) + C(n-k-1,k-1) against n/(n-k) C(n-k,k)."""
    return binom(n - k, k) + binom(n - k - 1, k - 1), Fraction(n * binom(n - k, k), n - k)


def hirschhorn_sides(n: int, k: int) -> tuple[int, Fraction]:
    """sum_{i>=k} C(n,2i) C(i,k) against 2^(n-2k-1) (C(n-k,k) + C(n-k-1,k-1))."""
    s = sum(binom(n, 2 * i) * binom(i, k) for i in range(k, n // 2 + 1))
    return s, Fraction(2) ** (n - 2 * k - 1) * (binom(n - k, k) + binom(n - k - 1, k - 1))


# -- dispatch -----------------------------------------------------------------

def compute(params: SequenceParams, n: int, method: Method = Method.DOUBLING) -> int:
    """Value of the ``params.kind`` sequence at index n with the given method."""
    method = Method(method)
    if method not in methods_for(params):
        raise ValueError(f"method {method.value} does not apply to {params}")
    V = params.kind is Kind.V
    if method is Method.RECURRENCE:
        return pair_recurrence(params, n)[1 if V else 0]
    if method is Method.DOUBLING:
        return pair_doubling(params, n)[1 if V else 0]
    if method is Method.QUAD_TRACE:
        return v_trace(params, n) if V else u_ratio(params, n)
    # closed forms bypass n = 0
    if n == 0:
        return 2 if V else 0
    if method is Method.CLOSED_IDENF:
        return u_closed(params, n)
    if method is Method.CHEBYSHEV:
        from .chebyshev import u_via_chebyshev, v_via_chebyshev
        return v_via_chebyshev(params, n) if V else u_via_chebyshev(params, n - 1)
    return v_closed(params, n, method.name.removeprefix("CLOSED_"))


def compute_slice(params: SequenceParams, start: int, stop: int,
                  method: Method = Method.RECURRENCE) -> SequenceSlice:
    """Values at start..stop inclusive.  RECURRENCE walks the range once."""
    if start < 0 or stop < start:
        raise ValueError("need 0 <= start <= stop")
    method = Method(method)
    if method is not Method.RECURRENCE:
        return SequenceSlice(params, start, [compute(params, n, method) for n in range(start, stop + 1)])
    p, q = params.p, params.q
    if params.kind is Kind.V:
        a, b = 2, p
    else:
        a, b = 0, 1
    values = []
    for n in range(stop + 1):
        if n >= start:
            values.append(a)
        a, b = b, p * b + q * a
    return SequenceSlice(params, start, values)
