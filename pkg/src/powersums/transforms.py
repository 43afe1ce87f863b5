"""Root shifts and generalized Fibonacci sequences.

Shifting both roots of z^2 - pz - q by an integer m gives the roots of
z^2 - (p + 2m) z - (q - pm - m^2), and the binomial theorem expresses the
shifted sequences as convolutions of the unshifted ones.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .engines import compute_slice
from .quadfield import Kind, QuadElement, SequenceParams, roots_of

__all__ = [
    "GenFibSpec",
    "ShiftSpec",
    "gen_fib",
    "gen_fib_closed",
    "shift_params",
    "shifted_roots",
    "shifted_u_sum",
    "shifted_v_sum",
]


@dataclass(frozen=True)
class ShiftSpec:
    base: SequenceParams
    m: int = 0  # shift applied to the V sequence
    y: int = 0  # shift applied to the U sequence

    @property
    def shifted_v(self) -> SequenceParams:
        return shift_params(self.base, self.m)

    @property
    def shifted_u(self) -> SequenceParams:
        return shift_params(self.base, self.y).with_kind(Kind.U)


@dataclass(frozen=True)
class GenFibSpec:
    params: SequenceParams
    G0: int
    G1: int


def shift_params(base: SequenceParams, m: int) -> SequenceParams:
    p, q = base.p, base.q
    return SequenceParams(p + 2 * m, q - p * m - m * m, base.kind)


def shifted_v_sum(base: SequenceParams, m: int, n: int) -> int:
    """(m+r)^n + (m+s)^n as sum_i C(n,i) m^(n-i) V_i(base)."""
    V = compute_slice(base.with_kind(Kind.V), 0, n).values
    return sum(comb(n, i) * m ** (n - i) * V[i] for i in range(n + 1))


def shifted_u_sum(base: SequenceParams, y: int, m_index: int) -> int:
    """((y+r)^m - (y+s)^m)/(r - s) as sum_i C(m,i) y^(m-i) U_i(base)."""
    m = m_index
    U = compute_slice(base.with_kind(Kind.U), 0, m).values
    return sum(comb(m, i) * y ** (m - i) * U[i] for i in range(m + 1))


def gen_fib(spec: GenFibSpec, n: int) -> int:
    """G_n = p G_{n-1} + q G_{n-2} from the seeds G0, G1."""
    p, q = spec.params.p, spec.params.q
    a, b = spec.G0, spec.G1
    for _ in range(n):
        a, b = b, p * b + q * a
    return a


def gen_fib_closed(spec: GenFibSpec, n: int) -> int:
    """G_n = ((G1 - s G0) r^n - (G1 - r G0) s^n) / (r - s), exactly.

    Only defined for distinct roots; use :func:`gen_fib` when p^2 + 4q = 0.
    """
    if spec.params.discriminant == 0:
        raise ValueError("closed form needs distinct roots (p^2 + 4q != 0); use gen_fib")
    r, s = roots_of(spec.params)
    G0, G1 = spec.G0, spec.G1
    value = ((G1 - s * G0) * r ** n - (G1 - r * G0) * s ** n) / (r - s)
    if not value.is_integer():
        raise ArithmeticError(f"closed form gave non-integer {value}")
    return int(value)


def shifted_roots(base: SequenceParams, m: int) -> tuple[QuadElement, QuadElement]:
    r, s = roots_of(base)
    return m + r, m + s
