"""Catalog of Lucas/Fibonacci/binomial identities with two independent evaluators each.

Every case pairs a left and a right evaluator that go through different
code: binomial sums against the doubling engine, Q(sqrt(5)) powers against
the recurrence, Chebyshev bridges against closed tables, and so on.  Sums of
Lucas numbers read from the recurrence; single Lucas/Fibonacci values on
the other side come from doubling.

Two-index cases iterate an auxiliary index for each n (k for coefficient
identities, or a parameter such as p for families).  Rational intermediates
are kept as Fractions and compared exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Optional

from . import chebyshev, engines, transforms
from .engines import binom
from .quadfield import QuadElement, SequenceParams

__all__ = ["CheckReport", "IdentityCase", "catalog", "check", "check_all", "get"]

Evaluator = Callable[..., object]


@dataclass(frozen=True)
class IdentityCase:
    id: str
    lhs: Evaluator
    rhs: Evaluator
    domain: Callable[[int], bool]
    citation: str
    aux: Optional[Callable[[int], Iterable[int]]] = None
    aux_name: str = "k"
    parity_split: bool = False


@dataclass
class CheckReport:
    id: str
    n_max: int
    parity: Optional[str] = None
    checked: int = 0
    passed: bool = True
    counterexample: Optional[dict] = None

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "n_max": self.n_max,
            "parity": self.parity,
            "checked": self.checked,
            "passed": self.passed,
        }
        if self.counterexample is not None:
            out["counterexample"] = {k: str(v) for k, v in self.counterexample.items()}
        return out


# -- reference sequences (kept on separate code paths) --------------------------

_PHI_PARAMS = SequenceParams(1, 1)
_PHI = QuadElement(Fraction(1, 2), Fraction(1, 2), 5)
_PSI = _PHI.conjugate()  # -1/phi
_SQRT5 = QuadElement.sqrt(5)


@lru_cache(maxsize=None)
def _lucas_table(n: int) -> tuple[int, ...]:
    return tuple(engines.compute_slice(_PHI_PARAMS, 0, n).values)


def L(i: int) -> int:
    """Lucas number from the linear recurrence."""
    return _lucas_table((i // 64 + 1) * 64)[i]


def L_dbl(n: int) -> int:
    return engines.pair_doubling(_PHI_PARAMS, n)[1]


def F_dbl(n: int) -> int:
    return engines.pair_doubling(_PHI_PARAMS, n)[0]


def F_rec(n: int) -> int:
    return engines.pair_recurrence(_PHI_PARAMS, n)[0]


def _int(x) -> int:
    if isinstance(x, QuadElement):
        if not x.is_integer():
            raise ArithmeticError(f"{x} is not an integer")
        return int(x)
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"{x} is not an integer")
    return x.numerator


def _ks(n: int) -> range:
    return range(n // 2 + 1)


def _even_sum(n: int) -> int:
    return sum(comb(n, 2 * i) for i in range(n // 2 + 1))


def _weighted_even_sum(n: int) -> int:
    return sum(i * comb(n, 2 * i) for i in range(n // 2 + 1))


def _exp2_coeff(n: int, k: int) -> Fraction:
    return Fraction(n * binom(n - k, k), n - k)


_SMALL = range(-5, 6)
_NONZERO = [v for v in _SMALL if v]
_SEEDS = [(g0, g1) for g0 in _SMALL for g1 in _SMALL]


def _build() -> list[IdentityCase]:
    c: list[IdentityCase] = []
    add = c.append
    n_ge = lambda lo: (lambda n: n >= lo)  # noqa: E731

    # coefficient identities, indexed by (n, k)
    add(IdentityCase(
        "idenl",
        lambda n, k: Fraction(2) ** (2 * k - n + 1)
        * sum(comb(n, 2 * i) * comb(i, k) for i in range(k, n // 2 + 1)),
        _exp2_coeff, n_ge(1),
        "2^(2k-n+1) sum_{i=k}^{n/2} C(n,2i) C(i,k) = n/(n-k) C(n-k,k)", aux=_ks))
    add(IdentityCase(
        "koshy-coeff",
        lambda n, k: binom(n - k, k) + binom(n - k - 1, k - 1),
        _exp2_coeff, n_ge(1),
        "C(n-k,k) + C(n-k-1,k-1) = n/(n-k) C(n-k,k)  (Koshy)", aux=_ks))
    add(IdentityCase(
        "draim-bickell-coeff",
        lambda n, k: 2 * binom(n - k, k) - binom(n - k - 1, k),
        lambda n, k: binom(n - k, k) + binom(n - k - 1, k - 1), n_ge(1),
        "2C(n-k,k) - C(n-k-1,k) = C(n-k,k) + C(n-k-1,k-1)  (Draim-Bickell coefficient)",
        aux=_ks))
    add(IdentityCase(
        "hirschhorn",
        lambda n, k: sum(comb(n, 2 * i) * comb(i, k) for i in range(k, n // 2 + 1)),
        lambda n, k: Fraction(2) ** (n - 2 * k - 1) * (binom(n - k, k) + binom(n - k - 1, k - 1)),
        n_ge(1),
        "sum_{i=k}^{n/2} C(n,2i) C(i,k) = 2^(n-2k-1) (C(n-k,k) + C(n-k-1,k-1))  (Hirschhorn)",
        aux=_ks))

    # Binet forms
    add(IdentityCase(
        "binet-lucas", lambda n: _int(_PHI ** n + _PSI ** n), L, n_ge(0),
        "phi^n + (-1/phi)^n = L_n"))
    add(IdentityCase(
        "binet-fib", lambda n: _int((_PHI ** n - _PSI ** n) / _SQRT5), F_rec, n_ge(0),
        "(phi^n - (-1/phi)^n)/sqrt(5) = F_n"))

    # closed forms at p = q = 1 and p = 3, q = -1
    add(IdentityCase(
        "lucas-exp1",
        lambda n: _int(Fraction(2) ** (1 - n) * sum(comb(n, 2 * i) * 5 ** i for i in range(n // 2 + 1))),
        L_dbl, n_ge(0),
        "L_n = 2^(1-n) sum_i C(n,2i) 5^i"))
    add(IdentityCase(
        "lucas-exp2",
        lambda n: _int(sum(_exp2_coeff(n, k) for k in _ks(n))),
        L_dbl, n_ge(1),
        "L_n = sum_k n/(n-k) C(n-k,k)"))
    add(IdentityCase(
        "shift1-doubleindex",
        lambda n: sum(comb(n, i) * L(i) for i in range(n + 1)),
        lambda n: L_dbl(2 * n), n_ge(0),
        "sum_i C(n,i) L_i = L_2n"))
    add(IdentityCase(
        "l2n-exp1",
        lambda n: _int(Fraction(3 ** n, 1) / Fraction(2) ** (n - 1)
                       * sum(Fraction(5, 9) ** i * comb(n, 2 * i) for i in range(n // 2 + 1))),
        lambda n: _int((_PHI ** 2) ** n + (_PSI ** 2) ** n), n_ge(0),
        "L_2n = 3^n / 2^(n-1) sum_i (5/9)^i C(n,2i)"))
    add(IdentityCase(
        "l2n-exp2",
        lambda n: _int(sum((-1) ** k * 3 ** (n - 2 * k) * _exp2_coeff(n, k) for k in _ks(n))),
        lambda n: L_dbl(2 * n), n_ge(1),
        "L_2n = sum_k (-1)^k 3^(n-2k) n/(n-k) C(n-k,k)"))

    # shifts by m = -1
    add(IdentityCase(
        "m-minus1",
        lambda n: sum(comb(n, i) * (-1) ** (n - i) * L(i) for i in range(n + 1)),
        lambda n: _int((_PHI - 1) ** n + (_PSI - 1) ** n), n_ge(0),
        "(phi-1)^n + (-1/phi-1)^n = sum_i C(n,i) (-1)^(n-i) L_i"))
    add(IdentityCase(
        "m-minus1-closed",
        lambda n: _int((_PHI - 1) ** n + (_PSI - 1) ** n),
        lambda n: (-1) ** n * L_dbl(n), n_ge(0),
        "(1/phi)^n + (-phi)^n = (-1)^n L_n"))
    add(IdentityCase(
        "alt-sum",
        lambda n: sum((-1) ** i * comb(n, i) * L(i) for i in range(n + 1)),
        L_dbl, n_ge(0),
        "sum_i (-1)^i C(n,i) L_i = L_n"))
    add(IdentityCase(
        "alt-partial",
        lambda n: sum((-1) ** i * comb(n, i) * L(i) for i in range(n)),
        lambda n: 0 if n % 2 == 0 else 2 * L_dbl(n), n_ge(0),
        "sum_{i<n} (-1)^i C(n,i) L_i = 0 (n even), 2 L_n (n odd)", parity_split=True))

    # shifts by m = +-2
    add(IdentityCase(
        "m2-surd",
        lambda n: _int((_SQRT5 * _PHI) ** n + (_SQRT5 * -_PSI) ** n),
        lambda n: 5 ** (n // 2) * L_dbl(n) if n % 2 == 0 else 5 ** (n // 2 + 1) * F_dbl(n),
        n_ge(0),
        "(sqrt5 phi)^n + (sqrt5/phi)^n = 5^k L_n (n=2k), 5^(k+1) F_n (n=2k+1)",
        parity_split=True))
    add(IdentityCase(
        "vajda",
        lambda n: sum(comb(n, i) * L(2 * i) for i in range(n + 1)),
        lambda n: 5 ** (n // 2) * L_dbl(n) if n % 2 == 0 else 5 ** (n // 2 + 1) * F_dbl(n),
        n_ge(0),
        "sum_i C(n,i) L_2i = 5^k L_n (n=2k), 5^(k+1) F_n (n=2k+1)  (Vajda)",
        parity_split=True))
    add(IdentityCase(
        "vajda-exp",
        lambda n: _int(Fraction(5 ** n) / Fraction(2) ** (n - 1)
                       * sum(Fraction(1, 5 ** i) * comb(n, 2 * i) for i in range(n // 2 + 1))),
        lambda n: _int(sum((-1) ** k * 5 ** (n - k) * _exp2_coeff(n, k) for k in _ks(n))),
        n_ge(1),
        "5^n/2^(n-1) sum_i 5^-i C(n,2i) = sum_k (-1)^k 5^(n-k) n/(n-k) C(n-k,k)"))
    add(IdentityCase(
        "vajda-sum-exp1",
        lambda n: sum(comb(n, i) * L(2 * i) for i in range(n + 1)),
        lambda n: _int(Fraction(5 ** n) / Fraction(2) ** (n - 1)
                       * sum(Fraction(1, 5 ** i) * comb(n, 2 * i) for i in range(n // 2 + 1))),
        n_ge(0),
        "sum_i C(n,i) L_2i = 5^n/2^(n-1) sum_i 5^-i C(n,2i)"))
    add(IdentityCase(
        "m-minus2",
        lambda n: sum((-2) ** (n - i) * comb(n, i) * L(i) for i in range(n + 1)),
        lambda n: (-1) ** n * L_dbl(2 * n), n_ge(0),
        "sum_i (-2)^(n-i) C(n,i) L_i = (-1)^n L_2n"))
    add(IdentityCase(
        "two-phi",
        lambda n: sum((-1) ** i * 2 ** (n - i) * comb(n, i) * L(2 * i) for i in range(n + 1)),
        L_dbl, n_ge(0),
        "sum_i (-1)^i 2^(n-i) C(n,i) L_2i = L_n"))

    # k = 0 and k = 1 specializations
    add(IdentityCase(
        "spec1", _even_sum, lambda n: 2 ** (n - 1), n_ge(1),
        "sum_i C(n,2i) = 2^(n-1)"))
    add(IdentityCase(
        "spec2",
        lambda n: _int(Fraction(4, n) * _weighted_even_sum(n)),
        lambda n: 2 ** (n - 1), n_ge(2),
        "(4/n) sum_i i C(n,2i) = 2^(n-1), n > 1"))
    add(IdentityCase(
        "spec2-scaled",
        lambda n: _int(Fraction(2) ** (3 - n) * sum(i * comb(n, 2 * i) for i in range(1, n // 2 + 1))),
        lambda n: n, n_ge(2),
        "2^(3-n) sum_{i>=1} i C(n,2i) = n, n > 1"))
    add(IdentityCase(
        "spec-combined",
        lambda n: n * _even_sum(n),
        lambda n: 4 * _weighted_even_sum(n), n_ge(2),
        "n sum_i C(n,2i) = 4 sum_i i C(n,2i), n > 1"))

    # special parameter families
    add(IdentityCase(
        "p-zero",
        lambda n, q: engines.pair_doubling(SequenceParams(0, q), n)[1],
        lambda n, q: 0 if n % 2 else 2 * q ** (n // 2), n_ge(0),
        "p = 0: V_n = 0 (n odd), 2 q^(n/2) (n even)",
        aux=lambda n: _SMALL, aux_name="q", parity_split=True))
    add(IdentityCase(
        "q-zero",
        lambda n, p: engines.pair_recurrence(SequenceParams(p, 0), n)[1],
        lambda n, p: p ** n, n_ge(1),
        "q = 0: V_n = p^n", aux=lambda n: _SMALL, aux_name="p"))
    add(IdentityCase(
        "cycle-pm1",
        lambda n: engines.pair_recurrence(SequenceParams(-1, -1), n)[1],
        lambda n: (-1, -1, 2)[(n - 1) % 3], n_ge(1),
        "p = q = -1: V_n cycles -1, -1, 2"))
    add(IdentityCase(
        "q-minus-p2",
        lambda n, p: engines.pair_doubling(SequenceParams(p, -p * p), n)[1],
        lambda n, p: chebyshev.cycle_exact(p, n), n_ge(1),
        "q = -p^2: V_n = 2 p^n cos(n pi/3)", aux=lambda n: _SMALL, aux_name="p"))
    add(IdentityCase(
        "q-plus-p2",
        lambda n, p: chebyshev.v_via_chebyshev(SequenceParams(p, p * p), n),
        lambda n, p: L(n) * p ** n, n_ge(1),
        "q = p^2: V_n = L_n p^n", aux=lambda n: _NONZERO, aux_name="p"))

    # general machinery at p = q = 1 grid points
    add(IdentityCase(
        "cheby1",
        lambda n, p: chebyshev.v_via_chebyshev(SequenceParams(p, 1), n),
        lambda n, p: engines.pair_recurrence(SequenceParams(p, 1), n)[1], n_ge(1),
        "V_n = 2 p^n x^-n T_n(x/2), x^2 = -p^2/q  (q = 1)",
        aux=lambda n: _NONZERO, aux_name="p"))
    add(IdentityCase(
        "idenf",
        lambda n, p: engines.u_closed(SequenceParams(p, 1), n + 1),
        lambda n, p: engines.pair_doubling(SequenceParams(p, 1), n + 1)[0], n_ge(0),
        "U_(n+1) = sum_k C(n-k,k) p^(n-2k) q^k  (q = 1)",
        aux=lambda n: _SMALL, aux_name="p"))
    add(IdentityCase(
        "main-sum",
        lambda n, m: transforms.shifted_v_sum(_PHI_PARAMS, m, n),
        lambda n, m: _int((m + _PHI) ** n + (m + _PSI) ** n), n_ge(0),
        "(m+r)^n + (m+s)^n = sum_i C(n,i) m^(n-i) (r^i + s^i)  (p = q = 1)",
        aux=lambda n: _SMALL, aux_name="m"))
    add(IdentityCase(
        "genfib-closed",
        lambda n, g: transforms.gen_fib(transforms.GenFibSpec(_PHI_PARAMS, *g), n),
        lambda n, g: transforms.gen_fib_closed(transforms.GenFibSpec(_PHI_PARAMS, *g), n),
        n_ge(0),
        "G_n = ((G1 - s G0) r^n - (G1 - r G0) s^n)/(r - s), G0, G1 in [-5, 5]",
        aux=lambda n: _SEEDS, aux_name="seeds"))
    return c


_CATALOG = tuple(_build())
_BY_ID = {case.id: case for case in _CATALOG}
assert len(_BY_ID) == len(_CATALOG), "duplicate identity ids"


def catalog() -> list[IdentityCase]:
    return list(_CATALOG)


def get(identity_id: str) -> IdentityCase:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def check(case: IdentityCase | str, n_max: int, parity: Optional[str] = None) -> CheckReport:
    """Evaluate both sides for every n <= n_max in the domain.

    ``parity`` ("even"/"odd") restricts n; the first mismatch, or an
    evaluator that cannot produce an exact integer, fails the report.
    """
    if isinstance(case, str):
        case = get(case)
    if parity not in (None, "even", "odd"):
        raise ValueError("parity must be 'even', 'odd' or None")
    report = CheckReport(case.id, n_max, parity)
    for n in range(n_max + 1):
        if not case.domain(n):
            continue
        if parity is not None and (n % 2 == 0) != (parity == "even"):
            continue
        for a in (case.aux(n) if case.aux else (None,)):
            args = (n,) if a is None else (n, a)
            report.checked += 1
            try:
                lhs, rhs = case.lhs(*args), case.rhs(*args)
            except ArithmeticError as exc:
                lhs, rhs = "error", str(exc)
            if lhs != rhs:
                report.passed = False
                report.counterexample = {"n": n, "lhs": lhs, "rhs": rhs}
                if a is not None:
                    report.counterexample[case.aux_name] = a
                return report
    return report


def check_all(n_max: int, cases: Optional[Iterable[IdentityCase]] = None) -> list[CheckReport]:
    """One report per case; parity-split cases get one report per parity."""
    reports = []
    for case in (cases if cases is not None else _CATALOG):
        if case.parity_split:
            reports.append(check(case, n_max, "even"))
            reports.append(check(case, n_max, "odd"))
        else:
            reports.append(check(case, n_max))
    return reports
