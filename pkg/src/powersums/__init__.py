"""Exact integer sequences alpha^n + beta^n and (alpha^n - beta^n)/(alpha - beta)."""
from .engines import Method, compute, compute_slice, pair_doubling, pair_recurrence
from .integrality import decide_diff, decide_sum
from .quadfield import Kind, QuadElement, SequenceParams, roots_of
from .surdio import format_surd, parse_surd

__all__ = [
    "Kind",
    "Method",
    "QuadElement",
    "SequenceParams",
    "compute",
    "compute_slice",
    "decide_diff",
    "decide_sum",
    "format_surd",
    "pair_doubling",
    "pair_recurrence",
    "parse_surd",
    "roots_of",
]

__version__ = "0.1.0"
