"""Text formats: quadratic-surd literals and OEIS b-files.

Surd grammar (whitespace allowed between tokens)::

    input    := rational | quad
    rational := int | int "/" posint
    quad     := "(" int [("+"|"-") [posint "*"] "sqrt(" int ")"] ")" "/" posint
              | int ("+"|"-") [posint "*"] "sqrt(" int ")"

Canonical output is ``(A+B*sqrt(D))/c`` with reduced integers, the
coefficient ``B`` omitted when it is 1 and the parentheses/denominator
omitted when ``c`` is 1.  Rationals print as ``a`` or ``a/c``.
"""
from __future__ import annotations

import io
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, TextIO, Union

from .quadfield import QuadElement

__all__ = [
    "BFile",
    "BFileError",
    "SurdSyntaxError",
    "emit_bfile",
    "format_surd",
    "parse_bfile",
    "parse_surd",
    "unlimited_int_digits",
]


class SurdSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class BFileError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise SurdSyntaxError(message, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            self.error(f"expected {token!r}")

    def integer(self, signed: bool = True) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def posint(self) -> int:
        start = self.pos
        value = self.integer(signed=False)
        if value == 0:
            self.pos = start
            self.skip_ws()
            raise SurdSyntaxError("zero denominator", self.text, self.pos)
        return value

    def surd_term(self) -> tuple[int, int]:
        """[posint "*"] "sqrt(" int ")" -> (coefficient, radicand)."""
        coeff = 1
        if self.peek().isdigit():
            coeff = self.integer(signed=False)
            self.expect("*")
        self.expect("sqrt")
        self.expect("(")
        radicand = self.integer()
        self.expect(")")
        return coeff, radicand

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos == len(self.text)


def parse_surd(text: str) -> QuadElement:
    """Parse one surd or rational literal, e.g. ``"(1+sqrt(5))/2"`` or ``"-3/4"``."""
    sc = _Scanner(text)
    if sc.accept("("):
        a = sc.integer()
        coeff, D = 0, 1
        if sc.peek() in ("+", "-"):
            sign = 1 if sc.text[sc.pos] == "+" else -1
            sc.pos += 1
            coeff, D = sc.surd_term()
            coeff *= sign
        sc.expect(")")
        sc.expect("/")
        c = sc.posint()
        result = QuadElement(Fraction(a, c), Fraction(coeff, c), D)
    else:
        a = sc.integer()
        if sc.accept("/"):
            result = QuadElement(Fraction(a, sc.posint()))
        elif sc.peek() in ("+", "-"):
            sign = 1 if sc.text[sc.pos] == "+" else -1
            sc.pos += 1
            coeff, D = sc.surd_term()
            result = QuadElement(a, sign * coeff, D)
        else:
            result = QuadElement(a)
    if not sc.at_end():
        sc.error("unexpected trailing input")
    return result


def format_surd(x: QuadElement) -> str:
    """Canonical text for ``x``; ``parse_surd(format_surd(x)) == x``."""
    if x.is_rational():
        return str(x.a)
    c = x.a.denominator * x.b.denominator // gcd(x.a.denominator, x.b.denominator)
    A = x.a.numerator * (c // x.a.denominator)
    B = x.b.numerator * (c // x.b.denominator)
    sign = "-" if B < 0 else "+"
    coeff = "" if abs(B) == 1 else f"{abs(B)}*"
    body = f"{A}{sign}{coeff}sqrt({x.D})"
    return body if c == 1 else f"({body})/{c}"


# -- b-files ------------------------------------------------------------------

@dataclass
class BFile:
    entries: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        for (i, _), (j, _) in zip(self.entries, self.entries[1:]):
            if j <= i:
                raise ValueError(f"indices must increase strictly ({i} then {j})")

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


@contextmanager
def unlimited_int_digits():
    """Lift the int<->str digit limit (Python >= 3.10.7) for huge sequence terms."""
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        yield
        return
    old = getter()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


def parse_bfile(source: Union[str, TextIO]) -> BFile:
    """Read ``index value`` lines; ``#`` comments and blank lines are skipped."""
    stream = io.StringIO(source) if isinstance(source, str) else source
    entries: list[tuple[int, int]] = []
    with unlimited_int_digits():
        for lineno, line in enumerate(stream, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise BFileError(f"expected 'index value', got {stripped!r}", lineno)
            try:
                index, value = int(parts[0]), int(parts[1])
            except ValueError:
                raise BFileError(f"non-integer field in {stripped!r}", lineno) from None
            if entries and index <= entries[-1][0]:
                raise BFileError(f"non-increasing index {index} after {entries[-1][0]}", lineno)
            entries.append((index, value))
    return BFile(entries)


def emit_bfile(data: Union[BFile, Iterable[tuple[int, int]]]) -> str:
    """Canonical b-file text: ``index value`` per line, single space, trailing newline.

    Accepts a :class:`BFile`, a ``SequenceSlice`` (anything with ``items()``)
    or an iterable of pairs.
    """
    if isinstance(data, BFile):
        pairs = data.entries
    elif hasattr(data, "items"):
        pairs = data.items()
    else:
        pairs = data
    with unlimited_int_digits():
        return "".join(f"{i} {v}\n" for i, v in pairs)
