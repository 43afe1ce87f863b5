from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powersums.quadfield import QuadElement as Q
from powersums.surdio import (
    BFile,
    BFileError,
    SurdSyntaxError,
    emit_bfile,
    format_surd,
    parse_bfile,
    parse_surd,
)

PHI = Q(Fr(1, 2), Fr(1, 2), 5)


def test_parse_examples():
    assert parse_surd("(1+sqrt(5))/2") == PHI
    assert parse_surd("3/2") == Q(Fr(3, 2))
    x = parse_surd("(1+sqrt(9))/2")
    assert x == 2 and x.is_integer()


@pytest.mark.parametrize("text,expected", [
    (" ( 1 - 3*sqrt(5) ) / 4 ", Q(Fr(1, 4), Fr(-3, 4), 5)),
    ("-7", Q(-7)),
    ("2+sqrt(-3)", Q(2, 1, -3)),
    ("(-1-sqrt(-3))/2", Q(Fr(-1, 2), Fr(-1, 2), -3)),
    ("(5)/10", Q(Fr(1, 2))),
    ("0-2*sqrt(8)", Q(0, -4, 2)),
    ("+4/6", Q(Fr(2, 3))),
])
def test_parse_variants(text, expected):
    assert parse_surd(text) == expected


@pytest.mark.parametrize("text,position", [
    ("(1+sqrt(5)/2", 10),
    ("1/0", 2),
    ("(1+sqrt(5))/0", 12),
    ("abc", 0),
    ("1+sqrt5", 6),
    ("3/2 junk", 4),
    ("", 0),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(SurdSyntaxError) as info:
        parse_surd(text)
    assert info.value.position == position


def test_format_canonical():
    assert format_surd(PHI) == "(1+sqrt(5))/2"
    assert format_surd(Q(Fr(1, 4), Fr(-3, 4), 5)) == "(1-3*sqrt(5))/4"
    assert format_surd(Q(2, 1, -3)) == "2+sqrt(-3)"
    assert format_surd(Q(Fr(3, 2))) == "3/2"
    assert format_surd(Q(-7)) == "-7"
    assert format_surd(Q(Fr(1, 3), Fr(1, 2), 7)) == "(2+3*sqrt(7))/6"


elements = st.builds(
    Q,
    st.builds(Fr, st.integers(-10 ** 6, 10 ** 6), st.integers(1, 500)),
    st.builds(Fr, st.integers(-10 ** 6, 10 ** 6), st.integers(1, 500)),
    st.integers(-500, 500),
)


@settings(max_examples=400, deadline=None)
@given(elements)
def test_surd_round_trip(x):
    assert parse_surd(format_surd(x)) == x


def test_bfile_examples():
    assert parse_bfile("0 2\n1 1\n2 3").entries == [(0, 2), (1, 1), (2, 3)]
    assert parse_bfile("# comment\n5 11").entries == [(5, 11)]
    with pytest.raises(BFileError) as info:
        parse_bfile("1 1\n1 2")
    assert info.value.line == 2


@pytest.mark.parametrize("text,line", [("0 1\nx 2\n", 2), ("0 1 2\n", 1), ("\n\n3\n", 3)])
def test_bfile_malformed(text, line):
    with pytest.raises(BFileError) as info:
        parse_bfile(text)
    assert info.value.line == line


def test_bfile_type_validates():
    with pytest.raises(ValueError):
        BFile([(2, 1), (1, 1)])


def test_bfile_round_trip_byte_stable(tmp_path):
    big = 7 ** 20000  # beyond the default int/str digit limit
    text = emit_bfile([(0, 2), (1, -1), (5, big)])
    assert text.endswith("\n") and "  " not in text
    assert emit_bfile(parse_bfile(text)) == text
    path = tmp_path / "b.txt"
    path.write_text("# header\n\n" + text)
    with open(path) as fh:
        assert emit_bfile(parse_bfile(fh)) == text


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-10 ** 30, 10 ** 30), max_size=40), st.integers(-5, 5))
def test_bfile_round_trip_property(values, start):
    text = emit_bfile(list(enumerate(values, start=start)))
    assert emit_bfile(parse_bfile(text)) == text
    assert [v for _, v in parse_bfile(text).entries] == values
