import pickle
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wittleibniz.scalar import ONE, ZERO, Scalar, ScalarParseError, as_int, is_integer, parse_scalar

from conftest import gaussian, scalars


@pytest.mark.parametrize("text, re, im", [
    ("3/4", Fraction(3, 4), 0),
    ("-2", -2, 0),
    ("1/2+3/4i", Fraction(1, 2), Fraction(3, 4)),
    ("1/2-3/4i", Fraction(1, 2), Fraction(-3, 4)),
    ("-5i", 0, -5),
    ("6/4", Fraction(3, 2), 0),
])
def test_parse_examples(text, re, im):
    assert parse_scalar(text) == gaussian(re, im)


@pytest.mark.parametrize("text", ["", "1/0", "abc", "1/2+i", "1.5", "2+3", "--1", "1/-2"])
def test_parse_rejects(text):
    with pytest.raises(ScalarParseError):
        parse_scalar(text)


@pytest.mark.parametrize("value, expected", [
    (Fraction(4, 2), True), (Fraction(1, 2), False), (3, True), (gaussian(3, 1), False), (0, True),
])
def test_is_integer(value, expected):
    assert is_integer(Scalar(value) if not isinstance(value, Scalar) else value) is expected


def test_canonical_denominator():
    s = parse_scalar("-6/4")
    assert s.re.denominator == 2 and s.re.numerator == -3
    assert str(s) == "-3/2"
    assert as_int(parse_scalar("8/4")) == 2


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(scalars)
def test_inverses(a):
    if a:
        assert a * a.inverse() == ONE
        assert ONE / a == a.inverse()
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


@given(scalars)
def test_round_trip(a):
    assert parse_scalar(str(a)) == a
    assert str(parse_scalar(str(a))) == str(a)


@given(scalars)
def test_hash_matches_equality_and_pickle(a):
    b = parse_scalar(str(a))
    assert hash(a) == hash(b)
    assert pickle.loads(pickle.dumps(a)) == a


@given(st.integers(-10**6, 10**6))
def test_ints_mix(n):
    s = Scalar(n)
    assert s + 1 == Scalar(n + 1)
    assert 2 * s == Scalar(2 * n)
    assert is_integer(s)


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.re = 2
