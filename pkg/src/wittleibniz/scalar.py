"""Exact Gaussian-rational scalars.

Every coefficient in the library is a :class:`Scalar` ``re + im*i`` with
``re`` and ``im`` arbitrary-precision rationals (``gmpy2.mpq``, which keeps
numerator/denominator reduced with a positive denominator).  Structure
constants of the Witt families are rational functions of the integer
indices and of alpha, beta, so restricting alpha, beta to Gaussian
rationals keeps everything exact.

Text grammar (also the CLI format)::

    R | R ("+"|"-") R "i" | R "i"        with R = -?digits(/digits)?
"""

from __future__ import annotations

import re
from fractions import Fraction

import gmpy2
from gmpy2 import mpq

Rational = type(mpq(0))

_ZERO = mpq(0)
_R = r"-?\d+(?:/\d+)?"
_FULL = re.compile(rf"^({_R})(?:([+-])({_R})i)?$")
_IMAG = re.compile(rf"^({_R})i$")


class ScalarParseError(ValueError):
    pass


def _rational(x) -> Rational:
    if isinstance(x, Rational):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, (int, type(gmpy2.mpz(0)))):
        return mpq(x)
    if isinstance(x, str):
        return _parse_rational(x)
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}")


def _parse_rational(text: str) -> Rational:
    if not re.fullmatch(_R, text):
        raise ScalarParseError(f"malformed rational {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        return mpq(int(num), int(den))
    return mpq(int(text))


def _fmt(q: Rational) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Scalar:
    """Immutable Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _rational(re))
        object.__setattr__(self, "im", _rational(im))

    @classmethod
    def _make(cls, re: Rational, im: Rational) -> "Scalar":
        s = object.__new__(cls)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (Fraction(int(self.re.numerator), int(self.re.denominator)),
                         Fraction(int(self.im.numerator), int(self.im.denominator))))

    # coercion -----------------------------------------------------------
    @staticmethod
    def coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, str):
            return parse_scalar(x)
        return Scalar._make(_rational(x), _ZERO)

    def _other(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational, Fraction)):
            return Scalar._make(_rational(other), _ZERO)
        return None

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Scalar._make(self.re * other, self.im * other)
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return Scalar._make(self.re * o.re, _ZERO)
        return Scalar._make(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero Scalar")
        if not o.im:
            return Scalar._make(self.re / o.re, self.im / o.re)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("zero has no inverse")
        return Scalar._make(self.re / n, -self.im / n)

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.re, -self.im)

    # comparison ---------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    @property
    def is_real(self) -> bool:
        return not self.im

    # text ---------------------------------------------------------------
    def __str__(self):
        if not self.im:
            return _fmt(self.re)
        if not self.re:
            return _fmt(self.im) + "i"
        sign = "+" if self.im > 0 else "-"
        return f"{_fmt(self.re)}{sign}{_fmt(abs(self.im))}i"

    def __repr__(self):
        return f"Scalar('{self}')"

    def to_fraction(self) -> Fraction:
        if self.im:
            raise ValueError(f"{self} is not real")
        return Fraction(int(self.re.numerator), int(self.re.denominator))


ZERO = Scalar._make(_ZERO, _ZERO)
ONE = Scalar._make(mpq(1), _ZERO)


def parse_scalar(text: str) -> Scalar:
    """Parse the exact-scalar grammar, e.g. ``"3/4"``, ``"1/2+3/4i"``, ``"-2i"``."""
    t = text.strip()
    m = _IMAG.match(t)
    if m:
        return Scalar._make(_ZERO, _parse_rational(m.group(1)))
    m = _FULL.match(t)
    if not m:
        raise ScalarParseError(f"malformed scalar {text!r}")
    re_part = _parse_rational(m.group(1))
    if m.group(2) is None:
        return Scalar._make(re_part, _ZERO)
    im_part = _parse_rational(m.group(3))
    if m.group(2) == "-":
        im_part = -im_part
    return Scalar._make(re_part, im_part)


def is_integer(s) -> bool:
    s = Scalar.coerce(s)
    return not s.im and s.re.denominator == 1


def as_int(s) -> int:
    """The integer value of an integral Scalar."""
    s = Scalar.coerce(s)
    if not is_integer(s):
        raise ValueError(f"{s} is not an integer")
    return int(s.re.numerator)
