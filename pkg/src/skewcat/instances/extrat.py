"""Exact arithmetic on [0, oo]: non-negative rationals plus infinity.

No floating point anywhere.  Addition, min, max and scaling by powers
of two are total; a + oo = oo and min(a, oo) = a.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


class ExtRat:
    """A non-negative rational or the distinguished value oo."""

    __slots__ = ("q",)

    def __init__(self, value: "Rational | ExtRat | None"):
        if isinstance(value, ExtRat):
            self.q = value.q
            return
        if value is None:
            self.q = None
            return
        q = Fraction(value)
        if q < 0:
            raise ValueError("negative distance %s" % q)
        self.q = q

    @property
    def is_inf(self) -> bool:
        return self.q is None

    def __add__(self, other: "ExtRat") -> "ExtRat":
        if self.q is None or other.q is None:
            return INF
        return _wrap(self.q + other.q)

    def scale2(self, k: int) -> "ExtRat":
        """Multiply by 2**k (k may be negative); oo stays oo."""
        if self.q is None:
            return INF
        return _wrap(self.q * Fraction(2) ** k)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExtRat) and self.q == other.q

    def __ne__(self, other) -> bool:
        return not isinstance(other, ExtRat) or self.q != other.q

    def __lt__(self, other: "ExtRat") -> bool:
        if self.q is None:
            return False
        return other.q is None or self.q < other.q

    def __le__(self, other: "ExtRat") -> bool:
        return other.q is None or (self.q is not None and self.q <= other.q)

    def __gt__(self, other: "ExtRat") -> bool:
        return other.__lt__(self)

    def __ge__(self, other: "ExtRat") -> bool:
        return other.__le__(self)

    def __hash__(self):
        return hash(self.q)

    def __str__(self) -> str:
        if self.q is None:
            return "inf"
        if self.q.denominator == 1:
            return str(self.q.numerator)
        return "%d/%d" % (self.q.numerator, self.q.denominator)

    def __repr__(self) -> str:
        return "ExtRat(%s)" % self

    def stable_text(self) -> str:
        return str(self)

    @staticmethod
    def parse(text: str) -> "ExtRat":
        text = text.strip()
        if text in ("inf", "oo"):
            return INF
        return ExtRat(Fraction(text))


def _wrap(q: Fraction) -> ExtRat:
    out = ExtRat.__new__(ExtRat)
    out.q = q
    return out


INF = ExtRat.__new__(ExtRat)
INF.q = None
ZERO = ExtRat(0)


def emin(a: ExtRat, b: ExtRat) -> ExtRat:
    return a if a <= b else b


def emax(a: ExtRat, b: ExtRat) -> ExtRat:
    return a if a >= b else b


def esup(values) -> ExtRat:
    """Supremum of a finite family; the empty supremum is 0."""
    out = ZERO
    for v in values:
        if v > out:
            out = v
    return out


def truncated_sub(y: Rational, x: Rational) -> Fraction:
    """max(y - x, 0) on plain rationals."""
    d = Fraction(y) - Fraction(x)
    return d if d > 0 else Fraction(0)
