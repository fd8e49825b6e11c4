"""Exact interval numbers on [0, 1] and their lattice operations."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Union

Number = Union[int, str, float, Decimal, Fraction]


class IntervalError(ValueError):
    """Raised when a pair of bounds does not form an interval number."""


def to_rational(value: Number) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Strings may be decimal literals (``"0.35"``) or ``"p/q"``. Floats go
    through their shortest repr, so ``0.3`` becomes ``3/10`` rather than the
    binary approximation.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not membership values")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, (str, Decimal)):
        return Fraction(str(value).strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, order=False)
class IntervalNumber:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = to_rational(self.lo), to_rational(self.hi)
        if lo < 0:
            raise IntervalError(f"lower bound {lo} is below 0")
        if hi > 1:
            raise IntervalError(f"upper bound {hi} exceeds 1")
        if lo > hi:
            raise IntervalError(f"lower bound {lo} exceeds upper bound {hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"

    def __le__(self, other: IntervalNumber) -> bool:
        return self.lo <= other.lo and self.hi <= other.hi

    def __lt__(self, other: IntervalNumber) -> bool:
        return self <= other and self != other

    def __ge__(self, other: IntervalNumber) -> bool:
        return other <= self

    def __gt__(self, other: IntervalNumber) -> bool:
        return other < self

    def __add__(self, other: IntervalNumber) -> IntervalNumber:
        return isum(self, other)

    def __and__(self, other: IntervalNumber) -> IntervalNumber:
        return rmin(self, other)

    def __or__(self, other: IntervalNumber) -> IntervalNumber:
        return rmax(self, other)

    @property
    def is_zero(self) -> bool:
        return self.hi == 0


def make_interval(lo: Number, hi: Number) -> IntervalNumber:
    return IntervalNumber(lo, hi)


def degenerate(a: Number) -> IntervalNumber:
    """The interval ``[a, a]`` standing in for the plain number ``a``."""
    return IntervalNumber(a, a)


ZERO = IntervalNumber(0, 0)
ONE = IntervalNumber(1, 1)


def rmin(d1: IntervalNumber, d2: IntervalNumber) -> IntervalNumber:
    return IntervalNumber(min(d1.lo, d2.lo), min(d1.hi, d2.hi))


def rmax(d1: IntervalNumber, d2: IntervalNumber) -> IntervalNumber:
    return IntervalNumber(max(d1.lo, d2.lo), max(d1.hi, d2.hi))


def isum(d1: IntervalNumber, d2: IntervalNumber) -> IntervalNumber:
    """Probabilistic sum ``a + b - a*b`` applied to each bound."""
    return IntervalNumber(
        d1.lo + d2.lo - d1.lo * d2.lo,
        d1.hi + d2.hi - d1.hi * d2.hi,
    )


def scale(k: Number, d: IntervalNumber) -> IntervalNumber:
    k = to_rational(k)
    if not 0 <= k <= 1:
        raise IntervalError(f"scale factor {k} is outside [0, 1]")
    return IntervalNumber(k * d.lo, k * d.hi)


def compare(d1: IntervalNumber, d2: IntervalNumber) -> Ordering:
    if d1 == d2:
        return Ordering.EQUAL
    if d1 <= d2:
        return Ordering.LESS
    if d2 <= d1:
        return Ordering.GREATER
    return Ordering.INCOMPARABLE
