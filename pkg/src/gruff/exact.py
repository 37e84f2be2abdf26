"""Exact arithmetic in Q and in the ordered quadratic field Q(sqrt(2)).

Rationals are `fractions.Fraction` (canonical reduced form, arbitrary
precision).  A `QuadRat` is a + b*sqrt(2) with rational components; since
sqrt(2) is irrational the representation is unique and the sign of any
element is decidable from integer arithmetic alone.  No floating point is
used in any decision path.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rat = Fraction

LT, EQ, GT = -1, 0, 1


class DomainError(ValueError):
    """Raised when an argument is outside an operation's domain."""


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


class QuadRat:
    """An element a + b*sqrt(2) of Q(sqrt(2))."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __repr__(self):
        return f"QuadRat({self.a!r}, {self.b!r})"

    def __str__(self):
        return format_quadrat(self)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.a, -self.b)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(2), via the a^2 vs 2*b^2 criterion."""
        a, b = self.a, self.b
        sa, sb = _sign(a.numerator), _sign(b.numerator)
        if sa == sb:
            return sa
        if sa == 0:
            return sb
        if sb == 0:
            return sa
        # opposite signs: |a| vs |b|*sqrt(2), i.e. a^2 vs 2 b^2
        lhs = a.numerator * a.numerator * b.denominator * b.denominator
        rhs = 2 * b.numerator * b.numerator * a.denominator * a.denominator
        if lhs == rhs:
            raise AssertionError("a^2 == 2 b^2 with b != 0 is impossible over Q")
        return sa if lhs > rhs else sb

    def is_rational(self) -> bool:
        return self.b == 0

    def __lt__(self, other):
        return (self - _coerce_strict(other)).sign() < 0

    def __le__(self, other):
        return (self - _coerce_strict(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _coerce_strict(other)).sign() > 0

    def __ge__(self, other):
        return (self - _coerce_strict(other)).sign() >= 0


def _coerce(x) -> Union[QuadRat, type(NotImplemented)]:
    if isinstance(x, QuadRat):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadRat(x)
    return NotImplemented


def _coerce_strict(x) -> QuadRat:
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot compare QuadRat with {type(x).__name__}")
    return y


SQRT2 = QuadRat(0, 1)


def quad_add(x: QuadRat, y: QuadRat) -> QuadRat:
    return x + y


def quad_mul(x: QuadRat, y: QuadRat) -> QuadRat:
    return x * y


def quad_neg(x: QuadRat) -> QuadRat:
    return -x


def quad_cmp(x, y) -> int:
    """Exact three-way comparison; one of LT, EQ, GT."""
    return (_coerce_strict(x) - _coerce_strict(y)).sign()


def least_radius_index(d) -> int:
    """Least k >= 1 with sqrt(2)/k < d, i.e. k^2 d^2 > 2.

    `d` may be a positive Fraction or the sentinel None (read: +infinity,
    no constraint), which yields the smallest legal index 1.
    """
    if d is None:
        return 1
    d = Fraction(d)
    if d <= 0:
        raise DomainError("least_radius_index requires d > 0")
    num, den = d.numerator, d.denominator
    # least k with k^2 num^2 > 2 den^2
    k = math.isqrt(2 * den * den // (num * num)) + 1
    while k > 1 and (k - 1) * (k - 1) * num * num > 2 * den * den:
        k -= 1
    assert k * k * num * num > 2 * den * den
    return k


_RAT_RE = re.compile(r"^(-?\d+)/(\d+)$")
_QUAD_RE = re.compile(r"^(-?\d+)/(\d+)([+-])(\d+)/(\d+)\*r2$")


def parse_rat(text: str) -> Fraction:
    """Parse `a/b` (b positive)."""
    m = _RAT_RE.match(text)
    if not m:
        raise DomainError(f"bad rational literal {text!r} (expected a/b)")
    num, den = int(m.group(1)), int(m.group(2))
    if den <= 0:
        raise DomainError(f"bad rational literal {text!r} (denominator must be positive)")
    return Fraction(num, den)


def parse_quadrat(text: str) -> QuadRat:
    """Parse `a/b`, `a/b+c/d*r2` or `a/b-c/d*r2` (whitespace-free)."""
    m = _RAT_RE.match(text)
    if m:
        return QuadRat(parse_rat(text))
    m = _QUAD_RE.match(text)
    if not m:
        raise DomainError(f"bad Q(sqrt(2)) literal {text!r}")
    a = Fraction(int(m.group(1)), int(m.group(2)))
    b = Fraction(int(m.group(4)), int(m.group(5)))
    if m.group(3) == "-":
        b = -b
    if m.group(2) == "0" or m.group(5) == "0":
        raise DomainError(f"bad Q(sqrt(2)) literal {text!r} (zero denominator)")
    return QuadRat(a, b)


def format_rat(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_quadrat(x: QuadRat) -> str:
    if x.b == 0:
        return format_rat(x.a)
    sign = "+" if x.b > 0 else "-"
    b = abs(x.b)
    return f"{format_rat(x.a)}{sign}{format_rat(b)}*r2"
