"""Rational-endpoint interval arithmetic used for sign certification.

These intervals are *enclosures*: every operation returns an interval that
contains the exact result.  Square roots are widened outward to a requested
absolute tolerance, everything else is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


class RatInterval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        self.lo = lo
        self.hi = hi

    @classmethod
    def point(cls, x):
        x = Fraction(x)
        return cls(x, x)

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"

    def width(self):
        return self.hi - self.lo

    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __add__(self, other):
        other = _as_interval(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) + (-self)

    def __mul__(self, other):
        other = _as_interval(other)
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return RatInterval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_interval(other)
        if other.contains_zero():
            raise ZeroDivisionError("interval division by interval containing zero")
        inv = RatInterval(1 / other.hi, 1 / other.lo)
        return self * inv

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def sign(self):
        """+1 / -1 when the interval certifies a sign, else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __contains__(self, x):
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def intersects(self, other):
        return not (self.hi < other.lo or other.hi < self.lo)

    def sqrt(self, tol):
        """Enclosure of the square root, widened outward by at most tol each side."""
        if self.lo < 0:
            raise ValueError("sqrt of interval with negative lower bound")
        return RatInterval(sqrt_lower(self.lo, tol), sqrt_upper(self.hi, tol))


def _as_interval(x):
    if isinstance(x, RatInterval):
        return x
    return RatInterval.point(x)


def _sqrt_scale(tol):
    # scale so 1/scale <= tol
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    scale = 1
    while Fraction(1, scale) > tol:
        scale *= 2
    return scale

def sqrt_lower(x, tol):
    """Rational lower bound of sqrt(x) within tol."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    s = _sqrt_scale(tol)
    # floor(sqrt(p/q * s^2)) / s  <=  sqrt(x), error < 1/s
    n = isqrt((x.numerator * s * s) // x.denominator)
    return Fraction(n, s)


def sqrt_upper(x, tol):
    """Rational upper bound of sqrt(x) within tol."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    s = _sqrt_scale(tol)
    num = -((-x.numerator * s * s) // x.denominator)  # ceil division
    n = isqrt(num)
    if n * n < num:
        n += 1
    return Fraction(n, s)


def eval_on_interval(p, box):
    """Interval enclosure of a Q-coefficient UniPoly on a RatInterval (Horner)."""
    acc = RatInterval.point(0)
    for c in reversed(p.coeffs):
        acc = acc * box + RatInterval.point(c)
    return acc
