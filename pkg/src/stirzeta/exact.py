"""Exact rationals, integer combinatorics and rational-radius ball arithmetic.

Every exact quantity in the package is a :class:`fractions.Fraction`.  A
:class:`Ball` is a closed interval ``[center - radius, center + radius]`` with
rational endpoints; arithmetic on balls is outward-conservative, so a ball
computed from balls always contains the pointwise result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

Number = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class Ball:
    """Closed interval ``center ± radius`` with exact rational endpoints."""

    center: Fraction
    radius: Fraction = ZERO

    def __post_init__(self):
        object.__setattr__(self, "center", as_fraction(self.center))
        object.__setattr__(self, "radius", as_fraction(self.radius))
        if self.radius < 0:
            raise ValueError("ball radius must be non-negative")

    @classmethod
    def from_bounds(cls, lo, hi) -> Ball:
        lo, hi = as_fraction(lo), as_fraction(hi)
        if lo > hi:
            raise ValueError("empty interval")
        return cls((lo + hi) / 2, (hi - lo) / 2)

    @property
    def lo(self) -> Fraction:
        return self.center - self.radius

    @property
    def hi(self) -> Fraction:
        return self.center + self.radius

    @property
    def is_exact(self) -> bool:
        return self.radius == 0

    def contains(self, x) -> bool:
        if isinstance(x, Ball):
            return self.lo <= x.lo and x.hi <= self.hi
        return abs(as_fraction(x) - self.center) <= self.radius

    def intersects(self, other: Ball) -> bool:
        return abs(self.center - other.center) <= self.radius + other.radius

    def widen(self, extra) -> Ball:
        return Ball(self.center, self.radius + as_fraction(extra))

    def coarsen(self, bits: int) -> Ball:
        """Round outward onto the grid ``2**-bits`` to keep denominators small."""
        scale = 1 << bits
        c = round(self.center * scale)
        moved = abs(self.center - Fraction(c, scale))
        r = math.ceil((self.radius + moved) * scale)
        return Ball(Fraction(c, scale), Fraction(r, scale))

    def __neg__(self) -> Ball:
        return Ball(-self.center, self.radius)

    def __abs__(self) -> Fraction:
        """Upper bound of ``|x|`` over the ball."""
        return abs(self.center) + self.radius

    def __add__(self, other) -> Ball:
        if isinstance(other, Ball):
            return Ball(self.center + other.center, self.radius + other.radius)
        return Ball(self.center + as_fraction(other), self.radius)

    __radd__ = __add__

    def __sub__(self, other) -> Ball:
        return self + (-other)

    def __rsub__(self, other) -> Ball:
        return (-self) + other

    def __mul__(self, other) -> Ball:
        if isinstance(other, Ball):
            a, r = self.center, self.radius
            b, s = other.center, other.radius
            return Ball(a * b, abs(a) * s + abs(b) * r + r * s)
        q = as_fraction(other)
        return Ball(self.center * q, self.radius * abs(q))

    __rmul__ = __mul__

    def reciprocal(self) -> Ball:
        c, r = self.center, self.radius
        if abs(c) <= r:
            raise ZeroDivisionError("ball contains zero")
        m = abs(c)
        return Ball(1 / c, r / (m * (m - r)))

    def __truediv__(self, other) -> Ball:
        if isinstance(other, Ball):
            return self * other.reciprocal()
        q = as_fraction(other)
        if q == 0:
            raise ZeroDivisionError("division of a ball by zero")
        return Ball(self.center / q, self.radius / abs(q))

    def __rtruediv__(self, other) -> Ball:
        return self.reciprocal() * other

    def __repr__(self) -> str:
        return f"Ball({self.center}, {self.radius})"


@lru_cache(maxsize=4096)
def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(x, n: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+n-1)``; ``(x)_0 = 1``."""
    if n < 0:
        raise ValueError("pochhammer length must be non-negative")
    x = as_fraction(x)
    out = ONE
    for i in range(n):
        out *= x + i
    return out


def _grid_bits(eps: Fraction) -> int:
    """Smallest ``b`` with ``2**-b <= eps``."""
    return max(0, math.ceil(math.log2(eps.denominator) - math.log2(eps.numerator)) + 1)


def _exp_nonneg(x: Fraction, tol: Fraction) -> Ball:
    # Taylor order from the tail bound sum_{k>=K} x^k/k! <= 2 x^K/K!, valid for K+1 > 2x.
    K = max(1, math.floor(2 * x) + 1)
    bound = x**K / factorial(K)
    while 2 * bound > tol / 2:
        K += 1
        bound = bound * x / K
    s = ONE
    for k in range(K - 1, 0, -1):
        s = 1 + x * s / k
    return Ball(s + bound, bound).coarsen(_grid_bits(tol / 8))


def exp_ball(x, eps) -> Ball:
    """Ball containing ``e**x`` with radius at most ``eps``."""
    x, eps = as_fraction(x), as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if x == 0:
        return Ball(ONE)
    if x > 0:
        return _exp_nonneg(x, eps)
    big = _exp_nonneg(-x, min(eps, ONE) / 4)
    return big.reciprocal().coarsen(_grid_bits(eps / 8))


def log_upper(x) -> Fraction:
    """Rational ``u >= ln x`` for rational ``x >= 1``, certified by ``exp_ball(u) >= x``."""
    x = as_fraction(x)
    if x < 1:
        raise ValueError("log_upper needs x >= 1")
    if x == 1:
        return ZERO
    guess = math.log(x.numerator) - math.log(x.denominator)
    margin = Fraction(1, 1 << 40)
    u = Fraction(guess).limit_denominator(1 << 48) + margin
    while exp_ball(u, Fraction(1, 1 << 60)).lo < x:
        margin *= 4
        u += margin
    return u


def sqrt_upper(x, bits: int = 64) -> Fraction:
    x = as_fraction(x)
    scale = 1 << (2 * bits)
    r = math.isqrt(x.numerator * scale // x.denominator) + 1
    return Fraction(r, 1 << bits)


def sqrt_lower(x, bits: int = 64) -> Fraction:
    x = as_fraction(x)
    scale = 1 << (2 * bits)
    r = math.isqrt(x.numerator * scale // x.denominator)
    return Fraction(r, 1 << bits)


def decimal_render(q, digits: int) -> str:
    """Decimal string of ``q`` rounded half-even to ``digits`` fractional digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    q = as_fraction(q)
    scaled = round(q * 10**digits)  # Fraction.__round__ is half-even
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def ln_float(q) -> float:
    """Natural log of a positive rational as a float, safe for huge numerators/denominators."""
    q = as_fraction(q)
    if q <= 0:
        raise ValueError("ln of a non-positive number")
    return math.log(q.numerator) - math.log(q.denominator)
