"""Certified truncated series for the transcendental objects around ``S_n^p``.

All truncation orders are fixed from analytic tail bounds before summing.
Each routine returns a :class:`SeriesEnclosure` (or a :class:`Ball`) whose
radius accounts for both truncation and the rounding of exponentials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from stirzeta.exact import ONE, ZERO, Ball, as_fraction, exp_ball, factorial, pochhammer
from stirzeta.stirling import gen_stirling_row, stirling1_table, stirling1_tail


@dataclass(frozen=True)
class SeriesEnclosure:
    value: Ball
    terms_used: int
    tail_bound: Fraction

    def intersects(self, other) -> bool:
        other = other.value if isinstance(other, SeriesEnclosure) else other
        return self.value.intersects(other)


def _positive_tail_ball(partial, tail: Fraction) -> Ball:
    """Enclosure of ``partial + [0, tail]``."""
    if not isinstance(partial, Ball):
        partial = Ball(partial)
    return partial + Ball(tail / 2, tail / 2)


def exp_series_tail(x: Fraction, start: int) -> Fraction:
    """Upper bound of ``sum_{j >= start} x^j / j!`` for ``x >= 0``."""
    if x == 0:
        return ONE if start == 0 else ZERO
    first = x**start / factorial(start)
    if start + 1 > x:
        return first / (1 - x / (start + 1))
    return exp_ball(x, ONE).hi


def exp_partial(x: Fraction, m: int) -> Fraction:
    """``sum_{j=0}^{m} x^j / j!`` exactly."""
    s = ONE
    for j in range(m, 0, -1):
        s = 1 + x * s / j
    return s if m >= 0 else ZERO


def pfq_coefficient(upper, lower, k: int) -> Fraction:
    """``prod (a)_k / (prod (b)_k * k!)``, the k-th coefficient of a generalized hypergeometric series."""
    num = ONE
    for a in upper:
        num *= pochhammer(a, k)
    den = Fraction(factorial(k))
    for b in lower:
        den *= pochhammer(b, k)
    return num / den


def pfp_ones_twos(p: int, t, eps) -> SeriesEnclosure:
    """Enclosure of ``pFp[1,...,1; 2,...,2; t] = sum_k t^k / (k! (k+1)^p)``."""
    t, eps = as_fraction(t), as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return SeriesEnclosure(Ball(ONE), 1, ZERO)
    # terms are <= t^k/k!; tail from K with K+1 > 2t is <= 2 t^K/K!
    K = math.floor(2 * t) + 1
    bound = t**K / factorial(K)
    while 2 * bound > eps / 2:
        K += 1
        bound = bound * t / K
    total = ZERO
    for k in range(K - 1, -1, -1):
        total = total * t / (k + 1) + Fraction(1, (k + 1) ** p)
    tail = 2 * bound
    return SeriesEnclosure(_positive_tail_ball(total, tail), K, tail)


def horizontal_gf_partial(p: int, t, nmax: int) -> SeriesEnclosure:
    """``sum_{n<=nmax} S_n^p t^n`` with the tail ``sum_{n>nmax} t^n/n!`` from ``|S_n^p| <= 1/n!``."""
    t = as_fraction(t)
    if t < 0:
        raise ValueError("t must be non-negative")
    row = gen_stirling_row(p, nmax)
    total = ZERO
    for n in range(nmax, -1, -1):
        total = total * t + row[n]
    tail = exp_series_tail(t, nmax + 1)
    return SeriesEnclosure(Ball(total, tail), nmax + 1, tail)


def lower_gamma_reg(a: int, x, eps) -> Ball:
    """``gamma(a, x) / (a-1)! = 1 - e^{-x} sum_{j<a} x^j/j!`` with radius <= eps."""
    x, eps = as_fraction(x), as_fraction(eps)
    if a < 1:
        raise ValueError("shape parameter must be a positive integer")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if x < 0:
        raise ValueError("x must be non-negative")
    if x == 0:
        return Ball(ZERO)
    poly = exp_partial(x, a - 1)
    E = exp_ball(-x, eps / poly)
    return 1 - E * poly


def lower_gamma_int(a: int, x, eps) -> Ball:
    """Lower incomplete gamma ``gamma(a, x)`` for integer ``a >= 1``, radius <= eps."""
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    g = factorial(a - 1)
    return lower_gamma_reg(a, x, eps / g) * g


def gamma_temme_check(n: int, p: int, N: int, jmax: int | None = None, eps=Fraction(1, 10**20)) -> tuple[Ball, Ball]:
    """Both sides of ``gamma(a,N)/(a-1)! = e^{-N} N^a sum_j N^j/(a+j)!`` with ``a = n+p``.

    The right-hand tail past ``jmax`` is bounded geometrically with ratio
    ``N/(a+jmax+2)``; with ``jmax = None`` the order is chosen so that tail is
    below ``eps/2``.
    """
    eps = as_fraction(eps)
    a = n + p
    if N == 0:
        return Ball(ZERO), Ball(ZERO)
    lhs = lower_gamma_reg(a, N, eps)
    scale = Fraction(N) ** a

    def tail_after(j: int) -> Fraction:
        ratio = Fraction(N, a + j + 2)
        if ratio >= 1:
            raise ValueError(f"divergent tail configuration: N={N}, a+jmax+2={a + j + 2}")
        return Fraction(N ** (j + 1), factorial(a + j + 1)) / (1 - ratio)

    if jmax is None:
        jmax = max(0, N - a)
        while scale * tail_after(jmax) > eps / 2:
            jmax += 1
    tail = tail_after(jmax)
    partial = sum((Fraction(N**j, factorial(a + j)) for j in range(jmax + 1)), ZERO)
    series = _positive_tail_ball(partial, tail) * scale
    E = exp_ball(-N, eps / (2 * abs(series)))
    return lhs, E * series


def delta_expansion_partial(p: int, t, nmax: int, eps) -> SeriesEnclosure:
    """``e^t sum_{n<=nmax} (-1)^n s(n+p-1,p-1) gamma(n+p,t) / ((n+p-1)! t^(n+p))``.

    Every summand is positive.  The tail beyond ``nmax`` is bounded with the
    first-kind Stirling upper bound, each term being at most
    ``(|s(m,p-1)|/(m-1)!) / m^2 * (M+3)/(M+3-t)`` for ``m = n+p-1 > M``.
    """
    t, eps = as_fraction(t), as_fraction(eps)
    if t <= 0:
        raise ValueError("t must be positive")
    if p < 2:
        raise ValueError("p must be >= 2")
    k = p - 1
    M = nmax + p - 1
    table = stirling1_table(M)
    exp_hi = Fraction(3) ** math.ceil(t)
    per_term = eps / (4 * exp_hi * (nmax + 1))
    inner = Ball(ZERO)
    for n in range(nmax + 1):
        a = n + p
        c = abs(table[a - 1, k])
        weight = Fraction(c) / t**a
        inner = inner + lower_gamma_reg(a, t, per_term / weight) * weight
    E = exp_ball(t, eps / (4 * (abs(inner) + 1)))
    head = E * inner

    if M + 3 <= t:
        raise ValueError("nmax too small for the certified tail at this t")
    tail = Fraction(M + 3) / (M + 3 - t) * stirling1_tail(k, 2, M)
    return SeriesEnclosure(_positive_tail_ball(head, tail), nmax + 1, tail)


def polylog_partial(p: int, x, kmax: int) -> SeriesEnclosure:
    """``Li_p(x) = sum_{k>=1} x^k/k^p`` truncated after ``kmax`` terms, ``|x| <= 1``."""
    x = as_fraction(x)
    if abs(x) > 1:
        raise ValueError("|x| must be <= 1")
    if x == 1 and p < 2:
        raise ValueError("Li_1(1) diverges")
    if kmax < 1:
        raise ValueError("kmax must be positive")
    if x == 0:
        return SeriesEnclosure(Ball(ZERO), 0, ZERO)

    if kmax <= 4096:
        partial = Ball(sum((x**k / Fraction(k) ** p for k in range(1, kmax + 1)), ZERO))
    else:
        partial = _fixed_point_polylog(p, x, kmax, bits=256)

    ax = abs(x)
    if ax < 1:
        tail = ax ** (kmax + 1) / ((kmax + 1) ** p * (1 - ax))
    elif x == 1:
        tail = Fraction(1, (p - 1) * kmax ** (p - 1))
    else:
        tail = Fraction(1, (kmax + 1) ** p)
    value = _positive_tail_ball(partial, tail) if x > 0 else partial.widen(tail)
    return SeriesEnclosure(value, kmax, tail)


def _fixed_point_polylog(p: int, x: Fraction, kmax: int, bits: int) -> Ball:
    a, b = x.numerator, x.denominator
    one = 1 << bits
    lo = hi = 0
    ak, bk = 1, 1
    for k in range(1, kmax + 1):
        ak *= a
        bk *= b
        num = ak * one
        den = bk * k**p
        lo += num // den
        hi += -((-num) // den)
    return Ball.from_bounds(Fraction(lo, one), Fraction(hi, one))


def laplace_identity_check(p: int, s, kmax: int) -> tuple[SeriesEnclosure, SeriesEnclosure]:
    """Termwise Laplace transform of ``pFp[1..;2..;t]`` at ``s`` against ``Li_p(1/s)``.

    Left side: ``sum_k c_k * k!/s^(k+1)`` with ``c_k`` the hypergeometric
    coefficients and ``k!/s^(k+1)`` the transform of ``t^k``.
    """
    s = as_fraction(s)
    if s <= 1:
        raise ValueError("s must exceed 1")
    total = ZERO
    for k in range(kmax):
        total += pfq_coefficient((1,) * p, (2,) * p, k) * factorial(k) / s ** (k + 1)
    tail = (1 / s) ** (kmax + 1) / ((kmax + 1) ** p * (1 - 1 / s))
    lhs = SeriesEnclosure(_positive_tail_ball(total, tail), kmax, tail)
    return lhs, polylog_partial(p, 1 / s, kmax)


def quadrature_integral_rep(n: int, p: int, tol=Fraction(1, 10**8)) -> Ball:
    """Composite Gauss-Legendre value of ``int_0^inf (1-e^{-t})^n e^{-t} t^(p-1) dt``.

    Approximates ``n! (p-1)! |S_n^p|``.  Test-support precision only; the
    returned radius is the requested tolerance, not a proof.
    """
    tol = as_fraction(tol)
    if tol < Fraction(1, 10**12):
        raise ValueError("quadrature is limited to tol >= 1e-12")
    ftol = float(tol)
    # tail beyond T is below Gamma(p, T) = (p-1)! e^{-T} sum_{j<p} T^j/j!
    T = 1
    while math.factorial(p - 1) * math.exp(-T) * sum(T**j / math.factorial(j) for j in range(p)) > ftol / 2:
        T += 1
    nodes, weights = np.polynomial.legendre.leggauss(30)
    edges = np.arange(0.0, T + 0.5, 0.5)
    total = 0.0
    for left, right in zip(edges[:-1], edges[1:]):
        half = 0.5 * (right - left)
        tt = half * nodes + 0.5 * (right + left)
        f = (-np.expm1(-tt)) ** n * np.exp(-tt) * tt ** (p - 1)
        total += half * float(np.dot(weights, f))
    return Ball(Fraction(total), tol)
