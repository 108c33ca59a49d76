"""Rational approximants of zeta(p) built from ``S_n^p`` and ``s(n, k)``.

``zeta_N(p) = sum_{n=0}^{4N} S_n^p N^(n+1)/(n+1)
            + sum_{n=0}^{N-p} (-1)^n s(n+p-1, p-1) / ((n+p-1) N^(n+p-1))``

is exact and uses no transcendental arithmetic.  The oracle used to measure
its error is independent: an accelerated alternating (eta) series, checked
against a direct series with an Euler-Maclaurin remainder.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from stirzeta.exact import ONE, ZERO, Ball, _grid_bits, as_fraction, exp_ball, factorial, ln_float, sqrt_upper
from stirzeta.series import exp_partial, exp_series_tail
from stirzeta.stirling import gen_stirling_row, stirling1_table, stirling1_tail


@dataclass(frozen=True)
class ZetaApproxResult:
    p: int
    N: int
    value: Fraction
    first_sum: Fraction
    second_sum: Fraction
    first_terms: int
    second_terms: int


@dataclass(frozen=True)
class EpsilonBreakdown:
    """Numeric enclosures of the four error pieces at ``R = N``.

    ``zeta(p) - zeta_N(p) = eps1 - eps2 + eps3 + eps4``.
    """

    p: int
    N: int
    eps1: Ball
    eps2: Ball
    eps3: Ball
    eps4: Ball
    eps1_paper_bound: Fraction
    eps3_tail: Fraction
    eps4_tail: Fraction

    def combined(self) -> Ball:
        return self.eps1 - self.eps2 + self.eps3 + self.eps4


@dataclass(frozen=True)
class SweepRecord:
    p: int
    N: int
    zeta_n: Fraction
    oracle: Ball
    abs_err: Fraction
    ratio: Fraction

    @property
    def ln_abs_err(self) -> float:
        return ln_float(self.abs_err)


def _check_pN(p: int, N: int) -> None:
    if p < 2:
        raise ValueError("p must be >= 2")
    if N < p:
        raise ValueError(f"N={N} must be >= p={p}")


def zeta_n_approx(p: int, N: int, first_limit: int | None = None, second_limit: int | None = None) -> ZetaApproxResult:
    """Exact ``zeta_N(p)``.

    ``first_limit`` and ``second_limit`` replace the default upper summation
    indices ``4N`` and ``N-p``; any other value no longer gives ``zeta_N(p)``.
    """
    _check_pN(p, N)
    n1 = 4 * N if first_limit is None else first_limit
    n2 = N - p if second_limit is None else second_limit
    if n1 < 0 or n2 < -1:
        raise ValueError("summation limits must be non-negative")

    row = gen_stirling_row(p, n1)
    # Horner in N over a shared 1/(n+1) weight keeps intermediate fractions small.
    first = ZERO
    for n in range(n1, -1, -1):
        first = first * N + row[n] / (n + 1)
    first *= N

    k = p - 1
    table = stirling1_table(max(n2 + p - 1, k))
    second = ZERO
    for n in range(n2 + 1):
        m = n + p - 1
        second += Fraction(abs(table[m, k]), m * N**m)
    return ZetaApproxResult(p, N, first + second, first, second, n1 + 1, n2 + 1)


@lru_cache(maxsize=None)
def _bernoulli_even(count: int) -> tuple[Fraction, ...]:
    """``B_0, B_1, ..., B_count`` from the standard recurrence."""
    B = [ONE]
    for n in range(1, count + 1):
        B.append(-sum((math.comb(n + 1, j) * B[j] for j in range(n)), ZERO) / (n + 1))
    return tuple(B)


@lru_cache(maxsize=64)
def zeta_oracle(p: int, eps=Fraction(1, 10**40)) -> Ball:
    """Enclosure of zeta(p) with radius <= eps.

    Uses the Cohen-Rodriguez Villegas-Zagier acceleration of
    ``eta(p) = sum_{k>=0} (-1)^k/(k+1)^p``; since ``1/(k+1)^p`` are moments of a
    positive measure on [0, 1], the accelerated sum with ``n`` terms has
    relative error at most ``1/T_n(3)`` (Chebyshev).  Then
    ``zeta(p) = eta(p) / (1 - 2^(1-p))``.
    """
    eps = as_fraction(eps)
    if p < 2:
        raise ValueError("zeta has a pole at p = 1; need p >= 2")
    if eps <= 0:
        raise ValueError("eps must be positive")
    scale = 1 / (1 - Fraction(1, 2 ** (p - 1)))
    # eta(p) < 1, so the absolute zeta error is <= scale / T_n(3)
    t_prev, t_cur, n = 1, 3, 1
    while scale / t_cur > eps / 2:
        t_prev, t_cur, n = t_cur, 6 * t_cur - t_prev, n + 1
    d = t_cur
    b = Fraction(-1)
    c = Fraction(-d)
    s = ZERO
    for k in range(n):
        c = b - c
        s += c / Fraction(k + 1) ** p
        b = b * (k + n) * (k - n) / ((k + Fraction(1, 2)) * (k + 1))
    eta = Ball(s / d, Fraction(1, d))
    return (eta * scale).coarsen(_grid_bits(eps / 8))


@lru_cache(maxsize=64)
def zeta_direct_series(p: int, eps=Fraction(1, 10**30)) -> Ball:
    """Enclosure of zeta(p) from ``sum_{k<K} k^-p`` plus an Euler-Maclaurin tail.

    For ``f(x) = x^-p`` all even derivatives share a sign, so the remainder
    after ``m`` correction terms is bounded by the first omitted term.
    """
    eps = as_fraction(eps)
    if p < 2:
        raise ValueError("need p >= 2")
    K = 64

    def omitted(m: int) -> Fraction:
        B = _bernoulli_even(2 * m + 2)
        poch = math.prod(range(p, p + 2 * m + 1))
        return abs(B[2 * m + 2]) / factorial(2 * m + 2) * poch / Fraction(K) ** (p + 2 * m + 1)

    m = 1
    while omitted(m) > eps / 2:
        m += 1
        if 2 * m + p > 4 * K:
            K *= 2
            m = 1
    B = _bernoulli_even(2 * m)
    head = sum((Fraction(1, k**p) for k in range(1, K)), ZERO)
    tail = Fraction(1, (p - 1) * K ** (p - 1)) + Fraction(1, 2 * K**p)
    for j in range(1, m + 1):
        poch = math.prod(range(p, p + 2 * j - 1))
        tail += B[2 * j] / factorial(2 * j) * poch / Fraction(K) ** (p + 2 * j - 1)
    return Ball(head + tail, omitted(m))


def _first_series(p: int, R: Fraction, lo: int, hi: int) -> Fraction:
    """``sum_{n=lo}^{hi} S_n^p R^(n+1)/(n+1)`` exactly."""
    row = gen_stirling_row(p, hi)
    total = ZERO
    for n in range(hi, lo - 1, -1):
        total = total * R + row[n] / (n + 1)
    return total * R ** (lo + 1)


def zeta_split_eval(p: int, R, nmax1: int, nmax2: int, eps=Fraction(1, 10**12)) -> Ball:
    """Enclosure of the two-series representation of zeta(p) at split point ``R``.

    First series ``sum S_n^p R^(n+1)/(n+1)``; its tail is bounded by
    ``sum R^(n+1)/(n+1)!``.  Second series, with ``m = n+p-1``,
    ``sum |s(m,p-1)| / (m m!) * (gamma(m+1,R)/R^m + e^{-R})``.  Writing
    ``gamma(m+1,R)/m! = 1 - e^{-R} sum_{j<=m} R^j/j!`` makes the head a single
    exact difference ``A - e^{-R} B``.  Its tail uses
    ``e^{-R} 1F1(1; m+1; R) <= min(1, e^{-R} (M+2)/(M+2-R))`` and the
    first-kind Stirling upper bound.
    """
    R, eps = as_fraction(R), as_fraction(eps)
    _check_pN(p, p)
    if R <= 0:
        raise ValueError("R must be positive")
    first = _first_series(p, R, 0, nmax1)
    first_tail = exp_series_tail(R, nmax1 + 2)
    first_ball = Ball(first, first_tail)

    k = p - 1
    M = nmax2 + p - 1
    table = stirling1_table(M)
    A = ZERO
    B = ZERO
    Rm = R ** (k - 1)
    for m in range(k, M + 1):
        Rm *= R
        c = Fraction(abs(table[m, k]), m)
        A += c / Rm
        B += c * (exp_partial(R, m) / Rm - Fraction(1, factorial(m)))
    E = exp_ball(-R, eps / (2 * (B + 1)))
    head = A - E * B

    e_hi = exp_ball(-R, Fraction(1, 10**6)).hi
    factor = ONE
    if M + 2 > R:
        factor = min(ONE, e_hi * (M + 2) / (M + 2 - R))
    tail = factor * stirling1_tail(k, 2, M)
    return first_ball + head + Ball(tail / 2, tail / 2)


def split_second_tail(p: int, R, nmax2: int) -> Fraction:
    """Certified tail bound of the second series after ``nmax2`` terms (diagnostic)."""
    R = as_fraction(R)
    M = nmax2 + p - 1
    e_hi = exp_ball(-R, Fraction(1, 10**6)).hi
    factor = min(ONE, e_hi * (M + 2) / (M + 2 - R)) if M + 2 > R else ONE
    return factor * stirling1_tail(p - 1, 2, M)


def epsilon_breakdown(p: int, N: int, eps3_terms: int = 200, eps4_terms: int = 400, eps=Fraction(1, 10**30)) -> EpsilonBreakdown:
    """Enclosures of the four error pieces of ``zeta(p) - zeta_N(p)``."""
    _check_pN(p, N)
    eps = as_fraction(eps)
    k = p - 1
    Nq = Fraction(N)
    e_lo_hi = exp_ball(-N, Fraction(1, 10**40))

    # eps1: first-series tail past 4N, summed to 8N plus a factorial tail
    s1 = _first_series(p, Nq, 4 * N + 1, 8 * N)
    eps1 = Ball(s1, exp_series_tail(Nq, 8 * N + 2))

    # eps2 and eps3 share terms |s(m,k)|/(m N^m) weighted by 1 - P and P, P = gamma(m+1,N)/m!
    M3 = N - 1 + eps3_terms
    table = stirling1_table(max(M3, k + eps4_terms))
    B2 = ZERO
    for m in range(k, N):
        B2 += Fraction(abs(table[m, k]), m * N**m) * exp_partial(Nq, m)
    eps2 = exp_ball(-N, eps / (B2 + 1)) * B2

    A3 = ZERO
    B3 = ZERO
    for m in range(N, M3 + 1):
        w = Fraction(abs(table[m, k]), m * N**m)
        A3 += w
        B3 += w * exp_partial(Nq, m)
    head3 = A3 - exp_ball(-N, eps / (B3 + 1)) * B3
    # P(m+1,N) <= e^{-N} N^(m+1)/(m+1)! * (m+2)/(m+2-N) gives N e^{-N} (|s|/(m-1)!)/m^3 * (M3+3)/(M3+3-N)
    eps3_tail = N * e_lo_hi.hi * Fraction(M3 + 3, M3 + 3 - N) * stirling1_tail(k, 3, M3)
    eps3 = head3 + Ball(eps3_tail / 2, eps3_tail / 2)

    # eps4 = e^{-N} sum_m |s(m,k)|/(m m!)
    M4 = k + eps4_terms
    S4 = sum((Fraction(abs(table[m, k]), m * factorial(m)) for m in range(k, M4 + 1)), ZERO)
    eps4_tail = e_lo_hi.hi * stirling1_tail(k, 2, M4)
    eps4 = exp_ball(-N, eps / (S4 + 1)) * S4 + Ball(eps4_tail / 2, eps4_tail / 2)

    paper_bound = e_lo_hi.lo / sqrt_upper(N)
    return EpsilonBreakdown(p, N, eps1, eps2, eps3, eps4, paper_bound, eps3_tail, eps4_tail)


def oracle_radius_for(N_list) -> Fraction:
    """``min(1e-40, N e^{-N} / 1e6)`` over the list, as a rational lower bound."""
    r = Fraction(1, 10**40)
    for N in N_list:
        r = min(r, N * exp_ball(-N, Fraction(1, 10**60)).lo / 10**6)
    return r


def error_sweep(p: int, N_list) -> list[SweepRecord]:
    N_list = list(N_list)
    for N in N_list:
        _check_pN(p, N)
    if not N_list:
        return []
    oracle = zeta_oracle(p, oracle_radius_for(N_list))
    records = []
    for N in N_list:
        z = zeta_n_approx(p, N).value
        # certified upper bound of |zeta(p) - zeta_N(p)|
        abs_err = abs(z - oracle.center) + oracle.radius
        ratio = abs_err * exp_ball(N, ONE).hi / N
        records.append(SweepRecord(p, N, z, oracle, abs_err, ratio))
    return records


def log_error_slope(records) -> float:
    """Least-squares slope of ``ln(abs_err)`` against ``N``."""
    xs = [r.N for r in records]
    ys = [r.ln_abs_err for r in records]
    return statistics.linear_regression(xs, ys).slope
