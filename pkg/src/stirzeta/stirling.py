"""Stirling numbers of the first kind and generalized Stirling numbers of the second kind.

``S_n^p = ((-1)^n / n!) * sum_{k=0}^{n} (-1)^k C(n,k) / (k+1)^p`` is computed by
three routes that must agree exactly: the explicit sum, the recurrence in ``p``
started from ``S_n^1 = (-1)^n/(n+1)!``, and the negative-order form
``((-1)^{n+1}/(n+1)!) sum_{k=1}^{n+1} (-1)^k C(n+1,k) / k^(p-1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from stirzeta.exact import ONE, ZERO, as_fraction, factorial, log_upper, pochhammer


class PoleError(ValueError):
    """Argument hits a pole of ``1/(x)_{n+1}``."""


@dataclass(frozen=True)
class StirlingFirstTable:
    """Signed first-kind numbers ``s(n, k)`` for ``0 <= k <= n <= nmax``."""

    nmax: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if n < 0 or n > self.nmax:
            raise IndexError(f"n={n} outside table of size {self.nmax}")
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]


@lru_cache(maxsize=64)
def _stirling1_rows(nmax: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(nmax):
        prev = rows[-1]
        new = [0] * (n + 2)
        for k in range(1, n + 2):
            left = prev[k - 1]
            right = prev[k] if k <= n else 0
            new[k] = left - n * right
        rows.append(tuple(new))
    return tuple(rows)


def stirling1_table(nmax: int) -> StirlingFirstTable:
    """Triangular table from ``s(n+1, k) = s(n, k-1) - n s(n, k)``."""
    if nmax < 0:
        raise ValueError("nmax must be non-negative")
    return StirlingFirstTable(nmax, _stirling1_rows(nmax))


def stirling1(n: int, k: int) -> int:
    return stirling1_table(n)[n, k]


def stirling1_bound(n: int, m: int) -> Fraction:
    """Rational upper bound for ``|s(n+1, m+1)|``, valid for ``n >= 2`` and ``1 <= m <= n-1``.

    Evaluates ``n! (ln n)^m / m! * (1 + m / ln n)`` in the equivalent form
    ``n!/m! * (L^m + m L^(m-1))``, which is increasing in ``L``, with ``L`` a
    certified upper bound of ``ln n``.
    """
    if n < 2:
        raise ValueError("stirling1_bound needs n >= 2")
    if not 1 <= m <= n - 1:
        raise ValueError(f"m={m} outside 1..{n - 1}")
    L = log_upper(n)
    return Fraction(factorial(n), factorial(m)) * (L**m + m * L ** (m - 1))


def stirling1_ratio_coeffs(k: int) -> list[Fraction]:
    """Coefficients ``c_i`` with ``|s(m,k)| / (m-1)! <= sum_i c_i (ln m)^i`` for ``m > k``.

    For ``k = 1`` the bound is exact (``|s(m,1)| = (m-1)!``); for ``k >= 2`` it is
    the first-kind upper bound with ``n = m-1``, ``m' = k-1``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return [ONE]
    c = [ZERO] * k
    c[k - 1] = Fraction(1, factorial(k - 1))
    c[k - 2] = Fraction(1, factorial(k - 2))
    return c


def log_power_tail(i: int, s: int, X: int) -> Fraction:
    """Upper bound of ``sum_{m > X} (ln m)^i / m^s`` via the integral from ``X``.

    Needs ``s >= 2`` and ``X >= 3**ceil(i/s)`` so the summand decreases on ``[X, inf)``.
    """
    if s < 2:
        raise ValueError("tail diverges for s < 2")
    if X < 3 ** math.ceil(i / s) or X < 1:
        raise ValueError("summand not yet decreasing at X")
    L = log_upper(X)
    total = ZERO
    for j in range(i + 1):
        total += Fraction(factorial(i), factorial(j)) * L**j / Fraction(s - 1) ** (i - j + 1)
    return total / Fraction(X) ** (s - 1)


def stirling1_tail(k: int, s: int, M: int) -> Fraction:
    """Upper bound of ``sum_{m > M} (|s(m,k)|/(m-1)!) / m^s``.

    Terms below the range where the integral bound applies are added exactly.
    """
    if s < 2:
        raise ValueError("tail diverges for s < 2")
    start = max(M, k + 1, 3 ** math.ceil((k - 1) / s))
    table = stirling1_table(start)
    head = sum(
        (Fraction(abs(table[m, k]), factorial(m - 1) * m**s) for m in range(max(M + 1, 1), start + 1)),
        ZERO,
    )
    coeffs = stirling1_ratio_coeffs(k)
    return head + sum((c * log_power_tail(i, s, start) for i, c in enumerate(coeffs) if c), ZERO)


@lru_cache(maxsize=1024)
def _lcm_upto(n: int) -> int:
    return math.lcm(*range(1, n + 1)) if n >= 1 else 1


def gen_stirling_explicit(n: int, p: int) -> Fraction:
    """``S_n^p`` from the alternating binomial sum, in integer arithmetic over a common denominator."""
    if n < 0 or p < 1:
        raise ValueError("need n >= 0 and p >= 1")
    D = _lcm_upto(n + 1) ** p
    acc = 0
    c = 1
    for k in range(n + 1):
        term = c * (D // (k + 1) ** p)
        acc += -term if k & 1 else term
        c = c * (n - k) // (k + 1)
    value = Fraction(acc, D * factorial(n))
    return -value if n & 1 else value


def gen_stirling_butzer(n: int, p: int) -> Fraction:
    """``S_n^p`` through the negative-order Stirling form ``S(1-p, n+1)``."""
    if n < 0 or p < 1:
        raise ValueError("need n >= 0 and p >= 1")
    m = n + 1
    D = _lcm_upto(m) ** (p - 1)
    acc = 0
    c = m
    for k in range(1, m + 1):
        term = c * (D // k ** (p - 1))
        acc += -term if k & 1 else term
        c = c * (m - k) // (k + 1)
    value = Fraction(acc, D * factorial(m))
    return -value if m & 1 else value


@dataclass(frozen=True)
class GenStirlingRow:
    p: int
    nmax: int
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=128)
def _recurrence_rows(pmax: int, nmax: int) -> tuple[tuple[Fraction, ...], ...]:
    base = tuple(Fraction((-1) ** n, factorial(n + 1)) for n in range(nmax + 1))
    rows = [base]
    for _ in range(pmax - 1):
        prev = rows[-1]
        new = []
        last = ZERO
        for n in range(nmax + 1):
            last = (prev[n] - last) / (n + 1)
            new.append(last)
        rows.append(tuple(new))
    return tuple(rows)


def gen_stirling_row(p: int, nmax: int) -> GenStirlingRow:
    """``S_0^p .. S_nmax^p`` built by ``(n+1) S_n^{p+1} = S_n^p - S_{n-1}^{p+1}``."""
    if p < 1 or nmax < 0:
        raise ValueError("need p >= 1 and nmax >= 0")
    return GenStirlingRow(p, nmax, _recurrence_rows(p, nmax)[p - 1])


def gen_stirling(n: int, p: int) -> Fraction:
    return gen_stirling_explicit(n, p)


def _check_pole(n: int, x: Fraction) -> None:
    if x.denominator == 1 and -n <= x <= 0:
        raise PoleError(f"x={x} is a pole of g_{n}")


def g_value(n: int, x) -> Fraction:
    """``g_n(x) = (-1)^n / (x)_{n+1}``."""
    x = as_fraction(x)
    _check_pole(n, x)
    return (-1) ** n / pochhammer(x, n + 1)


def g_partial_fraction(n: int, x) -> Fraction:
    """``g_n(x)`` as ``((-1)^n/n!) sum_k (-1)^k C(n,k) / (k+x)``."""
    return g_derivative(n, x, 0)


def g_derivative(n: int, x, order: int) -> Fraction:
    """Exact ``order``-th derivative of ``g_n`` from its partial-fraction form."""
    x = as_fraction(x)
    _check_pole(n, x)
    total = ZERO
    c = 1
    for k in range(n + 1):
        term = c / (k + x) ** (order + 1)
        total += -term if k & 1 else term
        c = c * (n - k) // (k + 1)
    sign = (-1) ** (n + order)
    return sign * factorial(order) * total / factorial(n)


def vertical_gf_partial(n: int, t, pmax: int) -> Fraction:
    """``sum_{p=0}^{pmax} S_n^{p+1} t^p`` for ``0 < t < 1``."""
    t = as_fraction(t)
    if not 0 < t < 1:
        raise ValueError("t must lie in (0, 1)")
    total = ZERO
    for p in range(pmax, -1, -1):
        total = total * t + gen_stirling_explicit(n, p + 1)
    return total


def vertical_gf_tail_bound(n: int, t, pmax: int) -> Fraction:
    """``(2^n/n!) t^(pmax+1) / (1-t)``, from ``|S_n^p| <= 2^n/n!``."""
    t = as_fraction(t)
    return Fraction(2**n, factorial(n)) * t ** (pmax + 1) / (1 - t)
