"""Identity checks run by ``stirzeta verify``.

Each check names the identity it exercises by its formula, so a failure
points at the relation that broke.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from stirzeta.exact import exp_ball, factorial
from stirzeta.series import (
    delta_expansion_partial,
    gamma_temme_check,
    horizontal_gf_partial,
    laplace_identity_check,
    lower_gamma_int,
    pfp_ones_twos,
    quadrature_integral_rep,
)
from stirzeta.stirling import (
    g_derivative,
    g_partial_fraction,
    g_value,
    gen_stirling_butzer,
    gen_stirling_explicit,
    gen_stirling_row,
    stirling1_bound,
    stirling1_table,
    vertical_gf_partial,
    vertical_gf_tail_bound,
)
from stirzeta.zeta import (
    epsilon_breakdown,
    error_sweep,
    log_error_slope,
    zeta_direct_series,
    zeta_n_approx,
    zeta_oracle,
    zeta_split_eval,
)

SUITES = ("stirling", "gf", "gamma", "integral", "zeta")


@dataclass
class CheckResult:
    suite: str
    identity: str
    passed: bool
    detail: str = ""


def stirling1_by_log_series(nmax: int) -> list[list[int]]:
    """``s(n,k)`` read off ``ln(1+t)^k / k!`` by truncated power-series multiplication."""
    log1p = [Fraction(0)] + [Fraction((-1) ** (j + 1), j) for j in range(1, nmax + 1)]
    out = [[0] * (nmax + 1) for _ in range(nmax + 1)]
    power = [Fraction(1)] + [Fraction(0)] * nmax
    for k in range(nmax + 1):
        for n in range(nmax + 1):
            out[n][k] = power[n] * factorial(n) / factorial(k)
        nxt = [Fraction(0)] * (nmax + 1)
        for i, a in enumerate(power):
            if a:
                for j in range(1, nmax + 1 - i):
                    nxt[i + j] += a * log1p[j]
        power = nxt
    return [[int(v) for v in row] for row in out]


def _stirling_checks():
    def triple():
        for p in range(1, 9):
            row = gen_stirling_row(p, 150)
            for n in range(151):
                e = gen_stirling_explicit(n, p)
                if not (e == row[n] == gen_stirling_butzer(n, p)):
                    return False, f"n={n}, p={p}"
        return True, "n<=150, p<=8"

    def sign_bound():
        for p in range(1, 9):
            row = gen_stirling_row(p, 150)
            for n, v in enumerate(row.values):
                if (-1) ** n * v <= 0 or abs(v) > Fraction(1, factorial(n)):
                    return False, f"n={n}, p={p}"
        return True, "n<=150, p<=8"

    def falling_factorial():
        table = stirling1_table(25)
        for n in range(26):
            for m in range(11):
                falling = 1
                for i in range(n):
                    falling *= m - i
                if sum(table[n, k] * m**k for k in range(n + 1)) != falling:
                    return False, f"n={n}, m={m}"
        return True, "n<=25, m<=10"

    def log_series():
        table = stirling1_table(12)
        brute = stirling1_by_log_series(12)
        ok = all(table[n, k] == brute[n][k] for n in range(13) for k in range(n + 1))
        return ok, "n<=12"

    def first_kind_bound():
        table = stirling1_table(61)
        for n in range(2, 61):
            for m in range(1, n):
                if stirling1_bound(n, m) < abs(table[n + 1, m + 1]):
                    return False, f"n={n}, m={m}"
        return True, "2<=n<=60"

    def g_forms():
        rng = random.Random(20240)
        for _ in range(50):
            n = rng.randint(0, 20)
            x = Fraction(rng.randint(-400, 400), rng.randint(1, 37))
            if x.denominator == 1 and -n <= x <= 0:
                x += Fraction(1, 2)
            if g_value(n, x) != g_partial_fraction(n, x):
                return False, f"n={n}, x={x}"
        return True, "50 random rationals"

    def derivative_form():
        for p in range(1, 7):
            for n in range(0, 31):
                lhs = gen_stirling_explicit(n, p)
                rhs = Fraction((-1) ** (p - 1), factorial(p - 1)) * g_derivative(n, 1, p - 1)
                if lhs != rhs:
                    return False, f"n={n}, p={p}"
        return all(gen_stirling_explicit(n, 1) == g_value(n, 1) for n in range(51)), "n<=30, p<=6"

    return [
        ("S_n^p: explicit sum = recurrence in p = negative-order form", triple),
        ("sign (-1)^n S_n^p > 0 and |S_n^p| <= 1/n!", sign_bound),
        ("sum_k s(n,k) m^k = m(m-1)...(m-n+1)", falling_factorial),
        ("ln(1+t)^k/k! = sum_n s(n,k) t^n/n!", log_series),
        ("|s(n+1,m+1)| <= n!(ln n)^m/m! (1 + m/ln n)", first_kind_bound),
        ("(-1)^n/(x)_{n+1} = ((-1)^n/n!) sum_k (-1)^k C(n,k)/(k+x)", g_forms),
        ("S_n^p = (-1)^(p-1)/(p-1)! g_n^(p-1)(1)", derivative_form),
    ]


def _gf_checks():
    tol = Fraction(1, 10**25)

    def horizontal():
        for p in (2, 3, 4):
            for t in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
                lhs = horizontal_gf_partial(p, t, 60)
                rhs = exp_ball(-t, tol / 10) * pfp_ones_twos(p, t, tol / 10).value
                if not lhs.value.intersects(rhs) or lhs.value.radius + rhs.radius > tol:
                    return False, f"p={p}, t={t}"
        return True, "p in 2..4, t in {1/2,1,3/2}"

    def vertical():
        t = Fraction(1, 2)
        for n in (1, 5, 10):
            diff = abs(vertical_gf_partial(n, t, 80) - g_value(n, 1 - t))
            if diff > vertical_gf_tail_bound(n, t, 80):
                return False, f"n={n}"
        return True, "n in {1,5,10}, pmax=80"

    def delta():
        for p in (2, 3):
            for t in (2, 5):
                ref = pfp_ones_twos(p, t, Fraction(1, 10**10)).value
                short = delta_expansion_partial(p, t, 30, Fraction(1, 10**10))
                full = delta_expansion_partial(p, t, 60, Fraction(1, 10**10))
                heads_rise = short.value.lo <= full.value.lo
                gap_shrinks = ref.center - full.value.lo < ref.center - short.value.lo
                if not (full.intersects(ref) and heads_rise and gap_shrinks):
                    return False, f"p={p}, t={t}"
        return True, "p in {2,3}, t in {2,5}, nmax 30 -> 60"

    def laplace():
        for p in (2, 3, 4):
            for s in (2, 3):
                lhs, rhs = laplace_identity_check(p, s, 200)
                if not lhs.intersects(rhs):
                    return False, f"p={p}, s={s}"
        return True, "p in 2..4, s in {2,3}"

    return [
        ("e^{-t} pFp[1..;2..;t] = sum_n S_n^p t^n", horizontal),
        ("(-1)^n/(1-t)_{n+1} = sum_p S_n^{p+1} t^p", vertical),
        ("pFp[1..;2..;t] = e^t sum_n (-1)^n s(n+p-1,p-1) gamma(n+p,t)/((n+p-1)! t^(n+p))", delta),
        ("int e^{-st} pFp dt = (1/s) p+1Fp(1/s) = Li_p(1/s)", laplace),
    ]


def _gamma_checks():
    def arfken_temme():
        for n in range(6):
            for p in (2, 3):
                for N in (5, 10):
                    lhs, rhs = gamma_temme_check(n, p, N, eps=Fraction(1, 10**18))
                    if not lhs.intersects(rhs):
                        return False, f"n={n}, p={p}, N={N}"
        return True, "n<=5, p in {2,3}, N in {5,10}"

    def monotone():
        eps = Fraction(1, 10**20)
        for a in range(1, 7):
            prev = None
            for x in (1, 2, 4, 8, 16):
                g = lower_gamma_int(a, x, eps)
                if not (g.lo > 0 and g.hi < factorial(a - 1)):
                    return False, f"a={a}, x={x} outside (0, (a-1)!)"
                if prev is not None and g.lo <= prev.hi:
                    return False, f"a={a}, x={x} not increasing"
                prev = g
        return True, "a<=6, x in {1,2,4,8,16}"

    return [
        ("1 - gamma(a,x)/Gamma(a) = e^{-x} sum_{j<a} x^j/j!  vs  gamma(a,N)/(a-1)! = e^{-N} N^a sum_j N^j/(a+j)!", arfken_temme),
        ("0 < gamma(a,x) < (a-1)!, increasing in x", monotone),
    ]


def _integral_checks():
    def quadrature():
        tol = Fraction(1, 10**8)
        worst = Fraction(0)
        for n in range(11):
            for p in range(1, 6):
                exact = factorial(n) * factorial(p - 1) * abs(gen_stirling_explicit(n, p))
                err = abs(quadrature_integral_rep(n, p, tol).center - exact)
                worst = max(worst, err)
                if err > 10 * tol:
                    return False, f"n={n}, p={p}, err={float(err):.3e}"
        return True, f"n<=10, p<=5, worst {float(worst):.2e}"

    return [("S_n^p = (-1)^n/(n!(p-1)!) int (1-e^{-t})^n e^{-t} t^(p-1) dt", quadrature)]


def _zeta_checks():
    def oracle():
        eps = Fraction(1, 10**30)
        ok = all(zeta_oracle(p, eps).intersects(zeta_direct_series(p, eps)) for p in (2, 3, 4, 5, 7))
        return ok, "p in {2,3,4,5,7} at 1e-30"

    def decay():
        Ns = [6, 10, 14, 18, 22]
        for p in (2, 3, 5):
            recs = error_sweep(p, Ns)
            errs = [r.abs_err for r in recs]
            decreasing = all(a > b for a, b in zip(errs, errs[1:]))
            envelope = all(r.abs_err <= 50 * r.N * exp_ball(-r.N, Fraction(1, 10**40)).lo for r in recs)
            slope = log_error_slope(recs)
            if not (decreasing and envelope and slope <= -0.9):
                return False, f"p={p}, slope={slope:.3f}"
        return True, "p in {2,3,5}, N in {6,...,22}"

    def decomposition():
        for p in (2, 3):
            for N in (10, 15):
                br = epsilon_breakdown(p, N)
                diff = zeta_oracle(p) - zeta_n_approx(p, N).value
                if not br.combined().intersects(diff):
                    return False, f"p={p}, N={N}"
        return True, "p in {2,3}, N in {10,15}"

    def eps1_bound():
        for N in (10, 20):
            br = epsilon_breakdown(3, N)
            if br.eps1.hi > br.eps1_paper_bound:
                return False, f"N={N}"
        return True, "p=3, N in {10,20}"

    def split():
        for p in (2, 3):
            for R in (1, 5):
                if not zeta_split_eval(p, R, 120, 120).contains(zeta_oracle(p)):
                    return False, f"p={p}, R={R}"
        return True, "p in {2,3}, R in {1,5}"

    return [
        ("eta acceleration = direct series with Euler-Maclaurin tail", oracle),
        ("|zeta(p) - zeta_N(p)| <= C N e^{-N}", decay),
        ("zeta(p) - zeta_N(p) = eps1 - eps2 + eps3 + eps4", decomposition),
        ("eps1 <= e^{-N}/sqrt(N)", eps1_bound),
        ("zeta(p) = sum S_n^p R^(n+1)/(n+1) + second series at R", split),
    ]


_BUILDERS: dict[str, Callable] = {
    "stirling": _stirling_checks,
    "gf": _gf_checks,
    "gamma": _gamma_checks,
    "integral": _integral_checks,
    "zeta": _zeta_checks,
}


def run_suite(suite: str = "all") -> list[CheckResult]:
    names = SUITES if suite == "all" else (suite,)
    results = []
    for name in names:
        for identity, fn in _BUILDERS[name]():
            try:
                passed, detail = fn()
            except Exception as exc:  # a crash counts as a failed identity
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            results.append(CheckResult(name, identity, bool(passed), detail))
    return results
