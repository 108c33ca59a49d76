import math
import time
from fractions import Fraction

import pytest

from stirzeta.exact import Ball, exp_ball, sqrt_lower
from stirzeta.zeta import (
    epsilon_breakdown,
    error_sweep,
    log_error_slope,
    oracle_radius_for,
    zeta_direct_series,
    zeta_n_approx,
    zeta_oracle,
    zeta_split_eval,
)

# computed once by a standalone script straight from the defining sums
ZETA_N_2_2 = Fraction(14049550433, 9001692000)
ZETA_N_2_2_FIRST = Fraction(9548704433, 9001692000)
ZETA_N_3_3 = Fraction(8399904789734654234407, 7402335466298572800000)

ZETA2 = Fraction("1.644934066848226436472415")
ZETA3 = Fraction("1.202056903159594285399738")


def prime_factors(n):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


class TestApproximant:
    def test_frozen_2_2(self):
        res = zeta_n_approx(2, 2)
        assert res.first_sum == ZETA_N_2_2_FIRST
        assert res.second_sum == Fraction(1, 2)
        assert res.value == ZETA_N_2_2
        assert (res.first_terms, res.second_terms) == (9, 1)

    def test_frozen_3_3(self):
        res = zeta_n_approx(3, 3)
        assert res.value == ZETA_N_3_3
        assert max(prime_factors(res.value.denominator)) <= 4 * 3 + 2

    def test_deterministic(self):
        a, b = zeta_n_approx(5, 12), zeta_n_approx(5, 12)
        assert a == b
        assert a.first_sum + a.second_sum == a.value

    def test_envelopes(self):
        assert abs(zeta_n_approx(2, 10).value - ZETA2) <= Fraction(1, 100)
        assert abs(zeta_n_approx(3, 20).value - ZETA3) <= Fraction(1, 10**5)

    def test_speed(self):
        start = time.perf_counter()
        zeta_n_approx(5, 25)
        assert time.perf_counter() - start < 1.0

    @pytest.mark.parametrize("p, N", [(1, 5), (3, 2)])
    def test_bad_args(self, p, N):
        with pytest.raises(ValueError):
            zeta_n_approx(p, N)

    def test_limit_override(self):
        base = zeta_n_approx(3, 6)
        alt = zeta_n_approx(3, 6, first_limit=30, second_limit=3)
        assert alt.value != base.value
        assert (alt.first_terms, alt.second_terms) == (31, 4)


class TestOracle:
    def test_reference_digits(self):
        z2 = zeta_oracle(2, Fraction(1, 10**30))
        z3 = zeta_oracle(3, Fraction(1, 10**30))
        assert z2.intersects(Ball(ZETA2, Fraction(1, 10**24)))
        assert z3.intersects(Ball(ZETA3, Fraction(1, 10**24)))

    @pytest.mark.parametrize("p", [2, 3, 4, 5, 7])
    def test_dual_method(self, p):
        a = zeta_oracle(p, Fraction(1, 10**30))
        b = zeta_direct_series(p, Fraction(1, 10**30))
        assert a.radius <= Fraction(1, 10**30) and b.radius <= Fraction(1, 10**30)
        assert a.intersects(b)

    def test_tight_radius(self):
        z = zeta_oracle(5, Fraction(1, 10**40))
        assert z.radius <= Fraction(1, 10**40)
        assert z.intersects(zeta_direct_series(5))

    def test_zeta4_closed_form(self):
        z = zeta_oracle(4, Fraction(1, 10**30))
        assert abs(float(z.center) - math.pi**4 / 90) < 1e-15

    def test_pole(self):
        with pytest.raises(ValueError):
            zeta_oracle(1)


class TestSplit:
    @pytest.mark.parametrize("p, R", [(2, 1), (2, 5), (3, 1), (3, 5)])
    def test_contains_oracle(self, p, R):
        ball = zeta_split_eval(p, R, 120, 120)
        assert ball.intersects(zeta_oracle(p, Fraction(1, 10**30)))

    def test_tightens_with_terms(self):
        a = zeta_split_eval(2, 5, 80, 40)
        b = zeta_split_eval(2, 5, 80, 160)
        assert b.radius < a.radius

    def test_nonpositive_R(self):
        with pytest.raises(ValueError):
            zeta_split_eval(2, 0, 10, 10)


class TestEpsilon:
    @pytest.mark.parametrize("N", [10, 20])
    def test_eps1_bound(self, N):
        eb = epsilon_breakdown(3, N)
        assert eb.eps1.hi <= eb.eps1_paper_bound
        assert eb.eps1_paper_bound <= exp_ball(-N, Fraction(1, 10**30)).hi / sqrt_lower(N)

    @pytest.mark.parametrize("p, N", [(2, 10), (2, 15), (3, 10), (3, 15)])
    def test_decomposition(self, p, N):
        eb = epsilon_breakdown(p, N)
        err = zeta_oracle(p, Fraction(1, 10**40)) - zeta_n_approx(p, N).value
        assert eb.combined().intersects(err)

    def test_pieces_decay(self):
        a, b = epsilon_breakdown(2, 10), epsilon_breakdown(2, 15)
        for name in ("eps2", "eps3", "eps4"):
            assert abs(getattr(b, name)) < abs(getattr(a, name))
        assert b.eps4.hi < a.eps4.lo * exp_ball(-4, Fraction(1, 10**6)).hi


class TestSweep:
    def test_p3_decay(self):
        recs = error_sweep(3, [6, 10, 14, 18, 22])
        errs = [r.abs_err for r in recs]
        assert all(a > b for a, b in zip(errs, errs[1:]))
        assert log_error_slope(recs) <= -0.9
        assert all(r.oracle.radius <= Fraction(1, 10**40) for r in recs)

    def test_p2_envelope(self):
        r6, r22 = error_sweep(2, [6, 22])
        bound = exp_ball(-14, Fraction(1, 10**20)).hi * Fraction(22, 6) * 10
        assert r22.abs_err / r6.abs_err <= bound

    def test_ratio_definition(self):
        (r,) = error_sweep(2, [8])
        assert r.ratio >= r.abs_err * exp_ball(8, Fraction(1, 10**20)).lo / 8
        assert r.abs_err >= abs(r.zeta_n - r.oracle.center)

    def test_oracle_radius_rule(self):
        assert oracle_radius_for([6, 10]) == Fraction(1, 10**40)
        assert oracle_radius_for([100]) < Fraction(1, 10**40)

    def test_empty_and_invalid(self):
        assert error_sweep(2, []) == []
        with pytest.raises(ValueError):
            error_sweep(3, [2])
