from fractions import Fraction

import pytest


def exp_alternating_oracle(x: Fraction, terms: int = 60):
    """Partial sums of the exponential series; for x<0 the first omitted term bounds the error."""
    s = Fraction(0)
    term = Fraction(1)
    for k in range(terms):
        s += term
        term = term * x / (k + 1)
    return s, abs(term)


@pytest.fixture
def tiny():
    return Fraction(1, 10**30)
