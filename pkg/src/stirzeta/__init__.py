"""Generalized Stirling numbers of the second kind and rational zeta approximants."""

from stirzeta.exact import Ball, binomial, decimal_render, exp_ball, factorial, pochhammer
from stirzeta.stirling import (
    GenStirlingRow,
    StirlingFirstTable,
    gen_stirling_butzer,
    gen_stirling_explicit,
    gen_stirling_row,
    stirling1_table,
)
from stirzeta.zeta import error_sweep, zeta_n_approx, zeta_oracle

__all__ = [
    "Ball",
    "GenStirlingRow",
    "StirlingFirstTable",
    "binomial",
    "decimal_render",
    "error_sweep",
    "exp_ball",
    "factorial",
    "gen_stirling_butzer",
    "gen_stirling_explicit",
    "gen_stirling_row",
    "pochhammer",
    "stirling1_table",
    "zeta_n_approx",
    "zeta_oracle",
]
