"""How the certified radius of the two-series zeta(p) representation shrinks with truncation.

The second series converges algebraically (terms ~ (ln m)^(p-2)/m^2), so the
radius falls roughly like 1/M.  This prints the radius for growing M to make
that rate visible.

    python3 scripts/split_radius.py --p 2 --R 5
"""

import argparse
import time
from dataclasses import dataclass
from fractions import Fraction

from stirzeta.zeta import split_second_tail, zeta_oracle, zeta_split_eval


@dataclass
class SplitConfig:
    p: int = 2
    R: Fraction = Fraction(5)
    nmax1: int = 120
    nmax2_values: tuple[int, ...] = (25, 50, 100, 200, 400, 800)


def run(cfg: SplitConfig) -> None:
    oracle = zeta_oracle(cfg.p, Fraction(1, 10**30))
    print(f"p={cfg.p} R={cfg.R}")
    print(f"{'nmax2':>6} {'radius':>10} {'tail':>10} {'contains':>9} {'secs':>6}")
    for n2 in cfg.nmax2_values:
        start = time.perf_counter()
        ball = zeta_split_eval(cfg.p, cfg.R, cfg.nmax1, n2)
        secs = time.perf_counter() - start
        tail = split_second_tail(cfg.p, cfg.R, n2)
        print(f"{n2:>6} {float(ball.radius):>10.3e} {float(tail):>10.3e} {str(ball.intersects(oracle)):>9} {secs:>6.2f}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--R", type=Fraction, default=Fraction(5))
    ap.add_argument("--nmax1", type=int, default=120)
    ap.add_argument("--nmax2", type=int, nargs="+", default=[25, 50, 100, 200, 400, 800])
    a = ap.parse_args()
    run(SplitConfig(a.p, a.R, a.nmax1, tuple(a.nmax2)))


if __name__ == "__main__":
    main()
