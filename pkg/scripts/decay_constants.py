"""Empirical decay constant of zeta_N(p) per p.

For each p, sweeps N and reports max abs_err * e^N / N together with the
fitted slope of ln(abs_err) against N.  Writes one CSV row per (p, N).

    python3 scripts/decay_constants.py --p 2 3 5 --n-max 30 --out decay.csv
"""

import argparse
import csv
from dataclasses import dataclass, field

from stirzeta.exact import decimal_render
from stirzeta.zeta import error_sweep, log_error_slope


@dataclass
class DecayConfig:
    ps: list[int] = field(default_factory=lambda: [2, 3, 5])
    n_min: int = 6
    n_max: int = 30
    step: int = 2
    out: str = "decay_constants.csv"


def run(cfg: DecayConfig) -> None:
    with open(cfg.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["p", "N", "abs_err", "ratio"])
        for p in cfg.ps:
            Ns = [N for N in range(cfg.n_min, cfg.n_max + 1, cfg.step) if N >= p]
            recs = error_sweep(p, Ns)
            for r in recs:
                writer.writerow([p, r.N, decimal_render(r.abs_err, 40), decimal_render(r.ratio, 12)])
            C = max(r.ratio for r in recs)
            print(f"p={p}  C_emp={float(C):.4f}  slope={log_error_slope(recs):.4f}  N={Ns[0]}..{Ns[-1]}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, nargs="+", default=[2, 3, 5])
    ap.add_argument("--n-min", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--step", type=int, default=2)
    ap.add_argument("--out", default="decay_constants.csv")
    a = ap.parse_args()
    run(DecayConfig(a.p, a.n_min, a.n_max, a.step, a.out))


if __name__ == "__main__":
    main()
