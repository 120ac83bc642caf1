"""Closed-form ratio next to the grid-search optimum and the earlier
5/2 - 1.5/k guarantee, plus the (5/2 - ratio) * sqrt(k) trend."""
import argparse
import math
from dataclasses import dataclass

from eqcarp.analysis import jansen_ratio, ratio_closed_form, ratio_grid_search


@dataclass
class Config:
    k_min: int = 3
    k_max: int = 20
    alpha_steps: int = 10 ** 5


def main(cfg: Config):
    print(f"{'k':>4} {'l':>3} {'closed':>9} {'grid':>9} {'|diff|':>9} {'earlier':>8}")
    for k in range(cfg.k_min, cfg.k_max + 1):
        p = ratio_closed_form(k)
        g = ratio_grid_search(k, math.ceil(4 * math.sqrt(k)), cfg.alpha_steps)
        print(f"{k:>4} {p.l_tilde:>3} {p.ratio:>9.6f} {g:>9.6f} {abs(g - p.ratio):>9.1e} "
              f"{jansen_ratio(k):>8.4f}")
    print()
    for e in range(1, 7):
        k = 10 ** e
        gap = 2.5 - ratio_closed_form(k).ratio
        print(f"k=10^{e}: 5/2 - ratio = {gap:.6f}, times sqrt(k) = {gap * math.sqrt(k):.4f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-min", type=int, default=Config.k_min)
    ap.add_argument("--k-max", type=int, default=Config.k_max)
    ap.add_argument("--alpha-steps", type=int, default=Config.alpha_steps)
    a = ap.parse_args()
    main(Config(a.k_min, a.k_max, a.alpha_steps))
