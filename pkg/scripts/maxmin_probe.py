"""Probe the max-min of tau and eta with l treated as a real number.

The closed form restricts l to integers; relaxing it can only raise the
optimum, and the gap shows how much the integrality costs.
"""
import argparse
import math

import numpy as np

from eqcarp.analysis import ratio_closed_form
from eqcarp.analysis.ratio import _eta, _tau


def relaxed(k: int, steps: int = 4001) -> tuple[float, float]:
    ls = np.linspace(1.0, 4 * math.sqrt(k), steps)
    best, arg = -np.inf, 1.0
    for l in ls:
        a = l / (4 * l - 1)  # the crossing maximizes the lower envelope for fixed l
        val = min(_tau(a, l, k), _eta(a, l, k))
        if val > best:
            best, arg = val, l
    return best, arg


def main(ks):
    print(f"{'k':>7} {'integer':>9} {'relaxed':>9} {'l*':>7} {'gap':>9}")
    for k in ks:
        p = ratio_closed_form(k)
        r, l = relaxed(k)
        print(f"{k:>7} {p.ratio:>9.6f} {r:>9.6f} {l:>7.3f} {r - p.ratio:>9.2e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("k", type=int, nargs="*", default=[3, 4, 5, 8, 20, 100, 1000, 10 ** 5])
    main(ap.parse_args().k)
