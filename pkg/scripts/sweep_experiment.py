"""Random sweep: empirical ALG/OPT per capacity, which tour was partitioned,
and how often the DP partition beats the k candidates."""
import argparse
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from eqcarp.sweep import run_sweep


@dataclass
class Config:
    trials: int = 500
    seed: int = 0
    max_m: int = 7
    max_k: int = 5
    workers: int = 1


def main(cfg: Config):
    kw = dict(base_seed=cfg.seed, max_m=cfg.max_m, max_k=cfg.max_k, workers=cfg.workers)
    cand = run_sweep(cfg.trials, partition="candidates", **kw)
    dp = run_sweep(cfg.trials, partition="dp", **kw)
    by_k = defaultdict(list)
    used = defaultdict(int)
    dp_better = 0
    for a, b in zip(cand.results, dp.results):
        v = a.values
        if v["opt"] > 0:
            by_k[a.spec.k].append((v["alg"] / v["opt"], b.values["alg"] / v["opt"]))
        used[v["used"]] += 1
        dp_better += b.values["alg"] < v["alg"] - 1e-9
    print(f"{'k':>3} {'n':>5} {'mean cand':>10} {'max cand':>9} {'mean dp':>8} {'max dp':>8}")
    for k in sorted(by_k):
        r = np.array(by_k[k])
        print(f"{k:>3} {len(r):>5} {r[:, 0].mean():>10.4f} {r[:, 0].max():>9.4f} "
              f"{r[:, 1].mean():>8.4f} {r[:, 1].max():>8.4f}")
    print(f"partitioned tour: H1 {used['h1']}, H2 {used['h2']}")
    print(f"DP partition strictly cheaper on {dp_better} of {cfg.trials} instances")
    counts = cand.route_counts()
    print(f"optimal routes: odd {counts['odd']}, even {counts['even']}, "
          f"zero-cost {counts['degenerate']}")
    print(f"violations: {len(cand.violations) + len(dp.violations)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for name, val in vars(Config()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=val)
    main(Config(**vars(ap.parse_args())))
