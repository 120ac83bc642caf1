"""Seeded random verification sweeps over small instances."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .analysis import bound_suite
from .instances import generate
from .preprocess import normalize

MODES = ("euclidean", "random-metric")


@dataclass(frozen=True)
class TrialSpec:
    trial: int
    seed: int
    m: int
    k: int
    mode: str


def trial_spec(trial: int, base_seed: int = 0, max_m: int = 7, max_k: int = 5) -> TrialSpec:
    rng = np.random.default_rng([base_seed, trial])
    m = int(rng.integers(1, max_m + 1))
    k = int(rng.integers(1, max_k + 1))
    return TrialSpec(trial, int(rng.integers(2 ** 31)), m, k, MODES[trial % 2])


@dataclass
class TrialResult:
    spec: TrialSpec
    violations: list[str]
    values: dict
    lemma7_routes: dict
    n_checks: int


def run_trial(spec: TrialSpec, partition: str = "candidates") -> TrialResult:
    raw = generate(spec.m, spec.k, spec.mode, spec.seed)
    inst, _ = normalize(raw)
    rep = bound_suite(inst, partition=partition)
    return TrialResult(spec, rep.violations, rep.values, dict(rep.lemma7_routes),
                       len(rep.checks))


@dataclass
class SweepSummary:
    results: list[TrialResult] = field(default_factory=list)

    @property
    def violations(self) -> list[tuple[int, str]]:
        return [(r.spec.trial, v) for r in self.results for v in r.violations]

    def route_counts(self) -> dict:
        out = {"odd": 0, "even": 0, "degenerate": 0}
        for r in self.results:
            for key, n in r.lemma7_routes.items():
                out[key] += n
        return out

    def worst_ratio(self) -> float:
        vals = [r.values["alg"] / r.values["opt"] for r in self.results
                if r.values.get("opt", 0) > 0]
        return max(vals, default=float("nan"))


def run_sweep(trials: int, base_seed: int = 0, max_m: int = 7, max_k: int = 5,
              partition: str = "candidates", workers: int = 1) -> SweepSummary:
    specs = [trial_spec(t, base_seed, max_m, max_k) for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(run_trial, specs, [partition] * len(specs), chunksize=16))
    else:
        results = [run_trial(s, partition) for s in specs]
    results.sort(key=lambda r: r.spec.trial)
    return SweepSummary(results)
