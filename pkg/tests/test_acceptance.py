"""End-to-end acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line which is printed in the terminal
summary (and to stdout with ``-s``).
"""
import math
from dataclasses import dataclass, field

import numpy as np
import pytest

from eqcarp.analysis import bound_suite, ratio_closed_form, ratio_grid_search
from eqcarp.graphkit import constrained_mst, edge_cost, walk_edges
from eqcarp.instances import generate
from eqcarp.matching import min_cost_perfect_matching
from eqcarp.model import RppTour, check_solution
from eqcarp.partition import jitp_dp
from eqcarp.preprocess import normalize
from eqcarp.rpp import exact_rpp, h1_parts, h2_parts
from eqcarp.sweep import trial_spec

from oracles import (brute_constrained_tree, brute_cyclic_partition, brute_group_tour,
                     brute_matching_cost, random_band_metric, random_l1)

TRIALS = 500
TABLE = {3: 1.889, 4: 2.000, 5: 2.086, 6: 2.143, 7: 2.184}
TABLE_K8 = 2.215  # printed value; the formula gives 2.2143

GROUPS = {
    "tour partition": ["tour partition bound"],
    "OPT lower bounds": ["2 delta / k <= OPT", "H* <= OPT"],
    "H1 vs MST and OPT": ["H1 <= MST + OPT/2"],
    "H2 vs OPT": ["H2 <= OPT + 2MST - 2c(E*)", "c(E*) + c(M) <= OPT", "c(F) <= MST - c(E*)"],
    "decomposition": ["delta == sum of route deltas", "MST <= sum of route trees"],
    "H1 vs OPT": ["H1 <= OPT + 2MST - 2c(E*)"],
    "bound chain": ["ALG <= partition bound on best tour",
                    "partition bound <= bound via MST and OPT",
                    "bound via MST and OPT <= bound via route sums"],
}
ROUTE_CHECKS = {"route delta bound", "route tree bound", "route customer share", "alpha total",
                "alpha_i nonnegative", "alpha_i at most alpha", "alpha+beta partition"}


def record(log, n, ok, text):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}"
    log[n] = line
    print(line)


@dataclass
class SweepData:
    reports: list = field(default_factory=list)
    structural: list = field(default_factory=list)
    shortcut_calls: int = 0


@pytest.fixture(scope="module")
def sweep():
    data = SweepData()
    for t in range(TRIALS):
        spec = trial_spec(t, base_seed=2024, max_m=7, max_k=5)
        inst, _ = normalize(generate(spec.m, spec.k, spec.mode, spec.seed))
        rep = bound_suite(inst)
        data.reports.append((spec, inst, rep))
        # structural invariants, recomputed outside the suite
        for name, b in (("H1", h1_parts(inst)), ("H2", h2_parts(inst))):
            data.shortcut_calls += 1
            if sorted(i for i, _ in b.tour.order) != list(range(inst.m)):
                data.structural.append(f"trial {t} {name}: customers not served once")
            if walk_edges(b.walk) != b.graph.edges:
                data.structural.append(f"trial {t} {name}: Euler walk multiset differs")
            if b.tour.cost > b.walk_cost * (1 + 1e-9):
                data.structural.append(f"trial {t} {name}: shortcut increased cost")
        hstar = exact_rpp(inst)
        if sorted(i for i, _ in hstar.order) != list(range(inst.m)):
            data.structural.append(f"trial {t} H*: customers not served once")
        for label, sol in (("ALG", rep.solution), ("OPT", rep.optimum)):
            for p in check_solution(sol, inst):
                data.structural.append(f"trial {t} {label}: {p}")
    return data


def test_table_reproduction(acceptance_log):
    got = {k: ratio_closed_form(k).ratio for k in range(3, 9)}
    ok = all(abs(got[k] - v) <= 1e-3 for k, v in TABLE.items())
    ok &= abs(got[8] - (2.5 - 32 / 112)) <= 1e-12 and round(got[8], 4) == 2.2143
    shown = " ".join(f"{k}:{got[k]:.4f}" for k in got)
    record(acceptance_log, 1, ok,
           f"closed-form ratios {shown} (k=8 printed table value {TABLE_K8} is a rounding slip)")
    assert ok


def test_grid_search_agreement(acceptance_log):
    worst = 0.0
    for k in range(3, 101):
        gap = abs(ratio_grid_search(k, math.ceil(4 * math.sqrt(k)), 10 ** 5)
                  - ratio_closed_form(k).ratio)
        worst = max(worst, gap)
    ok = worst <= 1e-6
    record(acceptance_log, 2, ok, f"max |grid - closed form| over k=3..100 is {worst:.2e}")
    assert ok


def test_approximation_guarantee(sweep, acceptance_log):
    bad, worst, checked = [], 0.0, 0
    for spec, inst, rep in sweep.reports:
        alg, opt = rep.values["alg"], rep.values["opt"]
        if check_solution(rep.solution, inst):
            bad.append(f"trial {spec.trial}: infeasible output")
        for c in rep.checks:
            if c.name in GROUPS["tour partition"] + GROUPS["OPT lower bounds"] and not c.ok:
                bad.append(f"trial {spec.trial}: {c}")
        ratio = ratio_closed_form(max(spec.k, 3)).ratio
        if spec.k >= 3:
            checked += 1
            if alg > ratio * opt + 1e-9:
                bad.append(f"trial {spec.trial}: ALG {alg} > {ratio} * {opt}")
        if opt > 0:
            worst = max(worst, alg / opt / ratio)
    ok = not bad and len(sweep.reports) >= 500
    record(acceptance_log, 3, ok,
           f"{len(sweep.reports)} instances, {checked} with k>=3, worst ALG/(ratio*OPT) "
           f"{worst:.4f}, {len(bad)} failures")
    assert ok, bad[:10]


def test_inequality_suite(sweep, acceptance_log):
    counts = {g: 0 for g in GROUPS}
    bad = []
    for spec, _, rep in sweep.reports:
        for c in rep.checks:
            for g, names in GROUPS.items():
                if c.name in names:
                    counts[g] += 1
                    if not c.ok:
                        bad.append(f"trial {spec.trial}: {c}")
    ok = not bad and all(counts.values())
    summary = ", ".join(f"{g} {n}" for g, n in counts.items())
    record(acceptance_log, 4, ok, f"checks evaluated: {summary}; {len(bad)} violations")
    assert ok, bad[:10]


def test_route_parameters(sweep, acceptance_log):
    odd = sum(rep.lemma7_routes["odd"] for _, _, rep in sweep.reports)
    even = sum(rep.lemma7_routes["even"] for _, _, rep in sweep.reports)
    n_checks, bad = 0, []
    for spec, _, rep in sweep.reports:
        for c in rep.checks:
            if c.name in ROUTE_CHECKS:
                n_checks += 1
                if not c.ok:
                    bad.append(f"trial {spec.trial}: {c}")
    ok = not bad and odd >= 100 and even >= 100
    record(acceptance_log, 5, ok,
           f"optimal routes: {odd} odd, {even} even; {n_checks} checks, {len(bad)} violations")
    assert ok, bad[:10]


def test_oracle_equivalences(acceptance_log):
    rng = np.random.default_rng(6)
    fails = {"matching": 0, "tree": 0, "partition": 0, "rpp": 0}
    for _ in range(200):
        n = 2 * int(rng.integers(1, 6))
        d = random_band_metric(rng, n)
        if min_cost_perfect_matching(range(n), d).cost != brute_matching_cost(range(n), d):
            fails["matching"] += 1
    for _ in range(100):
        n = int(rng.integers(2, 8))
        d = random_band_metric(rng, n)
        perm = rng.permutation(n).tolist()
        req = [tuple(sorted(perm[i:i + 2])) for i in range(0, 2 * int(rng.integers(0, n // 2 + 1)), 2)]
        if edge_cost(constrained_mst(range(n), req, d), d) != brute_constrained_tree(range(n), req, d):
            fails["tree"] += 1
    for _ in range(100):
        m, k = int(rng.integers(1, 9)), int(rng.integers(1, 5))
        inst = random_l1(rng, m, k)
        order = [(int(i), int(rng.integers(2))) for i in rng.permutation(m)]
        tour = RppTour.from_order(order, inst)
        if jitp_dp(tour, inst).total_cost != brute_cyclic_partition(inst, tour.order, k):
            fails["partition"] += 1
    for _ in range(50):
        inst = random_l1(rng, int(rng.integers(1, 6)), 2)
        if exact_rpp(inst).cost != brute_group_tour(inst, range(inst.m)):
            fails["rpp"] += 1
    ok = not any(fails.values())
    record(acceptance_log, 6, ok,
           "200 matchings, 100 constrained trees, 100 cyclic partitions, 50 RPP tours; "
           f"mismatches {fails}")
    assert ok


def test_structural_invariants(sweep, acceptance_log):
    ok = not sweep.structural
    record(acceptance_log, 7, ok,
           f"{sweep.shortcut_calls} tour constructions, {2 * len(sweep.reports)} solutions; "
           f"{len(sweep.structural)} problems")
    assert ok, sweep.structural[:10]


def test_inverse_sqrt_trend(acceptance_log):
    vals = {k: (2.5 - ratio_closed_form(k).ratio) * math.sqrt(k)
            for k in (10 ** e for e in range(1, 7))}
    ok = all(0.3 <= v <= 3.0 for v in vals.values())
    shown = " ".join(f"{k}:{v:.3f}" for k, v in vals.items())
    record(acceptance_log, 8, ok, f"(5/2 - ratio) * sqrt(k): {shown}")
    assert ok
