"""Cutting an RPP tour into capacity-feasible depot routes.

``jitp_candidates`` is the classic scheme: the i-th candidate (i = 1..k)
serves x_1..x_i in its first route and then consecutive blocks of k.
``jitp_dp`` finds the best partition of the cyclic customer sequence into
contiguous arcs of at most k customers.
"""
from __future__ import annotations

import numpy as np

from .model import Check, MetricInstance, Route, RppTour, Solution, delta


def _solution(blocks, inst: MetricInstance) -> Solution:
    return Solution(tuple(Route.from_served(b, inst) for b in blocks if b))


def candidate_blocks(order, k: int, i: int) -> list[tuple]:
    blocks = [order[:i]]
    blocks += [order[j:j + k] for j in range(i, len(order), k)]
    return [b for b in blocks if b]


def jitp_candidates(tour: RppTour, inst: MetricInstance, k: int | None = None) -> Solution:
    k = inst.capacity_k if k is None else k
    if not tour.order:
        return Solution(())
    best = None
    for i in range(1, k + 1):
        sol = _solution(candidate_blocks(tour.order, k, i), inst)
        if best is None or sol.total_cost < best.total_cost:
            best = sol
    return best


def _segment_costs(order, inst: MetricInstance):
    d = inst.dist
    ends = [inst.endpoints(x) for x in order]
    entry = np.array([a for a, _ in ends])
    exit_ = np.array([b for _, b in ends])
    serve = np.concatenate([[0.0], np.cumsum(d[entry, exit_])])
    link = np.concatenate([[0.0], np.cumsum(d[exit_[:-1], entry[1:]])])

    def cost(a: int, b: int) -> float:
        # customers order[a:b] as one route
        return (d[0, entry[a]] + serve[b] - serve[a] + link[b - 1] - link[a]
                + d[exit_[b - 1], 0])
    return cost


def jitp_dp(tour: RppTour, inst: MetricInstance, k: int | None = None) -> Solution:
    k = inst.capacity_k if k is None else k
    m = len(tour.order)
    if m == 0:
        return Solution(())
    best_cost, best_blocks = np.inf, None
    # some arc starts within k positions before x_1; rotate so it starts the line
    for off in range(min(k, m)):
        order = tour.order[m - off:] + tour.order[:m - off]
        seg = _segment_costs(order, inst)
        f = np.full(m + 1, np.inf)
        cut = np.zeros(m + 1, dtype=np.int64)
        f[0] = 0.0
        for j in range(1, m + 1):
            for a in range(max(0, j - k), j):
                val = f[a] + seg(a, j)
                if val < f[j]:
                    f[j], cut[j] = val, a
        if f[m] < best_cost:
            blocks, j = [], m
            while j:
                blocks.append(order[cut[j]:j])
                j = int(cut[j])
            best_cost, best_blocks = f[m], blocks[::-1]
    return _solution(best_blocks, inst)


def jitp_bound_report(sol: Solution, tour: RppTour, inst: MetricInstance,
                      k: int | None = None) -> Check:
    """Partition cost vs (2/k) delta(E*) + ((k-1)/k) c(tour)."""
    k = inst.capacity_k if k is None else k
    rhs = 2 / k * delta(None, inst) + (k - 1) / k * tour.cost
    return Check("tour partition bound", sol.total_cost, rhs)


PARTITIONERS = {"candidates": jitp_candidates, "dp": jitp_dp}
