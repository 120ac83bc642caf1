"""Exact small-instance solvers: single-route DP and set-partition DP for OPT."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import MetricInstance, Route, Served, SizeCapError, Solution

GROUP_CAP = 10
CARP_CAP = 8


@dataclass(frozen=True, eq=False)
class GroupTable:
    """Optimal single-route cost for every subset (bitmask over ``group``)
    of size at most ``max_size``; ``inf`` for larger masks."""

    group: tuple[int, ...]
    cost: np.ndarray
    _dp: np.ndarray
    _parent: np.ndarray
    _inst: MetricInstance

    def route(self, mask: int) -> Route:
        g = len(self.group)
        exits = _slot_vertices(self._inst, self.group)[1]
        final = self._dp[mask] + self._inst.dist[exits, 0]
        slot = int(np.argmin(final))
        order: list[Served] = []
        while mask:
            order.append((self.group[slot // 2], slot % 2))
            prev = int(self._parent[mask, slot])
            mask &= ~(1 << (slot // 2))
            slot = prev
        assert len(order) <= g
        return Route.from_served(order[::-1], self._inst)


def _slot_vertices(inst: MetricInstance, group: Sequence[int]):
    # slot 2j+o = j-th group customer in orientation o
    entry = np.array([inst.endpoints((i, o))[0] for i in group for o in (0, 1)])
    exit_ = np.array([inst.endpoints((i, o))[1] for i in group for o in (0, 1)])
    return entry, exit_


def group_table(inst: MetricInstance, group: Sequence[int], max_size: int | None = None) -> GroupTable:
    group = tuple(group)
    g = len(group)
    max_size = g if max_size is None else min(max_size, g)
    d = inst.dist
    entry, exit_ = _slot_vertices(inst, group)
    serve = d[entry, exit_]
    hop = d[np.ix_(exit_, entry)]  # hop[p, q]: leave slot p, enter slot q
    size = 1 << g
    dp = np.full((size, 2 * g), np.inf)
    parent = np.full((size, 2 * g), -1, dtype=np.int64)
    for q in range(2 * g):
        dp[1 << (q // 2), q] = d[0, entry[q]] + serve[q]
    popcount = np.array([bin(x).count("1") for x in range(size)])
    for mask in range(1, size):
        if popcount[mask] >= max_size:
            continue
        row = dp[mask]
        if not np.isfinite(row).any():
            continue
        for j in range(g):
            if mask >> j & 1:
                continue
            nxt = mask | 1 << j
            for q in (2 * j, 2 * j + 1):
                via = row + hop[:, q]
                p = int(np.argmin(via))
                val = via[p] + serve[q]
                if val < dp[nxt, q]:
                    dp[nxt, q] = val
                    parent[nxt, q] = p
    cost = (dp + d[exit_, 0][None, :]).min(axis=1) if g else np.zeros(1)
    cost[0] = 0.0
    return GroupTable(group, cost, dp, parent, inst)


def optimal_group_tour(group: Sequence[int], inst: MetricInstance) -> Route:
    """Cheapest single route serving exactly ``group`` (any order and orientations)."""
    group = tuple(group)
    if not 1 <= len(group) <= GROUP_CAP:
        raise SizeCapError(f"group size must be in [1, {GROUP_CAP}], got {len(group)}")
    table = group_table(inst, group)
    return table.route((1 << len(group)) - 1)


def exact_carp(inst: MetricInstance, cap: int = CARP_CAP) -> Solution:
    """Optimal CARP solution by DP over customer subsets.

    best[S] = min over blocks B of S holding S's lowest customer, |B| <= k,
    of route(B) + best[S \\ B].
    """
    m, k = inst.m, inst.capacity_k
    if m > cap:
        raise SizeCapError(f"exact CARP is capped at m = {cap}, got m = {m}")
    if m == 0:
        return Solution(())
    table = group_table(inst, range(m), max_size=k)
    full = (1 << m) - 1
    best = np.full(full + 1, np.inf)
    choice = np.zeros(full + 1, dtype=np.int64)
    best[0] = 0.0
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        sub = rest
        while True:
            block = sub | low
            val = table.cost[block] + best[s ^ block]
            if val < best[s]:
                best[s], choice[s] = val, block
            if sub == 0:
                break
            sub = (sub - 1) & rest
    routes = []
    s = full
    while s:
        block = int(choice[s])
        routes.append(table.route(block))
        s ^= block
    return Solution(tuple(routes))
