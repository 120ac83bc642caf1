"""Metric closure of a raw graph, normalization to vertex-disjoint customers,
and lifting metric solutions back to walks in the raw graph."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import (InfeasibleInstance, MetricInstance, RawEdge, RawInstance, Solution)


@dataclass(frozen=True, eq=False)
class Closure:
    """All-pairs shortest paths over raw vertex ids.

    Among equal-cost paths the one with fewest hops is kept; remaining ties
    go to the lowest intermediate vertex in elimination order.
    """

    dist: np.ndarray
    hops: np.ndarray
    next_hop: np.ndarray
    edge_cost: dict

    def path(self, a: int, b: int) -> list[int]:
        if not np.isfinite(self.dist[a, b]):
            raise InfeasibleInstance(f"no path between raw vertices {a} and {b}")
        p = [a]
        while p[-1] != b:
            p.append(int(self.next_hop[p[-1], b]))
        return p

    def path_cost(self, path: list[int]) -> float:
        return float(sum(self.edge_cost[min(x, y), max(x, y)] for x, y in zip(path, path[1:])))


def metric_closure(raw: RawInstance) -> Closure:
    n = raw.vertex_count
    dist = np.full((n, n), np.inf)
    hops = np.full((n, n), np.inf)
    nxt = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0.0)
    np.fill_diagonal(hops, 0.0)
    nxt[np.arange(n), np.arange(n)] = np.arange(n)
    edge_cost = {}
    for u, v, c, _ in raw.edges:
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if c < edge_cost.get(key, np.inf):
            edge_cost[key] = float(c)
    for (u, v), c in edge_cost.items():
        dist[u, v] = dist[v, u] = c
        hops[u, v] = hops[v, u] = 1
        nxt[u, v], nxt[v, u] = v, u
    for w in range(n):
        cand = dist[:, w, None] + dist[None, w, :]
        cand_h = hops[:, w, None] + hops[None, w, :]
        better = (cand < dist) | ((cand == dist) & (cand_h < hops))
        if better.any():
            dist = np.where(better, cand, dist)
            hops = np.where(better, cand_h, hops)
            nxt = np.where(better, nxt[:, w, None], nxt)

    unreachable = [e for e in raw.customer_edges
                   if not (np.isfinite(dist[raw.depot, raw.edges[e].u])
                           and np.isfinite(dist[raw.depot, raw.edges[e].v]))]
    if unreachable:
        raise InfeasibleInstance(f"customer edges {unreachable} unreachable from the depot")
    return Closure(dist, hops, nxt, edge_cost)


@dataclass(frozen=True, eq=False)
class LiftMap:
    """Maps metric vertex ids back to raw vertices and raw shortest paths.

    ``service_excess`` is the amount by which customer edges are longer than
    the shortest path between their endpoints.  Every feasible solution pays
    it exactly once, so lifted cost = metric cost + service_excess.
    """

    endpoint_origin: tuple[int, ...]
    customer_edge: tuple[int, ...]
    raw_edges: tuple[RawEdge, ...]
    closure: Closure
    service_excess: float

    def path(self, a: int, b: int) -> list[int]:
        """Raw shortest path realizing metric distance dist(a, b)."""
        return self.closure.path(self.endpoint_origin[a], self.endpoint_origin[b])


def normalize(raw: RawInstance, closure: Closure | None = None) -> tuple[MetricInstance, LiftMap]:
    closure = metric_closure(raw) if closure is None else closure
    customer_edge = tuple(raw.customer_edges)
    origin = [raw.depot]
    for e in customer_edge:
        origin += [raw.edges[e].u, raw.edges[e].v]
    origin = np.array(origin)
    dist = closure.dist[np.ix_(origin, origin)].copy()
    excess = sum(raw.edges[e].cost - closure.dist[raw.edges[e].u, raw.edges[e].v]
                 for e in customer_edge)
    inst = MetricInstance(dist, raw.capacity_k)
    lift = LiftMap(tuple(int(x) for x in origin), customer_edge, raw.edges, closure,
                   float(excess))
    return inst, lift


@dataclass(frozen=True)
class RawWalk:
    """Closed raw walk from the depot; ``served`` lists (raw edge index,
    position of the traversal start in ``vertices``)."""

    vertices: tuple[int, ...]
    served: tuple[tuple[int, int], ...]
    cost: float


def lift_solution(sol: Solution, lift: LiftMap, inst: MetricInstance) -> list[RawWalk]:
    walks = []
    for route in sol.routes:
        verts = [lift.endpoint_origin[0]]
        served = []
        cost = 0.0
        here = 0
        for x in route.served:
            a, b = inst.endpoints(x)
            p = lift.path(here, a)
            verts.extend(p[1:])
            cost += lift.closure.path_cost(p)
            e = lift.customer_edge[x[0]]
            served.append((e, len(verts) - 1))
            verts.append(lift.endpoint_origin[b])
            cost += lift.raw_edges[e].cost
            here = b
        p = lift.path(here, 0)
        verts.extend(p[1:])
        cost += lift.closure.path_cost(p)
        walks.append(RawWalk(tuple(verts), tuple(served), cost))
    return walks
