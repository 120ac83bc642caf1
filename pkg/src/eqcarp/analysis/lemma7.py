"""Per-route parameter construction for the structural route bounds.

A route v0, v1, ..., v_2l, v0 is read from both ends at once: alpha_i
collects the i-th connector pair counted from the depot, beta_i the i-th
customer pair.  Odd and even l differ only in how the middle is split.
Indices wrap modulo 2l + 1 so that v_{2l+1} is the depot.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..graphkit import constrained_mst, edge_cost
from ..model import Check, MetricInstance, Route, delta


@dataclass(frozen=True)
class LemmaParams:
    t: int
    parity: str
    alpha: float
    alphas: tuple[float, ...]
    betas: tuple[float, ...]
    route_cost: float
    degenerate: bool = False


def lemma7_params(route: Route, inst: MetricInstance, k: int | None = None) -> LemmaParams:
    l = len(route.served)
    v = inst.walk(route.served)[:-1]  # v_0 .. v_2l
    n = 2 * l + 1
    d = inst.dist

    def c(a, b):
        return float(d[v[a % n], v[b % n]])

    total = sum(c(j, j + 1) for j in range(n))
    t = (l + 2) // 2
    parity = "odd" if l % 2 else "even"
    if total == 0:
        return LemmaParams(t, parity, 0.0, (0.0,) * t, (0.0,) * t, 0.0, degenerate=True)

    def connector_pair(i):
        return c(2 * i - 2, 2 * i - 1) + c(2 * l + 2 - 2 * i, 2 * l + 3 - 2 * i)

    def customer_pair(i):
        return c(2 * i - 1, 2 * i) + c(2 * l + 1 - 2 * i, 2 * l + 2 - 2 * i)

    alphas = [connector_pair(i) for i in range(1, t)]
    betas = [customer_pair(i) for i in range(1, t)]
    if parity == "odd":
        alphas.append(connector_pair(t))
        betas.append(c(2 * t - 1, 2 * t))
    else:
        alphas.append(c(2 * t - 2, 2 * t - 1))
        betas.append(0.0)
    alphas = tuple(a / total for a in alphas)
    betas = tuple(b / total for b in betas)
    return LemmaParams(t, parity, sum(alphas), alphas, betas, total)


def route_tree_cost(route: Route, inst: MetricInstance) -> float:
    """Cheapest spanning tree on the route's vertices plus the depot that
    contains the route's customer edges."""
    group = route.customers
    verts = [0] + [x for i in group for x in inst.customers[i]]
    tree = constrained_mst(verts, [inst.customers[i] for i in group], inst.dist)
    return edge_cost(tree, inst.dist)


def lemma7_check(params: LemmaParams, route: Route, inst: MetricInstance,
                 k: int | None = None) -> list[Check]:
    """The four route inequalities at tolerance 1e-9 * c(T); empty when the
    route has zero cost (all four are then vacuous)."""
    if params.degenerate:
        return []
    k = inst.capacity_k if k is None else k
    ct = params.route_cost
    tol = 1e-9 * ct
    a = params.alphas
    weighted = sum((i + 1) * x for i, x in enumerate(a))
    group = route.customers
    return [
        Check("route delta bound", delta(group, inst),
              (k / 2 + params.alpha - weighted) * ct, tol=tol),
        Check("route tree bound", route_tree_cost(route, inst), (1 - max(a) / 2) * ct, tol=tol),
        Check("route customer share", inst.customer_cost(group), (1 - params.alpha) * ct,
              kind="==", tol=tol),
        Check("alpha total", params.alpha, 1.0, tol=1e-9),
        Check("alpha_i nonnegative", -min(a), 0.0, tol=1e-9),
        Check("alpha_i at most alpha", max(a), params.alpha, tol=1e-9),
        Check("alpha+beta partition", sum(a) + sum(params.betas), 1.0, kind="==", tol=1e-9),
    ]
