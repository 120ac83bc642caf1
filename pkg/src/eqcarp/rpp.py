"""The two RPP tours used by the solver, and an exact RPP oracle.

H1 is the spanning-tree + odd-vertex matching construction.  H2 matches all
customer endpoints, joins the resulting components greedily, doubles the
joining edges and shortcuts an Euler tour.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exact import GROUP_CAP, group_table
from .graphkit import (MultiEdgeSet, components_of, connect_components, constrained_mst,
                       edge_cost, euler_tour, shortcut_to_rpp, walk_cost)
from .matching import Matching, min_cost_perfect_matching
from .model import MetricInstance, RppTour, SizeCapError, reverse_order

RPP_CAP = GROUP_CAP


@dataclass(frozen=True)
class TourBuild:
    """A constructed tour plus the intermediate objects its bounds refer to."""

    tour: RppTour
    graph: MultiEdgeSet
    walk: tuple[int, ...]
    walk_cost: float
    tree: tuple = ()        # H1: the constrained spanning tree
    matching: Matching = None
    connectors: tuple = ()  # H2: the greedy component connectors F


def _canonical(tour: RppTour) -> RppTour:
    # first served customer gets the lower index of the two ends
    if tour.order and tour.order[0][0] > tour.order[-1][0]:
        return RppTour(reverse_order(tour.order), tour.cost)
    return tour


def _empty() -> TourBuild:
    return TourBuild(RppTour((), 0.0), MultiEdgeSet(), (0,), 0.0)


def h1_parts(inst: MetricInstance) -> TourBuild:
    if inst.m == 0:
        return _empty()
    d = inst.dist
    tree = constrained_mst(range(inst.n_vertices), inst.customers, d)
    required = {tuple(sorted(c)) for c in inst.customers}
    deg = MultiEdgeSet.of(tree).degrees()
    odd = sorted(v for v in range(inst.n_vertices) if deg[v] % 2)
    matching = min_cost_perfect_matching(odd, d) if odd else Matching((), 0.0)
    graph = (MultiEdgeSet.of(inst.customers, customer=True)
             + MultiEdgeSet.of([e for e in tree if e not in required])
             + MultiEdgeSet.of(matching.pairs))
    walk = euler_tour(graph, 0)
    tour = _canonical(shortcut_to_rpp(walk, inst))
    return TourBuild(tour, graph, tuple(walk), walk_cost(walk, d), tuple(tree), matching)


def h2_parts(inst: MetricInstance) -> TourBuild:
    if inst.m == 0:
        return _empty()
    d = inst.dist
    matching = min_cost_perfect_matching(range(1, inst.n_vertices), d)
    comps = components_of(range(inst.n_vertices), list(matching.pairs) + list(inst.customers))
    f = connect_components(comps, d)
    graph = (MultiEdgeSet.of(matching.pairs) + MultiEdgeSet.of(inst.customers, customer=True)
             + MultiEdgeSet.of(f) + MultiEdgeSet.of(f))
    walk = euler_tour(graph, 0)
    tour = _canonical(shortcut_to_rpp(walk, inst))
    return TourBuild(tour, graph, tuple(walk), walk_cost(walk, d), matching=matching,
                     connectors=tuple(f))


def build_h1(inst: MetricInstance) -> RppTour:
    return h1_parts(inst).tour


def build_h2(inst: MetricInstance) -> RppTour:
    return h2_parts(inst).tour


def exact_rpp(inst: MetricInstance, cap: int = RPP_CAP) -> RppTour:
    """Optimal RPP tour H* by DP over (customer subset, last oriented customer)."""
    if inst.m > cap:
        raise SizeCapError(f"exact RPP is capped at m = {cap}, got m = {inst.m}")
    if inst.m == 0:
        return RppTour((), 0.0)
    table = group_table(inst, range(inst.m))
    route = table.route((1 << inst.m) - 1)
    return _canonical(RppTour(route.served, route.cost))


def tree_cost(inst: MetricInstance) -> float:
    """MST: cheapest spanning tree of all vertices containing every customer edge."""
    return edge_cost(constrained_mst(range(inst.n_vertices), inst.customers, inst.dist), inst.dist)
