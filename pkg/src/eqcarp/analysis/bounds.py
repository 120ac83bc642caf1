"""Lower bounds on OPT and the full per-instance inequality suite."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..algorithm import solve_metric
from ..exact import CARP_CAP, exact_carp
from ..graphkit import edge_cost, walk_edges
from ..model import Check, MetricInstance, Solution, check_solution, delta
from ..partition import jitp_bound_report
from ..rpp import RPP_CAP, exact_rpp, tree_cost
from .lemma7 import lemma7_check, lemma7_params, route_tree_cost
from .ratio import ratio_closed_form


@dataclass(frozen=True)
class LowerBounds:
    lb_delta: float
    lb_rpp: float | None


def lower_bounds(inst: MetricInstance) -> LowerBounds:
    lb_rpp = exact_rpp(inst).cost if inst.m <= RPP_CAP else None
    return LowerBounds(2 * delta(None, inst) / inst.capacity_k, lb_rpp)


@dataclass
class AnalysisReport:
    values: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    lemma7_routes: dict = field(default_factory=lambda: {"odd": 0, "even": 0, "degenerate": 0})
    problems: list[str] = field(default_factory=list)
    optimum: Solution | None = None
    solution: Solution | None = None

    @property
    def violations(self) -> list[str]:
        return [str(c) for c in self.checks if not c.ok] + self.problems

    @property
    def ok(self) -> bool:
        return not self.violations


def bound_suite(inst: MetricInstance, partition: str = "candidates",
                opt: Solution | None = None) -> AnalysisReport:
    """Evaluate every inequality the instance admits.

    OPT-dependent checks run when m <= 8 (or ``opt`` is given); checks that
    need the optimal RPP tour run when m <= 10.
    """
    k, m = inst.capacity_k, inst.m
    rep = AnalysisReport()
    add = rep.checks.append
    res = solve_metric(inst, partition=partition, rpp="best")
    alg = res.solution
    rep.solution = alg
    h1, h2 = res.h1, res.h2
    dlt = delta(None, inst)
    ce = inst.customer_cost()
    mst = tree_cost(inst)
    v = rep.values
    v.update(m=m, k=k, delta=dlt, customer_cost=ce, mst=mst, h1=h1.tour.cost,
             h2=h2.tour.cost, alg=alg.total_cost, used=res.used)

    # structural
    rep.problems += [f"ALG: {p}" for p in check_solution(alg, inst)]
    for name, b in (("H1", h1), ("H2", h2)):
        if sorted(i for i, _ in b.tour.order) != list(range(m)):
            rep.problems.append(f"{name}: does not serve each customer once")
        if m and walk_edges(b.walk) != b.graph.edges:
            rep.problems.append(f"{name}: Euler walk edges differ from its multigraph")
        add(Check(f"{name} shortcut monotone", b.tour.cost, b.walk_cost))

    # tour partition bound, for the tour actually partitioned
    add(jitp_bound_report(alg, res.tour, inst))

    # H2 construction
    if m:
        cm, cf = h2.matching.cost, edge_cost(h2.connectors, inst.dist)
        add(Check("H2 <= c(E*) + c(M) + 2c(F)", h2.tour.cost, ce + cm + 2 * cf))
        add(Check("c(F) <= MST - c(E*)", cf, mst - ce))
        add(Check("H1 <= c(T*) + c(M*)", h1.tour.cost,
                  edge_cost(h1.tree, inst.dist) + h1.matching.cost))
        v.update(matching=cm, connectors=cf)

    hstar = None
    if m <= RPP_CAP:
        hstar = exact_rpp(inst).cost
        v["h_star"] = hstar
        add(Check("H* <= H1", hstar, h1.tour.cost))
        add(Check("H* <= H2", hstar, h2.tour.cost))
        add(Check("H1 <= MST + H*/2", h1.tour.cost, mst + hstar / 2))

    if opt is None and m <= CARP_CAP:
        opt = exact_carp(inst)
    if opt is None:
        return rep
    rep.optimum = opt
    o = opt.total_cost
    v["opt"] = o
    rep.problems += [f"OPT: {p}" for p in check_solution(opt, inst)]
    add(Check("OPT <= ALG", o, alg.total_cost))
    add(Check("2 delta / k <= OPT", 2 * dlt / k, o))
    if hstar is not None:
        add(Check("H* <= OPT", hstar, o))
    add(Check("H1 <= MST + OPT/2", h1.tour.cost, mst + o / 2))
    add(Check("H2 <= OPT + 2MST - 2c(E*)", h2.tour.cost, o + 2 * mst - 2 * ce))
    add(Check("H1 <= OPT + 2MST - 2c(E*)", h1.tour.cost, o + 2 * mst - 2 * ce))
    if m:
        add(Check("c(E*) + c(M) <= OPT", ce + h2.matching.cost, o))

    # decomposition over optimal routes
    d_sum = sum(delta(r.customers, inst) for r in opt.routes)
    tree_parts = [route_tree_cost(r, inst) for r in opt.routes]
    add(Check("delta == sum of route deltas", dlt, d_sum, kind="=="))
    add(Check("MST <= sum of route trees", mst, sum(tree_parts)))

    # chain from the partition bound down to per-route quantities
    w = (k - 1) / k
    best_tour = min(h1.tour.cost, h2.tour.cost)
    link1 = 2 / k * dlt + w * best_tour
    link2 = 2 / k * dlt + w * min(mst + o / 2, o + 2 * mst - 2 * ce)
    a_sum = sum(t + r.cost / 2 for t, r in zip(tree_parts, opt.routes))
    b_sum = sum(r.cost + 2 * t - 2 * inst.customer_cost(r.customers)
                for t, r in zip(tree_parts, opt.routes))
    link3 = 2 / k * d_sum + w * min(a_sum, b_sum)
    add(Check("ALG <= partition bound on best tour", alg.total_cost, link1))
    add(Check("partition bound <= bound via MST and OPT", link1, link2))
    add(Check("bound via MST and OPT <= bound via route sums", link2, link3))
    v["per_route_chain"] = sum(
        2 / k * delta(r.customers, inst)
        + w * min(t + r.cost / 2, r.cost + 2 * t - 2 * inst.customer_cost(r.customers))
        for t, r in zip(tree_parts, opt.routes))

    for r in opt.routes:
        params = lemma7_params(r, inst, k)
        if params.degenerate:
            rep.lemma7_routes["degenerate"] += 1
            continue
        rep.lemma7_routes[params.parity] += 1
        rep.checks += lemma7_check(params, r, inst, k)

    if k >= 3:
        ratio = ratio_closed_form(k).ratio
        v["ratio"] = ratio
        add(Check("ALG <= ratio(k) * OPT", alg.total_cost, ratio * o))
    return rep
