import numpy as np
import pytest
from hypothesis import given

from eqcarp.exact import exact_carp
from eqcarp.model import (InputError, MetricInstance, RawInstance, Route, Solution,
                          check_solution, reverse_order, route_cost)

from oracles import metric_instances, random_l1

# depot-s 3, s-t 4, t-depot 5
TRIANGLE = np.array([[0, 3, 5], [3, 0, 4], [5, 4, 0]], dtype=float)


def test_route_cost_hand_evaluated():
    inst = MetricInstance(TRIANGLE, 1)
    assert route_cost(((0, 0),), inst) == 12
    assert route_cost(((0, 1),), inst) == 12


def test_route_cost_rejects_empty_route():
    with pytest.raises(InputError):
        route_cost((), MetricInstance(TRIANGLE, 1))


def test_route_cost_invalid_index():
    with pytest.raises(InputError):
        route_cost(((3, 0),), MetricInstance(TRIANGLE, 1))


def test_zero_metric_route_costs_nothing():
    inst = MetricInstance(np.zeros((7, 7)), 3)
    assert route_cost(((0, 0), (2, 1), (1, 0)), inst) == 0


@pytest.mark.parametrize("bad", [
    np.array([[0, 1, 5], [1, 0, 1], [5, 1, 0]], dtype=float),   # 5 > 1 + 1
    np.array([[0, 1, 2], [1, 0, 1], [2, 3, 0]], dtype=float),   # asymmetric
    np.array([[1, 1, 1], [1, 0, 1], [1, 1, 0]], dtype=float),   # nonzero diagonal
    np.zeros((4, 4)),                                            # even size
])
def test_metric_instance_validation(bad):
    with pytest.raises(InputError):
        MetricInstance(bad, 1)


def test_raw_instance_validation():
    with pytest.raises(InputError, match="equal-demand"):
        RawInstance(2, [(0, 1, 1, 2)], 0, 1)
    with pytest.raises(InputError, match="self-loop"):
        RawInstance(2, [(1, 1, 1, 1)], 0, 1)
    with pytest.raises(InputError):
        RawInstance(2, [(0, 1, -1, 0)], 0, 1)
    with pytest.raises(InputError):
        RawInstance(2, [(0, 1, 1, 0)], 0, 0)


def test_check_solution_reports_uncovered_customer():
    inst = random_l1(np.random.default_rng(1), 4, 2)
    routes = [Route.from_served(((0, 0), (1, 0)), inst), Route.from_served(((2, 0),), inst)]
    assert "uncovered: {3}" in check_solution(Solution(routes), inst)


def test_check_solution_reports_capacity():
    inst = random_l1(np.random.default_rng(2), 3, 2)
    sol = Solution([Route.from_served(((0, 0), (1, 0), (2, 1)), inst)])
    problems = check_solution(sol, inst)
    assert any("capacity" in p for p in problems)


def test_check_solution_reports_stale_costs():
    inst = random_l1(np.random.default_rng(3), 2, 2)
    route = Route.from_served(((0, 0), (1, 0)), inst)
    stale = Solution([Route(route.served, route.cost + 1)])
    assert any("recomputed" in p for p in check_solution(stale, inst))
    assert any("total cost" in p for p in check_solution(Solution([route], route.cost + 5), inst))


def test_check_solution_reports_duplicates():
    inst = random_l1(np.random.default_rng(4), 2, 2)
    sol = Solution([Route.from_served(((0, 0), (1, 0)), inst), Route.from_served(((1, 1),), inst)])
    assert any("more than once" in p for p in check_solution(sol, inst))


def test_exact_solution_is_feasible():
    inst = random_l1(np.random.default_rng(5), 3, 2)
    assert check_solution(exact_carp(inst), inst) == []


@given(metric_instances(max_m=5))
def test_route_cost_reversal_symmetry(inst):
    served = tuple((i, i % 2) for i in range(inst.m))
    assert route_cost(served, inst) == route_cost(reverse_order(served), inst)


@given(metric_instances(max_m=5))
def test_total_is_sum_of_routes_exactly(inst):
    routes = [Route.from_served(((i, 0),), inst) for i in range(inst.m)]
    sol = Solution(routes)
    assert sol.total_cost == sum(route_cost(r, inst) for r in routes)
