import numpy as np
import pytest
from hypothesis import given, settings

from eqcarp.exact import exact_carp, optimal_group_tour
from eqcarp.model import SizeCapError, check_solution, delta
from eqcarp.rpp import exact_rpp

from oracles import brute_carp, brute_group_tour, l1_instance, metric_instances, random_l1


def test_singleton_group():
    inst = l1_instance([(0, 0), (2, 0), (2, 3)], 1)
    r = optimal_group_tour([0], inst)
    assert r.cost == 10


def test_two_customer_group_enumeration():
    inst = random_l1(np.random.default_rng(21), 2, 2)
    assert optimal_group_tour([0, 1], inst).cost == brute_group_tour(inst, [0, 1])


def test_zero_metric_group():
    inst = l1_instance([(0, 0)] * 5, 2)
    assert optimal_group_tour([0, 1], inst).cost == 0
    assert exact_carp(inst).total_cost == 0


def test_group_size_cap():
    inst = l1_instance([(0, 0)] * 23, 2)
    with pytest.raises(SizeCapError):
        optimal_group_tour(range(11), inst)
    with pytest.raises(SizeCapError):
        optimal_group_tour([], inst)


def test_carp_cap():
    inst = l1_instance([(0, 0)] * 19, 2)
    with pytest.raises(SizeCapError):
        exact_carp(inst)


def test_k1_equals_twice_delta():
    inst = random_l1(np.random.default_rng(22), 5, 1)
    assert exact_carp(inst).total_cost == pytest.approx(2 * delta(None, inst), rel=1e-12)


def test_uncapacitated_bounded_by_rpp():
    inst = random_l1(np.random.default_rng(23), 5, 5)
    assert exact_carp(inst).total_cost <= exact_rpp(inst).cost


def test_m3_k2_against_partitions():
    inst = random_l1(np.random.default_rng(24), 3, 2)
    assert exact_carp(inst).total_cost == brute_carp(inst)


@settings(max_examples=40, deadline=None)
@given(metric_instances(max_m=5, max_k=4))
def test_exact_carp_equals_enumeration(inst):
    opt = exact_carp(inst)
    assert check_solution(opt, inst) == []
    assert opt.total_cost == brute_carp(inst)


@settings(max_examples=30, deadline=None)
@given(metric_instances(max_m=6))
def test_group_tour_matches_enumeration(inst):
    group = list(range(0, inst.m, 2))
    assert optimal_group_tour(group, inst).cost == brute_group_tour(inst, group)
