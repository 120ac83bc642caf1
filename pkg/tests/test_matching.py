import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqcarp.matching import matching_oracle, min_cost_perfect_matching
from eqcarp.model import InputError

from oracles import brute_matching_cost, held_karp, random_band_metric

LINE = np.abs(np.subtract.outer(np.arange(4.0), np.arange(4.0)))


def test_collinear_points():
    mt = min_cost_perfect_matching(range(4), LINE)
    assert mt.cost == 2
    assert set(mt.pairs) == {(0, 1), (2, 3)}
    assert matching_oracle(range(4), LINE).cost == 2


def test_two_points_forced():
    assert min_cost_perfect_matching([2, 3], LINE).pairs == ((2, 3),)
    assert matching_oracle([2, 3], LINE).pairs == ((2, 3),)


def test_zero_metric():
    mt = min_cost_perfect_matching(range(6), np.zeros((6, 6)))
    assert mt.cost == 0 and len(mt.pairs) == 3
    assert sorted(v for p in mt.pairs for v in p) == list(range(6))


def test_odd_set_rejected():
    with pytest.raises(InputError):
        min_cost_perfect_matching(range(3), LINE)
    with pytest.raises(InputError):
        matching_oracle(range(3), LINE)


def test_oracle_size_cap():
    with pytest.raises(InputError):
        matching_oracle(range(14), np.zeros((14, 14)))


def test_accepts_callable_distance():
    mt = min_cost_perfect_matching(range(4), lambda a, b: abs(a - b))
    assert mt.cost == 2


def test_random_eight_points_against_oracle():
    d = random_band_metric(np.random.default_rng(8), 8)
    assert min_cost_perfect_matching(range(8), d).cost == matching_oracle(range(8), d).cost


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2 ** 32 - 1))
def test_blossom_equals_brute_force(half, seed):
    rng = np.random.default_rng(seed)
    n = 2 * half
    d = random_band_metric(rng, n + 2)
    verts = sorted(rng.choice(n + 2, size=n, replace=False).tolist())
    mt = min_cost_perfect_matching(verts, d)
    assert sorted(v for p in mt.pairs for v in p) == verts
    assert mt.cost == sum(d[a, b] for a, b in mt.pairs)
    assert mt.cost == brute_matching_cost(verts, d)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2 ** 32 - 1))
def test_permutation_invariance(half, seed):
    rng = np.random.default_rng(seed)
    d = random_band_metric(rng, 2 * half)
    verts = list(range(2 * half))
    shuffled = rng.permutation(verts).tolist()
    a = min_cost_perfect_matching(verts, d)
    b = min_cost_perfect_matching(shuffled, d)
    assert a.cost == b.cost
    assert a == b  # deterministic output regardless of input order


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2 ** 32 - 1))
def test_matching_at_most_half_tsp(half, seed):
    rng = np.random.default_rng(seed)
    pts = rng.integers(0, 30, size=(2 * half, 2))
    d = np.abs(pts[:, None, :] - pts[None, :, :]).sum(axis=2).astype(float)
    assert min_cost_perfect_matching(range(2 * half), d).cost <= held_karp(d, range(2 * half)) / 2
