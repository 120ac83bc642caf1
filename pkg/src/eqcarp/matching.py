"""Minimum-cost perfect matching on complete even-size vertex sets."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import networkx as nx
import numpy as np

from .model import InputError

ORACLE_CAP = 12

DistFn = Callable[[int, int], float]


def as_dist_fn(dist) -> DistFn:
    if callable(dist):
        return dist
    arr = np.asarray(dist, dtype=float)
    return lambda a, b: float(arr[a, b])


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    cost: float


def _make(pairs, d: DistFn) -> Matching:
    pairs = tuple(sorted((min(a, b), max(a, b)) for a, b in pairs))
    return Matching(pairs, float(sum(d(a, b) for a, b in pairs)))


def _check_even(vertices: Sequence[int]):
    if len(vertices) % 2:
        raise InputError(f"perfect matching needs an even vertex set, got {len(vertices)}")
    if len(set(vertices)) != len(vertices):
        raise InputError("duplicate vertices")


def min_cost_perfect_matching(vertices: Sequence[int], dist) -> Matching:
    """Exact minimum-cost perfect matching (Edmonds' blossom algorithm).

    ``dist`` is either a callable ``(a, b) -> cost`` or a square array.
    The graph is built in sorted vertex order, so the result does not
    depend on how the input is ordered.
    """
    vertices = sorted(vertices)
    _check_even(vertices)
    d = as_dist_fn(dist)
    if not vertices:
        return Matching((), 0.0)
    if len(vertices) == 2:
        return _make([vertices], d)
    weights = {(a, b): d(a, b) for i, a in enumerate(vertices) for b in vertices[i + 1:]}
    # integral weights keep the blossom duals exact
    if all(float(w).is_integer() for w in weights.values()):
        weights = {e: int(w) for e, w in weights.items()}
    g = nx.Graph()
    g.add_nodes_from(vertices)
    for (a, b), w in weights.items():
        g.add_edge(a, b, weight=w)
    pairs = nx.min_weight_matching(g)
    if 2 * len(pairs) != len(vertices):
        raise RuntimeError("blossom returned a non-perfect matching")
    return _make(pairs, d)


def matching_oracle(vertices: Sequence[int], dist) -> Matching:
    """Exhaustive minimum-cost perfect matching for at most 12 vertices."""
    vertices = list(vertices)
    _check_even(vertices)
    if len(vertices) > ORACLE_CAP:
        raise InputError(f"matching oracle is capped at {ORACLE_CAP} vertices")
    d = as_dist_fn(dist)

    @lru_cache(maxsize=None)
    def best(rest: tuple[int, ...]) -> tuple[float, tuple]:
        if not rest:
            return 0.0, ()
        a = rest[0]
        out = (np.inf, ())
        for j in range(1, len(rest)):
            b = rest[j]
            sub_cost, sub_pairs = best(rest[1:j] + rest[j + 1:])
            cost = d(a, b) + sub_cost
            if cost < out[0]:
                out = (cost, ((a, b),) + sub_pairs)
        return out

    _, pairs = best(tuple(vertices))
    return _make(pairs, d)
