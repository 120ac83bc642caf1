"""Ratio bound functions and the closed-form approximation ratio.

For a fixed integer l, min(tau, eta) over alpha in [0, 1] is the lower
envelope of two lines crossing at alpha = l / (4l - 1); the closed form
picks the best l.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..model import InputError


def _check_domain(alpha, l, k):
    if k < 3:
        raise InputError(f"ratio analysis needs k >= 3, got {k}")
    if int(l) != l or l < 1:
        raise InputError(f"l must be a positive integer, got {l}")
    if not 0 <= alpha <= 1:
        raise InputError(f"alpha must lie in [0, 1], got {alpha}")


def _tau(alpha, l, k):
    return (5 * k - 3) / (2 * k) - (2 * l * l - 2 * l + k - 1) * alpha / (2 * k * l)


def _eta(alpha, l, k):
    return (2 * k - 1) / k - (l * l + l - 2 * k * l + k - 1) * alpha / (k * l)


def tau(alpha: float, l: int, k: int) -> float:
    """Bound obtained when partitioning the tree-plus-matching tour."""
    _check_domain(alpha, l, k)
    return _tau(alpha, l, k)


def eta(alpha: float, l: int, k: int) -> float:
    """Bound obtained when partitioning the doubled-connector tour."""
    _check_domain(alpha, l, k)
    return _eta(alpha, l, k)


def crossing_alpha(l: int) -> float:
    return l / (4 * l - 1)


def best_l(k: int) -> int:
    """ceil((sqrt(8k - 7) - 1) / 4), computed in exact integer arithmetic."""
    l = 1
    while (4 * l + 1) ** 2 < 8 * k - 7:
        l += 1
    return l


@dataclass(frozen=True)
class RatioPoint:
    k: int
    l_tilde: int
    ratio: float


def ratio_closed_form(k: int) -> RatioPoint:
    if k < 3:
        raise InputError(f"closed-form ratio needs k >= 3, got {k}")
    l = best_l(k)
    r = 2.5 - (2 * l * l + 10 * l + k - 4) / (2 * k * (4 * l - 1))
    alt = (2 * k - 1) / k - (l * l + l - 2 * k * l + k - 1) / (k * (4 * l - 1))
    if abs(r - alt) > 1e-12:
        raise ArithmeticError(f"closed forms disagree at k={k}: {r} vs {alt}")
    return RatioPoint(k, l, r)


def jansen_ratio(k: int) -> float:
    """Earlier 5/2 - 1.5/k guarantee, for comparison tables."""
    return 2.5 - 1.5 / k


def ratio_grid_search(k: int, l_max: int | None = None, alpha_steps: int = 10 ** 5) -> float:
    """Max over l in [1, l_max] and an alpha grid of min(tau, eta).

    The crossing point of each l and the endpoints 0, 1 are always included.
    """
    if k < 3:
        raise InputError(f"ratio analysis needs k >= 3, got {k}")
    if l_max is None:
        l_max = math.ceil(4 * math.sqrt(k))
    if l_max < 2 * math.sqrt(k):
        raise InputError("l_max must be at least 2 sqrt(k)")
    if alpha_steps < 10 ** 4:
        raise InputError("alpha_steps must be at least 10^4")
    grid = np.linspace(0.0, 1.0, alpha_steps + 1)
    best = -np.inf
    for l in range(1, l_max + 1):
        alphas = np.append(grid, crossing_alpha(l))
        vals = np.minimum(_tau(alphas, l, k), _eta(alphas, l, k))
        best = max(best, float(vals.max()))
    return best


def crossing_profile(k: int, l_max: int) -> np.ndarray:
    """eta at the tau/eta crossing, for l = 1..l_max."""
    ls = np.arange(1, l_max + 1, dtype=float)
    return _eta(ls / (4 * ls - 1), ls, k)
