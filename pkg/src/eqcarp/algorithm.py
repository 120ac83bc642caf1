"""End-to-end solver: build RPP tours, keep the cheaper, partition it."""
from __future__ import annotations

from dataclasses import dataclass

from .model import InputError, MetricInstance, RppTour, Solution
from .partition import PARTITIONERS
from .rpp import TourBuild, h1_parts, h2_parts


@dataclass(frozen=True)
class SolveResult:
    solution: Solution
    tour: RppTour
    used: str
    h1: TourBuild | None
    h2: TourBuild | None


def solve_metric(inst: MetricInstance, partition: str = "candidates",
                 rpp: str = "best") -> SolveResult:
    if partition not in PARTITIONERS:
        raise InputError(f"unknown partition scheme {partition!r}")
    if rpp not in ("h1", "h2", "best"):
        raise InputError(f"unknown tour choice {rpp!r}")
    h1 = h1_parts(inst) if rpp in ("h1", "best") else None
    h2 = h2_parts(inst) if rpp in ("h2", "best") else None
    # ties go to H1
    if h2 is None or (h1 is not None and h1.tour.cost <= h2.tour.cost):
        used, tour = "h1", h1.tour
    else:
        used, tour = "h2", h2.tour
    sol = PARTITIONERS[partition](tour, inst)
    return SolveResult(sol, tour, used, h1, h2)
