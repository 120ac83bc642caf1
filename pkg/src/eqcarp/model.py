"""Core types for equal-demand CARP: instances, tours, routes and solutions.

A metric instance has the depot at vertex 0 and ``m`` vertex-disjoint
customer edges.  Customers are addressed by index, and every served
customer carries an explicit orientation: ``FORWARD`` walks ``s -> t``,
``REVERSED`` walks ``t -> s``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

FORWARD = 0
REVERSED = 1

REL_TOL = 1e-9

# (customer index, orientation)
Served = tuple[int, int]


class InputError(ValueError):
    """Malformed or out-of-domain input."""


class InfeasibleInstance(InputError):
    """Some customer cannot be reached from the depot."""


class SizeCapError(InputError):
    """An exact routine was asked to solve an instance above its size cap."""


class ContractViolation(RuntimeError):
    """An internal precondition between pipeline stages was broken."""


def close(a: float, b: float, rel: float = REL_TOL) -> bool:
    return abs(a - b) <= rel * max(1.0, abs(a), abs(b))


def leq(a: float, b: float, rel: float = REL_TOL) -> bool:
    return a <= b + rel * max(1.0, abs(a), abs(b))


class RawEdge(NamedTuple):
    u: int
    v: int
    cost: float
    demand: int


@dataclass(frozen=True)
class RawInstance:
    """User-facing graph: arbitrary connected, possibly non-metric."""

    vertex_count: int
    edges: tuple[RawEdge, ...]
    depot: int
    capacity_k: int

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(RawEdge(*e) for e in self.edges))
        if self.vertex_count < 1:
            raise InputError("vertex_count must be positive")
        if self.capacity_k < 1:
            raise InputError("capacity must be >= 1")
        if not 0 <= self.depot < self.vertex_count:
            raise InputError(f"depot {self.depot} out of range")
        for idx, (u, v, cost, demand) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InputError(f"edge {idx}: vertex id out of range")
            if cost < 0 or not np.isfinite(cost):
                raise InputError(f"edge {idx}: cost must be a nonnegative number")
            if demand not in (0, 1):
                raise InputError(f"edge {idx}: demand must be 0 or 1 (equal-demand scope)")
            if u == v and demand == 1:
                raise InputError(f"edge {idx}: self-loop cannot carry demand")

    @property
    def customer_edges(self) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.demand == 1]


@dataclass(frozen=True, eq=False)
class MetricInstance:
    """Normalized instance: depot 0 plus ``m`` vertex-disjoint customer pairs.

    ``dist`` is a symmetric ``(2m+1) x (2m+1)`` array satisfying the triangle
    inequality up to ``1e-9`` times its largest entry.
    """

    dist: np.ndarray
    capacity_k: int
    customers: tuple[tuple[int, int], ...] = None

    def __post_init__(self):
        d = np.array(self.dist, dtype=float)
        n = d.shape[0]
        if d.ndim != 2 or d.shape[1] != n or n % 2 != 1:
            raise InputError("dist must be a square matrix of odd size 2m+1")
        customers = self.customers
        if customers is None:
            customers = tuple((1 + 2 * i, 2 + 2 * i) for i in range(n // 2))
        customers = tuple((int(s), int(t)) for s, t in customers)
        seen = sorted(x for pair in customers for x in pair)
        if seen != list(range(1, n)):
            raise InputError("customer pairs must partition the non-depot vertices")
        if self.capacity_k < 1:
            raise InputError("capacity must be >= 1")
        if np.any(d < 0) or not np.all(np.isfinite(d)):
            raise InputError("distances must be finite and nonnegative")
        if np.any(np.diag(d) != 0):
            raise InputError("dist(a, a) must be 0")
        if not np.array_equal(d, d.T):
            raise InputError("dist must be symmetric")
        tol = REL_TOL * max(1.0, float(d.max(initial=0.0)))
        if n > 1:
            via = (d[:, :, None] + d[None, :, :]).min(axis=1)
            if np.any(d > via + tol):
                raise InputError("dist violates the triangle inequality")
        d.setflags(write=False)
        object.__setattr__(self, "dist", d)
        object.__setattr__(self, "customers", customers)

    @property
    def m(self) -> int:
        return len(self.customers)

    @property
    def n_vertices(self) -> int:
        return self.dist.shape[0]

    def endpoints(self, served: Served) -> tuple[int, int]:
        i, o = served
        if not 0 <= i < self.m:
            raise InputError(f"invalid customer index {i}")
        if o not in (FORWARD, REVERSED):
            raise InputError(f"invalid orientation {o}")
        s, t = self.customers[i]
        return (s, t) if o == FORWARD else (t, s)

    def walk(self, served: Sequence[Served]) -> list[int]:
        """Vertex walk v0, a1, b1, ..., al, bl, v0 for an oriented customer list."""
        out = [0]
        for x in served:
            out.extend(self.endpoints(x))
        out.append(0)
        return out

    def walk_cost(self, served: Sequence[Served]) -> float:
        w = self.walk(served)
        return float(sum(self.dist[a, b] for a, b in zip(w, w[1:])))

    def customer_cost(self, group: Iterable[int] | None = None) -> float:
        """c(E') for a set of customer indices (all customers by default)."""
        idx = range(self.m) if group is None else group
        return float(sum(self.dist[self.customers[i]] for i in idx))


def reverse_order(order: Sequence[Served]) -> tuple[Served, ...]:
    return tuple((i, 1 - o) for i, o in reversed(order))


@dataclass(frozen=True)
class RppTour:
    """Closed walk from the depot serving every customer once, alternating
    customer edges and connectors."""

    order: tuple[Served, ...]
    cost: float

    @classmethod
    def from_order(cls, order: Sequence[Served], inst: MetricInstance) -> RppTour:
        order = tuple((int(i), int(o)) for i, o in order)
        if sorted(i for i, _ in order) != list(range(inst.m)):
            raise ContractViolation("RPP tour must serve every customer exactly once")
        return cls(order, inst.walk_cost(order))

    def walk(self, inst: MetricInstance) -> list[int]:
        return inst.walk(self.order)


@dataclass(frozen=True)
class Route:
    served: tuple[Served, ...]
    cost: float

    @classmethod
    def from_served(cls, served: Sequence[Served], inst: MetricInstance) -> Route:
        served = tuple((int(i), int(o)) for i, o in served)
        return cls(served, route_cost(served, inst))

    @property
    def customers(self) -> list[int]:
        return [i for i, _ in self.served]


@dataclass(frozen=True)
class Solution:
    routes: tuple[Route, ...]
    total_cost: float = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "routes", tuple(self.routes))
        if self.total_cost is None:
            object.__setattr__(self, "total_cost", float(sum(r.cost for r in self.routes)))


def route_cost(route: Route | Sequence[Served], inst: MetricInstance) -> float:
    """Cost of the closed walk depot -> served customers (in order) -> depot."""
    served = route.served if isinstance(route, Route) else route
    if len(served) == 0:
        raise InputError("a route must serve at least one customer")
    return inst.walk_cost(served)


def check_solution(sol: Solution, inst: MetricInstance) -> list[str]:
    """Return a list of violations; empty iff ``sol`` is feasible and consistent."""
    problems = []
    counts = [0] * inst.m
    for r, route in enumerate(sol.routes):
        if len(route.served) == 0:
            problems.append(f"route {r}: empty")
            continue
        if len(route.served) > inst.capacity_k:
            problems.append(
                f"route {r}: capacity violation ({len(route.served)} > {inst.capacity_k})")
        bad = [i for i, o in route.served if not 0 <= i < inst.m or o not in (0, 1)]
        if bad:
            problems.append(f"route {r}: invalid customers {bad}")
            continue
        for i, _ in route.served:
            counts[i] += 1
        recomputed = route_cost(route, inst)
        if not close(recomputed, route.cost):
            problems.append(f"route {r}: stored cost {route.cost} != recomputed {recomputed}")
    uncovered = {i for i, c in enumerate(counts) if c == 0}
    if uncovered:
        problems.append(f"uncovered: {uncovered}")
    repeated = {i for i, c in enumerate(counts) if c > 1}
    if repeated:
        problems.append(f"served more than once: {repeated}")
    total = sum(r.cost for r in sol.routes)
    if not close(total, sol.total_cost):
        problems.append(f"total cost {sol.total_cost} != sum of route costs {total}")
    return problems


def delta(group: Iterable[int] | None, inst: MetricInstance) -> float:
    """Half the summed depot-triangle costs c(v0,s) + c(s,t) + c(t,v0) over a
    customer set (all customers when ``group`` is None)."""
    d = inst.dist
    idx = range(inst.m) if group is None else group
    total = 0.0
    for i in idx:
        s, t = inst.customers[i]
        total += d[0, s] + d[s, t] + d[t, 0]
    return float(total / 2)


@dataclass(frozen=True)
class Check:
    """One inequality ``lhs <= rhs`` (or equality) evaluated numerically."""

    name: str
    lhs: float
    rhs: float
    kind: str = "<="
    tol: float | None = None  # absolute; relative 1e-9 when unset

    @property
    def ok(self) -> bool:
        if self.tol is not None:
            gap = self.lhs - self.rhs
            return abs(gap) <= self.tol if self.kind == "==" else gap <= self.tol
        if self.kind == "==":
            return close(self.lhs, self.rhs)
        return leq(self.lhs, self.rhs)

    def __str__(self):
        flag = "ok" if self.ok else "VIOLATED"
        return f"{self.name}: {self.lhs:.9g} {self.kind} {self.rhs:.9g} [{flag}]"
