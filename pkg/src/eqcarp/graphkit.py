"""Spanning structures, Euler tours and shortcutting on metric vertex ids."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from networkx.utils import UnionFind

from .matching import as_dist_fn
from .model import ContractViolation, InputError, MetricInstance, RppTour

Edge = tuple[int, int]


def _key(a: int, b: int) -> Edge:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class MultiEdgeSet:
    """Undirected multigraph as a multiset of normalized vertex pairs.

    ``customer`` marks which pairs are customer edges; union adds
    multiplicities.
    """

    edges: Counter = field(default_factory=Counter)
    customer: frozenset = frozenset()

    @classmethod
    def of(cls, edges: Iterable[Edge], customer: bool = False) -> MultiEdgeSet:
        c = Counter(_key(a, b) for a, b in edges)
        return cls(c, frozenset(c) if customer else frozenset())

    def __add__(self, other: MultiEdgeSet) -> MultiEdgeSet:
        return MultiEdgeSet(self.edges + other.edges, self.customer | other.customer)

    def __len__(self):
        return sum(self.edges.values())

    def cost(self, dist) -> float:
        d = as_dist_fn(dist)
        return float(sum(d(a, b) * k for (a, b), k in self.edges.items()))

    def degrees(self) -> Counter:
        deg = Counter()
        for (a, b), k in self.edges.items():
            deg[a] += k
            deg[b] += k
        return deg


def edge_cost(edges: Iterable[Edge], dist) -> float:
    d = as_dist_fn(dist)
    return float(sum(d(a, b) for a, b in edges))


def constrained_mst(vertices: Sequence[int], required: Iterable[Edge], dist) -> list[Edge]:
    """Minimum spanning tree over ``vertices`` forced to contain ``required``.

    Kruskal seeded with the required edges; returns required + added edges.
    """
    d = as_dist_fn(dist)
    vertices = sorted(vertices)
    uf = UnionFind(vertices)
    tree = []
    for a, b in required:
        if uf[a] == uf[b]:
            raise InputError(f"required edges contain a cycle at ({a}, {b})")
        uf.union(a, b)
        tree.append(_key(a, b))
    candidates = sorted(combinations(vertices, 2), key=lambda e: (d(*e), e))
    for a, b in candidates:
        if len(tree) == len(vertices) - 1:
            break
        if uf[a] != uf[b]:
            uf.union(a, b)
            tree.append((a, b))
    return tree


def connect_components(components: Sequence[Iterable[int]], dist) -> list[Edge]:
    """Cheapest edge set joining the given vertex classes into one.

    Each pair of classes contributes only its cheapest vertex pair as a
    candidate; Kruskal then runs over the classes.
    """
    d = as_dist_fn(dist)
    comps = [sorted(c) for c in components]
    if not comps:
        raise InputError("need at least one component")
    candidates = []
    for i, j in combinations(range(len(comps)), 2):
        best = min((d(a, b), _key(a, b)) for a in comps[i] for b in comps[j])
        candidates.append((best[0], best[1], i, j))
    candidates.sort()
    uf = UnionFind(range(len(comps)))
    out = []
    for _, e, i, j in candidates:
        if len(out) == len(comps) - 1:
            break
        if uf[i] != uf[j]:
            uf.union(i, j)
            out.append(e)
    return out


def components_of(vertices: Iterable[int], edges: Iterable[Edge]) -> list[list[int]]:
    uf = UnionFind(vertices)
    for a, b in edges:
        uf.union(a, b)
    return sorted(sorted(s) for s in uf.to_sets())


def euler_tour(graph: MultiEdgeSet, start: int) -> list[int]:
    """Closed walk from ``start`` using every edge exactly its multiplicity.

    Stack-based Hierholzer; at each step the smallest available neighbour is
    taken.
    """
    adj: dict[int, Counter] = {}
    for (a, b), k in graph.edges.items():
        if a == b:
            raise InputError(f"self-loop at {a} not supported")
        adj.setdefault(a, Counter())[b] += k
        adj.setdefault(b, Counter())[a] += k
    for v, nbrs in sorted(adj.items()):
        if sum(nbrs.values()) % 2:
            raise InputError(f"vertex {v} has odd degree")
    if adj and start not in adj:
        raise InputError(f"start vertex {start} is not incident to any edge")

    stack, walk = [start], []
    while stack:
        v = stack[-1]
        nbrs = adj.get(v)
        if nbrs:
            w = min(nbrs)
            for x, y in ((v, w), (w, v)):
                adj[x][y] -= 1
                if not adj[x][y]:
                    del adj[x][y]
            stack.append(w)
        else:
            walk.append(stack.pop())
    walk.reverse()
    left = sorted(v for v, nbrs in adj.items() if nbrs)
    if left:
        raise InputError(f"graph is disconnected: component containing {left[0]} not reached")
    return walk


def walk_edges(walk: Sequence[int]) -> Counter:
    return Counter(_key(a, b) for a, b in zip(walk, walk[1:]))


def walk_cost(walk: Sequence[int], dist) -> float:
    d = as_dist_fn(dist)
    return float(sum(d(a, b) for a, b in zip(walk, walk[1:])))


def shortcut_to_rpp(walk: Sequence[int], inst: MetricInstance) -> RppTour:
    """Keep the first traversal of each customer edge, in walk order, and
    join consecutive kept traversals directly."""
    if not walk or walk[0] != 0 or walk[-1] != 0:
        raise ContractViolation("walk must start and end at the depot")
    pair_of = {}
    for i, (s, t) in enumerate(inst.customers):
        pair_of[s, t] = (i, 0)
        pair_of[t, s] = (i, 1)
    seen = set()
    order = []
    for a, b in zip(walk, walk[1:]):
        x = pair_of.get((a, b))
        if x is not None and x[0] not in seen:
            seen.add(x[0])
            order.append(x)
    if len(seen) != inst.m:
        missing = sorted(set(range(inst.m)) - seen)
        raise ContractViolation(f"customers {missing} never traversed by the walk")
    return RppTour.from_order(order, inst)
