"""Reciprocal-membership path distances (lower and upper) on an IVFG."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Union

from .graph import IvfGraph, Vertex, edge_key

INF = math.inf
Distance = Union[Fraction, float]  # float only ever as INF

BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True, order=True)
class DistancePair:
    lower: Distance
    upper: Distance

    def __iter__(self):
        yield self.lower
        yield self.upper

    @property
    def finite(self) -> bool:
        return self.lower != INF

    def __str__(self):
        return "(" + ", ".join("inf" if x == INF else str(x) for x in self) + ")"


ZERO_DISTANCE = DistancePair(Fraction(0), Fraction(0))
NO_PATH = DistancePair(INF, INF)


@dataclass(frozen=True)
class DistanceProfile:
    anchor: Vertex
    entries: tuple[DistancePair, ...]

    def matches(self, other: DistanceProfile) -> bool:
        return self.entries == other.entries


def _dijkstra(g: IvfGraph, source: Vertex, bound: str) -> dict[Vertex, Distance]:
    dist: dict[Vertex, Distance] = {v: INF for v in g.vertices}
    dist[source] = Fraction(0)
    heap = [(Fraction(0), source)]
    done = set()
    while heap:
        d, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        for y in g.neighbors(x):
            nd = d + 1 / getattr(g.edge(x, y), bound)
            if nd < dist[y]:
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return dist


def single_source(g: IvfGraph, source: Vertex) -> dict[Vertex, DistancePair]:
    """Distances from ``source`` to every vertex.

    The lower- and upper-bound distances are separate shortest-path problems
    and may be realised along different paths.
    """
    g.neighbors(source)  # raises on unknown vertex
    lower = _dijkstra(g, source, "lo")
    upper = _dijkstra(g, source, "hi")
    return {v: DistancePair(lower[v], upper[v]) for v in g.vertices}


def distance(g: IvfGraph, u: Vertex, v: Vertex) -> DistancePair:
    g.neighbors(v)
    return single_source(g, u)[v]


def distance_matrix(g: IvfGraph) -> dict[tuple[Vertex, Vertex], DistancePair]:
    matrix = {}
    for u in g.vertices:
        for v, d in single_source(g, u).items():
            matrix[(u, v)] = d
    return matrix


def distance_profile(g: IvfGraph, v: Vertex, row: dict[Vertex, DistancePair] | None = None
                     ) -> DistanceProfile:
    if row is None:
        row = single_source(g, v)
    return DistanceProfile(v, tuple(sorted(row.values())))


@lru_cache(maxsize=256)
def _simple_path_minima(g: IvfGraph, u: Vertex) -> dict[Vertex, tuple[Distance, Distance]]:
    # walks every simple path out of u once, keeping per-endpoint minima
    inv = {k: (1 / b.lo, 1 / b.hi) for k, b in g.edges.items()}
    best: dict[Vertex, tuple[Distance, Distance]] = {v: (INF, INF) for v in g.vertices}
    best[u] = (Fraction(0), Fraction(0))
    stack = [(u, frozenset((u,)), Fraction(0), Fraction(0))]
    while stack:
        x, seen, lo, hi = stack.pop()
        for y in g.neighbors(x):
            if y in seen:
                continue
            wlo, whi = inv[edge_key(x, y)]
            nlo, nhi = lo + wlo, hi + whi
            blo, bhi = best[y]
            best[y] = (min(blo, nlo), min(bhi, nhi))
            stack.append((y, seen | {y}, nlo, nhi))
    return best


def brute_force_distance(g: IvfGraph, u: Vertex, v: Vertex) -> DistancePair:
    """Minimum over an explicit enumeration of all simple ``u``-``v`` paths.

    Independent of :func:`distance`; intended as a test oracle for small graphs.
    """
    if len(g) > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {len(g)}")
    g.neighbors(u)
    g.neighbors(v)
    if u == v:
        return ZERO_DISTANCE
    return DistancePair(*_simple_path_minima(g, u)[v])
