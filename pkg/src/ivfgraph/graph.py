"""Interval-valued fuzzy graphs: construction, validation and basic metrics."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from .interval import ZERO, IntervalError, IntervalNumber, Number, rmin, to_rational

Vertex = str
Edge = tuple[Vertex, Vertex]


class GraphValidationError(ValueError):
    """Raised when vertex/edge data violates the IVFG axioms.

    ``problems`` holds one human-readable diagnostic per violation.
    """

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class ComplementError(ValueError):
    """Raised when the complement of a graph is not itself an IVFG."""

    def __init__(self, pairs: dict[Edge, tuple[Fraction, Fraction]]):
        self.pairs = dict(pairs)
        shown = ", ".join(f"{x}{y}=[{lo}, {hi}]" for (x, y), (lo, hi) in sorted(pairs.items()))
        super().__init__(f"complement is not an interval-valued fuzzy graph at {shown}")


def edge_key(x: Vertex, y: Vertex) -> Edge:
    return (x, y) if x <= y else (y, x)


def _as_interval(value) -> IntervalNumber:
    if isinstance(value, IntervalNumber):
        return value
    lo, hi = value
    return IntervalNumber(lo, hi)


class IvfGraph:
    """An immutable interval-valued fuzzy graph.

    Vertices are strings kept in lexicographic order. Edges are keyed by
    canonical unordered pairs ``(a, b)`` with ``a < b``. Equality compares
    vertices, memberships and edges; ``name`` is informational only.

    Use :func:`build_graph` to construct one; the constructor assumes the
    data has already been validated.
    """

    __slots__ = ("name", "_vertices", "_adjacency", "_vertex_membership", "_edges")

    def __init__(self, vertex_membership: Mapping[Vertex, IntervalNumber],
                 edges: Mapping[Edge, IntervalNumber], name: str = "g"):
        self.name = name
        self._vertices = tuple(sorted(vertex_membership))
        self._vertex_membership = MappingProxyType(
            {v: vertex_membership[v] for v in self._vertices})
        self._edges = MappingProxyType({k: edges[k] for k in sorted(edges)})
        adjacency: dict[Vertex, set[Vertex]] = {v: set() for v in self._vertices}
        for x, y in self._edges:
            adjacency[x].add(y)
            adjacency[y].add(x)
        self._adjacency = {v: frozenset(n) for v, n in adjacency.items()}

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def vertex_membership(self) -> Mapping[Vertex, IntervalNumber]:
        return self._vertex_membership

    @property
    def edges(self) -> Mapping[Edge, IntervalNumber]:
        return self._edges

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._vertex_membership

    def membership(self, v: Vertex) -> IntervalNumber:
        self._require(v)
        return self._vertex_membership[v]

    def edge(self, x: Vertex, y: Vertex) -> IntervalNumber:
        """Edge membership of ``xy``; ``[0, 0]`` when ``x`` and ``y`` are not adjacent."""
        return self._edges.get(edge_key(x, y), ZERO)

    def adjacent(self, x: Vertex, y: Vertex) -> bool:
        return edge_key(x, y) in self._edges

    def neighbors(self, x: Vertex) -> frozenset[Vertex]:
        self._require(x)
        return self._adjacency[x]

    def _require(self, v):
        if v not in self._vertex_membership:
            raise KeyError(f"unknown vertex {v!r}")

    def __eq__(self, other):
        if not isinstance(other, IvfGraph):
            return NotImplemented
        return (self._vertex_membership == other._vertex_membership
                and self._edges == other._edges)

    def __hash__(self):
        return hash((tuple(self._vertex_membership.items()), tuple(self._edges.items())))

    def __repr__(self):
        return f"IvfGraph({self.name!r}, |V|={len(self._vertices)}, |E|={len(self._edges)})"


def build_graph(vertex_list: Iterable, edge_list: Iterable = (), name: str = "g") -> IvfGraph:
    """Validate vertex/edge data and return an :class:`IvfGraph`.

    ``vertex_list`` holds ``(id, membership)`` pairs and ``edge_list`` holds
    ``(id1, id2, membership)`` triples, where a membership is an
    :class:`IntervalNumber` or a ``(lo, hi)`` pair. Every violation found is
    reported at once in a :class:`GraphValidationError`.
    """
    problems: list[str] = []
    vertices: dict[Vertex, IntervalNumber] = {}
    for vid, value in vertex_list:
        if not isinstance(vid, str) or not vid:
            problems.append(f"vertex id {vid!r} must be a non-empty string")
            continue
        if vid in vertices:
            problems.append(f"duplicate vertex {vid}")
            continue
        try:
            vertices[vid] = _as_interval(value)
        except (IntervalError, TypeError, ValueError) as exc:
            problems.append(f"vertex {vid}: {exc}")

    edges: dict[Edge, IntervalNumber] = {}
    for x, y, value in edge_list:
        label = f"edge {x}{y}"
        bad = False
        for end in (x, y):
            if end not in vertices:
                problems.append(f"{label}: unknown endpoint {end}")
                bad = True
        if x == y:
            problems.append(f"{label}: self-loop on {x}")
            bad = True
        try:
            mu = _as_interval(value)
        except (IntervalError, TypeError, ValueError) as exc:
            problems.append(f"{label}: {exc}")
            continue
        if bad:
            continue
        key = edge_key(x, y)
        if key in edges:
            problems.append(f"{label}: duplicate edge")
            continue
        if mu.lo <= 0 or mu.hi <= 0:
            problems.append(f"{label}: edge membership {mu!r} must be positive in both bounds")
        bound = rmin(vertices[x], vertices[y])
        if mu.lo > bound.lo:
            problems.append(f"{label}: mu- = {mu.lo} exceeds min(mu-({x}), mu-({y})) = {bound.lo}")
        if mu.hi > bound.hi:
            problems.append(f"{label}: mu+ = {mu.hi} exceeds min(mu+({x}), mu+({y})) = {bound.hi}")
        edges[key] = mu

    if problems:
        raise GraphValidationError(problems)
    return IvfGraph(vertices, edges, name=name)


def validate(g: IvfGraph) -> IvfGraph:
    """Re-run the full axiom check on an existing graph."""
    return build_graph(g.vertex_membership.items(),
                       [(x, y, mu) for (x, y), mu in g.edges.items()], name=g.name)


def order(g: IvfGraph) -> Fraction:
    return sum(((1 + a.lo + a.hi) / 2 for a in g.vertex_membership.values()), Fraction(0))


def size(g: IvfGraph) -> Fraction:
    return sum(((1 + b.lo + b.hi) / 2 for b in g.edges.values()), Fraction(0))


def neighbors(g: IvfGraph, x: Vertex) -> frozenset[Vertex]:
    return g.neighbors(x)


@dataclass(frozen=True)
class DegreePair:
    mu: Fraction
    nu: Fraction
    closed: bool = False

    def __iter__(self):
        yield self.mu
        yield self.nu

    @property
    def value(self) -> tuple[Fraction, Fraction]:
        return (self.mu, self.nu)


def open_degree(g: IvfGraph, x: Vertex) -> DegreePair:
    mu = nu = Fraction(0)
    for y in g.neighbors(x):
        a = g.vertex_membership[y]
        mu += a.lo
        nu += a.hi
    return DegreePair(mu, nu, closed=False)


def closed_degree(g: IvfGraph, x: Vertex) -> DegreePair:
    d = open_degree(g, x)
    a = g.vertex_membership[x]
    return DegreePair(d.mu + a.lo, d.nu + a.hi, closed=True)


def complement(g: IvfGraph) -> IvfGraph:
    """Per-bound complement: ``min(endpoint memberships) - edge membership``.

    Pairs whose result is ``[0, 0]`` are dropped. If some pair yields a
    result that is not a valid edge membership (lower bound above upper, or
    a zero bound next to a positive one) a :class:`ComplementError` lists
    all such pairs.
    """
    verts = g.vertices
    new_edges: dict[Edge, IntervalNumber] = {}
    bad: dict[Edge, tuple[Fraction, Fraction]] = {}
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            bound = rmin(g.vertex_membership[x], g.vertex_membership[y])
            mu = g.edge(x, y)
            lo, hi = bound.lo - mu.lo, bound.hi - mu.hi
            if lo == 0 and hi == 0:
                continue
            if lo > hi or lo == 0:
                bad[(x, y)] = (lo, hi)
                continue
            new_edges[(x, y)] = IntervalNumber(lo, hi)
    if bad:
        raise ComplementError(bad)
    return IvfGraph(g.vertex_membership, new_edges, name=f"{g.name}_complement")


def permute(g: IvfGraph, mapping: Mapping[Vertex, Vertex]) -> IvfGraph:
    """Relabel ``g`` through the bijection ``mapping``."""
    if set(mapping) != set(g.vertices):
        raise ValueError("mapping must be defined on exactly the vertices of the graph")
    images = [mapping[v] for v in g.vertices]
    if len(set(images)) != len(images):
        raise ValueError("mapping is not injective")
    for img in images:
        if not isinstance(img, str) or not img:
            raise ValueError(f"image {img!r} is not a valid vertex id")
    vm = {mapping[v]: a for v, a in g.vertex_membership.items()}
    em = {edge_key(mapping[x], mapping[y]): b for (x, y), b in g.edges.items()}
    return IvfGraph(vm, em, name=g.name)


def vertex_ids(n: int) -> list[str]:
    """``n`` ids whose lexicographic order matches their numeric order."""
    width = len(str(max(n - 1, 0)))
    return [f"v{i:0{width}d}" for i in range(n)]


def random_graph(n: int, density: Number, grid: int, seed: int) -> IvfGraph:
    """Seeded random IVFG with memberships on the grid ``{1/grid, ..., 1}``.

    Every pair becomes an edge with probability ``density``; edge bounds are
    drawn positive and no larger than the endpoint minimum, so the result is
    always valid.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if grid < 1:
        raise ValueError("grid must be at least 1")
    p = to_rational(density)
    if not 0 <= p <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    ids = vertex_ids(n)
    vm: dict[Vertex, IntervalNumber] = {}
    for v in ids:
        a, b = sorted((rng.randint(1, grid), rng.randint(1, grid)))
        vm[v] = IntervalNumber(Fraction(a, grid), Fraction(b, grid))
    em: dict[Edge, IntervalNumber] = {}
    for i, x in enumerate(ids):
        for y in ids[i + 1:]:
            if rng.random() >= p:
                continue
            bound = rmin(vm[x], vm[y])
            top_lo, top_hi = int(bound.lo * grid), int(bound.hi * grid)
            lo = rng.randint(1, top_lo)
            hi = rng.randint(lo, top_hi)
            em[(x, y)] = IntervalNumber(Fraction(lo, grid), Fraction(hi, grid))
    return IvfGraph(vm, em, name=f"random_{n}_{seed}")
