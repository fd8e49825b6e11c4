"""Irregularity classifiers built on open and closed neighbourhood degrees."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Callable

from .graph import IvfGraph, Vertex, closed_degree, open_degree

DegreeFn = Callable[[IvfGraph, Vertex], object]


@dataclass(frozen=True)
class IrregularityReport:
    irregular: bool = False
    totally_irregular: bool = False
    neighbourly_irregular: bool = False
    neighbourly_totally_irregular: bool = False
    highly_irregular: bool = False
    highly_totally_irregular: bool = False

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)


def _degrees(g: IvfGraph, degree: DegreeFn) -> dict[Vertex, tuple]:
    # compare (mu, nu) only; the closed flag is constant within one call
    return {v: degree(g, v).value for v in g.vertices}


def _some_vertex_sees_distinct(g: IvfGraph, deg: dict) -> bool:
    for x in g.vertices:
        if len({deg[y] for y in g.neighbors(x)}) > 1:
            return True
    return False


def _adjacent_pairs_distinct(g: IvfGraph, deg: dict) -> bool:
    if not g.edges:
        return False
    return all(deg[x] != deg[y] for x, y in g.edges)


def _neighbours_pairwise_distinct(g: IvfGraph, deg: dict) -> bool:
    if not g.edges:
        return False
    for x in g.vertices:
        values = [deg[y] for y in g.neighbors(x)]
        if len(set(values)) != len(values):
            return False
    return True


def is_irregular(g: IvfGraph) -> bool:
    """True iff some vertex has two neighbours whose open degrees differ."""
    return _some_vertex_sees_distinct(g, _degrees(g, open_degree))


def is_totally_irregular(g: IvfGraph) -> bool:
    """True iff some vertex has two neighbours whose closed degrees differ."""
    return _some_vertex_sees_distinct(g, _degrees(g, closed_degree))


def classify(g: IvfGraph) -> IrregularityReport:
    """Evaluate all six irregularity flags.

    The neighbourly variants require every edge to join vertices of distinct
    degree; the highly variants require every vertex's neighbours to have
    pairwise distinct degrees. Graphs without edges report every flag false.
    """
    if len(g) < 2 or not g.edges:
        return IrregularityReport()
    open_deg = _degrees(g, open_degree)
    closed_deg = _degrees(g, closed_degree)
    return IrregularityReport(
        irregular=_some_vertex_sees_distinct(g, open_deg),
        totally_irregular=_some_vertex_sees_distinct(g, closed_deg),
        neighbourly_irregular=_adjacent_pairs_distinct(g, open_deg),
        neighbourly_totally_irregular=_adjacent_pairs_distinct(g, closed_deg),
        highly_irregular=_neighbours_pairwise_distinct(g, open_deg),
        highly_totally_irregular=_neighbours_pairwise_distinct(g, closed_deg),
    )


def distinct_neighbour_witness(g: IvfGraph, closed: bool = False):
    """Return ``(x, y, z)`` with ``y, z`` neighbours of ``x`` of different degree, or None."""
    deg = _degrees(g, closed_degree if closed else open_degree)
    for x in g.vertices:
        for y, z in combinations(sorted(g.neighbors(x)), 2):
            if deg[y] != deg[z]:
                return x, y, z
    return None
