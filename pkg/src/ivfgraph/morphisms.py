"""Isomorphism-type searches and isometry between interval-valued fuzzy graphs."""

from __future__ import annotations

import enum
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Optional

from .graph import ComplementError, IvfGraph, Vertex, complement, permute, random_graph
from .interval import IntervalNumber
from .metric import DistancePair, distance_profile, single_source

Mapping_ = dict[Vertex, Vertex]


class MorphismMode(enum.Enum):
    ISOMORPHISM = "iso"
    WEAK = "weak"
    COWEAK = "coweak"

    @classmethod
    def parse(cls, value) -> MorphismMode:
        if isinstance(value, cls):
            return value
        aliases = {"iso": cls.ISOMORPHISM, "isomorphism": cls.ISOMORPHISM,
                   "weak": cls.WEAK, "coweak": cls.COWEAK, "co-weak": cls.COWEAK}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown morphism mode {value!r}") from None


# (vertex rule, edge rule) per mode; each rule takes (G1 value, G2 value).
def _eq(a: IntervalNumber, b: IntervalNumber) -> bool:
    return a == b


def _le(a: IntervalNumber, b: IntervalNumber) -> bool:
    return a <= b


_RULES: dict[MorphismMode, tuple[Callable, Callable]] = {
    MorphismMode.ISOMORPHISM: (_eq, _eq),
    MorphismMode.WEAK: (_eq, _le),
    MorphismMode.COWEAK: (_le, _eq),
}


def is_morphism(g1: IvfGraph, g2: IvfGraph, mapping: Mapping_, mode) -> bool:
    """Check a complete candidate bijection directly against the mode's conditions."""
    mode = MorphismMode.parse(mode)
    vertex_ok, edge_ok = _RULES[mode]
    if len(g1) != len(g2) or set(mapping) != set(g1.vertices):
        return False
    if set(mapping.values()) != set(g2.vertices):
        return False
    for x in g1.vertices:
        if not vertex_ok(g1.vertex_membership[x], g2.vertex_membership[mapping[x]]):
            return False
    verts = g1.vertices
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            if not edge_ok(g1.edge(x, y), g2.edge(mapping[x], mapping[y])):
                return False
    return True


def _prechecks(g1: IvfGraph, g2: IvfGraph, mode: MorphismMode) -> bool:
    if len(g1) != len(g2):
        return False
    if mode is MorphismMode.WEAK:
        if Counter(g1.vertex_membership.values()) != Counter(g2.vertex_membership.values()):
            return False
        return len(g1.edges) <= len(g2.edges)
    if Counter(g1.edges.values()) != Counter(g2.edges.values()):
        return False
    if mode is MorphismMode.ISOMORPHISM:
        return Counter(g1.vertex_membership.values()) == Counter(g2.vertex_membership.values())
    return True


def _search_order(g: IvfGraph) -> list[Vertex]:
    # connected-first ordering so each new vertex is constrained by mapped neighbours
    remaining = set(g.vertices)
    order: list[Vertex] = []
    while remaining:
        start = max(sorted(remaining), key=lambda v: len(g.neighbors(v)))
        frontier = [start]
        remaining.discard(start)
        while frontier:
            order.extend(frontier)
            nxt = sorted({y for x in frontier for y in g.neighbors(x) if y in remaining},
                         key=lambda v: (-len(g.neighbors(v)), v))
            remaining.difference_update(nxt)
            frontier = nxt
    return order


def find_morphism(g1: IvfGraph, g2: IvfGraph, mode="iso") -> Optional[Mapping_]:
    """Exhaustive backtracking search for a bijection ``V1 -> V2`` of the given kind.

    ``iso`` preserves vertex and edge memberships exactly; ``weak`` preserves
    vertex memberships and lets edge memberships grow; ``coweak`` preserves
    edge memberships (and thus the edge set) and lets vertex memberships
    grow. Returns the mapping, or None when no such bijection exists.
    """
    mode = MorphismMode.parse(mode)
    if not _prechecks(g1, g2, mode):
        return None
    vertex_ok, edge_ok = _RULES[mode]
    exact_degree = mode is not MorphismMode.WEAK
    deg1 = {v: len(g1.neighbors(v)) for v in g1.vertices}
    deg2 = {v: len(g2.neighbors(v)) for v in g2.vertices}

    candidates: dict[Vertex, list[Vertex]] = {}
    for x in g1.vertices:
        a = g1.vertex_membership[x]
        cands = [y for y in g2.vertices
                 if vertex_ok(a, g2.vertex_membership[y])
                 and (deg1[x] == deg2[y] if exact_degree else deg1[x] <= deg2[y])]
        if not cands:
            return None
        candidates[x] = cands

    order = _search_order(g1)
    mapping: Mapping_ = {}
    used: set[Vertex] = set()

    def feasible(x: Vertex, y: Vertex) -> bool:
        for x2, y2 in mapping.items():
            if not edge_ok(g1.edge(x, x2), g2.edge(y, y2)):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in candidates[x]:
            if y in used or not feasible(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if extend(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    if extend(0):
        return {x: mapping[x] for x in g1.vertices}
    return None


@dataclass
class IsometryResult:
    holds: bool
    witnesses: dict[Vertex, tuple[Vertex, Mapping_]] = field(default_factory=dict)

    def __bool__(self):
        return self.holds


def _match_profile(row1: dict[Vertex, DistancePair], row2: dict[Vertex, DistancePair]) -> Mapping_:
    groups: dict[DistancePair, list[Vertex]] = defaultdict(list)
    for u2 in sorted(row2):
        groups[row2[u2]].append(u2)
    g_v: Mapping_ = {}
    for u1 in sorted(row1):
        g_v[u1] = groups[row1[u1]].pop(0)
    return g_v


def check_isometry_witness(g1: IvfGraph, g2: IvfGraph, anchor: Vertex, g_v: Mapping_,
                           rows1=None, rows2=None) -> bool:
    """Verify ``g_v`` is a bijection preserving both distances to ``anchor``."""
    if set(g_v) != set(g1.vertices) or set(g_v.values()) != set(g2.vertices):
        return False
    row1 = rows1[anchor] if rows1 else single_source(g1, anchor)
    image = g_v[anchor]
    row2 = rows2[image] if rows2 else single_source(g2, image)
    return all(row1[u] == row2[g_v[u]] for u in g1.vertices)


def isometric_from(g1: IvfGraph, g2: IvfGraph) -> IsometryResult:
    """Decide whether ``g2`` is isometric from ``g1``.

    For each anchor ``v`` of ``g1`` this needs a bijection preserving the
    distances to ``v``, which exists exactly when some vertex of ``g2`` has
    the same multiset of distance pairs. Matching equal entries then yields
    the bijection, which is re-checked against the distance equations.
    """
    if len(g1) != len(g2):
        return IsometryResult(False)
    rows1 = {v: single_source(g1, v) for v in g1.vertices}
    rows2 = {v: single_source(g2, v) for v in g2.vertices}
    by_profile: dict[tuple, Vertex] = {}
    for v2 in g2.vertices:
        by_profile.setdefault(distance_profile(g2, v2, rows2[v2]).entries, v2)

    witnesses: dict[Vertex, tuple[Vertex, Mapping_]] = {}
    for v in g1.vertices:
        target = by_profile.get(distance_profile(g1, v, rows1[v]).entries)
        if target is None:
            return IsometryResult(False)
        # the anchor is the only entry at distance zero, so it lands on target
        g_v = _match_profile(rows1[v], rows2[target])
        if not check_isometry_witness(g1, g2, v, g_v, rows1, rows2):
            raise AssertionError(f"profile matching produced an invalid witness at {v}")
        witnesses[v] = (target, g_v)
    return IsometryResult(True, witnesses)


def isometric_mutual(g1: IvfGraph, g2: IvfGraph) -> bool:
    """Isometric in both directions: the symmetric relation between graphs."""
    return isometric_from(g1, g2).holds and isometric_from(g2, g1).holds


def brute_force_isometric_from(g1: IvfGraph, g2: IvfGraph) -> bool:
    """Per-anchor search over every bijection ``V1 -> V2``; exponential, test use only."""
    if len(g1) != len(g2):
        return False
    rows1 = {v: single_source(g1, v) for v in g1.vertices}
    rows2 = {v: single_source(g2, v) for v in g2.vertices}
    targets = list(g2.vertices)
    for v in g1.vertices:
        for perm in permutations(targets):
            g_v = dict(zip(g1.vertices, perm))
            row2 = rows2[g_v[v]]
            if all(rows1[v][u] == row2[g_v[u]] for u in g1.vertices):
                break
        else:
            return False
    return True


# -- relation laws ---------------------------------------------------------

def random_bijection(g: IvfGraph, rng: random.Random, prefix: str = "w") -> Mapping_:
    targets = [f"{prefix}{i}" for i in range(len(g))]
    rng.shuffle(targets)
    return dict(zip(g.vertices, targets))


def _raise_on_grid(value: Fraction, rng: random.Random, grid: int) -> Fraction:
    choices = [value] + [Fraction(k, grid) for k in range(grid + 1) if Fraction(k, grid) > value]
    return rng.choice(choices)


def coweak_variant(g: IvfGraph, rng: random.Random, grid: int = 10) -> IvfGraph:
    """Copy of ``g`` with vertex memberships raised towards 1, edges untouched.

    The identity is then a co-weak isomorphism from ``g`` to the result.
    """
    vm = {}
    for v, a in g.vertex_membership.items():
        lo = _raise_on_grid(a.lo, rng, grid)
        hi = _raise_on_grid(max(a.hi, lo), rng, grid)
        vm[v] = IntervalNumber(lo, hi)
    return IvfGraph(vm, g.edges, name=f"{g.name}_coweak")


@dataclass
class LawReport:
    checks: Counter = field(default_factory=Counter)
    violations: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, law: str, passed: bool, where: str, detail: str = ""):
        self.checks[law] += 1
        if not passed:
            self.violations.append((law, where, detail))


LAWS = ("reflexivity", "symmetry", "transitivity", "isomorphism_implies_isometry",
        "coweak_implies_isometry")


def _sample(rng: random.Random, max_vertices: int, grid: int) -> IvfGraph:
    n = rng.randint(1, max_vertices)
    density = Fraction(rng.randint(0, 10), 10)
    return random_graph(n, density, grid, rng.getrandbits(32))


def verify_relation_laws(seed: int, trials: int, max_vertices: int = 7, grid: int = 10,
                         extra_pairs=()) -> LawReport:
    """Check the equivalence-relation laws of mutual isometry on seeded samples.

    Each trial draws a random graph and checks reflexivity, symmetry against
    a partner that is sometimes isometric and sometimes not, transitivity
    along a chain of two relabellings, and that isomorphic and co-weak
    isomorphic pairs are mutually isometric. ``extra_pairs`` are additional
    hand-built pairs fed to the symmetry law.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = LawReport()
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        where = f"seed={seed} trial={t}"
        g = _sample(rng, max_vertices, grid)

        report.record("reflexivity", isometric_mutual(g, g), where)

        kind = t % 3
        if kind == 0:
            partner = permute(g, random_bijection(g, rng))
        elif kind == 1:
            partner = coweak_variant(g, rng, grid)
        else:
            partner = random_graph(len(g), Fraction(rng.randint(0, 10), 10), grid,
                                   rng.getrandbits(32))
        report.record("symmetry", isometric_mutual(g, partner) == isometric_mutual(partner, g),
                      where, f"partner kind {kind}")

        g2 = permute(g, random_bijection(g, rng, "p"))
        g3 = permute(g2, random_bijection(g2, rng, "q"))
        chain_ok = (isometric_mutual(g, g2) and isometric_mutual(g2, g3)
                    and isometric_mutual(g, g3))
        report.record("transitivity", chain_ok, where)

        iso = find_morphism(g, g2, MorphismMode.ISOMORPHISM) is not None
        report.record("isomorphism_implies_isometry", iso and isometric_mutual(g, g2), where)

        h = permute(coweak_variant(g, rng, grid), random_bijection(g, rng, "c"))
        cw = find_morphism(g, h, MorphismMode.COWEAK) is not None
        report.record("coweak_implies_isometry", cw and isometric_mutual(g, h), where)

    for i, (a, b) in enumerate(extra_pairs):
        report.record("symmetry", isometric_mutual(a, b) == isometric_mutual(b, a),
                      f"extra pair {i}")
    return report


def search_complement_counterexample(max_vertices: int, grid: int, budget: int, seed: int
                                     ) -> Optional[tuple[IvfGraph, IvfGraph]]:
    """Look for mutually isometric graphs whose complements are not.

    Each unit of ``budget`` examines one candidate pair. Candidates alternate
    between a random graph paired with a co-weak variant of itself (same
    edges, raised vertex memberships) and two independent random graphs.
    Only pairs where both complements exist are considered, and edgeless
    first graphs are skipped since they make the search trivial.
    """
    if max_vertices < 2:
        raise ValueError("max_vertices must be at least 2")
    rng = random.Random(seed)
    for attempt in range(budget):
        n = rng.randint(2, max_vertices)
        density = Fraction(rng.randint(1, 10), 10)
        g1 = random_graph(n, density, grid, rng.getrandbits(32))
        if not g1.edges:
            continue
        if attempt % 2 == 0:
            g2 = coweak_variant(g1, rng, grid)
        else:
            g2 = random_graph(n, density, grid, rng.getrandbits(32))
        try:
            c1, c2 = complement(g1), complement(g2)
        except ComplementError:
            continue
        if isometric_mutual(g1, g2) and not isometric_mutual(c1, c2):
            if _confirm_counterexample(g1, g2):
                return g1, g2
    return None


def _confirm_counterexample(g1: IvfGraph, g2: IvfGraph) -> bool:
    # independent re-check through the per-anchor bijection search
    c1, c2 = complement(g1), complement(g2)
    if len(g1) > 6:
        return isometric_mutual(g1, g2) and not isometric_mutual(c1, c2)
    return (brute_force_isometric_from(g1, g2) and brute_force_isometric_from(g2, g1)
            and not (brute_force_isometric_from(c1, c2) and brute_force_isometric_from(c2, c1)))
