from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from ivfgraph import (ComplementError, GraphValidationError, build_graph, closed_degree,
                      complement, make_interval, neighbors, open_degree, order, permute, random_graph, size,
                      validate)
from oracles import degree_table
from strategies import graphs


def d(*xs):
    return tuple(F(str(x)) for x in xs)


def test_example26_is_valid(example26):
    assert example26.vertices == ("u1", "u2", "u3")
    assert len(example26.edges) == 3
    assert validate(example26) == example26


def test_single_vertex():
    g = build_graph([("a", (0.1, 0.2))])
    assert len(g) == 1 and not g.edges


def test_edge_bound_violation_names_lower_bound():
    with pytest.raises(GraphValidationError) as err:
        build_graph([("x", (0.3, 0.7)), ("y", (0.4, 0.6))], [("x", "y", (0.35, 0.5))])
    assert len(err.value.problems) == 1
    assert "mu- = 7/20 exceeds" in err.value.problems[0]


@pytest.mark.parametrize("edges, fragment", [
    ([("x", "q", (0.1, 0.1))], "unknown endpoint q"),
    ([("x", "x", (0.1, 0.1))], "self-loop"),
    ([("x", "y", (0.1, 0.1)), ("y", "x", (0.1, 0.1))], "duplicate edge"),
    ([("x", "y", (0, 0.1))], "must be positive"),
    ([("x", "y", (0.1, 0.65))], r"mu\+ = 13/20 exceeds"),
])
def test_validation_diagnostics(edges, fragment):
    with pytest.raises(GraphValidationError, match=fragment):
        build_graph([("x", (0.3, 0.7)), ("y", (0.4, 0.6))], edges)


def test_duplicate_vertex():
    with pytest.raises(GraphValidationError, match="duplicate vertex"):
        build_graph([("x", (0.3, 0.7)), ("x", (0.4, 0.6))])


def test_order_size(example26):
    assert order(example26) == 3
    assert size(example26) == F("2.35")
    empty = build_graph([])
    assert order(empty) == 0 and size(empty) == 0
    assert order(build_graph([("a", (0, 0))])) == F(1, 2)
    one_edge = build_graph([("a", (1, 1)), ("b", (1, 1))], [("a", "b", (0.2, 0.3))])
    assert size(one_edge) == F(3, 4)


def test_neighbors(example26):
    assert neighbors(example26, "u1") == {"u2", "u3"}
    assert neighbors(example26, "u2") == {"u1", "u3"}
    g = build_graph([("a", (0.2, 0.2)), ("b", (0.2, 0.2))])
    assert neighbors(g, "a") == set()
    with pytest.raises(KeyError):
        neighbors(g, "zz")


def test_open_degrees(example26):
    assert open_degree(example26, "u1").value == d(0.7, 1.3)
    assert open_degree(example26, "u2").value == d(0.7, 1.2)
    assert open_degree(example26, "u3").value == d(0.6, 1.5)
    g = build_graph([("a", (0.4, 0.5))])
    assert open_degree(g, "a").value == (0, 0)


def test_closed_degrees(example26):
    assert closed_degree(example26, "u1").value == d(1.0, 2.0)
    assert closed_degree(example26, "u2").value == d(1.0, 2.0)
    assert closed_degree(example26, "u1").closed
    g = build_graph([("a", (0.4, 0.5))])
    assert closed_degree(g, "a").value == d(0.4, 0.5)


def test_complement_values(example26):
    # u2u3 would become [0, 0.1], which is not a valid edge membership
    with pytest.raises(ComplementError) as err:
        complement(example26)
    assert set(err.value.pairs) == {("u2", "u3")}
    # the u1u2 value on its own matches the hand computation
    g = build_graph([("u1", (0.3, 0.7)), ("u2", (0.3, 0.8))], [("u1", "u2", (0.2, 0.3))])
    assert complement(g).edge("u1", "u2") == make_interval(0.1, 0.4)


def test_complement_drops_saturated_edges():
    g = build_graph([("a", (0.3, 0.6)), ("b", (0.4, 0.5))], [("a", "b", (0.3, 0.5))])
    assert not complement(g).edges


def test_complement_non_interval():
    g = build_graph([("a", (0.5, 0.5)), ("b", (0.5, 0.5))], [("a", "b", (0.1, 0.5))])
    with pytest.raises(ComplementError) as err:
        complement(g)
    assert err.value.pairs == {("a", "b"): (F(2, 5), F(0))}


def test_permute(example26):
    assert permute(example26, {v: v for v in example26.vertices}) == example26
    swapped = permute(example26, {"u1": "u2", "u2": "u1", "u3": "u3"})
    assert open_degree(swapped, "u2").value == d(0.7, 1.3)
    assert sorted(open_degree(swapped, v).value for v in swapped.vertices) == \
        sorted(open_degree(example26, v).value for v in example26.vertices)
    fresh = permute(example26, {"u1": "a", "u2": "b", "u3": "c"})
    assert fresh.vertices == ("a", "b", "c")
    with pytest.raises(ValueError):
        permute(example26, {"u1": "a", "u2": "a", "u3": "c"})
    with pytest.raises(ValueError):
        permute(example26, {"u1": "a"})


def test_random_graph_contracts():
    assert len(random_graph(0, F(1, 2), 10, 3)) == 0
    k5 = random_graph(5, 1, 10, 42)
    assert len(k5.edges) == 10
    validate(k5)
    assert random_graph(6, F(1, 2), 10, 7) == random_graph(6, F(1, 2), 10, 7)
    assert not random_graph(6, 0, 10, 7).edges


@settings(max_examples=150)
@given(graphs())
def test_degree_properties(g):
    assert validate(g) == g
    open_tab, closed_tab = degree_table(g), degree_table(g, closed=True)
    for x in g.vertices:
        o, c = open_degree(g, x), closed_degree(g, x)
        assert o.value == open_tab[x] and c.value == closed_tab[x]
        a = g.vertex_membership[x]
        assert (c.mu - o.mu, c.nu - o.nu) == (a.lo, a.hi)
        assert 0 <= o.mu <= o.nu
    total_mu = sum((open_degree(g, x).mu for x in g.vertices), F(0))
    total_nu = sum((open_degree(g, x).nu for x in g.vertices), F(0))
    vm = g.vertex_membership
    assert total_mu == sum((vm[x].lo + vm[y].lo for x, y in g.edges), F(0))
    assert total_nu == sum((vm[x].hi + vm[y].hi for x, y in g.edges), F(0))


@settings(max_examples=150)
@given(graphs())
def test_complement_involution(g):
    try:
        c = complement(g)
    except ComplementError:
        return
    assert validate(c) == c
    assert complement(c) == g


@settings(max_examples=100)
@given(graphs(min_vertices=1))
def test_order_size_invariant_under_permute(g):
    mapping = {v: f"r{len(g) - i}" for i, v in enumerate(g.vertices)}
    h = permute(g, mapping)
    assert validate(h) == h
    assert order(h) == order(g) and size(h) == size(g)


@pytest.mark.parametrize("seed", range(20))
def test_random_graph_always_valid(seed):
    g = random_graph(seed % 8, F(seed % 5, 4), 1 + seed % 12, seed)
    assert validate(g) == g
