# Order, size, neighbourhood degrees and irregularity of a small triangle.
from ivfgraph import (build_graph, classify, closed_degree, format_rational, open_degree,
                      order, size)

g = build_graph(
    [("u1", (0.3, 0.7)), ("u2", (0.3, 0.8)), ("u3", (0.4, 0.5))],
    [("u1", "u2", (0.2, 0.3)), ("u2", "u3", (0.3, 0.4)), ("u1", "u3", (0.2, 0.3))],
    name="triangle",
)


def show(pair):
    return "(" + ", ".join(format_rational(x) for x in pair) + ")"


# Each vertex contributes (1 + lo + hi) / 2 to the order, each edge likewise to the size.
print("order =", format_rational(order(g)), " size =", format_rational(size(g)))

# Open degree sums the neighbours' memberships; closed degree adds the vertex itself.
for v in g.vertices:
    print(v, "open", show(open_degree(g, v)), "closed", show(closed_degree(g, v)))

# u1 sees u2 and u3 with different open degrees, so the graph is irregular.
# All closed degrees coincide at (1, 2), so it is not totally irregular.
for flag, value in classify(g).as_dict().items():
    print(f"{flag:32s} {value}")
