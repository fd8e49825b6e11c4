# Lower and upper distances: shortest paths weighted by reciprocal edge memberships.
from ivfgraph import build_graph, distance_matrix, distance_profile, format_rational

g = build_graph(
    [("a", (1, 1)), ("b", (1, 1)), ("c", (1, 1)), ("z", (0.5, 0.5))],
    [("a", "c", (0.1, 1)), ("a", "b", (0.5, 0.5)), ("b", "c", (0.5, 0.5))],
)


def fmt(x):
    return "inf" if x == float("inf") else format_rational(x)


# The two bounds are separate shortest-path problems: from a to c the lower
# distance goes through b (2 + 2 = 4 beats 1/0.1 = 10) while the upper distance
# takes the direct edge (1/1 = 1).
m = distance_matrix(g)
for u in g.vertices:
    print(u, "  ".join(f"{fmt(m[u, v].lower)}/{fmt(m[u, v].upper)}".rjust(9) for v in g.vertices))

# z is isolated, so its distances to everything else are infinite.
# A distance profile is the sorted multiset of pairs seen from one anchor.
print(" ".join(str(pair) for pair in distance_profile(g, "a").entries))
