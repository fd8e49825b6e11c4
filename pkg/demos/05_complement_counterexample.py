# Isomorphism survives complementation; isometry need not.
from ivfgraph import complement, distance_matrix, search_complement_counterexample, \
    serialize_graph

pair = search_complement_counterexample(max_vertices=4, grid=10, budget=2000, seed=2026)
g1, g2 = pair
print(serialize_graph(g1))
print(serialize_graph(g2))

# Both graphs share their single edge, so their distances agree. Their
# vertex memberships differ, and the complement edge is built from them.
for g in (g1, g2):
    c = complement(g)
    print(g.name, "distance", distance_matrix(g)["v0", "v1"],
          "| complement distance", distance_matrix(c)["v0", "v1"])
