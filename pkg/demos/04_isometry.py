# Isometry compares distance profiles; isomorphism compares memberships.
import random

from ivfgraph import (build_graph, find_morphism, isometric_from, isometric_mutual, permute,
                      random_graph, verify_relation_laws)

# Same edge, different vertex memberships: distances only see edges, so the
# graphs are isometric although no isomorphism exists. A co-weak isomorphism
# (equal edges, vertex memberships may grow) does exist.
low = build_graph([("a", (0.5, 0.5)), ("b", (0.5, 0.5))], [("a", "b", (0.5, 0.5))])
high = build_graph([("a", (0.9, 0.9)), ("b", (0.9, 0.9))], [("a", "b", (0.5, 0.5))])
print("isometric:", isometric_mutual(low, high))
print("isomorphism:", find_morphism(low, high, "iso"))
print("co-weak:", find_morphism(low, high, "coweak"))

# A relabelled copy is isomorphic, hence isometric. The witnesses record, for
# every anchor, where it goes and a bijection preserving distances to it.
g = random_graph(6, 0.5, 10, seed=11)
h = permute(g, {v: f"n{i}" for i, v in enumerate(reversed(g.vertices))})
print("isomorphism:", find_morphism(g, h))
result = isometric_from(g, h)
anchor = g.vertices[0]
print("witness for", anchor, "->", result.witnesses[anchor])

# "Isometric from" is directional; the symmetric relation needs both directions.
edgeless = build_graph([(v, (0.5, 1)) for v in "abc"])
one_edge = build_graph([(v, (0.5, 1)) for v in "abc"], [("a", "b", (0.5, 0.5))])
print(isometric_from(edgeless, one_edge).holds, isometric_from(one_edge, edgeless).holds)

# The equivalence-relation laws, checked on seeded random graphs.
report = verify_relation_laws(seed=42, trials=50)
print(dict(report.checks), "violations:", report.violations)
