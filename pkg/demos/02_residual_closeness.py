"""
Closeness and the cost of losing one link
=========================================

Closeness sums 2**-d(i, j) over ordered vertex pairs. Link residual
closeness is the smallest closeness left after deleting a single edge.
Everything is computed exactly as dyadic rationals.
"""

from residual_closeness import closeness, harary, link_residual_closeness
from residual_closeness.closeness import edge_deletion_closeness

# A 4-cycle: deleting any edge leaves a path on 4 vertices
c4 = harary((2, 4))
report = link_residual_closeness(c4)
print("C =", report.closeness, " R =", report.residual, " delta =", report.delta)
print("NR =", report.normalized, "=", report.normalized_decimal)
print("worst edges:", report.argmin_edges)

# Per-edge closeness after deletion on H(3, 10): the rim edges hurt more than
# the diametral chords
g = harary((3, 10))
c = closeness(g)
for e, v in zip(g.edges(), edge_deletion_closeness(g)):
    print(f"  delete {tuple(e)}: C drops by {c - v}")

# The fast sweep only repairs BFS rows that actually change; the naive sweep
# rebuilds the graph for every edge. They agree exactly.
g = harary((5, 23))
assert edge_deletion_closeness(g) == edge_deletion_closeness(g, method="naive")
print("H(5,23) residual gap:", link_residual_closeness(g).delta)
