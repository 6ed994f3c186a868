"""
Building Harary graphs
======================

H(k, n) places n vertices on a circle and joins each to its k // 2 nearest
neighbors on either side. Odd k adds diametral chords. When both k and n are
odd one vertex ends up with an extra chord.
"""

from residual_closeness import harary, validate
from residual_closeness.graph import format_edgelist

# Even k: a circulant graph, every vertex has degree k
g = harary((4, 8))
print(g, "degrees:", g.degrees())

# Odd k, even n: ring plus the chords (i, i + n/2)
g = harary((3, 6))
print(g, "neighbors of 1:", g.neighbors(1))

# Odd k, odd n: vertex q + 1 picks up two chords
params = validate(3, 5)
print(params)
g = harary(params)
print("degrees:", g.degrees())

# Edge counts are always ceil(k n / 2)
for k, n in [(2, 9), (3, 9), (5, 11), (6, 13)]:
    print(f"H({k},{n}): {harary((k, n)).edge_count} edges, ceil(kn/2) = {-(-k * n // 2)}")

# The edge-list text format used by the command line tool
print(format_edgelist(harary((3, 5)), comment="H(3,5)"))
