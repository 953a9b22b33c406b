"""Blossom matching and minimum edge covers."""

from lowvc import SimpleGraph, max_matching, min_edge_cover
from lowvc.matching import NoCoverError

# Petersen graph: outer 5-cycle, spokes, inner pentagram
P = SimpleGraph(10, [(i, (i + 1) % 5) for i in range(5)]
                + [(i, i + 5) for i in range(5)]
                + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
M = max_matching(P)
print("perfect matching:", [P.edges[e] for e in M])

# every vertex covered with n - |M| edges
C = min_edge_cover(P)
print("edge cover size", len(C), "=", P.vertex_count, "-", len(M))

# odd cycles need blossoms: a 5-cycle with a tail
T = SimpleGraph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)])
print("5-cycle with tail:", len(max_matching(T)))

try:
    min_edge_cover(SimpleGraph(3, [(0, 1)]))
except NoCoverError as exc:
    print("no cover:", exc)
