"""The (3,5) pipeline: reduction rules, then an edge cover."""

from lowvc import SetSystem, SimpleGraph, brute_force_min_hitting_set, solve_35
from lowvc.solvers import format_trace
from lowvc.vc import alpha_beta_profile

# Edge Cover as Hitting Set: elements are edges, sets are vertex stars.
# A 9-cycle with one pendant path attached at vertex 0.
edges = [(i, (i + 1) % 9) for i in range(9)] + [(0, 9), (9, 10)]
G = SimpleGraph(11, edges)
stars = [[e for e, (u, v) in enumerate(G.edges) if x in (u, v)] for x in range(11)]
F = SetSystem(len(edges), stars)

print("beta(3) =", alpha_beta_profile(F, 3).beta, "(at most 5 required)")

res = solve_35(F)
print("size", res.size, "elements", res.solution.elements)
print(format_trace(res.trace, base=1))

assert res.size == brute_force_min_hitting_set(F).size
print("matches brute force")

# a small gadget: the hub 0 belongs to any minimum hitting set
gadget = SetSystem(4, [(0, 1), (0, 2), (0, 3), (1, 2, 3)])
print("gadget:", solve_35(gadget).solution.elements)
