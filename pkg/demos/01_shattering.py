"""Projections, shattering and the VC-dimension of small set systems."""

from itertools import combinations

from lowvc import SetSystem, dual, is_shattered, projection
from lowvc.vc import alpha_beta_profile, sauer_shelah_bound, vc_dimension

# edges of a 4-cycle 0-1-3-2-0 as a set system over its vertices
F = SetSystem(4, [(0, 2), (0, 1), (2, 3), (1, 3)])
print(F)

# the trace on {0, 2} has all four patterns, so the pair is shattered
print("trace on {0,2}:", sorted(projection(F, [0, 2])))
print("shattered:", is_shattered(F, [0, 2]))

rep = vc_dimension(F)
print("vc:", rep.vc_dim, "witness:", rep.witness)

# the dual swaps roles: elements become the sets they belong to
D = dual(F)
print("dual:", D, "vc:", vc_dimension(D).vc_dim)

# how many traces can three elements see at most?
print("beta for alpha=3:", alpha_beta_profile(F, 3).beta)

# full power set of 3 elements hits the Sauer-Shelah bound exactly
P = SetSystem(3, [s for k in range(4) for s in combinations(range(3), k)])
d = vc_dimension(P).vc_dim
print("power set: |C| =", P.num_sets, "bound =", sauer_shelah_bound(3, d))
