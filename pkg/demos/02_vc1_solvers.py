"""Hitting sets on VC-dimension 1 systems and their duals."""

import random

from lowvc import SetSystem, brute_force_min_hitting_set, solve_dual_vc1, solve_vc1
from lowvc.solvers import format_trace
from lowvc.vc import dual_vc_dimension, vc_dimension

# nested and disjoint intervals on a line: a laminar family, VC-dimension 1
F = SetSystem(8, [(0, 1, 2, 3), (1, 2), (4, 5), (5,), (6, 7), (7,)])
print("vc:", vc_dimension(F).vc_dim)

res = solve_vc1(F)
print(res.status.value, res.solution.elements)
print(format_trace(res.trace))

# a guard failure names the shattered pair
path = SetSystem(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
bad = solve_vc1(path)
print(bad.status.value, "witness:", bad.witness)

# random sanity sweep against exhaustive search
rng = random.Random(0)
checked = 0
while checked < 50:
    sets = {tuple(e for e in range(9) if rng.random() < 0.2) for _ in range(7)}
    G = SetSystem(9, [s for s in sets if s])
    if not G.num_sets or dual_vc_dimension(G, cap=2) > 1:
        continue
    assert solve_dual_vc1(G).size == brute_force_min_hitting_set(G).size
    checked += 1
print("dual VC-1 solver matched brute force on", checked, "systems")
