"""From a partitioned subgraph question to Hitting Set and back."""

from lowvc import (
    PsiInstance,
    SimpleGraph,
    extract_embedding,
    psi_to_hitting_set,
    verify_reduction_vc,
)
from lowvc.reductions import psi_embeddings
from lowvc.solvers import bounded_search_hitting_set

K3 = SimpleGraph(3, [(0, 1), (1, 2), (0, 2)])

# host: part 0 = {0, 3}, part 1 = {1}, part 2 = {2}; only vertex 0 closes a triangle
host = SimpleGraph(4, [(0, 1), (1, 2), (0, 2), (3, 1)])
inst = PsiInstance(host, [0, 1, 2, 0], K3)
print("copies by brute force:", list(psi_embeddings(inst)))

F, budget, layout = psi_to_hitting_set(inst)
print(f"{F.universe_size} elements, {F.num_sets} sets, budget {budget}")
print("ground sets:", len(layout.ground_sets))

# primal and dual VC-dimension stay at two
print("vc, dual vc:", verify_reduction_vc(F))

S = bounded_search_hitting_set(F, budget)
print("hitting set of budget size found:", S is not None)
print("embedding read back:", extract_embedding(inst, layout, S))

# drop the edge 0-2 and the triangle disappears, and so does the hitting set
broken = PsiInstance(SimpleGraph(4, [(0, 1), (1, 2), (3, 1)]), [0, 1, 2, 0], K3)
F2, b2, _ = psi_to_hitting_set(broken)
print("without edge 0-2:", bounded_search_hitting_set(F2, b2))
