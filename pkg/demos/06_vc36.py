"""Triangle-free Vertex Cover instances are (3,6)-systems."""

from lowvc import SimpleGraph, split_edges_triangle_free, vertex_cover_system
from lowvc.vc import alpha_beta_profile


def min_cover(G):
    # branch on the two endpoints of any uncovered edge
    def go(rest):
        if not rest:
            return 0
        u, v = rest[0]
        return 1 + min(go([e for e in rest if u not in e]), go([e for e in rest if v not in e]))
    return go(list(G.edges))


K4 = SimpleGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
H, offset = split_edges_triangle_free(K4)
print("K4 ->", H.vertex_count, "vertices,", len(H.edges), "edges")
print("cover before", min_cover(K4), "after", min_cover(H), "offset", offset)

F = vertex_cover_system(H)
print("beta(3) of the split graph:", alpha_beta_profile(F, 3).beta)
print("beta(3) of K4 itself:", alpha_beta_profile(vertex_cover_system(K4), 3).beta)
