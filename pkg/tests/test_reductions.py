import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lowvc import (
    InvalidInputError,
    PsiInstance,
    ResourceLimitError,
    SetSystem,
    SimpleGraph,
    embedding_to_solution,
    extract_embedding,
    find_bk_system,
    is_ab_system,
    is_shattered,
    normalize_psi,
    psi_to_hitting_set,
    split_edges_triangle_free,
    verify_hitting_set,
    verify_reduction_vc,
    vertex_cover_system,
)
from lowvc.reductions import psi_embeddings
from lowvc.solvers import bounded_search_hitting_set

from oracles import (
    edge_cover_instance,
    has_triangle,
    min_vertex_cover_brute,
    psi_brute,
    random_graph,
)

K3 = SimpleGraph(3, [(0, 1), (1, 2), (0, 2)])
PATH3 = SimpleGraph(3, [(0, 1), (1, 2)])


def k3_instance(host=K3, partition=(0, 1, 2)):
    return PsiInstance(host, list(partition), K3)


# -------------------------------------------------------------- instances


def test_psi_validation():
    with pytest.raises(InvalidInputError):
        PsiInstance(K3, [0, 1], K3)
    with pytest.raises(InvalidInputError):
        PsiInstance(K3, [0, 1, 5], K3)


def test_cross_edges_are_oriented():
    inst = k3_instance(SimpleGraph(4, [(0, 1), (3, 1), (1, 2)]), (0, 1, 2, 0))
    assert inst.cross_edges(0, 1) == [(0, 1), (3, 1)]
    assert inst.cross_edges(1, 0) == [(1, 0), (1, 3)]
    assert inst.pattern_neighbours(0) == [1, 2]


# ------------------------------------------------------------- normalize


def test_normalize_examples():
    same = normalize_psi(k3_instance())
    assert (same.t, same.k, same.host.edges) == (3, 3, K3.edges)
    one_edge = PsiInstance(SimpleGraph(2, [(0, 1)]), [0, 1], SimpleGraph(2, [(0, 1)]))
    norm = normalize_psi(one_edge)
    assert (norm.t, norm.k) == (7, 7)
    empty = PsiInstance(SimpleGraph(3), [0, 1, 2], SimpleGraph(3))
    norm = normalize_psi(empty)
    assert (norm.t, norm.k) == (18, 18)


def test_normalize_pads_isolated_vertices_for_dense_patterns():
    K4 = SimpleGraph(4, list(combinations(range(4), 2)))
    inst = PsiInstance(K4, [0, 1, 2, 3], K4)
    norm = normalize_psi(inst)
    assert (norm.t, norm.k) == (6, 6)
    assert psi_brute(norm)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_normalize_preserves_solvability(seed):
    rng = random.Random(seed)
    t = rng.randint(2, 4)
    pattern = random_graph(rng, t, 0.6)
    nv = rng.randint(t, 7)
    partition = list(range(t)) + [rng.randrange(t) for _ in range(nv - t)]
    inst = PsiInstance(random_graph(rng, nv, 0.5), partition, pattern)
    norm = normalize_psi(inst)
    assert norm.t == norm.k
    assert psi_brute(norm) == psi_brute(inst)


# ------------------------------------------------------------- reduction


def test_k3_in_k3_has_solution_of_budget_size():
    inst = k3_instance()
    F, budget, layout = psi_to_hitting_set(inst)
    assert budget == len(layout.ground_sets) == 14 * inst.k
    assert layout.nominal_budget == 9 * inst.k
    found = bounded_search_hitting_set(F, budget)
    assert found is not None and found.size == budget
    assert bounded_search_hitting_set(F, budget - 1) is None
    assert extract_embedding(inst, layout, found) == (0, 1, 2)


def test_k3_in_path_has_no_solution():
    inst = k3_instance(PATH3)
    F, budget, layout = psi_to_hitting_set(inst)
    assert bounded_search_hitting_set(F, budget) is None


def test_empty_part_adds_empty_set():
    inst = PsiInstance(SimpleGraph(3, [(0, 1), (1, 2), (0, 2)]), [0, 1, 1], K3)
    F, _, layout = psi_to_hitting_set(inst)
    assert F.has_empty_set
    assert any(tag == ("EMPTY",) for labs in layout.set_labels for tag, _ in labs)


def test_reduction_needs_balanced_pattern():
    inst = PsiInstance(SimpleGraph(2, [(0, 1)]), [0, 1], SimpleGraph(2, [(0, 1)]))
    with pytest.raises(InvalidInputError):
        psi_to_hitting_set(inst)


def test_embedding_round_trip():
    host = SimpleGraph(6, [(0, 2), (0, 4), (2, 4), (1, 3), (3, 5), (1, 5), (0, 3)])
    inst = k3_instance(host, (0, 1, 0, 1, 2, 2))
    F, budget, layout = psi_to_hitting_set(inst)
    for emb in psi_embeddings(inst):
        S = embedding_to_solution(inst, layout, emb)
        assert S.size == budget and verify_hitting_set(F, S)
        assert extract_embedding(inst, layout, S) == emb
        assert extract_embedding(None, layout, S) == emb


def test_embedding_must_use_host_edges():
    inst = k3_instance(PATH3)
    _, _, layout = psi_to_hitting_set(inst)
    with pytest.raises(InvalidInputError, match=r"\(0, 2\)"):
        embedding_to_solution(inst, layout, (0, 1, 2))


def test_extract_rejects_wrong_size():
    inst = k3_instance()
    F, budget, layout = psi_to_hitting_set(inst)
    with pytest.raises(InvalidInputError):
        extract_embedding(inst, layout, range(budget + 1))


def test_padded_parts_pick_their_only_vertex():
    inst = normalize_psi(PsiInstance(SimpleGraph(2, [(0, 1)]), [0, 1],
                                     SimpleGraph(2, [(0, 1)])))
    F, budget, layout = psi_to_hitting_set(inst)
    emb = next(psi_embeddings(inst))
    S = embedding_to_solution(inst, layout, emb)
    assert extract_embedding(inst, layout, S) == tuple(range(7))


def test_reduction_vc_with_a_two_vertex_part():
    inst = k3_instance(SimpleGraph(4, [(0, 1), (1, 2), (0, 2), (3, 1)]), (0, 1, 2, 0))
    F, _, _ = psi_to_hitting_set(inst)
    assert verify_reduction_vc(F) == (2, 2)


def test_singleton_parts_reach_only_dimension_one():
    F, _, _ = psi_to_hitting_set(k3_instance())
    assert verify_reduction_vc(F) == (1, 1)


def test_explicit_shattered_pairs():
    # part 0 holds vertices 0 < 3
    inst = k3_instance(SimpleGraph(4, [(0, 1), (1, 2), (0, 2), (3, 1)]), (0, 1, 2, 0))
    F, _, layout = psi_to_hitting_set(inst)
    el, st_ = layout.element_index, layout.set_index
    x = lambda u, lvl: el[(("X", 0, lvl), u)]
    A = lambda u, lvl: F.sets[st_[(("A", 0, lvl), u)]]
    assert is_shattered(F, (x(0, 2), x(3, 2)))
    assert (x(0, 2) in A(0, 1), x(3, 2) in A(0, 1)) == (True, True)
    assert (x(0, 2) in A(3, 1), x(3, 2) in A(3, 1)) == (False, True)
    assert (x(0, 2) in A(3, 2), x(3, 2) in A(3, 2)) == (True, False)
    # dual side: the two level-1 A-sets are told apart by four elements
    y = el[(("Y", 0, 1, 1), (0, 1))]
    pats = {(e in A(0, 1), e in A(3, 1)) for e in (x(3, 2), x(0, 2), x(0, 1), y)}
    assert pats == {(True, True), (True, False), (False, True), (False, False)}


def test_reduction_size_guard():
    F, _, _ = psi_to_hitting_set(k3_instance())
    with pytest.raises(ResourceLimitError):
        verify_reduction_vc(F, max_elements=5)


# ----------------------------------------------------------- (3,6) systems


def test_split_examples():
    H, off = split_edges_triangle_free(SimpleGraph(2, [(0, 1)]))
    assert (H.vertex_count, len(H.edges), off) == (4, 3, 1)
    assert min_vertex_cover_brute(4, H.edges) == 2
    H, off = split_edges_triangle_free(K3)
    assert (H.vertex_count, len(H.edges), off) == (9, 9, 3)
    assert min_vertex_cover_brute(9, H.edges) == 5
    H, off = split_edges_triangle_free(SimpleGraph(3))
    assert (H.vertex_count, H.edges, off) == (3, (), 0)


def test_vertex_cover_system_profiles():
    tri = vertex_cover_system(K3)
    assert tri.sets == ((0, 1), (1, 2), (0, 2))
    assert is_ab_system(tri, 3, 6)
    C4 = vertex_cover_system(SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    assert is_ab_system(C4, 3, 6)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_split_is_triangle_free_36(seed):
    rng = random.Random(seed)
    G = random_graph(rng, rng.randint(1, 6), 0.6)
    H, off = split_edges_triangle_free(G)
    assert not has_triangle(H.vertex_count, H.edges)
    if H.edges:
        assert is_ab_system(vertex_cover_system(H), 3, 6)


# ------------------------------------------------------------------ B_k


def test_bk_examples():
    F = SetSystem(6, [*combinations(range(4), 3), (4, 5)])
    assert find_bk_system(F, 4) == (0, 1, 2, 3)
    G = SimpleGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])
    assert find_bk_system(edge_cover_instance(G), 4) is None
    power = SetSystem(4, [s for k in range(5) for s in combinations(range(4), k)])
    assert find_bk_system(power, 4) is None
    with pytest.raises(InvalidInputError):
        find_bk_system(F, 3)
