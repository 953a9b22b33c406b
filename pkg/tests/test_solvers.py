import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lowvc import (
    InvalidInputError,
    NoSolutionError,
    ResourceLimitError,
    SetSystem,
    SimpleGraph,
    Status,
    brute_force_min_hitting_set,
    dual_vc_dimension,
    greedy_hitting_set,
    is_ab_system,
    is_shattered,
    preprocess_35,
    solve_35,
    solve_auto,
    solve_dual_vc1,
    solve_vc1,
    vc_dimension,
    verify_hitting_set,
)
from lowvc.solvers import (
    PreprocessState,
    bounded_search_hitting_set,
    dominates,
    format_trace,
    replay_trace,
)

from oracles import edge_cover_instance, min_hs_brute, random_edge_cover_instance, random_system

TRIANGLE = SetSystem(3, [(0, 1), (1, 2), (0, 2)])
# x = 0, a_i = 1..3: A_i = {x, a_i}, W = {a_1, a_2, a_3}
HUB_GADGET = SetSystem(4, [(0, 1), (0, 2), (0, 3), (1, 2, 3)])


# -------------------------------------------------------------- brute force


def test_brute_force_examples():
    res = brute_force_min_hitting_set(SetSystem(3, [(0, 1), (1, 2)]))
    assert res.status is Status.SOLVED and res.solution.elements == (1,)
    assert brute_force_min_hitting_set(TRIANGLE).size == 2
    assert brute_force_min_hitting_set(SetSystem(2, [(), (0,)])).status is Status.NO_SOLUTION


def test_brute_force_respects_bound_and_cap():
    big = SetSystem(25, [(0, i) for i in range(1, 25)])
    with pytest.raises(ResourceLimitError):
        brute_force_min_hitting_set(big)
    assert brute_force_min_hitting_set(big, override=True).solution.elements == (0,)
    assert brute_force_min_hitting_set(big, bound=25).size == 1
    assert brute_force_min_hitting_set(TRIANGLE, size_cap=1).status is Status.NOT_APPLICABLE


def test_brute_force_many_sets_path():
    F = SetSystem(12, [(a, b) for a in range(12) for b in range(a + 1, 12)])
    assert F.num_sets > 62
    assert brute_force_min_hitting_set(F).size == 11


def test_empty_collection_has_empty_answer():
    assert brute_force_min_hitting_set(SetSystem(3, [])).size == 0


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_brute_force_matches_oracle(seed):
    rng = random.Random(seed)
    F = random_system(rng, rng.randint(1, 9), rng.randint(1, 10), allow_empty=rng.random() < 0.1)
    res = brute_force_min_hitting_set(F)
    assert res.size == min_hs_brute(F.universe_size, F.sets)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**31 - 1), st.integers(0, 5))
def test_bounded_search_decides_budget(seed, budget):
    rng = random.Random(seed)
    F = random_system(rng, rng.randint(1, 9), rng.randint(1, 10))
    best = min_hs_brute(F.universe_size, F.sets)
    found = bounded_search_hitting_set(F, budget)
    assert (found is not None) == (best is not None and best <= budget)
    if found is not None:
        assert verify_hitting_set(F, found) and found.size <= budget


def test_bounded_search_node_limit():
    F = SetSystem(20, [(i, i + 10) for i in range(10)])
    with pytest.raises(ResourceLimitError):
        bounded_search_hitting_set(F, 10, node_limit=5)
    assert bounded_search_hitting_set(F, 9, node_limit=5) is None


# ------------------------------------------------------------------ greedy


def test_greedy_examples():
    assert greedy_hitting_set(SetSystem(3, [(0, 1), (1, 2)])).elements == (1,)
    assert greedy_hitting_set(SetSystem(2, [(0,), (1,)])).elements == (0, 1)
    assert greedy_hitting_set(TRIANGLE).size == 2
    with pytest.raises(NoSolutionError):
        greedy_hitting_set(SetSystem(1, [()]))


# -------------------------------------------------------------------- VC-1


def test_dominates_examples():
    F = SetSystem(2, [(0, 1), (1,)])
    assert dominates(F, 1, 0)
    assert not dominates(F, 0, 1)
    assert dominates(SetSystem(3, [(0,)]), 0, 2)
    with pytest.raises(InvalidInputError):
        dominates(F, 1, 1)


def test_vc1_examples():
    res = solve_vc1(SetSystem(3, [(0,), (1,), (2,)]))
    assert res.solution.elements == (0, 1, 2)
    assert solve_vc1(SetSystem(2, [(0, 1), (1,)])).solution.elements == (1,)


def test_vc1_guard_reports_shattered_pair():
    F = SetSystem(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    res = solve_vc1(F)
    assert res.status is Status.NOT_APPLICABLE
    assert len(res.witness) == 2 and is_shattered(F, res.witness)


def test_dual_vc1_examples():
    assert solve_dual_vc1(SetSystem(3, [(0,), (1,), (2,)])).size == 3
    assert solve_dual_vc1(SetSystem(3, [(0, 1), (1, 2), (0, 1, 2)])).solution.elements == (1,)
    assert solve_dual_vc1(SetSystem(4, [(0, 1), (2, 3)])).size == 2


def test_dual_vc1_guard():
    res = solve_dual_vc1(SetSystem(4, [(0, 1), (0, 2), (1, 3), (2, 3)]))
    assert res.status is Status.NOT_APPLICABLE


def test_vc1_solvers_report_no_solution():
    F = SetSystem(2, [(), (0,)])
    assert solve_vc1(F).status is Status.NO_SOLUTION
    assert solve_dual_vc1(F).status is Status.NO_SOLUTION


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_vc1_matches_oracle(seed):
    rng = random.Random(seed)
    F = random_system(rng, rng.randint(1, 10), rng.randint(1, 10), p=rng.choice([0.15, 0.3]))
    if F.num_sets == 0:
        return
    best = min_hs_brute(F.universe_size, F.sets)
    if vc_dimension(F, cap=2).vc_dim <= 1:
        res = solve_vc1(F)
        assert res.status is Status.SOLVED and res.size == best
    if dual_vc_dimension(F, cap=2) <= 1:
        res = solve_dual_vc1(F)
        assert res.status is Status.SOLVED and res.size == best


# ------------------------------------------------------------------- (3,5)


def test_hub_gadget_forces_hub():
    state = preprocess_35(HUB_GADGET)
    assert isinstance(state, PreprocessState)
    assert 0 in state.forced and not state.sets
    res = solve_35(HUB_GADGET)
    assert res.size == 2 and 0 in res.solution.elements


def test_singleton_set_forces_its_element():
    state = preprocess_35(SetSystem(2, [(0,), (0, 1)]))
    assert state.forced == {0} and not state.sets


def test_triangle_solved_by_small_search():
    res = solve_35(TRIANGLE)
    assert res.size == 2
    assert res.trace[-1].step == 1


def test_path_edge_cover_instance():
    # path 1-2-3-4 with edges a=0, b=1, c=2
    F = SetSystem(3, [(0,), (0, 1), (1, 2), (2,)])
    res = solve_35(F)
    assert res.solution.elements == (0, 2)


def test_solve_35_no_solution_and_guard():
    assert solve_35(SetSystem(2, [(), (0,)])).status is Status.NO_SOLUTION
    power = SetSystem(3, [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)])
    assert solve_35(SetSystem(3, power.sets[1:])).status is Status.NOT_APPLICABLE


def test_long_cycle_reaches_edge_cover_finish():
    n = 11
    G = SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])
    F = edge_cover_instance(G)
    res = solve_35(F)
    assert res.size == 6
    assert res.trace[-1].step == 6


def test_hub_rule_on_unguarded_input():
    # hub element 0 sits in three sets; legs of length four close into a triangle
    sets, legs = [], [list(range(1 + 4 * i, 5 + 4 * i)) for i in range(3)]
    for leg in legs:
        sets.append((0, leg[0]))
        sets += list(zip(leg, leg[1:]))
    a, b, c = (leg[-1] for leg in legs)
    sets += [(a, b), (b, c), (a, c)]
    F = SetSystem(13, sets)
    res = solve_35(F, guard=False)
    assert res.trace[0].step == 5 and res.trace[0].picked == (0,)
    assert res.size == brute_force_min_hitting_set(F).size


def test_trace_replays_and_formats():
    rng = random.Random(4)
    F = random_edge_cover_instance(rng, 9, 12)
    res = solve_35(F, guard=False)
    pre = [s for s in res.trace if s.step != 6]
    replayed = replay_trace(F, pre)
    assert replayed.forced == preprocess_35(F, guard=False).forced
    text = format_trace(res.trace, base=1)
    assert len(text.splitlines()) == len(res.trace)
    assert text.startswith("step ")


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_solve_35_matches_oracle(seed):
    rng = random.Random(seed)
    if rng.random() < 0.5:
        F = random_edge_cover_instance(rng, rng.randint(3, 11), 14)
    else:
        F = random_system(rng, rng.randint(3, 12), rng.randint(2, 12), p=0.2)
    if F.num_sets == 0 or not is_ab_system(F, 3, 5):
        return
    res = solve_35(F)
    assert res.status is Status.SOLVED
    assert res.size == min_hs_brute(F.universe_size, F.sets)


# -------------------------------------------------------------------- auto


def test_auto_routes_vc1():
    res = solve_auto(SetSystem(3, [(0,), (1,), (2,)]))
    assert res.method == "vc1" and res.exact


def test_auto_falls_back_to_brute_force():
    # vertex cover system of a spider with three legs of length two
    F = SetSystem(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
    assert is_ab_system(F, 3, 6) and not is_ab_system(F, 3, 5)
    res = solve_auto(F)
    assert res.method == "brute" and res.exact and res.size == 3


def test_auto_uses_greedy_when_too_large():
    rng = random.Random(2)
    F = random_system(rng, 24, 30, p=0.3)
    res = solve_auto(F)
    assert res.method == "greedy" and not res.exact
    assert verify_hitting_set(F, res.solution)
