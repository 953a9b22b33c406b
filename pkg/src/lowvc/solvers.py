"""Exact Hitting Set solvers.

* :func:`brute_force_min_hitting_set` and :func:`bounded_search_hitting_set`
  are the reference oracles.
* :func:`solve_vc1` and :func:`solve_dual_vc1` handle systems whose primal
  or dual VC-dimension is at most one.
* :func:`solve_35` handles (3,5)-systems: reduction rules down to an Edge
  Cover instance, then a matching.
* :func:`solve_auto` dispatches between them, ending in a greedy fallback.

Solutions are always reported in the element indices of the input system
and re-verified against it before being returned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

import numpy as np

from .core import (
    HittingSet,
    InternalError,
    InvalidInputError,
    NoSolutionError,
    ResourceLimitError,
    SetSystem,
    _mask_to_tuple,
    verify_hitting_set,
)
from .matching import SimpleGraph, min_edge_cover
from .vc import alpha_beta_profile, vc_dimension

__all__ = [
    "Status",
    "TraceStep",
    "SolveResult",
    "PreprocessState",
    "ORACLE_BOUND",
    "brute_force_min_hitting_set",
    "bounded_search_hitting_set",
    "dominates",
    "solve_vc1",
    "solve_dual_vc1",
    "preprocess_35",
    "replay_trace",
    "solve_35",
    "greedy_hitting_set",
    "solve_auto",
    "format_trace",
]

ORACLE_BOUND = 20


class Status(enum.Enum):
    SOLVED = "solved"
    NO_SOLUTION = "no-solution"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class TraceStep:
    """One applied reduction rule and exactly what it removed or picked."""

    step: int
    action: str
    picked: tuple[int, ...] = ()
    removed_elements: tuple[int, ...] = ()
    removed_sets: tuple[int, ...] = ()
    note: str = ""
    because: tuple[int, ...] = ()  # ids the note refers to

    def format(self, base: int = 0) -> str:
        def ids(xs):
            return ",".join(str(x + base) for x in xs) or "-"

        line = (
            f"step {self.step} {self.action} picked={ids(self.picked)} "
            f"elements={ids(self.removed_elements)} sets={ids(self.removed_sets)}"
        )
        note = f"{self.note} {ids(self.because)}" if self.because else self.note
        return f"{line} {note}" if note else line


def format_trace(trace, base: int = 0) -> str:
    return "".join(s.format(base) + "\n" for s in trace)


@dataclass
class SolveResult:
    status: Status
    solution: Optional[HittingSet] = None
    trace: list[TraceStep] = field(default_factory=list)
    method: str = ""
    exact: bool = True
    reason: str = ""
    witness: tuple[int, ...] = ()

    @property
    def size(self) -> Optional[int]:
        return None if self.solution is None else self.solution.size


def _no_solution(method: str) -> SolveResult:
    return SolveResult(Status.NO_SOLUTION, method=method, reason="the empty set is a member")


def _solved(F: SetSystem, elements, method: str, **kw) -> SolveResult:
    hs = HittingSet(elements)
    if not verify_hitting_set(F, hs.elements):
        raise InternalError(f"{method} produced a non-hitting set {hs.elements}")
    return SolveResult(Status.SOLVED, hs, method=method, **kw)


def _smallest_hitting_subset(F: SetSystem, max_size: int, pool=None):
    """Lexicographically first smallest hitting set of size <= max_size."""
    pool = range(F.universe_size) if pool is None else sorted(pool)
    emask = F.element_masks
    full = (1 << F.num_sets) - 1
    for k in range(max_size + 1):
        for combo in combinations(pool, k):
            acc = 0
            for e in combo:
                acc |= emask[e]
            if acc == full:
                return combo
    return None


# ---------------------------------------------------------------- oracles


def brute_force_min_hitting_set(
    F: SetSystem,
    size_cap: Optional[int] = None,
    bound: int = ORACLE_BOUND,
    override: bool = False,
) -> SolveResult:
    """Minimum hitting set by enumerating subsets in increasing size.

    Each size class is enumerated in lexicographic order, so the answer is
    the lexicographically first optimum.
    """
    if F.universe_size > bound and not override:
        raise ResourceLimitError(
            f"universe of {F.universe_size} elements exceeds oracle bound {bound}"
        )
    if F.has_empty_set:
        return _no_solution("brute")
    n, m = F.universe_size, F.num_sets
    top = n if size_cap is None else min(size_cap, n)
    if m == 0:
        return _solved(F, (), "brute")
    if m > 62:
        combo = _smallest_hitting_subset(F, top)
        if combo is None:
            return SolveResult(Status.NOT_APPLICABLE, method="brute",
                               reason=f"no hitting set of size <= {top}")
        return _solved(F, combo, "brute")
    emask = np.array(F.element_masks, dtype=np.int64)
    full = (1 << m) - 1
    for k in range(1, top + 1):
        combos = np.array(list(combinations(range(n), k)), dtype=np.int64)
        unions = np.bitwise_or.reduce(emask[combos], axis=1)
        hits = np.flatnonzero(unions == full)
        if hits.size:
            return _solved(F, combos[hits[0]].tolist(), "brute")
    return SolveResult(Status.NOT_APPLICABLE, method="brute",
                       reason=f"no hitting set of size <= {top}")


def bounded_search_hitting_set(
    F: SetSystem, budget: int, node_limit: Optional[int] = None
) -> Optional[HittingSet]:
    """A hitting set of size at most ``budget``, or None if none exists.

    Exhaustive bounded search tree: some element of any unhit set must be in
    the answer, so branch over the elements of a smallest unhit set. Branches
    are cut when a greedy packing of pairwise disjoint unhit sets already
    needs more elements than the remaining budget.
    """
    if F.has_empty_set:
        return None
    masks = list(F.set_masks)
    emask = F.element_masks
    nodes = 0

    def packing(unhit):
        used, count = 0, 0
        for i in sorted(unhit, key=lambda i: (bin(masks[i]).count("1"), i)):
            if masks[i] & used == 0:
                used |= masks[i]
                count += 1
        return count

    def search(unhit: list[int], left: int, chosen: list[int]):
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise ResourceLimitError(f"search exceeded {node_limit} nodes")
        if not unhit:
            return list(chosen)
        if left == 0 or packing(unhit) > left:
            return None
        target = min(unhit, key=lambda i: (bin(masks[i]).count("1"), i))
        for e in _mask_to_tuple(masks[target]):
            rest = [i for i in unhit if not (emask[e] >> i) & 1]
            chosen.append(e)
            found = search(rest, left - 1, chosen)
            chosen.pop()
            if found is not None:
                return found
        return None

    found = search(list(range(F.num_sets)), budget, [])
    return None if found is None else HittingSet(found)


# ---------------------------------------------------------------- VC-1


def dominates(F: SetSystem, x: int, y: int) -> bool:
    """True iff every set containing ``y`` also contains ``x``."""
    if x == y:
        raise InvalidInputError("domination needs two distinct elements")
    for e in (x, y):
        if not 0 <= e < F.universe_size:
            raise InvalidInputError(f"element {e} is not in the universe")
    em = F.element_masks
    return em[y] & ~em[x] == 0


def solve_vc1(F: SetSystem, guard: bool = True) -> SolveResult:
    if F.has_empty_set:
        return _no_solution("vc1")
    if F.num_sets == 0:
        return _solved(F, (), "vc1")
    if guard:
        rep = vc_dimension(F, cap=2)
        if rep.vc_dim > 1:
            return SolveResult(Status.NOT_APPLICABLE, method="vc1",
                               reason="VC-dimension exceeds 1", witness=rep.witness)
    small = _smallest_hitting_subset(F, 2)
    if small is not None:
        return _solved(F, small, "vc1")

    # No pair hits everything, so on any pair inside a common set patterns
    # 00 and 11 occur; one of 01/10 is missing and that element is deletable.
    sets = [set(s) for s in F.sets]
    trace = []
    while True:
        big = next((s for s in sets if len(s) > 1), None)
        if big is None:
            break
        x, y = sorted(big)[:2]
        holds_x = [x in s for s in sets]
        holds_y = [y in s for s in sets]
        x_dom_y = all(hx for hx, hy in zip(holds_x, holds_y) if hy)
        y_dom_x = all(hy for hx, hy in zip(holds_x, holds_y) if hx)
        if not (x_dom_y or y_dom_x):
            raise InternalError(f"elements {x} and {y} share a set but neither dominates")
        # ties (identical membership) drop the larger index
        drop, keep = (y, x) if x_dom_y else (x, y)
        for s in sets:
            s.discard(drop)
        trace.append(TraceStep(2, "dominated", removed_elements=(drop,),
                               note="by", because=(keep,)))
    picked = sorted({next(iter(s)) for s in sets})
    return _solved(F, picked, "vc1", trace=trace)


def solve_dual_vc1(F: SetSystem, guard: bool = True) -> SolveResult:
    if F.has_empty_set:
        return _no_solution("dualvc1")
    if F.num_sets == 0:
        return _solved(F, (), "dualvc1")
    if guard:
        from .core import dual

        rep = vc_dimension(dual(F), cap=2)
        if rep.vc_dim > 1:
            return SolveResult(Status.NOT_APPLICABLE, method="dualvc1",
                               reason="dual VC-dimension exceeds 1", witness=rep.witness)
    masks = F.set_masks
    minimal = [
        i for i, a in enumerate(masks)
        if not any(j != i and b & ~a == 0 for j, b in enumerate(masks))
    ]
    trace = [
        TraceStep(3, "superset", removed_sets=(i,))
        for i in range(F.num_sets) if i not in set(minimal)
    ]
    union = 0
    disjoint = True
    for i in minimal:
        if masks[i] & union:
            disjoint = False
            break
        union |= masks[i]
    if disjoint:
        picked = [F.sets[i][0] for i in minimal]
        return _solved(F, picked, "dualvc1", trace=trace)
    small = _smallest_hitting_subset(F, 2)
    if small is None:
        raise InternalError("dual VC-dimension 1 system without a hitting set of size 2")
    return _solved(F, small, "dualvc1", trace=trace)


# ---------------------------------------------------------------- (3,5)


@dataclass
class PreprocessState:
    """Working state of the (3,5) reduction rules, in original indices.

    ``sets`` maps surviving original set ids to their current contents;
    ``forced`` holds elements already committed to the solution, including
    whole-component answers found by exhaustive search.
    """

    original: SetSystem
    elements: set[int]
    sets: dict[int, frozenset[int]]
    forced: set[int] = field(default_factory=set)
    removed_elements: list[int] = field(default_factory=list)
    removed_sets: list[int] = field(default_factory=list)
    trace: list[TraceStep] = field(default_factory=list)

    @classmethod
    def start(cls, F: SetSystem) -> "PreprocessState":
        return cls(F, set(range(F.universe_size)),
                   {i: frozenset(s) for i, s in enumerate(F.sets)})

    def current(self) -> tuple[SetSystem, list[int], list[int]]:
        """The residual system re-indexed densely, with the element and set
        id maps back to the original. Sets that have become equal are
        merged (keeping the first), which leaves every projection unchanged."""
        elems = sorted(self.elements)
        pos = {e: i for i, e in enumerate(elems)}
        ids = sorted(self.sets)
        system, dropped = SetSystem.lenient(
            len(elems), [[pos[e] for e in self.sets[i]] for i in ids]
        )
        dropped = set(dropped)
        keep = [sid for k, sid in enumerate(ids) if k not in dropped]
        return system, elems, keep

    def apply(self, step: TraceStep) -> None:
        self.forced.update(step.picked)
        for e in step.removed_elements:
            self.elements.discard(e)
            self.removed_elements.append(e)
        gone = set(step.removed_elements)
        if gone:
            for sid in list(self.sets):
                if self.sets[sid] & gone:
                    self.sets[sid] = self.sets[sid] - gone
        for sid in step.removed_sets:
            del self.sets[sid]
            self.removed_sets.append(sid)
        self.trace.append(step)


def _components(elements, sets) -> list[tuple[set[int], list[int]]]:
    """Connected components of the element/set incidence graph."""
    holders: dict[int, list[int]] = {e: [] for e in elements}
    for sid, s in sets.items():
        for e in s:
            holders[e].append(sid)
    seen_e: set[int] = set()
    out = []
    for start in sorted(elements):
        if start in seen_e:
            continue
        comp_e, comp_s = {start}, set()
        stack = [start]
        seen_e.add(start)
        while stack:
            e = stack.pop()
            for sid in holders[e]:
                if sid in comp_s:
                    continue
                comp_s.add(sid)
                for f in sets[sid]:
                    if f not in seen_e:
                        seen_e.add(f)
                        comp_e.add(f)
                        stack.append(f)
        out.append((comp_e, sorted(comp_s)))
    return out


def _next_step(state: PreprocessState, elems: set[int], sids: list[int]) -> Optional[TraceStep]:
    """The lowest-numbered rule among 1..5 applicable to a connected part."""
    sets = state.sets
    if not sids:
        return None
    full = (1 << len(sids)) - 1
    hold = {e: 0 for e in elems}
    for bit, sid in enumerate(sids):
        for e in sets[sid]:
            hold[e] |= 1 << bit
    order = sorted(elems)

    # step 1: a triple meets every set, so the optimum has size <= 3
    if len(order) < 3:
        triple = tuple(order)
    else:
        triple = next((t for t in combinations(order, 3)
                       if hold[t[0]] | hold[t[1]] | hold[t[2]] == full), None)
    if triple is not None:
        for k in range(4):
            best = next((c for c in combinations(order, k)
                         if _union(hold, c) == full), None)
            if best is not None:
                return TraceStep(1, "exhaustive", picked=best,
                                 removed_elements=tuple(order), removed_sets=tuple(sids),
                                 note="via", because=tuple(triple))
        raise InternalError(f"triple {triple} meets every set but no hitting set found")

    # step 2: x dominates y; identical pairs drop the larger index
    for y in order:
        for x in order:
            if x == y or hold[y] & ~hold[x]:
                continue
            if hold[x] == hold[y] and y < x:
                continue
            return TraceStep(2, "dominated", removed_elements=(y,), note="by", because=(x,))

    # step 3: B contains A; equal sets drop the larger id
    smask = {sid: sum(1 << e for e in sets[sid]) for sid in sids}
    for b in sids:
        for a in sids:
            if a == b or smask[a] & ~smask[b]:
                continue
            if smask[a] == smask[b] and b < a:
                continue
            return TraceStep(3, "superset", removed_sets=(b,), note="contains", because=(a,))

    # step 4: a singleton set forces its element
    pick = next((min(sets[sid]) for sid in sids if len(sets[sid]) == 1), None)
    rule = 4
    if pick is None:
        # step 5: an element in three or more sets is in every optimum
        pick = next((e for e in order if bin(hold[e]).count("1") >= 3), None)
        rule = 5
    if pick is None:
        return None
    hit = tuple(sid for sid in sids if pick in sets[sid])
    return TraceStep(rule, "pick", picked=(pick,), removed_elements=(pick,), removed_sets=hit)


def _union(masks, keys) -> int:
    acc = 0
    for k in keys:
        acc |= masks[k]
    return acc


def _check_fixpoint(state: PreprocessState) -> None:
    sets = state.sets
    for e in state.elements:
        deg = sum(1 for s in sets.values() if e in s)
        if deg != 2:
            raise InternalError(f"element {e} has degree {deg} at the fixpoint")
    ids = sorted(sets)
    for a, b in combinations(ids, 2):
        if len(sets[a] & sets[b]) > 1:
            raise InternalError(f"sets {a} and {b} share more than one element")


def preprocess_35(
    F: SetSystem,
    guard: bool = True,
    on_step: Optional[Callable[[PreprocessState, TraceStep], None]] = None,
) -> PreprocessState | SolveResult:
    """Apply the (3,5) reduction rules until none applies.

    Rule 0 (split into incidence components) is checked first on every
    round; each component then receives the lowest-numbered applicable rule
    among 1..5. Components where rule 1 fires are solved outright and their
    answer lands in ``forced``. Returns a :class:`SolveResult` instead when
    the input has no solution or fails the guard.

    ``on_step`` is called after every applied rule.
    """
    if F.has_empty_set:
        return _no_solution("sys35")
    if guard:
        prof = alpha_beta_profile(F, 3)
        if prof.beta > 5:
            return SolveResult(Status.NOT_APPLICABLE, method="sys35",
                               reason=f"(3,5) property fails: {prof.beta} traces",
                               witness=prof.witness)
    state = PreprocessState.start(F)
    active = [(set(state.elements), sorted(state.sets))]
    while active:
        elems, sids = active.pop()
        elems &= state.elements
        sids = [s for s in sids if s in state.sets]
        if not sids:
            if elems:
                step = TraceStep(0, "split", removed_elements=tuple(sorted(elems)),
                                 note="no sets left")
                state.apply(step)
                if on_step:
                    on_step(state, step)
            continue
        comps = _components(elems, {s: state.sets[s] for s in sids})
        if len(comps) > 1:
            loose = tuple(sorted(e for ce, cs in comps if not cs for e in ce))
            step = TraceStep(0, "split", removed_elements=loose,
                             note=f"{len(comps)} components")
            state.apply(step)
            if on_step:
                on_step(state, step)
            active.extend((ce, cs) for ce, cs in reversed(comps) if cs)
            continue
        step = _next_step(state, elems, sids)
        if step is None:
            continue
        state.apply(step)
        if on_step:
            on_step(state, step)
        active.append((elems, sids))
    _check_fixpoint(state)
    return state


def replay_trace(F: SetSystem, trace) -> PreprocessState:
    """Re-apply recorded steps to ``F`` without searching for them."""
    state = PreprocessState.start(F)
    for step in trace:
        state.apply(step)
    return state


def solve_35(F: SetSystem, guard: bool = True, on_step=None) -> SolveResult:
    pre = preprocess_35(F, guard=guard, on_step=on_step)
    if isinstance(pre, SolveResult):
        return pre
    picked = set(pre.forced)
    if pre.sets:
        # residual is an Edge Cover instance: sets are vertices, elements edges
        sids = sorted(pre.sets)
        vid = {sid: i for i, sid in enumerate(sids)}
        ends: dict[int, list[int]] = {e: [] for e in sorted(pre.elements)}
        for sid in sids:
            for e in pre.sets[sid]:
                ends[e].append(vid[sid])
        elems = sorted(ends)
        graph = SimpleGraph(len(sids), [tuple(ends[e]) for e in elems])
        cover = min_edge_cover(graph)
        picked.update(elems[i] for i in cover)
        pre.trace.append(TraceStep(6, "edge-cover", picked=tuple(elems[i] for i in cover),
                                   note=f"{len(sids)} vertices {len(elems)} edges"))
    return _solved(F, picked, "sys35", trace=pre.trace)


# ---------------------------------------------------------------- baseline


def greedy_hitting_set(F: SetSystem) -> HittingSet:
    """Repeatedly take the element hitting most unhit sets (smallest index
    on ties). Valid, not necessarily minimum."""
    if F.has_empty_set:
        raise NoSolutionError("the empty set is a member")
    unhit = (1 << F.num_sets) - 1
    emask = F.element_masks
    picked = []
    while unhit:
        best = max(range(F.universe_size), key=lambda e: (bin(emask[e] & unhit).count("1"), -e))
        picked.append(best)
        unhit &= ~emask[best]
    return HittingSet(picked)


def solve_auto(F: SetSystem, bound: int = ORACLE_BOUND) -> SolveResult:
    """Try vc1, dual vc1, (3,5), brute force, then greedy, in that order."""
    if F.has_empty_set:
        return _no_solution("auto")
    tried = []
    for solver in (solve_vc1, solve_dual_vc1, solve_35):
        res = solver(F)
        if res.status is not Status.NOT_APPLICABLE:
            return res
        tried.append(res.method)
    if F.universe_size <= bound:
        return brute_force_min_hitting_set(F, bound=bound)
    return SolveResult(Status.SOLVED, greedy_hitting_set(F), method="greedy",
                       exact=False, reason="no exact route applies; "
                       + ", ".join(tried) + " declined")
