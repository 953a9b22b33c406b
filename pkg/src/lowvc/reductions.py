"""Certified instance generators for the two hardness constructions.

``psi_to_hitting_set`` turns a Partitioned Subgraph Isomorphism instance into
a Hitting Set instance of VC-dimension and dual VC-dimension two: a hitting
set of size ``budget`` exists iff the host graph contains the pattern across
the prescribed parts. Every element belongs to exactly one *ground set*; a
solution of size ``budget`` takes one element from each, and those choices
spell out the embedding.

``split_edges_triangle_free`` and ``vertex_cover_system`` produce Vertex
Cover instances on triangle-free graphs, which are (3,6)-systems.

Indexing: parts, host vertices and pattern vertices are 0-based; ground-set
levels are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .core import (
    HittingSet,
    InternalError,
    InvalidInputError,
    ResourceLimitError,
    SetSystem,
    projection,
    verify_hitting_set,
)
from .matching import SimpleGraph
from .vc import dual_vc_dimension, vc_dimension

__all__ = [
    "PsiInstance",
    "GroundSet",
    "ReductionLayout",
    "normalize_psi",
    "psi_embeddings",
    "psi_to_hitting_set",
    "embedding_to_solution",
    "extract_embedding",
    "verify_reduction_vc",
    "split_edges_triangle_free",
    "vertex_cover_system",
    "find_bk_system",
]


@dataclass(frozen=True)
class PsiInstance:
    host: SimpleGraph
    partition: tuple[int, ...]
    pattern: SimpleGraph

    def __init__(self, host: SimpleGraph, partition: Sequence[int], pattern: SimpleGraph):
        partition = tuple(partition)
        if len(partition) != host.vertex_count:
            raise InvalidInputError(
                f"partition assigns {len(partition)} of {host.vertex_count} host vertices"
            )
        for v, p in enumerate(partition):
            if not 0 <= p < pattern.vertex_count:
                raise InvalidInputError(f"host vertex {v} is in unknown part {p}")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "partition", partition)
        object.__setattr__(self, "pattern", pattern)

    @property
    def t(self) -> int:
        return self.pattern.vertex_count

    @property
    def k(self) -> int:
        return len(self.pattern.edges)

    def part(self, i: int) -> tuple[int, ...]:
        return tuple(v for v, p in enumerate(self.partition) if p == i)

    def cross_edges(self, i: int, j: int) -> list[tuple[int, int]]:
        """Ordered host edges ``uv`` with ``u`` in part i and ``v`` in part j,
        lexicographically sorted."""
        out = []
        for u, v in self.host.edges:
            for a, b in ((u, v), (v, u)):
                if self.partition[a] == i and self.partition[b] == j:
                    out.append((a, b))
        return sorted(out)

    def pattern_neighbours(self, i: int) -> list[int]:
        return sorted({b for a, b in _directed(self.pattern.edges) if a == i})


def _directed(edges) -> list[tuple[int, int]]:
    return sorted({(u, v) for u, v in edges} | {(v, u) for u, v in edges})


def normalize_psi(inst: PsiInstance) -> PsiInstance:
    """Pad the instance until the pattern has as many vertices as edges.

    Excess edges are balanced by isolated pattern vertices, each with a
    one-vertex host part. Excess vertices are balanced by gadgets of a K4
    plus an isolated vertex (five vertices, six edges), mirrored in the host
    by five one-vertex parts. Both paddings always embed, so solvability is
    unchanged.
    """
    t, k = inst.t, inst.k
    hn = inst.host.vertex_count
    host_edges = list(inst.host.edges)
    pat_edges = list(inst.pattern.edges)
    partition = list(inst.partition)
    while k > t:
        partition.append(t)
        hn += 1
        t += 1
    while k < t:
        quad = range(t, t + 4)
        pat_edges += list(combinations(quad, 2))
        host_edges += list(combinations(range(hn, hn + 4), 2))
        partition += list(range(t, t + 5))
        hn += 5
        t += 5
        k += 6
    return PsiInstance(SimpleGraph(hn, host_edges), partition, SimpleGraph(t, pat_edges))


def psi_embeddings(inst: PsiInstance) -> Iterable[tuple[int, ...]]:
    """All partition-respecting copies of the pattern, by brute force."""
    parts = [inst.part(i) for i in range(inst.t)]
    host_edges = {frozenset(e) for e in inst.host.edges}
    for choice in product(*parts):
        if all(frozenset((choice[i], choice[j])) in host_edges
               for i, j in inst.pattern.edges):
            yield choice


@dataclass(frozen=True)
class GroundSet:
    tag: tuple  # ("X", i, level) or ("Y", i, j, level)
    elements: tuple[int, ...]


@dataclass
class ReductionLayout:
    """Maps the generated system back to the PSI objects it encodes.

    ``element_keys[e]`` is ``(ground set tag, key)`` where the key is a host
    vertex for X ground sets and an ordered host edge for Y ground sets.
    ``set_labels[c]`` lists every construction label that produced
    collection member ``c`` (coinciding sets are stored once).
    ``nominal_budget`` is 9k, the closed-form count 5|F| + sum 2 deg(i)
    that takes one orientation per Y ground set; ``budget`` counts what is
    actually built (both orientations, 14k).
    """

    system: SetSystem
    num_parts: int
    ground_sets: list[GroundSet]
    element_keys: list[tuple[tuple, object]]
    set_labels: list[list[tuple[tuple, object]]]
    budget: int
    nominal_budget: int

    @property
    def element_index(self) -> dict:
        return {key: e for e, key in enumerate(self.element_keys)}

    @property
    def set_index(self) -> dict:
        return {lab: c for c, labs in enumerate(self.set_labels) for lab in labs}


def psi_to_hitting_set(inst: PsiInstance) -> tuple[SetSystem, int, ReductionLayout]:
    """Build the Hitting Set instance for a normalized PSI instance.

    Returns ``(system, budget, layout)``; ``budget`` is the number of ground
    sets actually constructed. Y ground sets exist for both orientations of
    every pattern edge. If any part or any cross-edge class of a pattern
    edge is empty, the empty set is added, making the instance unsolvable,
    exactly like the PSI instance it encodes.
    """
    if inst.t != inst.k:
        raise InvalidInputError(
            f"instance is not normalized: {inst.t} pattern vertices, {inst.k} edges"
        )
    t = inst.t
    parts = [inst.part(i) for i in range(t)]
    nbrs = [inst.pattern_neighbours(i) for i in range(t)]
    darcs = _directed(inst.pattern.edges)
    cross = {ij: inst.cross_edges(*ij) for ij in darcs}

    ground_sets: list[GroundSet] = []
    element_keys: list[tuple[tuple, object]] = []
    index: dict[tuple[tuple, object], int] = {}

    def add_ground(tag, keys):
        ids = []
        for key in keys:
            index[(tag, key)] = len(element_keys)
            ids.append(len(element_keys))
            element_keys.append((tag, key))
        ground_sets.append(GroundSet(tag, tuple(ids)))

    xlevels = [2 * len(nbrs[i]) for i in range(t)]
    for i in range(t):
        for lvl in range(1, xlevels[i] + 1):
            add_ground(("X", i, lvl), parts[i])
    for i, j in darcs:
        for lvl in range(1, 6):
            add_ground(("Y", i, j, lvl), cross[(i, j)])

    def x(i, u, lvl):
        return index[(("X", i, lvl), u)]

    def y(i, j, uv, lvl):
        return index[(("Y", i, j, lvl), uv)]

    raw: list[tuple[tuple, object, list[int]]] = []
    for i in range(t):
        top = xlevels[i]
        for lvl in range(1, top + 1):
            nxt = lvl % top + 1
            for u in parts[i]:
                members = [x(i, v, lvl) for v in parts[i] if v < u]
                members += [x(i, v, nxt) for v in parts[i] if v >= u]
                raw.append((("A", i, lvl), u, members))
    for i, j in darcs:
        es = cross[(i, j)]
        for lvl in range(1, 6):
            nxt = lvl % 5 + 1
            for uv in es:
                members = [y(i, j, wz, lvl) for wz in es if wz < uv]
                members += [y(i, j, wz, nxt) for wz in es if wz >= uv]
                raw.append((("B", i, j, lvl), uv, members))
    for i, j in darcs:
        d = nbrs[i].index(j) + 1
        es = cross[(i, j)]
        for u in parts[i]:
            members = [x(i, v, 2 * d - 1) for v in parts[i] if v < u]
            members += [y(i, j, wz, 1) for wz in es if wz[0] >= u]
            raw.append((("C", i, j), u, members))
            members = [x(i, v, 2 * d) for v in parts[i] if v > u]
            members += [y(i, j, wz, 2) for wz in es if wz[0] <= u]
            raw.append((("C'", i, j), u, members))
    for i, j in darcs:
        if i > j:
            continue
        es = cross[(i, j)]
        for uv in es:
            members = [y(i, j, wz, 3) for wz in es if wz < uv]
            members += [y(i, j, wz, 5) for wz in es if wz > uv]
            members.append(y(j, i, (uv[1], uv[0]), 4))
            raw.append((("D", i, j), uv, members))
    if any(not p for p in parts) or any(not g.elements for g in ground_sets):
        raw.append((("EMPTY",), None, []))

    sets: list[tuple[int, ...]] = []
    labels: list[list[tuple[tuple, object]]] = []
    where: dict[tuple[int, ...], int] = {}
    for tag, key, members in raw:
        canon = tuple(sorted(members))
        if canon not in where:
            where[canon] = len(sets)
            sets.append(canon)
            labels.append([])
        labels[where[canon]].append((tag, key))

    system = SetSystem(len(element_keys), sets)
    budget = len(ground_sets)
    layout = ReductionLayout(system, t, ground_sets, element_keys, labels,
                             budget, nominal_budget=9 * inst.k)
    return system, budget, layout


def _check_assignment(inst: PsiInstance, assignment: Sequence[int]) -> None:
    if len(assignment) != inst.t:
        raise InvalidInputError(f"assignment has {len(assignment)} of {inst.t} parts")
    for i, u in enumerate(assignment):
        if not 0 <= u < inst.host.vertex_count or inst.partition[u] != i:
            raise InvalidInputError(f"vertex {u} is not in part {i}")
    for i, j in inst.pattern.edges:
        if not inst.host.has_edge(assignment[i], assignment[j]):
            raise InvalidInputError(
                f"pattern edge ({i}, {j}) maps to non-edge "
                f"({assignment[i]}, {assignment[j]})"
            )


def embedding_to_solution(
    inst: PsiInstance, layout: ReductionLayout, assignment: Sequence[int]
) -> HittingSet:
    """One element per ground set: vertex ``u_i`` on every X_i level and edge
    ``u_i u_j`` on every Y_ij level."""
    _check_assignment(inst, assignment)
    index = layout.element_index
    picked = []
    for g in layout.ground_sets:
        if g.tag[0] == "X":
            key = assignment[g.tag[1]]
        else:
            key = (assignment[g.tag[1]], assignment[g.tag[2]])
        picked.append(index[(g.tag, key)])
    return HittingSet(picked)


def extract_embedding(
    inst: Optional[PsiInstance], layout: ReductionLayout, S: Iterable[int]
) -> tuple[Optional[int], ...]:
    """Read the embedding off a hitting set of size ``budget``.

    Parts without ground sets (isolated pattern vertices) take the smallest
    vertex of their part when ``inst`` is given, and ``None`` otherwise.
    """
    chosen = set(S)
    if len(chosen) != layout.budget:
        raise InvalidInputError(f"solution has {len(chosen)} elements, budget is {layout.budget}")
    if not verify_hitting_set(layout.system, chosen):
        raise InvalidInputError("solution does not hit every set")
    vertex: dict[int, int] = {}
    edge: dict[tuple[int, int], tuple[int, int]] = {}
    for g in layout.ground_sets:
        picks = [e for e in g.elements if e in chosen]
        if len(picks) != 1:
            raise InternalError(f"ground set {g.tag} holds {len(picks)} solution elements")
        key = layout.element_keys[picks[0]][1]
        slot, store = ((g.tag[1], vertex) if g.tag[0] == "X"
                       else ((g.tag[1], g.tag[2]), edge))
        if store.setdefault(slot, key) != key:
            raise InternalError(f"ground set {g.tag} disagrees with an earlier level")
    for (i, j), (v, w) in edge.items():
        if vertex.get(i) != v or vertex.get(j) != w or edge.get((j, i)) != (w, v):
            raise InternalError(f"edge choice {(v, w)} for pattern edge {(i, j)} is inconsistent")
    assignment: list[Optional[int]] = [vertex.get(i) for i in range(layout.num_parts)]
    if inst is not None:
        for i, u in enumerate(assignment):
            if u is None:
                part = inst.part(i)
                assignment[i] = part[0] if part else None
        try:
            _check_assignment(inst, assignment)  # type: ignore[arg-type]
        except InvalidInputError as exc:
            raise InternalError(f"extracted assignment is not a copy: {exc}") from exc
    return tuple(assignment)


def verify_reduction_vc(
    F: SetSystem, cap: int = 3, max_elements: int = 400, max_sets: int = 1000
) -> tuple[int, int]:
    """Capped primal and dual VC-dimension of a generated instance."""
    if F.universe_size > max_elements or F.num_sets > max_sets:
        raise ResourceLimitError(
            f"{F.universe_size} elements / {F.num_sets} sets exceed the capped-search budget"
        )
    return vc_dimension(F, cap=cap).vc_dim, dual_vc_dimension(F, cap=cap)


def split_edges_triangle_free(G: SimpleGraph) -> tuple[SimpleGraph, int]:
    """Subdivide every edge twice. Returns the new graph and the amount by
    which the minimum vertex cover grows (the number of edges)."""
    n = G.vertex_count
    edges = []
    for eid, (u, v) in enumerate(G.edges):
        a, b = n + 2 * eid, n + 2 * eid + 1
        edges += [(u, a), (a, b), (b, v)]
    return SimpleGraph(n + 2 * len(G.edges), edges), len(G.edges)


def vertex_cover_system(G: SimpleGraph) -> SetSystem:
    return SetSystem(G.vertex_count, [sorted(e) for e in G.edges])


def find_bk_system(F: SetSystem, k: int) -> Optional[tuple[int, ...]]:
    """First k-subset whose trace contains every (k-1)-subset and no set of
    size 1..k-2."""
    if k < 4:
        raise InvalidInputError("B_k systems need k >= 4")
    for Y in combinations(range(F.universe_size), k):
        tr = projection(F, Y)
        if any(0 < len(s) <= k - 2 for s in tr):
            continue
        if all(c in tr for c in combinations(Y, k - 1)):
            return Y
    return None
