"""Maximum cardinality matching in general graphs, and minimum edge cover.

The matching routine is Edmonds' blossom algorithm in its array form: one
BFS per exposed root, shrinking odd cycles by relabelling their base. It runs
in O(V^3). Vertices and edges are always scanned in id order, so results are
reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import InvalidInputError

__all__ = ["SimpleGraph", "NoCoverError", "max_matching", "min_edge_cover"]


class NoCoverError(InvalidInputError):
    """An isolated vertex makes an edge cover impossible."""

    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is isolated; no edge cover exists")
        self.vertex = vertex


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph. Edge ids are positions in ``edges``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise InvalidInputError("vertex_count must be non-negative")
        norm = []
        seen = set()
        for i, (u, v) in enumerate(edges):
            if u == v:
                raise InvalidInputError(f"edge {i} is a self-loop at {u}")
            for x in (u, v):
                if not 0 <= x < vertex_count:
                    raise InvalidInputError(f"edge {i}: vertex {x} out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidInputError(f"edge {i} ({u}, {v}) is a parallel edge")
            seen.add(key)
            norm.append((u, v))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(norm))

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per vertex, ``(neighbour, edge id)`` pairs in edge-id order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges


def _augment_from(root, adj, mate, n):
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to, _ in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                # odd cycle: contract it onto its base
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                in_tree[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def max_matching(G: SimpleGraph) -> tuple[int, ...]:
    """Edge ids of a maximum-cardinality matching, ascending."""
    n = G.vertex_count
    adj = G.adjacency()
    mate = [-1] * n
    for root in range(n):
        if mate[root] != -1:
            continue
        v, parent = _augment_from(root, adj, mate, n)
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt
    return tuple(eid for eid, (u, v) in enumerate(G.edges) if mate[u] == v)


def min_edge_cover(G: SimpleGraph) -> tuple[int, ...]:
    """Edge ids of a minimum edge cover: a maximum matching plus, for every
    vertex it leaves exposed, that vertex's smallest-id incident edge."""
    adj = G.adjacency()
    for v in range(G.vertex_count):
        if not adj[v]:
            raise NoCoverError(v)
    chosen = set(max_matching(G))
    covered = set()
    for eid in chosen:
        covered.update(G.edges[eid])
    for v in range(G.vertex_count):
        if v not in covered:
            chosen.add(adj[v][0][1])
    return tuple(sorted(chosen))
