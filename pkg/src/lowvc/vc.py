"""VC-dimension, dual VC-dimension and (alpha, beta)-profiles.

All scans go through :func:`_distinct_counts`, which evaluates the projection
size of many candidate subsets at once on the incidence matrix. Subsets are
always visited in lexicographic order so reported witnesses are the
lexicographically smallest ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional

import numpy as np

from .core import InvalidInputError, SetSystem, dual

__all__ = [
    "VcReport",
    "AlphaBetaProfile",
    "vc_dimension",
    "dual_vc_dimension",
    "alpha_beta_profile",
    "is_ab_system",
    "sauer_shelah_bound",
    "sauer_shelah_check",
]

# Upper bound on (rows x candidates) cells materialized per batch.
_BATCH_CELLS = 1 << 22


@dataclass(frozen=True)
class VcReport:
    vc_dim: int
    witness: tuple[int, ...]
    capped: bool = False
    exact: bool = True
    dual_vc_dim: Optional[int] = None


@dataclass(frozen=True)
class AlphaBetaProfile:
    alpha: int
    beta: int
    witness: tuple[int, ...]


def _distinct_counts(mat: np.ndarray, cands: np.ndarray) -> np.ndarray:
    """Number of distinct rows of ``mat[:, c]`` for every row ``c`` of ``cands``."""
    m = mat.shape[0]
    c, d = cands.shape
    if m == 0:
        return np.zeros(c, dtype=np.int64)
    if d == 0:
        return np.ones(c, dtype=np.int64)
    codes = np.zeros((m, c), dtype=np.int64)
    for j in range(d):
        codes |= mat[:, cands[:, j]].astype(np.int64) << j
    codes.sort(axis=0)
    return 1 + np.count_nonzero(np.diff(codes, axis=0), axis=0)


def _batches(cands: Iterable[tuple[int, ...]], d: int, rows: int) -> Iterator[np.ndarray]:
    size = max(1, _BATCH_CELLS // max(1, rows))
    buf: list[tuple[int, ...]] = []
    for c in cands:
        buf.append(c)
        if len(buf) == size:
            yield np.array(buf, dtype=np.int64).reshape(-1, d)
            buf = []
    if buf:
        yield np.array(buf, dtype=np.int64).reshape(-1, d)


def _first_reaching(mat, cands, d, target):
    """First candidate (in iteration order) whose projection size is ``target``."""
    for batch in _batches(cands, d, mat.shape[0]):
        hit = np.flatnonzero(_distinct_counts(mat, batch) >= target)
        if hit.size:
            return tuple(int(x) for x in batch[hit[0]])
    return None


def _all_reaching(mat, cands, d, target) -> list[tuple[int, ...]]:
    out = []
    for batch in _batches(cands, d, mat.shape[0]):
        for row in batch[_distinct_counts(mat, batch) >= target]:
            out.append(tuple(int(x) for x in row))
    return out


def _extend(shattered: list[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    """Apriori join: size-(d+1) candidates all of whose d-subsets are shattered.

    Shattered sets are closed under taking subsets, so this loses nothing.
    ``shattered`` must be sorted; output comes out in lexicographic order.
    """
    known = set(shattered)
    by_prefix: dict[tuple[int, ...], list[int]] = {}
    for s in shattered:
        by_prefix.setdefault(s[:-1], []).append(s[-1])
    for s in shattered:
        for last in by_prefix[s[:-1]]:
            if last <= s[-1]:
                continue
            cand = s + (last,)
            if all(cand[:i] + cand[i + 1:] in known for i in range(len(cand) - 2)):
                yield cand


def vc_dimension(F: SetSystem, cap: Optional[int] = None, exact: bool = True) -> VcReport:
    """Size of the largest shattered subset, by increasing-size search.

    With ``cap``, the search stops once a shattered set of size ``cap`` is
    found and the report is marked ``capped``. With ``exact=False`` the size
    ``d+1`` search only extends the current witness, which is fast but may
    underestimate; such reports carry ``exact=False``.
    """
    if F.num_sets == 0:
        raise InvalidInputError("VC-dimension needs a non-empty collection")
    if cap is not None and cap < 0:
        raise InvalidInputError("cap must be non-negative")
    mat = F.incidence_matrix()
    # Only elements lying in some but not all sets can be in a shattered set.
    col = mat.sum(axis=0)
    useful = [e for e in range(F.universe_size) if 0 < col[e] < F.num_sets]
    limit = F.num_sets.bit_length() - 1  # 2**d distinct rows needed

    witness: tuple[int, ...] = ()
    level = [()]
    d = 0
    while True:
        if cap is not None and d >= cap:
            return VcReport(d, witness, capped=True, exact=exact)
        if d + 1 > limit:
            break
        if d == 0:
            cands: Iterable[tuple[int, ...]] = ((e,) for e in useful)
        elif exact:
            cands = _extend(level)
        else:
            cands = (
                tuple(sorted(witness + (e,))) for e in useful if e not in witness
            )
            cands = sorted(set(cands))
        if exact and (cap is None or d + 1 < cap):
            level = _all_reaching(mat, cands, d + 1, 1 << (d + 1))
            found = level[0] if level else None
        else:
            found = _first_reaching(mat, cands, d + 1, 1 << (d + 1))
        if found is None:
            break
        witness = found
        d += 1
    return VcReport(d, witness, capped=False, exact=exact)


def dual_vc_dimension(F: SetSystem, cap: Optional[int] = None) -> int:
    """VC-dimension of the transposed system (witness indices are sets of F)."""
    return vc_dimension(dual(F), cap=cap).vc_dim


def alpha_beta_profile(F: SetSystem, alpha: int) -> AlphaBetaProfile:
    """Largest projection size over subsets of at most ``alpha`` elements.

    Projection size is monotone under inclusion, so only subsets of size
    ``min(alpha, n)`` are scanned. An empty collection has ``beta = 0``.
    """
    if alpha < 1:
        raise InvalidInputError("alpha must be at least 1")
    size = min(alpha, F.universe_size)
    if F.num_sets == 0:
        return AlphaBetaProfile(alpha, 0, tuple(range(size)))
    if size == 0:
        return AlphaBetaProfile(alpha, 1, ())
    mat = F.incidence_matrix()
    best, witness = 0, ()
    for batch in _batches(combinations(range(F.universe_size), size), size, mat.shape[0]):
        counts = _distinct_counts(mat, batch)
        i = int(np.argmax(counts))
        if counts[i] > best:
            best, witness = int(counts[i]), tuple(int(x) for x in batch[i])
    return AlphaBetaProfile(alpha, best, witness)


def is_ab_system(F: SetSystem, alpha: int, beta: int) -> bool:
    if beta < 1:
        raise InvalidInputError("beta must be at least 1")
    return alpha_beta_profile(F, alpha).beta <= beta


def sauer_shelah_bound(n: int, d: int) -> int:
    return sum(comb(n, j) for j in range(d + 1))


def sauer_shelah_check(F: SetSystem) -> bool:
    if F.num_sets == 0:
        return True
    return F.num_sets <= sauer_shelah_bound(F.universe_size, vc_dimension(F).vc_dim)
