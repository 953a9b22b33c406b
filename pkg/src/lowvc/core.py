"""Set systems and their primitive predicates.

A set system is a universe of ``n`` elements, identified by the integers
``0..n-1``, together with a duplicate-free collection of subsets. Every set is
stored as a strictly increasing tuple of element indices, and mirrored as an
integer bitmask so that projections and hitting checks reduce to bit
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

__all__ = [
    "InvalidInputError",
    "ParseError",
    "ResourceLimitError",
    "InternalError",
    "NoSolutionError",
    "SetSystem",
    "HittingSet",
    "as_pattern",
    "projection",
    "projection_size",
    "is_shattered",
    "realizes_pattern",
    "dual",
    "verify_hitting_set",
]


class InvalidInputError(ValueError):
    """Raised when an argument violates a documented precondition."""


class ParseError(InvalidInputError):
    """Malformed instance text. Carries 1-based ``line`` and ``column``."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ResourceLimitError(RuntimeError):
    """Raised when an exhaustive routine would exceed its configured bound."""


class InternalError(RuntimeError):
    """An internal consistency check failed. Always indicates a bug, or a
    guard that was skipped on an input outside the algorithm's class."""


class NoSolutionError(ValueError):
    """The instance has no hitting set (the empty set is a member)."""


def _canonical(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(s)))


def _mask(s: Iterable[int]) -> int:
    m = 0
    for e in s:
        m |= 1 << e
    return m


def _mask_to_tuple(m: int) -> tuple[int, ...]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class SetSystem:
    """An explicit finite set system ``(X, C)``.

    ``sets`` keeps the caller's order. Equality compares the universe size
    and the ordered list of sets; use :meth:`canonical` to compare as
    families.
    """

    universe_size: int
    sets: tuple[tuple[int, ...], ...]
    element_labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __init__(
        self,
        universe_size: int,
        sets: Iterable[Iterable[int]],
        element_labels: Optional[Sequence[str]] = None,
    ):
        if universe_size < 0:
            raise InvalidInputError("universe_size must be non-negative")
        canon = []
        seen: dict[tuple[int, ...], int] = {}
        for pos, s in enumerate(sets):
            raw = list(s)
            c = _canonical(raw)
            if len(c) != len(raw):
                raise InvalidInputError(f"set {pos} repeats an element")
            for e in c:
                if not 0 <= e < universe_size:
                    raise InvalidInputError(
                        f"set {pos}: element {e} out of range 0..{universe_size - 1}"
                    )
            if c in seen:
                raise InvalidInputError(f"set {pos} duplicates set {seen[c]}")
            seen[c] = pos
            canon.append(c)
        if element_labels is not None:
            element_labels = tuple(element_labels)
            if len(element_labels) != universe_size:
                raise InvalidInputError("element_labels must name every element")
        object.__setattr__(self, "universe_size", universe_size)
        object.__setattr__(self, "sets", tuple(canon))
        object.__setattr__(self, "element_labels", element_labels)
        object.__setattr__(self, "_set_masks", tuple(_mask(c) for c in canon))
        elem = [0] * universe_size
        for i, c in enumerate(canon):
            for e in c:
                elem[e] |= 1 << i
        object.__setattr__(self, "_element_masks", tuple(elem))

    @classmethod
    def lenient(
        cls,
        universe_size: int,
        sets: Iterable[Iterable[int]],
        element_labels: Optional[Sequence[str]] = None,
    ) -> tuple["SetSystem", list[int]]:
        """Build a system, dropping repeated sets instead of rejecting them.

        Returns the system and the input positions that were discarded.
        """
        kept, dropped, seen = [], [], set()
        for pos, s in enumerate(sets):
            c = _canonical(s)
            if c in seen:
                dropped.append(pos)
                continue
            seen.add(c)
            kept.append(c)
        return cls(universe_size, kept, element_labels), dropped

    @property
    def set_masks(self) -> tuple[int, ...]:
        return self._set_masks  # type: ignore[attr-defined]

    @property
    def element_masks(self) -> tuple[int, ...]:
        """For each element, the bitmask of set indices containing it."""
        return self._element_masks  # type: ignore[attr-defined]

    @property
    def num_sets(self) -> int:
        return len(self.sets)

    @property
    def has_empty_set(self) -> bool:
        return () in self.sets

    def degree(self, element: int) -> int:
        return bin(self.element_masks[element]).count("1")

    def canonical(self) -> "SetSystem":
        """Same family with sets sorted, for order-insensitive comparison."""
        return SetSystem(self.universe_size, sorted(self.sets), self.element_labels)

    def incidence_matrix(self):
        """Rows are sets, columns elements, as a ``uint8`` numpy array."""
        import numpy as np

        mat = np.zeros((len(self.sets), self.universe_size), dtype=np.uint8)
        for i, s in enumerate(self.sets):
            mat[i, list(s)] = 1
        return mat

    def __repr__(self) -> str:
        return f"SetSystem({self.universe_size}, {[list(s) for s in self.sets]})"


@dataclass(frozen=True)
class HittingSet:
    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        object.__setattr__(self, "elements", _canonical(elements))

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _check_subset(F: SetSystem, A: Iterable[int]) -> tuple[int, ...]:
    A = tuple(A)
    for e in A:
        if not 0 <= e < F.universe_size:
            raise InvalidInputError(f"element {e} is not in the universe")
    return A


def as_pattern(p) -> tuple[int, ...]:
    """Normalize ``"101"`` or ``[1, 0, 1]`` to a tuple of bits."""
    bits = tuple(int(b) for b in p)
    if not bits:
        raise InvalidInputError("a pattern needs at least one bit")
    if any(b not in (0, 1) for b in bits):
        raise InvalidInputError(f"pattern {p!r} is not binary")
    return bits


def _projection_masks(F: SetSystem, A: Iterable[int]) -> set[int]:
    amask = _mask(_check_subset(F, A))
    return {m & amask for m in F.set_masks}


def projection(F: SetSystem, A: Iterable[int]) -> set[tuple[int, ...]]:
    """The trace ``{R & A : R in C}`` as a set of sorted tuples."""
    return {_mask_to_tuple(m) for m in _projection_masks(F, A)}


def projection_size(F: SetSystem, A: Iterable[int]) -> int:
    return len(_projection_masks(F, A))


def is_shattered(F: SetSystem, A: Iterable[int]) -> bool:
    A = set(_check_subset(F, A))
    return len(_projection_masks(F, A)) == 1 << len(A)


def realizes_pattern(F: SetSystem, elements: Sequence[int], pattern) -> bool:
    """True iff some set meets ``elements`` exactly in the positions where
    ``pattern`` has a 1."""
    bits = as_pattern(pattern)
    elements = _check_subset(F, elements)
    if len(elements) != len(bits):
        raise InvalidInputError(
            f"pattern has {len(bits)} bits for {len(elements)} elements"
        )
    if len(set(elements)) != len(elements):
        raise InvalidInputError("pattern elements must be distinct")
    amask = _mask(elements)
    want = _mask(e for e, b in zip(elements, bits) if b)
    return any(m & amask == want for m in F.set_masks)


def dual(F: SetSystem) -> SetSystem:
    """Transpose the incidence structure.

    Dual element ``i`` is set ``i`` of ``F``; dual set ``j`` lists the sets
    containing element ``j``. Elements with identical membership yield one
    dual set (first occurrence kept), so the dual has at most ``n`` sets.
    """
    rows = [_mask_to_tuple(m) for m in F.element_masks]
    return SetSystem.lenient(F.num_sets, rows)[0]


def verify_hitting_set(F: SetSystem, S: Iterable[int]) -> bool:
    smask = _mask(_check_subset(F, S))
    return all(m & smask for m in F.set_masks)
