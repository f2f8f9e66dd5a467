"""Partitions, multipartitions and standard tableaux.

Everything here is exact integer combinatorics: enumeration, hook-length
counting and explicit tableau generation.  All values are immutable and the
enumeration orders are fixed, so downstream output is byte-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .errors import ComponentMismatch, EnumerationCapExceeded

#: Largest multipartition size for which explicit tableau lists are built.
#: Counting (``syt_count``) is never capped.
DEFAULT_TABLEAU_CAP = 8


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers (no trailing zeros)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"partition parts must weakly decrease: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    def part(self, k: int) -> int:
        """The k-th part, 1-based; 0 beyond the height."""
        if k < 1:
            raise ValueError("part index is 1-based")
        return self.parts[k - 1] if k <= len(self.parts) else 0

    def sort_key(self) -> tuple[int, ...]:
        """Key realizing the reverse-lexicographic order on equal-size partitions."""
        return tuple(-x for x in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"


@dataclass(frozen=True)
class Multipartition:
    """A fixed-length tuple of partitions."""

    components: tuple[Partition, ...]

    def __post_init__(self) -> None:
        comps = tuple(
            c if isinstance(c, Partition) else Partition(tuple(c))
            for c in self.components
        )
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_parts(cls, rows: Iterable[Iterable[int]]) -> "Multipartition":
        return cls(tuple(Partition(tuple(r)) for r in rows))

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    @property
    def r(self) -> int:
        return len(self.components)

    def component(self, c: int) -> Partition:
        """The c-th component, 1-based."""
        if not 1 <= c <= len(self.components):
            raise ComponentMismatch(f"component index {c} out of [1, {self.r}]")
        return self.components[c - 1]

    def sort_key(self) -> tuple:
        """Canonical total order: component sizes lexicographically, then
        components reverse-lexicographically.  Used wherever a deterministic
        representative or output order is needed."""
        return (
            tuple(c.size for c in self.components),
            tuple(c.sort_key() for c in self.components),
        )

    def to_lists(self) -> list[list[int]]:
        return [list(c.parts) for c in self.components]

    def __repr__(self) -> str:
        return f"Multipartition({self.to_lists()!r})"


def empty_multipartition(r: int) -> Multipartition:
    return Multipartition(tuple(Partition() for _ in range(r)))


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, e.g.
    (4), (3,1), (2,2), (2,1,1), (1,1,1,1)."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(rest: int, maxpart: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first, *tail)

    return tuple(Partition(parts) for parts in gen(n, n if n else 1))


def compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into r parts, lexicographically decreasing."""
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for tail in compositions(n - first, r - 1):
            yield (first, *tail)


def enumerate_multipartitions(n: int, r: int) -> list[Multipartition]:
    """All r-partitions of n, each once: compositions of n (decreasing), then
    the componentwise partition order."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    out: list[Multipartition] = []
    for comp in compositions(n, r):
        for choice in product(*(enumerate_partitions(a) for a in comp)):
            out.append(Multipartition(choice))
    return out


def _hook_product(p: Partition) -> int:
    parts = p.parts
    heights = [sum(1 for row in parts if row > j) for j in range(p.part(1))]
    prod = 1
    for i, row in enumerate(parts):
        for j in range(row):
            prod *= (row - j) + (heights[j] - i) - 1
    return prod


def hook_length_count(p: Partition) -> int:
    """Number of standard fillings of a single partition (hook length formula)."""
    if p.size == 0:
        return 1
    return math.factorial(p.size) // _hook_product(p)


def syt_count(shape: Multipartition) -> int:
    """Number of standard tableaux of a multipartition shape:
    multinomial over component sizes times the per-component hook counts."""
    n = shape.size
    count = math.factorial(n)
    for c in shape.components:
        count //= math.factorial(c.size)
    for c in shape.components:
        count *= hook_length_count(c)
    return count


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of a multipartition by 1..n.

    ``entries[c][a]`` is the tuple of values in row a+1 of component c+1.
    Rows increase left to right, columns increase top to bottom, and the
    values across all components are exactly 1..n.
    """

    shape: Multipartition
    entries: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(tuple(row) for row in comp) for comp in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.shape.r:
            raise ComponentMismatch("entry components do not match the shape")
        seen: list[int] = []
        for comp, filled in zip(self.shape.components, entries):
            if tuple(len(row) for row in filled) != comp.parts:
                raise ValueError("row lengths do not match the shape")
            for row in filled:
                if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                    raise ValueError("rows must strictly increase")
                seen.extend(row)
            for a in range(len(filled) - 1):
                upper, lower = filled[a], filled[a + 1]
                if any(upper[j] >= lower[j] for j in range(len(lower))):
                    raise ValueError("columns must strictly increase")
        if sorted(seen) != list(range(1, self.shape.size + 1)):
            raise ValueError("entries must be exactly 1..n")

    def component_entries(self, c: int) -> tuple[tuple[int, ...], ...]:
        return self.entries[c - 1]


def enumerate_standard_tableaux(
    shape: Multipartition, cap: int = DEFAULT_TABLEAU_CAP
) -> list[StandardTableau]:
    """All standard tableaux of the shape, in a fixed order.

    Raises EnumerationCapExceeded when the shape is larger than ``cap``;
    the factorial growth makes explicit lists useless beyond desk scale.
    """
    n = shape.size
    if n > cap:
        raise EnumerationCapExceeded(
            f"tableau enumeration needs size <= {cap}, got {n}"
        )
    targets = [c.parts for c in shape.components]
    grids: list[list[list[int]]] = [[[] for _ in rows] for rows in targets]
    out: list[StandardTableau] = []

    def place(value: int) -> None:
        if value > n:
            out.append(
                StandardTableau(
                    shape,
                    tuple(tuple(tuple(row) for row in g) for g in grids),
                )
            )
            return
        for c, rows in enumerate(targets):
            for a, width in enumerate(rows):
                filled = len(grids[c][a])
                if filled >= width:
                    continue
                # cell is addable iff the row above is strictly longer so far
                if a > 0 and len(grids[c][a - 1]) <= filled:
                    continue
                grids[c][a].append(value)
                place(value + 1)
                grids[c][a].pop()

    place(1)
    return out
