"""Skew diagrams with rows indexed from the bottom (French convention).

Cell ``(i, j)`` is in row ``i`` (1 = bottom) and column ``j`` (1 = left).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .compositions import (
    Composition,
    DomainError,
    canonical_key,
    composition,
    compositions_up_to,
    format_composition,
    is_partition,
    parse_composition,
)

Cell = tuple[int, int]


@dataclass(frozen=True, order=False)
class SkewShape:
    outer: Composition
    inner: Composition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", composition(self.outer))
        object.__setattr__(self, "inner", composition(self.inner))
        if len(self.inner) > len(self.outer) or any(
            b > a for a, b in zip(self.outer, self.inner)
        ):
            raise DomainError(f"{self.inner} is not contained in {self.outer}")

    def __str__(self):
        return f"{format_composition(self.outer)}/{format_composition(self.inner)}"

    def sort_key(self):
        return (canonical_key(self.outer), canonical_key(self.inner))

    def inner_at(self, i: int) -> int:
        return self.inner[i - 1] if i <= len(self.inner) else 0

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    def row_span(self, i: int) -> tuple[int, int]:
        """First and last column of row ``i``; empty when first > last."""
        return self.inner_at(i) + 1, self.outer[i - 1]

    def cells(self) -> list[Cell]:
        """Cells in reading order: bottom row to top row, left to right."""
        return [
            (i, j)
            for i in range(1, self.num_rows + 1)
            for j in range(self.inner_at(i) + 1, self.outer[i - 1] + 1)
        ]

    def width(self) -> int:
        return max(self.outer, default=0)

    def column_cells(self, j: int) -> list[Cell]:
        """Cells of column ``j``, bottom to top.

        Consecutive entries of this list are the adjacent column pairs; a row
        of the outer shape too short to reach column ``j`` does not break the
        adjacency.
        """
        return [(i, j) for i in range(1, self.num_rows + 1) if self.inner_at(i) < j <= self.outer[i - 1]]

    def is_normalized(self) -> bool:
        return all(b < a for a, b in zip(self.outer, self.inner))

    def is_connected(self) -> bool:
        """No split of the rows into two groups spanning disjoint column sets."""
        spans = [self.row_span(i) for i in range(1, self.num_rows + 1)]
        spans = [s for s in spans if s[0] <= s[1]]
        if not spans:
            return True
        # rows overlapping in some column are linked; connected iff one component
        parent = list(range(len(spans)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in range(len(spans)):
            for b in range(a + 1, len(spans)):
                if spans[a][0] <= spans[b][1] and spans[b][0] <= spans[a][1]:
                    parent[find(a)] = find(b)
        return len({find(x) for x in range(len(spans))}) == 1

    def is_extended(self) -> bool:
        lam = self.inner
        return all(
            all(lam[i] >= lam[j] for j in range(i, len(lam)))
            for i in range(len(lam))
            if lam[i] < self.outer[i]
        )

    def normalize(self) -> "SkewShape":
        keep = [i for i in range(1, self.num_rows + 1) if self.inner_at(i) < self.outer[i - 1]]
        outer = tuple(self.outer[i - 1] for i in keep)
        inner = tuple(self.inner_at(i) for i in keep)
        while inner and inner[-1] == 0:
            inner = inner[:-1]
        return SkewShape(outer, inner)

    def geometry(self) -> frozenset[Cell]:
        """Cell set after deleting empty rows and shifting to column 1."""
        s = self.normalize()
        cells = s.cells()
        if not cells:
            return frozenset()
        left = min(j for _, j in cells)
        return frozenset((i, j - left + 1) for i, j in cells)


def conjugate(lam: Composition) -> Composition:
    if not is_partition(lam):
        raise DomainError(f"{lam} is not a partition")
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, (lam[0] if lam else 0) + 1))


def transpose(s: SkewShape) -> SkewShape:
    if not (is_partition(s.outer) and is_partition(s.inner)):
        raise DomainError(f"transpose needs partition/partition, got {s}")
    return SkewShape(conjugate(s.outer), conjugate(s.inner))


def disjoint_union(a: SkewShape, b: SkewShape) -> SkewShape:
    """One shape whose cells are ``b`` shifted right past ``a``, with ``a`` on top.

    ``b`` sits in the bottom rows, offset by ``a``'s width, so the two blocks
    span disjoint columns and the inner shape stays a composition.
    """
    a, b = a.normalize(), b.normalize()
    if a.size == 0:
        return b
    if b.size == 0:
        return a
    w = a.width()
    outer = tuple(p + w for p in b.outer) + a.outer
    inner = tuple(b.inner_at(i) + w for i in range(1, b.num_rows + 1)) + a.inner
    return SkewShape(outer, inner)


def parse_shape(text: str) -> SkewShape:
    text = text.strip()
    outer, _, inner = text.partition("/")
    return SkewShape(parse_composition(outer), parse_composition(inner))


def skew_shapes(max_outer: int, partition_inner: bool = False, connected: bool = True) -> Iterator[SkewShape]:
    """Normalized shapes ``alpha/beta`` with ``|alpha| <= max_outer``.

    ``beta`` ranges over compositions (or partitions) with ``beta_i < alpha_i``.
    """
    for alpha in compositions_up_to(max_outer):
        if not alpha:
            continue
        found = []
        for k in range(len(alpha) + 1):
            for beta in product(*[range(1, a) for a in alpha[:k]]):
                if partition_inner and not is_partition(beta):
                    continue
                s = SkewShape(alpha, beta)
                if connected and not s.is_connected():
                    continue
                found.append(s)
        yield from sorted(found, key=SkewShape.sort_key)
