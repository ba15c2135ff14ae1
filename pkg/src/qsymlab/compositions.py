"""Compositions and partitions as plain tuples of positive integers.

A composition is represented by a ``tuple[int, ...]``; the empty composition
is ``()``.  Partitions are compositions whose parts weakly decrease.
"""
from __future__ import annotations

from itertools import accumulate, combinations, product
from typing import Iterable, Iterator, Sequence

Composition = tuple[int, ...]
Partition = tuple[int, ...]


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def composition(parts: Iterable[int]) -> Composition:
    c = tuple(int(p) for p in parts)
    if any(p < 1 for p in c):
        raise DomainError(f"composition parts must be positive: {c}")
    return c


def is_partition(c: Sequence[int]) -> bool:
    return all(c[i] >= c[i + 1] for i in range(len(c) - 1))


def canonical_key(c: Composition) -> tuple:
    """Sort key: size, then length, then lexicographic."""
    return (sum(c), len(c), c)


def sort_to_partition(c: Composition) -> Partition:
    return tuple(sorted(c, reverse=True))


def refines(b: Composition, a: Composition) -> bool:
    """True iff ``b`` refines ``a``: the parts of ``a`` are block sums of ``b``."""
    if sum(b) != sum(a):
        return False
    return set(accumulate(a)) <= set(accumulate(b))


def partial_sums(c: Composition) -> frozenset[int]:
    """Descent set of ``c``: its partial sums, excluding the total."""
    return frozenset(list(accumulate(c))[:-1])


def comp_of_set(s: Iterable[int], n: int) -> Composition:
    """The composition of ``n`` whose partial sums are exactly ``s``."""
    pts = sorted(set(s))
    if n < 0 or any(i < 1 or i > n - 1 for i in pts):
        raise DomainError(f"set {pts} not contained in {{1, ..., {n - 1}}}")
    if n == 0:
        return ()
    bounds = [0, *pts, n]
    return tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def coarsenings(a: Composition) -> list[Composition]:
    """All compositions that ``a`` refines, in canonical order."""
    if not a:
        return [()]
    cuts = sorted(partial_sums(a))
    n = sum(a)
    out = [comp_of_set(sub, n) for k in range(len(cuts) + 1) for sub in combinations(cuts, k)]
    return sorted(out, key=canonical_key)


def refinements(a: Composition) -> list[Composition]:
    """All refinements of ``a``, in canonical order."""
    if not a:
        return [()]
    blocks = [compositions_of(p) for p in a]
    out = [tuple(x for blk in choice for x in blk) for choice in product(*blocks)]
    return sorted(out, key=canonical_key)


def compositions_of(n: int) -> list[Composition]:
    """All ``2**(n-1)`` compositions of ``n`` (``[()]`` for ``n == 0``)."""
    if n < 0:
        raise DomainError(f"negative size {n}")
    if n == 0:
        return [()]
    out = []
    for k in range(n):
        for sub in combinations(range(1, n), k):
            out.append(comp_of_set(sub, n))
    return sorted(out, key=canonical_key)


def compositions_up_to(n: int) -> Iterator[Composition]:
    for m in range(n + 1):
        yield from compositions_of(m)


def partitions_of(n: int, largest: int | None = None) -> list[Partition]:
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first, *rest))
    return out


def concat(b: Composition, g: Composition) -> Composition:
    return tuple(b) + tuple(g)


def near_concat(b: Composition, g: Composition) -> Composition:
    if not b or not g:
        raise DomainError("near-concatenation needs two nonempty compositions")
    return tuple(b[:-1]) + (b[-1] + g[0],) + tuple(g[1:])


def format_composition(c: Composition) -> str:
    return ",".join(map(str, c)) if c else "-"


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise DomainError(f"cannot parse composition {text!r}") from exc
    return composition(parts)
