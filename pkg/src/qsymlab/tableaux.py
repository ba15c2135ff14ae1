"""Constrained fillings of skew shapes.

All eight tableau families share one engine.  A :class:`ConstraintSpec` says
which column pairs are compared (only the first column, or every column) and
whether row and column comparisons are strict or weak.  Every comparison runs
from an earlier to a later cell in reading order, which the enumerators rely
on.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .compositions import Composition, DomainError, canonical_key, comp_of_set
from .shapes import Cell, SkewShape

FIRST = "first-column"
ALL = "all-columns"
STRICT = "strict"
WEAK = "weak"

DESCENT_KINDS = ("dI", "rdI", "Astar", "bAstar")


@dataclass(frozen=True)
class ConstraintSpec:
    column_scope: str
    column_order: str
    row_order: str

    def __post_init__(self):
        if self.column_scope not in (FIRST, ALL):
            raise DomainError(f"bad column scope {self.column_scope!r}")
        if self.column_order not in (STRICT, WEAK) or self.row_order not in (STRICT, WEAK):
            raise DomainError("orders must be 'strict' or 'weak'")

    def __str__(self):
        col = "1st col" if self.column_scope == FIRST else "cols"
        sym = {STRICT: "<", WEAK: "<="}
        return f"({col}{sym[self.column_order]}, rows{sym[self.row_order]})"


ALL_SPECS = tuple(ConstraintSpec(sc, co, ro) for sc in (FIRST, ALL) for co in (STRICT, WEAK) for ro in (STRICT, WEAK))


@lru_cache(maxsize=None)
def comparisons(shape: SkewShape, scope: str) -> tuple[tuple[int, int, str], ...]:
    """Compared pairs ``(earlier, later, 'row' | 'col')`` as reading-order indices."""
    cells = shape.cells()
    index = {c: k for k, c in enumerate(cells)}
    pairs = []
    for (i, j), k in index.items():
        if (i, j + 1) in index:
            pairs.append((k, index[(i, j + 1)], "row"))
    columns = [1] if scope == FIRST else range(1, shape.width() + 1)
    for j in columns:
        col = shape.column_cells(j)
        for lo, hi in zip(col, col[1:]):
            pairs.append((index[lo], index[hi], "col"))
    return tuple(sorted(pairs))


def _edges(shape: SkewShape, spec: ConstraintSpec) -> list[tuple[int, int, bool]]:
    """Pairs with a strictness flag."""
    return [
        (a, b, (spec.row_order if kind == "row" else spec.column_order) == STRICT)
        for a, b, kind in comparisons(shape, spec.column_scope)
    ]


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    entries: tuple[int, ...]  # aligned with shape.cells()

    def __post_init__(self):
        if len(self.entries) != self.shape.size:
            raise DomainError("need exactly one entry per cell")
        if any(e < 1 for e in self.entries):
            raise DomainError("entries must be positive")

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: list[list[int]]) -> "Tableau":
        """Build from per-row entry lists, bottom row first."""
        return cls(shape, tuple(e for row in rows for e in row))

    def mapping(self) -> dict[Cell, int]:
        return dict(zip(self.shape.cells(), self.entries))

    def __getitem__(self, cell: Cell) -> int:
        return self.mapping()[cell]

    def content(self) -> tuple[int, ...]:
        """Multiplicities of 1, 2, ..., max entry (zeros kept)."""
        if not self.entries:
            return ()
        counts = Counter(self.entries)
        return tuple(counts.get(v, 0) for v in range(1, max(self.entries) + 1))

    def is_packed(self) -> bool:
        return all(self.content())

    def is_standard(self) -> bool:
        return sorted(self.entries) == list(range(1, len(self.entries) + 1))

    def render(self) -> str:
        """Rows printed top to bottom; cells of the inner shape shown as '.'."""
        w = max((len(str(e)) for e in self.entries), default=1)
        m = self.mapping()
        s = self.shape
        lines = []
        for i in range(s.num_rows, 0, -1):
            row = ["." * w if j <= s.inner_at(i) else str(m[(i, j)]).rjust(w) for j in range(1, s.outer[i - 1] + 1)]
            lines.append(" ".join(row))
        return "\n".join(lines)


def satisfies(t: Tableau, spec: ConstraintSpec) -> bool:
    e = t.entries
    return all((e[a] < e[b]) if strict else (e[a] <= e[b]) for a, b, strict in _edges(t.shape, spec))


def fillings(shape: SkewShape, spec: ConstraintSpec, max_entry: int) -> Iterator[Tableau]:
    """Brute force: every filling with entries in ``1..max_entry`` satisfying ``spec``."""
    for entries in product(range(1, max_entry + 1), repeat=shape.size):
        t = Tableau(shape, entries)
        if satisfies(t, spec):
            yield t


def enumerate_packed(shape: SkewShape, spec: ConstraintSpec) -> Iterator[Tableau]:
    """Tableaux of ``shape`` satisfying ``spec`` with packed content.

    Cells are filled in reading order, so tableaux come out in lexicographic
    order of their entry sequences.
    """
    n = shape.size
    preds: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for a, b, strict in _edges(shape, spec):
        preds[b].append((a, strict))
    entries = [0] * n
    used = Counter()

    def rec(p: int, top: int) -> Iterator[Tableau]:
        if p == n:
            yield Tableau(shape, tuple(entries))
            return
        remaining = n - p - 1
        lo = 1
        for a, strict in preds[p]:
            lo = max(lo, entries[a] + 1 if strict else entries[a])
        for v in range(lo, n + 1):
            new_top = max(top, v)
            # unused values below the maximum must still fit in the remaining cells
            missing = new_top - len(used) - (0 if v in used else 1)
            if missing > remaining:
                if v > top:
                    break
                continue
            entries[p] = v
            used[v] += 1
            yield from rec(p + 1, new_top)
            used[v] -= 1
            if not used[v]:
                del used[v]

    yield from rec(0, 0)


def packed_content_counts(shape: SkewShape, spec: ConstraintSpec) -> dict[Composition, int]:
    """Number of packed tableaux per content, without listing them.

    Values 1, 2, ... are placed one level at a time; the set of already
    filled cells is always an order ideal, and the completions from a given
    ideal are memoized.
    """
    n = shape.size
    strict_pred = [0] * n
    weak_pred = [0] * n
    for a, b, strict in _edges(shape, spec):
        if strict:
            strict_pred[b] |= 1 << a
        else:
            weak_pred[b] |= 1 << a
    full = (1 << n) - 1
    memo: dict[int, dict[Composition, int]] = {full: {(): 1}}

    def levels(filled: int) -> Iterator[int]:
        cand = 0
        for b in range(n):
            if not filled >> b & 1 and strict_pred[b] & ~filled == 0:
                cand |= 1 << b
        sub = cand
        while sub:
            closed = filled | sub
            ok = True
            s = sub
            while s:
                b = (s & -s).bit_length() - 1
                if weak_pred[b] & ~closed:
                    ok = False
                    break
                s &= s - 1
            if ok:
                yield sub
            sub = (sub - 1) & cand

    def count(filled: int) -> dict[Composition, int]:
        if filled in memo:
            return memo[filled]
        out: Counter = Counter()
        for sub in levels(filled):
            k = bin(sub).count("1")
            for rest, c in count(filled | sub).items():
                out[(k, *rest)] += c
        memo[filled] = dict(out)
        return memo[filled]

    result = count(0)
    return {c: result[c] for c in sorted(result, key=canonical_key)}


# -- standard tableaux -------------------------------------------------------


def standard_tableaux(shape: SkewShape, scope: str) -> list[Tableau]:
    """Standard fillings increasing along every compared pair of ``scope``."""
    n = shape.size
    preds = [0] * n
    for a, b, _ in comparisons(shape, scope):
        preds[b] |= 1 << a
    entries = [0] * n
    out = []

    def rec(v: int, placed: int):
        if v > n:
            out.append(Tableau(shape, tuple(entries)))
            return
        for b in range(n):
            if not placed >> b & 1 and preds[b] & ~placed == 0:
                entries[b] = v
                rec(v + 1, placed | 1 << b)

    rec(1, 0)
    return out


def _rows_by_value(t: Tableau) -> dict[int, int]:
    return {e: i for (i, _), e in zip(t.shape.cells(), t.entries)}


def descent_set(t: Tableau, kind: str) -> frozenset[int]:
    """Positions ``i`` where ``i + 1`` sits strictly above (dI), weakly below
    (rdI), strictly below (Astar) or weakly above (bAstar) ``i``."""
    row = _rows_by_value(t)
    n = len(t.entries)
    test = {
        "dI": lambda r, s: s > r,
        "rdI": lambda r, s: s <= r,
        "Astar": lambda r, s: s < r,
        "bAstar": lambda r, s: s >= r,
    }
    if kind not in test:
        raise DomainError(f"unknown descent kind {kind!r}")
    rel = test[kind]
    return frozenset(i for i in range(1, n) if rel(row[i], row[i + 1]))


def descent_composition(t: Tableau, kind: str) -> Composition:
    return comp_of_set(descent_set(t, kind), len(t.entries))


def _sub_tableau(t: Tableau, keep, shift: int, below_kept: bool) -> Tableau:
    """Restrict ``t`` to the cells whose entry satisfies ``keep``.

    With ``below_kept`` the kept cells form the bottom-left part of each row
    (the low entries); otherwise they form the top-right part.
    """
    s = t.shape
    m = t.mapping()
    outer, inner, entries = [], [], []
    for i in range(1, s.num_rows + 1):
        row = [(j, m[(i, j)]) for j in range(s.inner_at(i) + 1, s.outer[i - 1] + 1)]
        kept = [(j, e) for j, e in row if keep(e)]
        if below_kept:
            outer.append(s.inner_at(i) + len(kept))
            inner.append(s.inner_at(i))
        else:
            outer.append(s.outer[i - 1])
            inner.append(s.outer[i - 1] - len(kept))
        entries.extend(e - shift for _, e in kept)
    while outer and outer[-1] == 0:
        outer.pop()
    inner = inner[: len(outer)]
    while inner and inner[-1] == 0:
        inner.pop()
    if any(p == 0 for p in outer) or any(p == 0 for p in inner):
        raise DomainError("restricted cells do not form a skew diagram")
    return Tableau(SkewShape(tuple(outer), tuple(inner)), tuple(entries))


def restrict_low(t: Tableau, k: int) -> Tableau:
    """The cells holding ``1..k``."""
    n = len(t.entries)
    if not 0 <= k <= n:
        raise DomainError(f"k={k} outside 0..{n}")
    return _sub_tableau(t, lambda e: e <= k, 0, True)


def restrict_high_standardize(t: Tableau, k: int) -> Tableau:
    """The cells holding the top ``k`` entries, shifted down to ``1..k``."""
    n = len(t.entries)
    if not 0 <= k <= n:
        raise DomainError(f"k={k} outside 0..{n}")
    return _sub_tableau(t, lambda e: e > n - k, n - k, False)
