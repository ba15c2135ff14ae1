"""Labelled digraphs of skew diagrams and their chromatic quasisymmetric functions.

Only packed colourings (colours exactly ``1..k``) are enumerated, which is all
the monomial expansion needs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .compositions import DomainError, is_partition
from .qsym import QSymElement
from .shapes import SkewShape


@dataclass(frozen=True)
class LabeledDigraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]  # (tail, head), labels 1..vertex_count

    def neighbours(self, v: int) -> set[int]:
        return {h for t, h in self.edges if t == v} | {t for t, h in self.edges if h == v}

    def is_acyclic(self) -> bool:
        indeg = Counter(h for _, h in self.edges)
        ready = [v for v in range(1, self.vertex_count + 1) if not indeg[v]]
        seen = 0
        out = {v: [h for t, h in self.edges if t == v] for v in range(1, self.vertex_count + 1)}
        while ready:
            v = ready.pop()
            seen += 1
            for h in out[v]:
                indeg[h] -= 1
                if not indeg[h]:
                    ready.append(h)
        return seen == self.vertex_count

    def sources(self) -> list[int]:
        heads = {h for _, h in self.edges}
        return [v for v in range(1, self.vertex_count + 1) if v not in heads]

    def dump(self) -> str:
        return "\n".join(f"{t}->{h}" for t, h in sorted(self.edges))


def build_graph(s: SkewShape) -> LabeledDigraph:
    """Vertices are cells labelled in reading order; edges join cells adjacent
    in a row (left to right) or in a column (bottom to top)."""
    if not is_partition(s.inner):
        raise DomainError(f"inner shape {s.inner} must be a partition")
    s = s.normalize()
    label = {c: k for k, c in enumerate(s.cells(), start=1)}
    edges = set()
    for (i, j), v in label.items():
        if (i, j + 1) in label:
            edges.add((v, label[(i, j + 1)]))
    for j in range(1, s.width() + 1):
        # adjacency: no cell of the diagram in between
        col = sorted((i for (i, jj) in label if jj == j))
        for lo, hi in zip(col, col[1:]):
            edges.add((label[(lo, j)], label[(hi, j)]))
    return LabeledDigraph(len(label), frozenset(edges))


def ascents(colouring: dict[int, int], g: LabeledDigraph) -> int:
    """Adjacent pairs ``i < j`` with ``colour(i) < colour(j)``."""
    count = 0
    for t, h in g.edges:
        if colouring[t] == colouring[h]:
            raise DomainError(f"colouring is not proper on edge {t}->{h}")
        i, j = min(t, h), max(t, h)
        count += colouring[i] < colouring[j]
    return count


def packed_proper_colourings(g: LabeledDigraph) -> Iterator[dict[int, int]]:
    """Proper colourings using exactly the colours ``1..k`` for some ``k``.

    Colour classes are chosen one at a time as nonempty independent sets of
    the still uncoloured vertices.
    """
    vs = list(range(1, g.vertex_count + 1))
    nbr = {v: g.neighbours(v) for v in vs}
    colouring: dict[int, int] = {}

    def independent_subsets(pool: list[int]) -> Iterator[list[int]]:
        def rec(k: int, chosen: list[int], banned: set[int]):
            if k == len(pool):
                if chosen:
                    yield list(chosen)
                return
            v = pool[k]
            if v not in banned:
                chosen.append(v)
                yield from rec(k + 1, chosen, banned | nbr[v])
                chosen.pop()
            yield from rec(k + 1, chosen, banned)

        yield from rec(0, [], set())

    def rec(colour: int, left: list[int]):
        if not left:
            yield dict(colouring)
            return
        for cls in independent_subsets(left):
            for v in cls:
                colouring[v] = colour
            rest = [v for v in left if v not in cls]
            yield from rec(colour + 1, rest)
            for v in cls:
                del colouring[v]

    yield from rec(1, vs)


def chromatic_quasisymmetric(g: LabeledDigraph) -> dict[int, QSymElement]:
    """``X_G(x; q)`` as ``{ascents: M-expansion}``."""
    by_q: dict[int, Counter] = {}
    for col in packed_proper_colourings(g):
        content = Counter(col.values())
        gamma = tuple(content[c] for c in range(1, len(content) + 1))
        by_q.setdefault(ascents(col, g), Counter())[gamma] += 1
    return {q: QSymElement("M", c) for q, c in sorted(by_q.items())}


def top_coefficient(s: SkewShape) -> QSymElement:
    """The coefficient of ``q^|E|`` in ``X_G`` for the graph of ``s``."""
    g = build_graph(s)
    if g.vertex_count == 0:
        return QSymElement.one()
    return chromatic_quasisymmetric(g).get(len(g.edges), QSymElement.zero())
