"""The eight Schur-like families and their closed forms when symmetric.

Each family is a constraint system on fillings plus the descent statistic
that gives its fundamental expansion:

======  ===============================  ==========
name    tableau conditions               descents
======  ===============================  ==========
dI      first column <, rows <=          dI
rdI     first column <=, rows <          rdI
ex      columns <, rows <=               dI
rex     columns <=, rows <               rdI
sAdI    first column <, rows <           bAstar
wAdI    first column <=, rows <=         Astar
sAex    columns <, rows <                bAstar
wAex    columns <=, rows <=              Astar
======  ===============================  ==========

The extended families (``ex``, ``rex``, ``sAex``, ``wAex``) are only defined
for a partition inner shape.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .compositions import Composition, DomainError, is_partition
from .qsym import QSymElement
from .schur import schur, schur_product, skew_schur
from .shapes import SkewShape, transpose
from .tableaux import (
    ALL,
    FIRST,
    STRICT,
    WEAK,
    ConstraintSpec,
    Tableau,
    descent_composition,
    packed_content_counts,
    standard_tableaux,
)


@dataclass(frozen=True)
class Family:
    name: str
    spec: ConstraintSpec
    descent_kind: str

    @property
    def extended(self) -> bool:
        return self.spec.column_scope == ALL


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in (
        Family("dI", ConstraintSpec(FIRST, STRICT, WEAK), "dI"),
        Family("rdI", ConstraintSpec(FIRST, WEAK, STRICT), "rdI"),
        Family("ex", ConstraintSpec(ALL, STRICT, WEAK), "dI"),
        Family("rex", ConstraintSpec(ALL, WEAK, STRICT), "rdI"),
        Family("sAdI", ConstraintSpec(FIRST, STRICT, STRICT), "bAstar"),
        Family("wAdI", ConstraintSpec(FIRST, WEAK, WEAK), "Astar"),
        Family("sAex", ConstraintSpec(ALL, STRICT, STRICT), "bAstar"),
        Family("wAex", ConstraintSpec(ALL, WEAK, WEAK), "Astar"),
    )
}

# psi sends the first of each pair to the second
PSI_PAIRS = (("dI", "rdI"), ("ex", "rex"), ("sAdI", "wAdI"), ("sAex", "wAex"))


def family(name: str | Family) -> Family:
    if isinstance(name, Family):
        return name
    try:
        return FAMILIES[name]
    except KeyError:
        raise DomainError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}") from None


def _admissible(fam: Family, s: SkewShape) -> SkewShape:
    # empty rows do not change the generating function, so the inner shape is
    # checked after they are removed
    s = s.normalize()
    if fam.extended and not is_partition(s.inner):
        raise DomainError(f"{fam.name} needs a partition inner shape, got {s}")
    return s


def expand_M(fam: str | Family, s: SkewShape) -> QSymElement:
    fam = family(fam)
    return QSymElement("M", packed_content_counts(_admissible(fam, s), fam.spec))


def expand_F(fam: str | Family, s: SkewShape) -> QSymElement:
    fam = family(fam)
    s = _admissible(fam, s)
    counts = Counter(descent_composition(t, fam.descent_kind) for t in standard_tableaux(s, fam.spec.column_scope))
    return QSymElement("F", counts)


# -- symmetry classification ---------------------------------------------------


def _require_classifiable(fam: Family, s: SkewShape):
    if fam.extended and not is_partition(s.inner):
        raise DomainError(f"{fam.name} needs a partition inner shape, got {s}")
    if not s.is_normalized():
        raise DomainError(f"{s} has an empty row; normalize it first")
    if not s.is_connected():
        raise DomainError(f"{s} is not connected")


def _row_then_column_hooks(n: int) -> list[frozenset]:
    """Cell sets of the diagrams (1^k, n-k), 0 <= k <= n-1."""
    out = []
    for k in range(n):
        s = SkewShape((1,) * k + (n - k,))
        out.append(frozenset(s.cells()))
    return out


def symmetry_predicate(fam: str | Family, s: SkewShape) -> bool:
    """The combinatorial criterion for ``fam`` on ``s`` to be symmetric."""
    fam = family(fam)
    _require_classifiable(fam, s)
    alpha, lb, la = s.outer, len(s.inner), len(s.outer)
    if fam.name in ("dI", "rdI"):
        return all(alpha[i - 1] == 1 for i in range(lb + 2, la + 1))
    if fam.name in ("ex", "rex"):
        return is_partition(alpha)
    if fam.name in ("sAdI", "wAdI"):
        return all(alpha[i - 1] == 1 for i in range(lb + 1, la))
    return s.geometry() in _row_then_column_hooks(s.size)


def _one_row(k: int) -> SkewShape:
    return SkewShape((k,))


def _one_column(k: int) -> SkewShape:
    return SkewShape((1,) * k)


def predicted_symmetric_form(fam: str | Family, s: SkewShape) -> QSymElement | None:
    """Closed form as a product of skew Schur functions, or ``None`` when the
    criterion says the function is not symmetric."""
    fam = family(fam)
    if not symmetry_predicate(fam, s):
        return None
    alpha, beta = s.outer, s.inner
    lb, la = len(beta), len(alpha)
    rows = [a - b for a, b in zip(alpha, beta)]
    top = la - lb  # rows above the inner shape, all meeting the first column
    if fam.name == "dI":
        head = [SkewShape((alpha[lb],) + (1,) * (top - 1))] if top else []
        return schur_product(head + [_one_row(r) for r in rows])
    if fam.name == "rdI":
        head = [SkewShape((top,) + (1,) * (alpha[lb] - 1))] if top else []
        return schur_product(head + [_one_column(r) for r in rows])
    if fam.name == "sAdI":
        head = [_one_column(top - 1 + alpha[-1])] if top else []
        return schur_product(head + [_one_column(r) for r in rows])
    if fam.name == "wAdI":
        head = [_one_row(top - 1 + alpha[-1])] if top else []
        return schur_product(head + [_one_row(r) for r in rows])
    if fam.name == "ex":
        return skew_schur(s)
    if fam.name == "rex":
        return skew_schur(transpose(s))
    if fam.name == "sAex":
        return schur((1,) * s.size)
    return schur((s.size,))


# -- the non-symmetry witness for extended Schur functions ---------------------


@dataclass(frozen=True)
class Witness:
    I: int
    K: int
    gamma: Composition
    gamma_prime: Composition


def symmetry_witness_extended(s: SkewShape) -> Witness:
    """Contents ``gamma``, ``gamma'`` rearranging ``(2, 1^(n-2))`` whose
    coefficients in ``ex`` differ, for a non-partition outer shape."""
    alpha, lam = s.outer, s.inner
    if not is_partition(lam):
        raise DomainError(f"inner shape {lam} must be a partition")
    if is_partition(alpha):
        raise DomainError(f"outer shape {alpha} is a partition; ex is symmetric")
    if not s.is_normalized():
        raise DomainError(f"{s} has an empty row; normalize it first")
    I = max(i for i in range(1, len(alpha)) if alpha[i] > alpha[i - 1])
    K = sum(alpha[i - 1] - s.inner_at(i) for i in range(1, I + 1)) + (alpha[I - 1] - s.inner_at(I + 1)) - 1
    n = s.size
    gamma = (1,) * (K - 1) + (2,) + (1,) * (n - K - 1)
    gamma_prime = (1,) * K + (2,) + (1,) * (n - K - 2)
    return Witness(I, K, gamma, gamma_prime)


def witness_tableau(s: SkewShape) -> Tableau:
    """A tableau of content ``gamma'`` with no partner of content ``gamma``.

    Rows below ``I`` are filled in reading order, row ``I`` ends in ``K``, and
    row ``I + 1`` carries the two copies of ``K + 1`` in columns ``alpha_I``
    and ``alpha_I + 1``.
    """
    w = symmetry_witness_extended(s)
    I, K = w.I, w.K
    lengths = [s.outer[i - 1] - s.inner_at(i) for i in range(1, s.num_rows + 1)]
    rows: list[list[int]] = []
    nxt = 1
    for i in range(1, s.num_rows + 1):
        r = lengths[i - 1]
        if i == I:
            row = list(range(nxt, nxt + r - 1)) + [K]
            nxt += r - 1
        elif i == I + 1:
            lead = s.outer[I - 1] - s.inner_at(I + 1) - 1
            row = list(range(nxt, nxt + lead)) + [K + 1, K + 1]
            nxt = K + 2
            row += list(range(nxt, nxt + r - lead - 2))
            nxt += r - lead - 2
        else:
            row = list(range(nxt, nxt + r))
            nxt += r
        rows.append(row)
    return Tableau.from_rows(s, rows)
