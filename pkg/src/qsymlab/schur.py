"""Skew Schur functions from semistandard Young tableaux."""
from __future__ import annotations

from functools import reduce

from .compositions import DomainError, is_partition
from .qsym import QSymElement, psi
from .shapes import SkewShape, disjoint_union, transpose
from .tableaux import ALL, STRICT, WEAK, ConstraintSpec, packed_content_counts

SSYT = ConstraintSpec(ALL, STRICT, WEAK)


def _check_partition_shape(s: SkewShape):
    if not (is_partition(s.outer) and is_partition(s.inner)):
        raise DomainError(f"skew Schur functions need partition/partition, got {s}")


def skew_schur(s: SkewShape) -> QSymElement:
    _check_partition_shape(s)
    return QSymElement("M", packed_content_counts(s.normalize(), SSYT))


def schur(lam) -> QSymElement:
    return skew_schur(SkewShape(tuple(lam)))


def kostka(s: SkewShape, nu) -> int:
    nu = tuple(nu)
    if sum(nu) != s.size:
        raise DomainError(f"|nu| = {sum(nu)} but the shape has {s.size} cells")
    return skew_schur(s)[nu]


def schur_product(shapes: list[SkewShape]) -> QSymElement:
    """Product of skew Schur functions, as one Schur function of a disconnected diagram."""
    for s in shapes:
        _check_partition_shape(s)
    if not shapes:
        return QSymElement.one()
    return skew_schur(reduce(disjoint_union, shapes))


def transpose_identity_check(s: SkewShape) -> bool:
    return psi(skew_schur(s)) == skew_schur(transpose(s))
