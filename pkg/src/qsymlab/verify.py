"""Exhaustive finite checks of the symmetry classifications and identities."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product

from .chromatic import top_coefficient
from .compositions import Composition, is_partition
from .families import (
    FAMILIES,
    PSI_PAIRS,
    Family,
    expand_F,
    expand_M,
    family,
    predicted_symmetric_form,
    symmetry_predicate,
    symmetry_witness_extended,
)
from .qsym import TensorElement, coproduct_F, is_symmetric, psi, tensor
from .shapes import SkewShape, skew_shapes

__all__ = [
    "ScanReport",
    "scan_domain",
    "symmetry_predicate",
    "scan_theorem",
    "check_corollaries",
    "check_skew_consistency",
    "check_psi_pairings",
    "psi_pairing_failures",
    "skew_coproduct_sides",
    "check_chromatic",
    "check_witnesses",
]


@dataclass
class ScanReport:
    family: str
    max_size: int
    shapes: int = 0
    mismatches: list[dict] = field(default_factory=list)
    ms: int = 0

    @property
    def confirmed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return asdict(self)


def scan_domain(fam: str | Family, max_size: int) -> list[SkewShape]:
    """Normalized connected shapes with ``|outer| <= max_size`` admissible for ``fam``."""
    fam = family(fam)
    return list(skew_shapes(max_size, partition_inner=fam.extended, connected=True))


def _classify_one(args) -> tuple[bool, bool]:
    name, s = args
    return symmetry_predicate(name, s), is_symmetric(expand_M(name, s))


def scan_theorem(fam: str | Family, max_size: int, workers: int = 1) -> ScanReport:
    fam = family(fam)
    t0 = time.perf_counter()
    shapes = scan_domain(fam, max_size)
    jobs = [(fam.name, s) for s in shapes]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_classify_one, jobs, chunksize=32))
    else:
        results = [_classify_one(j) for j in jobs]
    report = ScanReport(fam.name, max_size, len(shapes))
    for s, (expected, computed) in zip(shapes, results):
        if expected != computed:
            report.mismatches.append({"shape": str(s), "expected": expected, "computed": computed})
    report.ms = round((time.perf_counter() - t0) * 1000)
    return report


def check_corollaries(fam: str | Family, max_size: int) -> list[str]:
    """Shapes where the criterion holds but the closed form differs from the expansion."""
    fam = family(fam)
    bad = []
    for s in scan_domain(fam, max_size):
        predicted = predicted_symmetric_form(fam, s)
        if predicted is not None and predicted != expand_M(fam, s):
            bad.append(str(s))
    return bad


def _sub_compositions(a: Composition) -> list[Composition]:
    out = []
    for k in range(len(a) + 1):
        out.extend(product(*[range(1, p + 1) for p in a[:k]]))
    return out


def skew_coproduct_sides(fam: str | Family, a: Composition) -> tuple[TensorElement, TensorElement]:
    """Both sides of ``Delta Sk_a = sum_beta Sk_beta (x) Sk_{a/beta}``.

    For column-strict or column-weak families in every column, ``beta`` must
    contain every cell below each of its cells, i.e. ``a/beta`` is an
    extended diagram; for first-column families every ``beta`` contributes.
    """
    fam = family(fam)
    lhs = coproduct_F(expand_F(fam, SkewShape(a)))
    rhs = TensorElement()
    for beta in _sub_compositions(tuple(a)):
        if fam.extended and not SkewShape(a, beta).is_extended():
            continue
        rhs = rhs + tensor(expand_F(fam, SkewShape(beta)), expand_F(fam, SkewShape(a, beta)))
    return lhs, rhs


def check_skew_consistency(fam: str | Family, a: Composition) -> bool:
    lhs, rhs = skew_coproduct_sides(fam, a)
    return lhs == rhs


def psi_pairing_failures(max_size: int) -> list[tuple[str, str, str]]:
    bad = []
    for first, second in PSI_PAIRS:
        for s in skew_shapes(max_size, partition_inner=FAMILIES[first].extended, connected=False):
            if psi(expand_M(first, s)) != expand_M(second, s):
                bad.append((first, second, str(s)))
    return bad


def check_psi_pairings(max_size: int) -> bool:
    return not psi_pairing_failures(max_size)


def check_chromatic(max_size: int) -> list[str]:
    """Shapes where ``[q^|E|] X_G`` differs from the strictly advanced extended expansion."""
    return [str(s) for s in scan_domain("sAex", max_size) if top_coefficient(s) != expand_M("sAex", s)]


def check_witnesses(max_size: int) -> list[str]:
    """Non-partition outer shapes where the witness contents fail the strict inequality."""
    bad = []
    for s in scan_domain("ex", max_size):
        if is_partition(s.outer):
            continue
        w = symmetry_witness_extended(s)
        e = expand_M("ex", s)
        if not e[w.gamma] < e[w.gamma_prime]:
            bad.append(str(s))
    return bad
