"""Acceptance gate: every criterion, exact, one PASS/FAIL line each.

Run with pytest (lines appear in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""
import random
import sys
from collections import Counter
from itertools import product

import pytest

from qsymlab.compositions import compositions_up_to, is_partition, partitions_of
from qsymlab.families import FAMILIES, PSI_PAIRS, expand_M, symmetry_witness_extended
from qsymlab.qsym import QSymElement, evaluate_truncated, is_symmetric, psi
from qsymlab.schur import kostka, schur_product, skew_schur, transpose_identity_check
from qsymlab.shapes import SkewShape, parse_shape, skew_shapes
from qsymlab.tableaux import fillings
from qsymlab.verify import (
    check_chromatic,
    check_corollaries,
    check_skew_consistency,
    check_witnesses,
    psi_pairing_failures,
    scan_theorem,
)

RESULTS: dict[int, tuple[bool, str]] = {}

ROW = lambda k: SkewShape((k,))
COL = lambda k: SkewShape((1,) * k)


def symmetry_scans():
    bad = {f: scan_theorem(f, 6).mismatches for f in FAMILIES}
    n = sum(map(len, bad.values()))
    return n == 0, f"8 families at size 6, {n} mismatches"


def closed_forms():
    bad = {f: check_corollaries(f, 6) for f in FAMILIES}
    n = sum(map(len, bad.values()))
    return n == 0, f"closed forms at size 6, {n} failures"


def worked_examples():
    a = parse_shape("3,4,4,3,1/2,1,2")
    b = parse_shape("3,4,4,1,3/2,1,2")
    good, bad = parse_shape("4,4,3,3,1/2,2,1"), parse_shape("3,4,4,3,1/2,2,1")
    checks = {
        "dI": expand_M("dI", a) == schur_product([SkewShape((3, 1)), ROW(1), ROW(3), ROW(2)]),
        "rdI": expand_M("rdI", a) == schur_product([SkewShape((2, 1, 1)), COL(1), COL(3), COL(2)]),
        "ex": expand_M("ex", good) == skew_schur(good),
        "ex not symmetric": not is_symmetric(expand_M("ex", bad)),
        "rex": expand_M("rex", good) == skew_schur(parse_shape("5,4,4,2/3,2")),
        "sAdI": expand_M("sAdI", b) == schur_product([COL(4), COL(1), COL(3), COL(2)]),
        "wAdI": expand_M("wAdI", b) == schur_product([ROW(4), ROW(1), ROW(3), ROW(2)]),
    }
    failed = [k for k, v in checks.items() if not v]
    return not failed, f"{len(checks)} degree-10 identities" + (f", failed: {failed}" if failed else "")


def _random_element(rng, max_degree):
    terms = {}
    for _ in range(rng.randint(1, 5)):
        n = rng.randint(0, max_degree)
        parts, left = [], n
        while left:
            p = rng.randint(1, left)
            parts.append(p)
            left -= p
        terms[tuple(parts)] = rng.randint(-9, 9)
    return QSymElement("M", terms)


def psi_pairings():
    bad = psi_pairing_failures(5)
    rng = random.Random(20261014)
    samples = [_random_element(rng, 7) for _ in range(300)]
    not_involutive = sum(psi(psi(f)) != f for f in samples)
    ok = not bad and not not_involutive
    return ok, f"{len(PSI_PAIRS)} pairings to size 5: {len(bad)} failures; involution on 300 samples: {not_involutive} failures"


def chromatic_identity():
    bad = check_chromatic(6)
    return not bad, f"top q-coefficient vs sAex to size 6, {len(bad)} failures"


def skew_consistency():
    cases = [(f, a) for f in FAMILIES for a in compositions_up_to(5)]
    bad = [(f, a) for f, a in cases if not check_skew_consistency(f, a)]
    return not bad, f"{len(cases)} cases, {len(bad)} failures"


def _direct_polynomial(s, spec, k):
    out = Counter()
    for t in fillings(s, spec, k):
        e = [0] * k
        for v in t.entries:
            e[v - 1] += 1
        out[tuple(e)] += 1
    return dict(out)


def _product_factors():
    # connected partition shapes with at most 5 cells
    seen, out = set(), []
    for s in skew_shapes(6, partition_inner=True):
        if is_partition(s.outer) and s.size <= 5 and s not in seen:
            seen.add(s)
            out.append(s)
    return out


def oracle_equivalence():
    bad_eval = 0
    n_eval = 0
    for name, fam in FAMILIES.items():
        for s in skew_shapes(5, partition_inner=fam.extended, connected=False):
            n_eval += 1
            if evaluate_truncated(expand_M(fam, s), 4) != _direct_polynomial(s, fam.spec, 4):
                bad_eval += 1
    factors = _product_factors()
    lists = [[a, b] for a, b in product(factors, repeat=2) if a.size + b.size <= 6]
    lists += [[a, b, c] for a, b, c in product(factors, repeat=3) if a.size + b.size + c.size <= 6]
    bad_prod = 0
    for fs in lists:
        direct = QSymElement.one()
        for f in fs:
            direct = direct * skew_schur(f)
        bad_prod += schur_product(fs) != direct
    ok = not bad_eval and not bad_prod
    return ok, f"{n_eval} truncated evaluations, {bad_eval} failures; {len(lists)} products, {bad_prod} failures"


def witness_inequality():
    bad = check_witnesses(6)
    w = symmetry_witness_extended(parse_shape("6,4,6,2/2,1,1"))
    ok = not bad and (w.I, w.K) == (2, 9)
    return ok, f"size 6: {len(bad)} failures; 6,4,6,2/2,1,1 gives I={w.I} K={w.K}"


def classical_sanity():
    shapes = [s for s in skew_shapes(6, partition_inner=True, connected=False) if is_partition(s.outer)]
    bad = [s for s in shapes if not (is_symmetric(skew_schur(s)) and transpose_identity_check(s))]
    k21 = kostka(SkewShape((2, 1)), (1, 1, 1))
    diag = all(kostka(SkewShape(lam), lam) == 1 for n in range(1, 7) for lam in partitions_of(n))
    ok = not bad and k21 == 2 and diag
    return ok, f"{len(shapes)} skew Schur functions, {len(bad)} failures; K(21,111)={k21}; K(lam,lam)=1: {diag}"


CRITERIA = [
    (1, "symmetry scans", symmetry_scans),
    (2, "closed forms", closed_forms),
    (3, "worked examples", worked_examples),
    (4, "psi pairings", psi_pairings),
    (5, "chromatic identity", chromatic_identity),
    (6, "skew-coproduct consistency", skew_consistency),
    (7, "oracle equivalence", oracle_equivalence),
    (8, "witness inequality", witness_inequality),
    (9, "classical sanity", classical_sanity),
]


def line(number: int, title: str) -> str:
    ok, detail = RESULTS[number]
    return f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({title}): {detail}"


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[c[1].replace(" ", "-") for c in CRITERIA])
def test_criterion(number, title, check):
    RESULTS[number] = check()
    print(line(number, title))
    assert RESULTS[number][0], line(number, title)


if __name__ == "__main__":
    failed = 0
    for number, title, check in CRITERIA:
        RESULTS[number] = check()
        print(line(number, title), flush=True)
        failed += not RESULTS[number][0]
    sys.exit(1 if failed else 0)
