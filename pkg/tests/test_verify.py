import json

import pytest

from qsymlab.families import FAMILIES
from qsymlab.verify import (
    ScanReport,
    check_chromatic,
    check_corollaries,
    check_psi_pairings,
    check_skew_consistency,
    check_witnesses,
    scan_domain,
    scan_theorem,
    skew_coproduct_sides,
)


def test_report_json_shape():
    r = scan_theorem("dI", 3)
    data = json.loads(json.dumps(r.to_json()))
    assert set(data) == {"family", "max_size", "shapes", "mismatches", "ms"}
    assert data["family"] == "dI" and data["max_size"] == 3 and data["mismatches"] == []
    assert isinstance(data["ms"], int)
    assert ScanReport("x", 1).confirmed


def test_domain_sizes():
    assert len(scan_domain("dI", 1)) == 1
    # a connected shape first needs a non-partition inner at size 6, e.g. 3,3/1,2
    assert len(scan_domain("ex", 5)) == len(scan_domain("dI", 5))
    assert len(scan_domain("ex", 6)) < len(scan_domain("dI", 6))


def test_parallel_scan_is_deterministic():
    a, b = scan_theorem("rdI", 5), scan_theorem("rdI", 5, workers=2)
    assert (a.shapes, a.mismatches) == (b.shapes, b.mismatches)


@pytest.mark.parametrize("name", FAMILIES)
def test_small_checks(name):
    assert scan_theorem(name, 4).confirmed
    assert check_corollaries(name, 4) == []
    for a in [(), (1,), (2, 1), (1, 2), (1, 1, 2), (3, 1)]:
        assert check_skew_consistency(name, a)


def test_skew_sides_for_one_row():
    lhs, rhs = skew_coproduct_sides("dI", (2,))
    assert lhs == rhs
    assert lhs.total_multiplicity() == 3


def test_other_checks_small():
    assert check_psi_pairings(3)
    assert check_chromatic(4) == []
    assert check_witnesses(4) == []
