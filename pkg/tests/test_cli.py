import json

import pytest

from qsymlab.cli import format_polynomial, main
from qsymlab.qsym import QSymElement, to_monomial_symmetric
from qsymlab.schur import schur_product
from qsymlab.shapes import SkewShape


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_expand_text(capsys):
    code, out, _ = run(capsys, "expand", "ex", "2,1")
    assert code == 0
    assert out == "M[1,2] + M[2,1] + 2*M[1,1,1]"
    assert run(capsys, "expand", "dI", "1", "--basis", "F")[1] == "F[1]"


def test_expand_m_basis_of_worked_example(capsys):
    code, out, _ = run(capsys, "expand", "dI", "3,4,4,3,1/2,1,2", "--basis", "m", "--format", "json")
    assert code == 0
    rows = [SkewShape((3, 1)), SkewShape((1,)), SkewShape((3,)), SkewShape((2,))]
    assert QSymElement.from_json(out) == to_monomial_symmetric(schur_product(rows))


def test_expand_json_round_trip(capsys):
    for basis in "MF":
        _, out, _ = run(capsys, "expand", "sAdI", "2,3/1", "--basis", basis, "--format", "json")
        f = QSymElement.from_json(out)
        assert json.loads(out) == f.to_json()


def test_expand_with_variables(capsys):
    code, out, _ = run(capsys, "expand", "ex", "2,1", "--vars", "2")
    assert code == 0
    assert out.splitlines()[1] == "with 2 variables: x1^2*x2 + x1*x2^2"
    assert format_polynomial({(0, 0): 3}) == "3"


def test_exit_codes(capsys):
    assert run(capsys, "expand", "dI", "2,x")[0] == 2
    assert run(capsys, "expand", "nope", "1")[0] == 2
    assert run(capsys, "expand", "ex", "3,4,4,3,1/2,2,1", "--basis", "m")[0] == 3
    assert run(capsys, "expand", "ex", "3,4/2,3")[0] == 3
    assert run(capsys, "classify", "dI", "10")[0] == 2
    assert run(capsys, "witness", "2,1")[0] == 3
    with pytest.raises(SystemExit) as e:
        main(["bogus"])
    assert e.value.code == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "dI", "1")
    assert code == 0 and "shapes=1" in out
    code, out, _ = run(capsys, "classify", "sAex", "4", "--format", "json")
    assert code == 0 and json.loads(out)["mismatches"] == []


def test_symmetric(capsys):
    code, out, _ = run(capsys, "symmetric", "ex", "3,4,4,3,1/2,2,1")
    assert code == 0 and "not symmetric (criterion agrees)" in out
    code, out, _ = run(capsys, "symmetric", "dI", "3,4,4,1,1/2,1,2")
    assert code == 0 and "disconnected" in out


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "6,4,6,2/2,1,1", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["I"], data["K"]) == (2, 9)
    assert data["coeff_gamma"] < data["coeff_gamma_prime"]
    code, out, _ = run(capsys, "witness", "1,2")
    assert code == 0 and out.startswith("I=1 K=1")


def test_checks(capsys):
    assert run(capsys, "psi-check", "--max-size", "3")[0] == 0
    assert run(capsys, "skew-check", "ex", "--max-size", "3")[0] == 0
    assert run(capsys, "chromatic-check", "--max-size", "3")[0] == 0
    assert run(capsys, "psi-check", "--max-size", "0")[0] == 2


def test_output_is_deterministic(capsys):
    a = run(capsys, "expand", "wAex", "2,3/1", "--format", "json")[1]
    b = run(capsys, "expand", "wAex", "2,3/1", "--format", "json")[1]
    assert a == b
