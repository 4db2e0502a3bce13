import json
import math

import pytest

from disq.cli import main
from disq.specfun import C_MINUS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_disc(capsys):
    code, out, _ = run(capsys, "disc", "1", "0", "-1", "0")
    assert code == 0
    assert json.loads(out) == {"D": "4", "sign": 1}


def test_disc_rational_and_negative(capsys):
    code, out, _ = run(capsys, "disc", "--", "1/2", "-3", "1")
    assert code == 0
    assert json.loads(out)["D"] == "7"


def test_disc_bad_degree(capsys):
    code, _, err = run(capsys, "disc", "1", "2")
    assert code == 1
    assert "degree" in err


def test_disc_bad_token(capsys):
    code, _, _ = run(capsys, "disc", "1", "x", "2")
    assert code == 1


def test_symdisc(capsys):
    code, out, err = run(capsys, "symdisc", "2")
    assert code == 0
    assert out.strip() == "-4*a0*a2 + a1^2"
    assert "2 monomials" in err
    code, out, _ = run(capsys, "symdisc", "3", "--format", "json")
    assert len(json.loads(out)) == 5
    code, _, _ = run(capsys, "symdisc", "7")
    assert code == 1


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "1", "0", "-1", "0")
    assert code == 0
    data = json.loads(out)
    assert not data["multiplicity_flag"]
    assert [round(r["approx"], 12) for r in data["roots"]] == [-1.0, 0.0, 1.0]
    code, out, _ = run(capsys, "roots", "1", "0", "-3", "2")
    data = json.loads(out)
    assert data["multiplicity_flag"]
    assert sorted(r["multiplicity"] for r in data["roots"]) == [1, 2]


def test_integrate(capsys):
    code, out, _ = run(capsys, "integrate", "1", "0", "1", "0", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert abs(data["value"] - 7.2859519436627448) <= 1e-9
    assert abs(data["predicted"] - C_MINUS / 4 ** (1 / 6)) <= 1e-12


def test_integrate_divergent_and_mismatch(capsys):
    code, _, err = run(capsys, "integrate", "1", "0", "-3", "2")
    assert code == 1
    assert "multiplicity" in err
    code, _, _ = run(capsys, "integrate", "1", "0", "1", "0", "--n", "4")
    assert code == 1


def test_gaussian_check(capsys):
    code, out, _ = run(capsys, "gaussian-check", "1", "0", "4")
    assert code == 0
    data = json.loads(out)
    assert data["closed_form"] == pytest.approx(math.pi / 2)
    assert data["rel_error"] <= 1e-10
    code, _, _ = run(capsys, "gaussian-check", "1", "0", "-1")
    assert code == 1


def test_identity_check(capsys):
    code, out, _ = run(capsys, "identity-check")
    data = json.loads(out)
    assert code == 0
    assert data["beta_identity_residual"] <= 1e-12
    assert data["pi_rel_error"] <= 1e-13
    assert data["ratio"] == pytest.approx(math.sqrt(3), rel=1e-13)


def test_verify_cubic_deterministic(capsys):
    code, out1, _ = run(capsys, "verify-cubic", "--count", "10", "--seed", "7")
    _, out2, _ = run(capsys, "verify-cubic", "--count", "10", "--seed", "7")
    assert code == 0
    assert out1 == out2
    rows = [json.loads(line) for line in out1.splitlines()]
    assert len(rows) == 11
    assert rows[-1]["kind"] == "summary"


def test_verify_cubic_csv(capsys):
    code, out, _ = run(capsys, "verify-cubic", "--count", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0].startswith("coeffs,")
    assert len(out.splitlines()) == 4


def test_explore(capsys):
    code, out, _ = run(capsys, "explore", "--n", "5", "--count", "5")
    assert code == 0
    summary = json.loads(out.splitlines()[-1])
    assert summary["orbits_passed"]
    code, _, _ = run(capsys, "explore", "--n", "3")
    assert code == 1


def test_usage_errors(capsys):
    for argv in ([], ["nope"], ["disc"], ["integrate", "1", "0", "1", "0", "--tol", "abc"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
    capsys.readouterr()


def test_bad_config_is_domain_error(capsys):
    code, _, _ = run(capsys, "verify-cubic", "--count", "0")
    assert code == 1
