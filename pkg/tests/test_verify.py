import json
import math
import random

import pytest

from disq.exact_poly import Polynomial
from disq.specfun import C_MINUS, C_PLUS
from disq.verify import (
    ORBIT_TOL,
    SweepConfig,
    evaluate_polynomial,
    orbit,
    orbit_check,
    records_to_csv,
    run_cubic_sweep,
    run_exploration,
    to_jsonl,
)


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(count=0)
    with pytest.raises(ValueError):
        SweepConfig(coeff_range=0)
    with pytest.raises(ValueError):
        SweepConfig(seed=-1)


def test_forced_sweep_named_cubics():
    cfg = SweepConfig(count=1)
    records, summary = run_cubic_sweep(cfg, polynomials=[Polynomial([1, 0, 1, 0]), Polynomial([1, 0, -1, 0])])
    minus, plus = records
    assert minus.sign_D == -1 and plus.sign_D == 1
    assert minus.rel_error <= 1e-8 and plus.rel_error <= 1e-8
    assert minus.predicted == pytest.approx(C_MINUS / 4 ** (1 / 6), rel=1e-15)
    assert plus.predicted == pytest.approx(C_PLUS / 4 ** (1 / 6), rel=1e-15)
    assert summary["negative_D"]["count"] == 1 and summary["positive_D"]["count"] == 1


def test_sweep_rejects_other_degrees():
    with pytest.raises(ValueError):
        run_cubic_sweep(SweepConfig(n=4))


def test_record_invariants():
    records, _ = run_cubic_sweep(SweepConfig(count=30, seed=4))
    for r in records:
        assert r.sign_D != 0
        assert r.predicted is not None
        assert (r.rel_error is not None) == (r.status == "ok")
        assert "P" not in r.to_dict()


def test_divergent_record_keeps_prediction_absent():
    r = evaluate_polynomial(Polynomial([1, 0, -3, 2]), 3, 1e-10)
    assert r.status == "divergent"
    assert r.predicted is None and r.rel_error is None


def test_seed_determinism():
    cfg = SweepConfig(count=25, seed=12345)
    a, sa = run_cubic_sweep(cfg)
    b, sb = run_cubic_sweep(cfg)
    ja = to_jsonl([r.to_dict() for r in a] + [sa])
    jb = to_jsonl([r.to_dict() for r in b] + [sb])
    assert ja == jb
    c, _ = run_cubic_sweep(SweepConfig(count=25, seed=12346))
    assert [r.coeffs for r in c] != [r.coeffs for r in a]


def test_exploration_rejects_cubics():
    with pytest.raises(ValueError):
        run_exploration(SweepConfig(n=3))


@pytest.mark.parametrize("n", [4, 5])
def test_exploration_orbits(n):
    records, orbits, summary = run_exploration(SweepConfig(count=15, seed=1, n=n))
    assert len(records) == 15
    assert summary["orbits_passed"]
    assert summary["orbit_max_rel_deviation"] <= ORBIT_TOL
    for o in orbits:
        assert len(o.P_values) == 10
    for r in records:
        if r.status == "ok" and r.sign_D != 0:
            assert r.P > 0


def test_orbit_members_are_transforms():
    rng = random.Random(0)
    members = orbit(Polynomial([1, 0, -5, 0, 4]), 10, rng)
    assert len(members) == 10
    for f, trail in members:
        assert f.degree == 4
        assert trail


def test_orbit_of_double_complex_pair():
    # D == 0 here, so P vanishes along the whole orbit
    rep = orbit_check(Polynomial([1, 0, 2, 0, 1]), 4, 10, random.Random(2), 1e-10)
    assert rep.passed
    assert rep.P_base == 0 and all(p == 0 for p in rep.P_values)


def test_quintic_with_simple_real_root():
    r = evaluate_polynomial(Polynomial([1, 0, 0, 0, 1, 0]), 5, 1e-10)
    assert r.status == "ok"
    assert math.isfinite(r.P) and r.P > 0
    assert r.predicted is None


def test_quartic_double_real_root_is_divergent():
    f = Polynomial.from_roots([1, 1, 2, -3])
    r = evaluate_polynomial(f, 4, 1e-10)
    assert r.status == "divergent"


def test_csv_and_jsonl_formats():
    records, orbits, summary = run_exploration(SweepConfig(count=4, seed=9, n=4))
    text = records_to_csv(records)
    lines = text.strip().split("\n")
    assert lines[0] == "coeffs,n,D,sign_D,integral,predicted,rel_error,status,P"
    assert len(lines) == 5
    rows = [json.loads(line) for line in to_jsonl([o.to_dict() for o in orbits] + [summary]).splitlines()]
    assert rows[-1]["kind"] == "summary"
    assert all(r["kind"] == "orbit" for r in rows[:-1])
