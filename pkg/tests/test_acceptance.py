"""Acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py -s -v`` to see one PASS/FAIL
line per criterion.
"""

import io
import json
import math
import random
import time
from contextlib import redirect_stdout
from fractions import Fraction

from disq.cli import main
from disq.exact_poly import (
    Polynomial,
    cubic_data,
    delta_squared,
    derivative,
    discriminant,
    resultant,
)
from disq.quadrature import gaussian_check, integrate_power
from disq.real_roots import isolate
from disq.specfun import beta, constant_C_minus, constant_C_plus
from disq.symbolic_disc import (
    compare_to_reference,
    evaluate,
    reference_discriminant,
    sym_discriminant,
)
from disq.verify import ORBIT_TOL, SweepConfig, run_cubic_sweep, run_exploration

# mpmath at 40 digits, frozen before the build
C_MINUS_REF = 9.179724222343157249479165033852946151437
C_PLUS_REF = 15.89974875256904961582320549683594832315


def report(k, title, ok, detail):
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {k}: {title} ({detail})")
    assert ok, detail


def rand_q(rng, bound=30, den=12):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def rand_rational_poly(rng, n):
    lead = Fraction(0)
    while lead == 0:
        lead = rand_q(rng)
    return Polynomial([lead] + [rand_q(rng) for _ in range(n)])


def test_01_cubic_sweep():
    t0 = time.perf_counter()
    records, summary = run_cubic_sweep(SweepConfig(count=200, seed=0, coeff_range=9, tol=1e-10))
    elapsed = time.perf_counter() - t0
    ok_recs = [r for r in records if r.status != "divergent"]
    worst = max(r.rel_error if r.rel_error is not None else math.inf for r in ok_recs)
    strata = summary["negative_D"]["count"], summary["positive_D"]["count"]
    ok = worst <= 1e-8 and min(strata) > 0 and elapsed <= 60 and len(records) == 200
    report(1, "cubic formula sweep", ok,
           f"worst rel_error {worst:.2e}, strata D<0/D>0 = {strata}, {elapsed:.1f}s")


def test_02_named_values():
    v_minus = integrate_power(Polynomial([1, 0, 1, 0]), 3).value
    v_plus = integrate_power(Polynomial([1, 0, -1, 0]), 3).value
    e1 = abs(v_minus - C_MINUS_REF / 4 ** (1 / 6)) / (C_MINUS_REF / 4 ** (1 / 6))
    e2 = abs(v_plus - C_PLUS_REF / 4 ** (1 / 6)) / (C_PLUS_REF / 4 ** (1 / 6))
    ec = max(abs(constant_C_minus() / C_MINUS_REF - 1), abs(constant_C_plus() / C_PLUS_REF - 1))
    report(2, "named values x^3+x, x^3-x", max(e1, e2) <= 1e-9 and ec <= 1e-9,
           f"rel errors {e1:.2e}, {e2:.2e}; constants {ec:.2e}")


def test_03_symbolic_exactness():
    rng = random.Random(2024)
    details = []
    ok = True
    for n, count in ((3, 5), (4, 16), (5, 59)):
        ref = reference_discriminant(n)
        d = sym_discriminant(n)
        diff = compare_to_reference(d, ref)
        bad = 0
        for _ in range(100):
            f = rand_rational_poly(rng, n)
            bad += evaluate(d, f.coeffs) != discriminant(f)
        ok &= diff.is_empty() and len(ref) == count == len(d) and bad == 0
        details.append(f"n={n}: {len(d)} terms, diff {len(diff)}, eval mismatches {bad}")
    report(3, "symbolic discriminants", ok, "; ".join(details))


def test_04_exact_cubic_identities():
    rng = random.Random(4)
    fails = 0
    for _ in range(1000):
        f = rand_rational_poly(rng, 3)
        a = f.lead
        D = discriminant(f)
        cd = cubic_data(f)
        fails += a * D != -resultant(f, derivative(f))
        fails += cd.B ** 2 - 4 * cd.A * cd.C != -3 * D
        fails += D != a ** 4 * delta_squared(f)
    report(4, "exact cubic identities over 1000 rational cubics", fails == 0, f"{fails} failures")


def test_05_beta_identity():
    cm = constant_C_minus()
    resid = abs(math.sqrt(3) * beta(1 / 3, 1 / 3) - 2 ** (1 / 3) * beta(0.5, 1 / 6)) / cm
    pi_err = abs(beta(0.5, 0.5) - math.pi) / math.pi
    report(5, "Beta identity", resid <= 1e-12 and pi_err <= 1e-13,
           f"residual {resid:.2e}, B(1/2,1/2) vs pi {pi_err:.2e}")


def test_06_gaussian_baseline():
    rng = random.Random(6)
    worst = 0.0
    for _ in range(100):
        a = rng.uniform(0.05, 20)
        b = rng.uniform(-20, 20)
        c = (b * b + rng.uniform(0.01, 50)) / (4 * a)
        numeric, closed = gaussian_check(a, b, c)
        worst = max(worst, abs(numeric - closed) / closed)
    report(6, "Gaussian baseline, 100 triples", worst <= 1e-10, f"worst rel error {worst:.2e}")


def test_07_root_count_dichotomy():
    rng = random.Random(7)
    done = exceptions = 0
    while done < 500:
        f = rand_rational_poly(rng, 3)
        D = discriminant(f)
        if D == 0:
            continue
        exceptions += len(isolate(f)) != (3 if D > 0 else 1)
        done += 1
    report(7, "root count dichotomy, 500 cubics", exceptions == 0, f"{exceptions} exceptions")


def _no_multiple_real_roots(rng, n):
    while True:
        cs = [rng.randint(-9, 9) for _ in range(n + 1)]
        if cs[0] and cs[-1]:
            f = Polynomial(cs)
            if discriminant(f) != 0:
                return f


def test_08_covariance():
    rng = random.Random(8)
    tol = 1e-10
    worst = {"translation": 0.0, "x-scaling": 0.0, "lambda-scaling": 0.0, "reversal": 0.0}
    exact_fail = 0
    for trial in range(50):
        n = 3 + trial % 3
        f = _no_multiple_real_roots(rng, n)
        D = discriminant(f)
        base = integrate_power(f, n, tol).value
        t = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
        s = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        lam = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        cases = {
            "translation": (f.taylor_shift(t), base),
            "x-scaling": (f.scale_x(s), base / abs(float(s))),
            "lambda-scaling": (f * lam, abs(float(lam)) ** (-2 / n) * base),
            "reversal": (f.reverse(), base),
        }
        for name, (g, expected) in cases.items():
            got = integrate_power(g, n, tol).value
            worst[name] = max(worst[name], abs(got - expected) / (2 * tol * max(1.0, abs(expected))))
        exact_fail += discriminant(f.taylor_shift(t)) != D
        exact_fail += discriminant(f.scale_x(s)) != s ** (n * (n - 1)) * D
        exact_fail += discriminant(f * lam) != lam ** (2 * n - 2) * D
        exact_fail += discriminant(f.reverse()) != D
    ok = max(worst.values()) <= 1.0 and exact_fail == 0
    detail = ", ".join(f"{k} {v:.2e}" for k, v in worst.items())
    report(8, "covariance, 50 trials each", ok,
           f"worst error as a fraction of 2*tol: {detail}; exact failures {exact_fail}")


def test_09_orbit_invariance():
    details = []
    ok = True
    for n in (4, 5):
        _, orbits, summary = run_exploration(SweepConfig(count=40, seed=9, n=n), orbit_size=10)
        ok &= summary["orbits_passed"] and summary["orbit_max_rel_deviation"] <= ORBIT_TOL
        ok &= all(len(o.P_values) == 10 for o in orbits)
        spread = summary["P_spread_by_sign"]
        spread_txt = ", ".join(
            f"sign {k}: {v['count']} trials, P in [{v['min']:.4g}, {v['max']:.4g}]"
            for k, v in spread.items() if v["count"]
        )
        details.append(f"n={n}: max orbit deviation {summary['orbit_max_rel_deviation']:.2e}; spread {spread_txt}")
    report(9, "orbit invariance of P", ok, " | ".join(details))


def _capture(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_10_determinism():
    runs = [
        ["verify-cubic", "--count", "40", "--seed", "99"],
        ["explore", "--n", "4", "--count", "10", "--seed", "99"],
    ]
    ok = True
    for argv in runs:
        c1, o1 = _capture(argv)
        c2, o2 = _capture(argv)
        ok &= c1 == c2 == 0 and o1 == o2 and all(json.loads(line) for line in o1.splitlines())
    report(10, "byte-identical output for equal seeds", ok, f"{len(runs)} sweeps compared")
