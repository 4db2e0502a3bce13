"""Randomized verification sweeps and the higher-degree exploration harness."""

from __future__ import annotations

import csv
import io
import json
import math
import random
import statistics
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exact_poly import Polynomial, discriminant
from .quadrature import (
    QuadratureError,
    RepeatedRootDivergence,
    ToleranceNotReached,
    abs_root,
    integrate_power,
    predicted_cubic,
)

ORBIT_TOL = 1e-6


@dataclass(frozen=True)
class SweepConfig:
    count: int = 200
    seed: int = 0
    coeff_range: int = 9
    n: int = 3
    tol: float = 1e-10

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.coeff_range < 1:
            raise ValueError("coeff_range must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass
class SweepRecord:
    coeffs: list[Fraction]
    n: int
    D: Fraction
    sign_D: int
    integral: float | None
    predicted: float | None
    rel_error: float | None
    status: str  # ok | divergent | tol_fail
    P: float | None = None

    def to_dict(self) -> dict:
        d = {
            "coeffs": [str(c) for c in self.coeffs],
            "n": self.n,
            "D": str(self.D),
            "sign_D": self.sign_D,
            "integral": self.integral,
            "predicted": self.predicted,
            "rel_error": self.rel_error,
            "status": self.status,
        }
        if self.P is not None:
            d["P"] = self.P
        return d


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def invariant_product(integral: float, D: Fraction, n: int) -> float:
    """integral * |D|**(1/(n(n-1))), the scale-free combination."""
    if D == 0:
        return 0.0
    return integral * abs_root(D, n * (n - 1))


def evaluate_polynomial(f: Polynomial, n: int, tol: float) -> SweepRecord:
    D = discriminant(f)
    s = _sign(D)
    predicted = predicted_cubic(D) if n == 3 else None
    try:
        value = integrate_power(f, n, tol).value
    except RepeatedRootDivergence:
        return SweepRecord(list(f.coeffs), n, D, s, None, predicted, None, "divergent")
    except (ToleranceNotReached, QuadratureError):
        return SweepRecord(list(f.coeffs), n, D, s, None, predicted, None, "tol_fail")
    rel = abs(value - predicted) / predicted if predicted is not None else None
    P = invariant_product(value, D, n) if n != 3 else None
    return SweepRecord(list(f.coeffs), n, D, s, value, predicted, rel, "ok", P)


def draw_integer_polynomial(rng: random.Random, n: int, bound: int) -> Polynomial:
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return Polynomial([lead] + [rng.randint(-bound, bound) for _ in range(n)])


def _stats(values: list[float]) -> dict:
    if not values:
        return {"count": 0, "max": None, "median": None}
    return {"count": len(values), "max": max(values), "median": statistics.median(values)}


def run_cubic_sweep(
    cfg: SweepConfig, polynomials: Sequence[Polynomial] | None = None
) -> tuple[list[SweepRecord], dict]:
    """Check integral == C_sign / |D|**(1/6) on random integer cubics.

    Draws with D == 0 are skipped (both sides diverge).  ``polynomials``
    replaces the random draws with an explicit list.
    """
    if cfg.n != 3:
        raise ValueError("the cubic sweep needs n == 3")
    records: list[SweepRecord] = []
    skipped = 0
    if polynomials is not None:
        for f in polynomials:
            records.append(evaluate_polynomial(f, 3, cfg.tol))
    else:
        rng = random.Random(cfg.seed)
        while len(records) < cfg.count:
            f = draw_integer_polynomial(rng, 3, cfg.coeff_range)
            if discriminant(f) == 0:
                skipped += 1
                continue
            records.append(evaluate_polynomial(f, 3, cfg.tol))
    summary = {
        "kind": "summary",
        "count": len(records),
        "skipped_zero_discriminant": skipped,
        "status": {k: sum(r.status == k for r in records) for k in ("ok", "divergent", "tol_fail")},
        "negative_D": _stats([r.rel_error for r in records if r.status == "ok" and r.sign_D < 0]),
        "positive_D": _stats([r.rel_error for r in records if r.status == "ok" and r.sign_D > 0]),
    }
    return records, summary


# orbit generators; each returns None when it does not apply
def _translate(f: Polynomial, rng: random.Random):
    return f.taylor_shift(Fraction(rng.randint(-8, 8), 4)), "translate"


def _scale(f: Polynomial, rng: random.Random):
    return f.scale_x(Fraction(rng.randint(1, 6), rng.randint(1, 6))), "scale"


def _multiply(f: Polynomial, rng: random.Random):
    return f * Fraction(rng.randint(1, 9), rng.randint(1, 9)), "lambda"


def _reverse(f: Polynomial, rng: random.Random):
    if f.coeffs[-1] == 0:
        return None
    return f.reverse(), "reverse"


_GENERATORS = (_translate, _scale, _multiply, _reverse)


def orbit(base: Polynomial, size: int, rng: random.Random) -> list[tuple[Polynomial, list[str]]]:
    """``size`` random compositions of translation, x-scaling, scalar multiple and reversal."""
    out = []
    for _ in range(size):
        f, trail = base, []
        for _ in range(rng.randint(1, 3)):
            step = rng.choice(_GENERATORS)(f, rng)
            if step is not None:
                f, name = step
                trail.append(name)
        out.append((f, trail))
    return out


DEFAULT_BASES = {
    4: [Polynomial([1, 0, -5, 0, 4]), Polynomial([1, 0, 0, 1, 1]), Polynomial([2, -1, 3, 0, -1])],
    5: [Polynomial([1, 0, 0, 0, 1, 0]), Polynomial([1, 0, -5, 0, 4, 1]), Polynomial([1, 1, 0, 2, 0, -3])],
}


@dataclass
class OrbitReport:
    base: Polynomial
    P_base: float
    P_values: list[float]
    transforms: list[list[str]]
    max_rel_deviation: float
    passed: bool
    statuses: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "kind": "orbit",
            "base": [str(c) for c in self.base.coeffs],
            "P_base": self.P_base,
            "P_values": self.P_values,
            "transforms": self.transforms,
            "max_rel_deviation": self.max_rel_deviation if math.isfinite(self.max_rel_deviation) else None,
            "passed": self.passed,
        }


def orbit_check(base: Polynomial, n: int, size: int, rng: random.Random, tol: float) -> OrbitReport:
    """Constancy of P = I * |D|**(1/(n(n-1))) along one orbit.

    With D == 0 every P is zero and the check degenerates to P == 0.
    """
    ref = evaluate_polynomial(base, n, tol)
    members = orbit(base, size, rng)
    Ps, trails, statuses = [], [], []
    for f, trail in members:
        rec = evaluate_polynomial(f, n, tol)
        Ps.append(rec.P if rec.status == "ok" else None)
        statuses.append(rec.status)
        trails.append(trail)
    if ref.status != "ok" or any(p is None for p in Ps):
        dev = float("inf")
    elif ref.P == 0:
        dev = 0.0 if all(p == 0 for p in Ps) else float("inf")
    else:
        dev = max(abs(p - ref.P) / ref.P for p in Ps)
    return OrbitReport(base, ref.P, Ps, trails, dev, dev <= ORBIT_TOL, statuses)


def run_exploration(
    cfg: SweepConfig, bases: Iterable[Polynomial] | None = None, orbit_size: int = 10
) -> tuple[list[SweepRecord], list[OrbitReport], dict]:
    """Random degree-n trials plus orbit families.

    The spread of P across unrelated polynomials is only reported; whether
    it is constant is an open question.  Orbit constancy follows from the
    covariance laws and is checked.
    """
    if cfg.n not in (4, 5):
        raise ValueError("exploration runs for n in {4, 5}")
    rng = random.Random(cfg.seed)
    records = [
        evaluate_polynomial(draw_integer_polynomial(rng, cfg.n, cfg.coeff_range), cfg.n, cfg.tol)
        for _ in range(cfg.count)
    ]
    bases = list(bases) if bases is not None else DEFAULT_BASES[cfg.n]
    orbits = [orbit_check(b, cfg.n, orbit_size, rng, cfg.tol) for b in bases]

    def spread(sign):
        ps = [r.P for r in records if r.status == "ok" and r.sign_D == sign]
        if not ps:
            return {"count": 0, "min": None, "max": None, "ratio": None}
        return {"count": len(ps), "min": min(ps), "max": max(ps), "ratio": max(ps) / min(ps)}

    summary = {
        "kind": "summary",
        "n": cfg.n,
        "count": len(records),
        "status": {k: sum(r.status == k for r in records) for k in ("ok", "divergent", "tol_fail")},
        "zero_discriminant": sum(r.sign_D == 0 for r in records),
        "P_spread_by_sign": {str(s): spread(s) for s in (-1, 1)},
        "orbits_passed": all(o.passed for o in orbits),
        "orbit_max_rel_deviation": max((o.max_rel_deviation for o in orbits), default=0.0),
    }
    return records, orbits, summary


def to_jsonl(rows: Iterable[dict]) -> str:
    return "".join(json.dumps(r) + "\n" for r in rows)


_CSV_FIELDS = ["coeffs", "n", "D", "sign_D", "integral", "predicted", "rel_error", "status", "P"]


def records_to_csv(records: Iterable[SweepRecord]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in records:
        d = r.to_dict()
        d["coeffs"] = " ".join(d["coeffs"])
        w.writerow(d)
    return buf.getvalue()
