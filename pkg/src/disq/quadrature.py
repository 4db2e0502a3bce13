"""Quadrature for the singular improper integral of |f(x)|**(-2/n) over R.

The line is cut at the real roots of f.  Every piece is rewritten in a
local coordinate u >= 0 measured from its singular end, where the
integrand factors as

    u**(-2m/n) * |F(u)|**(-2/n)

with F a polynomial that has no zero on the piece (m is the multiplicity
of the root at u = 0, or 0 for a regular piece).  The local polynomials
are produced by exact Taylor shifts and only then rounded to floats, so
tanh-sinh nodes can approach u = 0 to ~1e-260 without cancellation.

The tails use x = +-(c + 1/t), which turns |f|**(-2/n) dx into
|t**n f(c + 1/t)|**(-2/n) dt: a polynomial in t that equals a0 at t = 0,
so the transformed tail integrand is regular on (0, 1].
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .exact_poly import Polynomial, discriminant
from .real_roots import isolation_details, narrow

DEFAULT_MAX_LEVEL = 12
MIN_LEVEL = 3
# y = (pi/2) sinh(s) <= 300 keeps 1 - tanh(y) ~ 1e-261 representable
_S_MAX = math.asinh(300.0 / (math.pi / 2))
# relative width to which irrational roots are bracketed before shifting
_ROOT_WIDTH = Fraction(1, 2**70)


class QuadratureError(ArithmeticError):
    pass


class RepeatedRootDivergence(QuadratureError):
    """A real root of multiplicity m >= n/2 makes the integral diverge."""


class ToleranceNotReached(QuadratureError):
    """The level cap was hit before the error estimate met the tolerance."""

    def __init__(self, message, value=None, error=None, level=None):
        super().__init__(message)
        self.value = value
        self.error = error
        self.level = level


class NonFiniteSample(QuadratureError):
    pass


@dataclass(frozen=True)
class IntegralResult:
    value: float
    abs_error_estimate: float
    levels_used: int
    pieces: int


@dataclass(frozen=True)
class IntegrandSpec:
    f: Polynomial
    n: int

    def __post_init__(self):
        if self.f.degree != self.n:
            raise ValueError(f"polynomial degree {self.f.degree} does not match n={self.n}")
        if self.f.is_zero():
            raise ValueError("integrand of the zero polynomial")

    @property
    def exponent(self) -> float:
        return 2.0 / self.n


def level_cap() -> int:
    env = os.environ.get("DISQ_MAX_LEVEL")
    return int(env) if env else DEFAULT_MAX_LEVEL


def _level_nodes(level: int):
    """Half-line abscissae s >= 0 added at this level, with h = 2**-level."""
    h = 2.0 ** -level
    if level == 0:
        s = np.arange(0.0, math.floor(_S_MAX) + 1.0)
    else:
        s = h * np.arange(1, int(_S_MAX / h) + 1, 2, dtype=float)
    y = (math.pi / 2) * np.sinh(s)
    cy = np.cosh(y)
    # 1 - tanh(y), computed without cancellation
    comp = np.exp(-y) / cy
    w = (math.pi / 2) * np.cosh(s) / (cy * cy)
    return s, comp, w


def _level_sum(g, a: float, b: float, level: int) -> float:
    half = 0.5 * (b - a)
    s, comp, w = _level_nodes(level)
    d = half * comp
    if level == 0:
        # s = 0 is the midpoint; count it once
        x = np.concatenate([[a + half], a + d[1:], b - d[1:]])
        wt = np.concatenate([[w[0]], w[1:], w[1:]])
    else:
        x = np.concatenate([a + d, b - d])
        wt = np.concatenate([w, w])
    keep = (x > a) & (x < b)
    vals = np.asarray(g(x[keep]), dtype=float)
    if not np.all(np.isfinite(vals)):
        bad = x[keep][~np.isfinite(vals)][0]
        raise NonFiniteSample(f"non-finite integrand at interior abscissa {bad!r}")
    return half * float(np.dot(wt[keep], vals))


def _tanh_sinh(g, a, b, tol, cap):
    total = _level_sum(g, a, b, 0)
    est = prev = total
    err = math.inf
    for level in range(1, cap + 1):
        h = 2.0 ** -level
        est = 0.5 * prev + h * _level_sum(g, a, b, level)
        err = abs(est - prev)
        if level >= MIN_LEVEL and err <= tol * max(1.0, abs(est)):
            return est, err, level
        prev = est
    raise ToleranceNotReached(
        f"tanh-sinh error {err:.3g} above tolerance {tol:.3g} at level cap {cap}",
        value=est, error=err, level=cap,
    )


def tanh_sinh(
    g: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    tol: float = 1e-12,
    max_level: int | None = None,
) -> tuple[float, float]:
    """Double-exponential quadrature of a vectorized ``g`` over (a, b).

    Endpoints are never sampled, so algebraic endpoint singularities with
    exponent > -1 are fine.  Nodes near an endpoint are placed at
    ``a + d`` with ``d`` computed directly, which matters when ``a == 0``.

    Returns ``(value, error_estimate)``; the estimate is the difference of
    the last two levels and the loop stops once it is at most
    ``tol * max(1, |value|)``.
    """
    if not a < b:
        raise ValueError(f"need a < b, got ({a}, {b})")
    cap = max_level if max_level is not None else level_cap()
    value, err, _ = _tanh_sinh(g, float(a), float(b), tol, cap)
    return value, err


@dataclass(frozen=True)
class _Piece:
    coeffs: np.ndarray  # local polynomial F(u), highest degree first
    width: float
    alpha: float  # exponent of u at the singular end

    def integrand(self, beta: float):
        c, alpha = self.coeffs, self.alpha

        def g(u):
            val = np.abs(np.polyval(c, u)) ** -beta
            if alpha:
                val = val * u ** -alpha
            return val

        return g


def _local(f: Polynomial, origin: Fraction, direction: int, drop: int) -> np.ndarray:
    """Float coefficients of f(origin + direction*u) / u**drop."""
    shifted = f.taylor_shift(origin)
    if direction < 0:
        shifted = shifted.scale_x(-1)
    cs = shifted.coeffs[: len(shifted.coeffs) - drop] if drop else shifted.coeffs
    return np.array([float(c) for c in cs])


def _tail(f: Polynomial, c: Fraction, direction: int) -> np.ndarray:
    """Float coefficients of t**n f(direction*(c + 1/t)), as a polynomial in t."""
    g = f.scale_x(-1) if direction < 0 else f
    return np.array([float(x) for x in g.taylor_shift(c).coeffs[::-1]])


def _roots_for_quadrature(f: Polynomial):
    """Sorted (rational root approximation, multiplicity) pairs."""
    out = []
    for iv, mult, factor in isolation_details(f):
        if iv.lo != iv.hi:
            scale = max(1, abs(iv.lo), abs(iv.hi))
            iv = narrow(factor, iv, _ROOT_WIDTH * scale)
        out.append((iv.mid, mult))
    return out


def _build_pieces(f: Polynomial, n: int) -> list[_Piece]:
    roots = _roots_for_quadrature(f)
    for r, m in roots:
        if 2 * m >= n:
            raise RepeatedRootDivergence(
                f"real root near {float(r):.17g} has multiplicity {m} >= n/2 = {n / 2}"
            )
    R = Fraction(math.ceil(max(abs(r) for r, _ in roots)) + 1) if roots else Fraction(1)
    pieces: list[_Piece] = []

    def regular(lo: Fraction, hi: Fraction):
        if hi > lo:
            pieces.append(_Piece(_local(f, lo, 1, 0), float(hi - lo), 0.0))

    deltas = []
    for i, (r, _) in enumerate(roots):
        d = Fraction(1)
        if i > 0:
            d = min(d, (r - roots[i - 1][0]) / 2)
        if i + 1 < len(roots):
            d = min(d, (roots[i + 1][0] - r) / 2)
        deltas.append(d)

    left = -R
    for (r, m), d in zip(roots, deltas):
        regular(left, r - d)
        alpha = 2.0 * m / n
        pieces.append(_Piece(_local(f, r, -1, m), float(d), alpha))
        pieces.append(_Piece(_local(f, r, 1, m), float(d), alpha))
        left = r + d
    regular(left, R)
    c = R - 1
    pieces.append(_Piece(_tail(f, c, -1), 1.0, 0.0))
    pieces.append(_Piece(_tail(f, c, 1), 1.0, 0.0))
    return pieces


def _integrate(f: Polynomial, n: int, tol: float) -> IntegralResult:
    spec = IntegrandSpec(f, n)
    pieces = _build_pieces(f, n)
    cap = level_cap()
    piece_tol = tol / len(pieces)
    total = 0.0
    err = 0.0
    levels = 0
    # fixed accumulation order keeps the sum reproducible
    for p in pieces:
        try:
            v, e, lev = _tanh_sinh(p.integrand(spec.exponent), 0.0, p.width, piece_tol, cap)
        except ToleranceNotReached as exc:
            raise ToleranceNotReached(
                f"integral did not reach tol={tol:g}: {exc}",
                value=None, error=exc.error, level=cap,
            ) from exc
        total += v
        err += e
        levels = max(levels, lev)
    if not math.isfinite(total):
        raise QuadratureError("integral evaluated to a non-finite value")
    return IntegralResult(value=total, abs_error_estimate=err, levels_used=levels, pieces=len(pieces))


def integrate_power(f: Polynomial, n: int, tol: float = 1e-10) -> IntegralResult:
    """Integral of |f(x)|**(-2/n) over the real line, for deg f = n >= 3.

    Raises RepeatedRootDivergence when a real root has multiplicity
    m >= n/2 (that includes every cubic with zero discriminant and a real
    double root).
    """
    if n < 3:
        raise ValueError(f"integrate_power needs n >= 3, got {n}")
    if not 1e-13 <= tol <= 1e-4:
        raise ValueError(f"tol must lie in [1e-13, 1e-4], got {tol}")
    return _integrate(f, n, tol)


def gaussian_check(a: float, b: float, c: float, tol: float = 1e-12) -> tuple[float, float]:
    """Integral of 1/(a x^2 + b x + c) by the same engine, and 2 pi / sqrt(4ac - b^2)."""
    if not a > 0:
        raise ValueError(f"need a > 0, got {a}")
    f = Polynomial([a, b, c])
    D = discriminant(f)
    if not D < 0:
        raise ValueError(f"need b^2 - 4ac < 0, got {float(D)}")
    numeric = _integrate(f, 2, tol).value
    return numeric, 2 * math.pi / math.sqrt(float(-D))


def predicted_cubic(D: Fraction) -> float | None:
    """Closed-form value C/|D|**(1/6) for a cubic, or None when D == 0."""
    from .specfun import C_MINUS, C_PLUS

    if D == 0:
        return None
    const = C_PLUS if D > 0 else C_MINUS
    return const / abs_root(D, 6)


def abs_root(D: Fraction, k: int) -> float:
    # float(D) may overflow for huge discriminants; go through logs then
    try:
        return abs(float(D)) ** (1.0 / k)
    except OverflowError:
        lg = math.log(abs(D.numerator)) - math.log(D.denominator)
        return math.exp(lg / k)
