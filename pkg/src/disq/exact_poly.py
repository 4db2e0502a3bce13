"""Exact univariate polynomials over the rationals.

Coefficients are always stored highest degree first, so ``(a, b, c, d)``
is ``a*x**3 + b*x**2 + c*x + d`` and ``(a0, ..., an)`` is
``a0*x**n + ... + an``.  Nothing in this module rounds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # exact binary value of the float, no decimal round trip
        return Fraction(value)
    return Fraction(value)


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    i = 0
    while i < len(coeffs) - 1 and coeffs[i] == 0:
        i += 1
    return tuple(coeffs[i:]) if coeffs else (Fraction(0),)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with rational coefficients, highest degree first.

    A leading zero is rejected rather than silently dropped: the declared
    degree matters downstream (it fixes the integrand exponent).  Use
    :meth:`from_trimmed` when stripping is what you want.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        cs = tuple(_as_fraction(c) for c in coeffs)
        if not cs:
            cs = (Fraction(0),)
        if len(cs) > 1 and cs[0] == 0:
            raise ValueError(
                f"leading coefficient is zero for declared degree {len(cs) - 1}"
            )
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_trimmed(cls, coeffs: Iterable) -> "Polynomial":
        return cls(_trim([_as_fraction(c) for c in coeffs]))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Polynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([1, -_as_fraction(r)])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, Fraction) else Fraction(0)
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs[::-1], other.coeffs[::-1]
        n = max(len(a), len(b))
        s = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        return Polynomial.from_trimmed(s[::-1])

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            lam = _as_fraction(other)
            return Polynomial.from_trimmed(c * lam for c in self.coeffs)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial.from_trimmed(out)

    __rmul__ = __mul__

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial([0]), self
        quot = []
        for i in range(dq + 1):
            q = rem[i] / other.lead
            quot.append(q)
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= q * b
        return Polynomial.from_trimmed(quot), Polynomial.from_trimmed(rem[dq + 1:] or [0])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def monic(self) -> "Polynomial":
        return self * (1 / self.lead) if not self.is_zero() else self

    def taylor_shift(self, t) -> "Polynomial":
        """Return the coefficients of ``f(x + t)``."""
        t = _as_fraction(t)
        c = list(self.coeffs)
        n = len(c)
        # repeated synthetic division (Horner scheme, Ruffini)
        for i in range(n - 1):
            for j in range(1, n - i):
                c[j] += t * c[j - 1]
        return Polynomial(c)

    def scale_x(self, s) -> "Polynomial":
        """Return ``f(s*x)``."""
        s = _as_fraction(s)
        n = self.degree
        return Polynomial(c * s ** (n - k) for k, c in enumerate(self.coeffs))

    def reverse(self) -> "Polynomial":
        """Return ``x**n * f(1/x)``; needs a nonzero constant term."""
        if self.coeffs[-1] == 0:
            raise ValueError("reversal needs a nonzero constant coefficient")
        return Polynomial(self.coeffs[::-1])

    def to_json(self) -> str:
        return json.dumps([f"{c.numerator}/{c.denominator}" for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls(Fraction(s) for s in json.loads(text))

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (zero if both are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows * self.cols != len(self.entries):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(_as_fraction(x) for row in rows for x in row))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]


@dataclass(frozen=True)
class CubicData:
    A: Fraction
    B: Fraction
    C: Fraction


def derivative(f: Polynomial) -> Polynomial:
    n = f.degree
    if n == 0:
        return Polynomial([0])
    return Polynomial((n - k) * a for k, a in enumerate(f.coeffs[:-1]))


def sylvester_matrix(f: Polynomial, g: Polynomial) -> RationalMatrix:
    """Sylvester matrix: deg(g) shifted rows of f, then deg(f) shifted rows of g."""
    if f.is_zero() or g.is_zero():
        raise ValueError("sylvester matrix of a zero polynomial")
    n, m = f.degree, g.degree
    if n < 1 or m < 1:
        raise ValueError("both polynomials need degree >= 1")
    size = n + m
    rows = []
    for poly, count in ((f, m), (g, n)):
        for shift in range(count):
            row = [Fraction(0)] * size
            row[shift:shift + len(poly.coeffs)] = poly.coeffs
            rows.append(row)
    return RationalMatrix.from_rows(rows)


def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - row_i[k] * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def determinant(M: RationalMatrix) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination.

    Each row is first scaled by the lcm of its denominators so the
    elimination runs over the integers.
    """
    if M.rows != M.cols:
        raise ValueError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return Fraction(1)
    scale = 1
    rows = []
    for row in M.tolist():
        d = lcm(*(x.denominator for x in row))
        scale *= d
        rows.append([x.numerator * (d // x.denominator) for x in row])
    return Fraction(_bareiss(rows), scale)


def resultant(f: Polynomial, g: Polynomial) -> Fraction:
    return determinant(sylvester_matrix(f, g))


def discriminant(f: Polynomial) -> Fraction:
    """D = (-1)**(n(n-1)/2) * Res(f, f') / a0."""
    n = f.degree
    if n < 2:
        raise ValueError(f"discriminant needs degree >= 2, got {n}")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f)) / f.lead


def cubic_data(f: Polynomial) -> CubicData:
    if f.degree != 3:
        raise ValueError(f"cubic_data needs degree 3, got {f.degree}")
    a, b, c, d = f.coeffs
    return CubicData(A=b * b - 3 * a * c, B=b * c - 9 * a * d, C=c * c - 3 * b * d)


def power_sums(f: Polynomial, k_max: int) -> list[Fraction]:
    """Power sums p_0..p_k_max of the roots, by Newton's identities.

    No roots are computed; p_0 is the degree.
    """
    if f.is_zero():
        raise ValueError("power sums of the zero polynomial")
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    a = f.coeffs
    n = f.degree
    p = [Fraction(n)]
    for k in range(1, k_max + 1):
        s = sum((a[j] * p[k - j] for j in range(1, min(k - 1, n) + 1)), Fraction(0))
        if k <= n:
            s += k * a[k]
        p.append(-s / a[0])
    return p


def delta_squared(f: Polynomial) -> Fraction:
    """Squared root-difference product, as the Hankel determinant of power sums.

    This is det(V V^T) for the Vandermonde matrix V of the roots, so it
    equals prod_{i<j} (r_i - r_j)**2 and D = a0**(2n-2) * delta_squared.
    """
    n = f.degree
    if n < 2:
        raise ValueError(f"delta_squared needs degree >= 2, got {n}")
    p = power_sums(f, 2 * n - 2)
    return determinant(RationalMatrix.from_rows([[p[i + j] for j in range(n)] for i in range(n)]))
