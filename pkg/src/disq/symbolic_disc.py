"""Symbolic discriminants as sparse integer polynomials in a0..an.

The general discriminant is expanded from the (2n-1)x(2n-1) Sylvester
matrix of f and f' by fraction-free elimination, where every division
is exact.  Reference listings for n = 3, 4, 5 live in ``data/`` as one
monomial per line, e.g. ``-27 a0^2 a3^2``.
"""

from __future__ import annotations

import functools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable, Mapping, Sequence

DEFAULT_MAX_DEGREE = 6

Exponents = tuple[int, ...]


def _grlex_key(e: Exponents):
    # descending total degree, then lex with a0 most significant
    return (-sum(e), tuple(-x for x in e))


class SymPoly:
    """Sparse polynomial with integer coefficients over ``nvars`` variables.

    Immutable by convention; ``terms`` maps exponent tuples to nonzero ints.
    Iteration is graded-lex with a0 taking precedence.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} has wrong length for {nvars} variables")
            if c:
                clean[tuple(e)] = int(c)
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c: int) -> "SymPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, k: int, coeff: int = 1) -> "SymPoly":
        e = [0] * nvars
        e[k] = 1
        return cls(nvars, {tuple(e): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        for e in sorted(self.terms, key=_grlex_key):
            yield e, self.terms[e]

    def __eq__(self, other) -> bool:
        return isinstance(other, SymPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "SymPoly") -> "SymPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SymPoly(self.nvars, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return SymPoly(self.nvars, out)

    def __mul__(self, other) -> "SymPoly":
        if isinstance(other, int):
            return SymPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymPoly(self.nvars, out)

    __rmul__ = __mul__

    def leading(self) -> tuple[Exponents, int]:
        e = min(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def exact_div(self, d: "SymPoly") -> "SymPoly":
        """Divide by ``d``, raising ArithmeticError if there is a remainder."""
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        ed, cd = d.leading()
        rem = dict(self.terms)
        quot: dict[Exponents, int] = {}
        while rem:
            er = min(rem, key=_grlex_key)
            cr = rem[er]
            de = tuple(x - y for x, y in zip(er, ed))
            if min(de) < 0 or cr % cd:
                raise ArithmeticError("inexact polynomial division")
            q = cr // cd
            quot[de] = q
            for e, c in d.terms.items():
                key = tuple(x + y for x, y in zip(e, de))
                v = rem.get(key, 0) - q * c
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return SymPoly(self.nvars, quot)

    def substitute_index(self, perm: Sequence[int]) -> "SymPoly":
        """Rename variable k to variable perm[k]."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for k, x in enumerate(e):
                ne[perm[k]] += x
            out[tuple(ne)] = c
        return SymPoly(self.nvars, out)

    def to_json(self) -> str:
        return json.dumps([{"exponents": list(e), "coeff": str(c)} for e, c in self])

    @classmethod
    def from_json(cls, text: str) -> "SymPoly":
        items = json.loads(text)
        if not items:
            raise ValueError("cannot infer variable count from an empty term list")
        nvars = len(items[0]["exponents"])
        return cls(nvars, {tuple(t["exponents"]): int(t["coeff"]) for t in items})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self:
            mono = "*".join(
                f"a{k}" + (f"^{x}" if x > 1 else "") for k, x in enumerate(e) if x
            )
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"SymPoly({self.nvars}, {str(self)!r})"


@dataclass(frozen=True)
class SymMatrix:
    rows: int
    cols: int
    entries: tuple[SymPoly, ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[SymPoly]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]


def sym_sylvester(n: int) -> SymMatrix:
    """Sylvester matrix of the generic degree-n f and f' over a0..an."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    nv = n + 1
    zero = SymPoly(nv)
    f_row = [SymPoly.var(nv, k) for k in range(n + 1)]
    df_row = [SymPoly.var(nv, k, n - k) for k in range(n)]
    size = 2 * n - 1
    rows = []
    for coeffs, count in ((f_row, n - 1), (df_row, n)):
        for shift in range(count):
            row = [zero] * size
            row[shift:shift + len(coeffs)] = coeffs
            rows.append(row)
    return SymMatrix(size, size, tuple(x for r in rows for x in r))


def sym_determinant(M: SymMatrix) -> SymPoly:
    """Fraction-free Bareiss elimination with exact multivariate division."""
    if M.rows != M.cols:
        raise ValueError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        raise ValueError("empty matrix")
    nv = M.entries[0].nvars
    m = M.tolist()
    sign = 1
    prev = SymPoly.constant(nv, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return SymPoly(nv)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if not num.is_zero() else num
        prev = pivot
    return m[n - 1][n - 1] * sign


def cofactor_determinant(M: SymMatrix) -> SymPoly:
    """Laplace expansion along the first row; slow, kept as a cross-check."""
    rows = M.tolist()
    nv = rows[0][0].nvars

    def rec(rows):
        if len(rows) == 1:
            return rows[0][0]
        acc = SymPoly(nv)
        for j, a in enumerate(rows[0]):
            if a.is_zero():
                continue
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = a * rec(minor)
            acc = acc - term if j % 2 else acc + term
        return acc

    return rec(rows)


def sym_discriminant(n: int, max_degree: int = DEFAULT_MAX_DEGREE) -> SymPoly:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > max_degree:
        raise ValueError(f"n={n} exceeds the configured degree cap {max_degree}")
    return _sym_discriminant(n)


@functools.lru_cache(maxsize=None)
def _sym_discriminant(n: int) -> SymPoly:
    res = sym_determinant(sym_sylvester(n))
    a0 = SymPoly.var(n + 1, 0)
    # a remainder here means the elimination is wrong; let it propagate
    d = res.exact_div(a0)
    return -d if (n * (n - 1) // 2) % 2 else d


@dataclass
class DiffReport:
    missing_in_p: list[tuple[Exponents, int]] = field(default_factory=list)
    missing_in_reference: list[tuple[Exponents, int]] = field(default_factory=list)
    mismatched: list[tuple[Exponents, int, int]] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not (self.missing_in_p or self.missing_in_reference or self.mismatched)

    def __len__(self) -> int:
        return len(self.missing_in_p) + len(self.missing_in_reference) + len(self.mismatched)


def compare_to_reference(p: SymPoly, reference: SymPoly) -> DiffReport:
    if p.nvars != reference.nvars:
        raise ValueError(f"variable count mismatch: {p.nvars} vs {reference.nvars}")
    report = DiffReport()
    for e in sorted(set(p.terms) | set(reference.terms), key=_grlex_key):
        cp, cr = p.terms.get(e), reference.terms.get(e)
        if cp is None:
            report.missing_in_p.append((e, cr))
        elif cr is None:
            report.missing_in_reference.append((e, cp))
        elif cp != cr:
            report.mismatched.append((e, cp, cr))
    return report


def evaluate(p: SymPoly, values: Sequence) -> Fraction:
    if len(values) != p.nvars:
        raise ValueError(f"expected {p.nvars} values, got {len(values)}")
    vals = [Fraction(v) for v in values]
    total = Fraction(0)
    for e, c in p.terms.items():
        t = Fraction(c)
        for v, x in zip(vals, e):
            if x:
                t *= v ** x
        total += t
    return total


_TERM = re.compile(r"a(\d+)(?:\^(\d+))?")


def parse_monomials(lines: Iterable[str], nvars: int) -> SymPoly:
    """Parse lines of the form ``<int> a0^2 a3 ...``; ``#`` starts a comment."""
    terms: dict[Exponents, int] = {}
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        coeff, *factors = line.split()
        e = [0] * nvars
        for fac in factors:
            m = _TERM.fullmatch(fac)
            if not m:
                raise ValueError(f"bad factor {fac!r} in line {raw!r}")
            e[int(m.group(1))] += int(m.group(2) or 1)
        key = tuple(e)
        if key in terms:
            raise ValueError(f"duplicate monomial in line {raw!r}")
        terms[key] = int(coeff)
    return SymPoly(nvars, terms)


def reference_discriminant(n: int) -> SymPoly:
    """Transcribed listing for n in {3, 4, 5}."""
    text = resources.files("disq.data").joinpath(f"disc_n{n}.txt").read_text()
    return parse_monomials(text.splitlines(), n + 1)
