"""Certified real-root counting and isolation with Sturm sequences.

All decisions (sign variations, bisection) are made in exact rational
arithmetic.  Floats appear only in :func:`refine`, which returns a float
approximation whose error bound is checked exactly before returning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact_poly import Polynomial, derivative, gcd


class EndpointRootError(ValueError):
    """An interval endpoint is itself a root of the queried polynomial."""


class RefinementError(RuntimeError):
    """Requested root accuracy was not reached within the iteration budget."""


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi}]"


@dataclass(frozen=True)
class IsolationResult:
    intervals: tuple[Interval, ...]
    multiplicity_flag: bool
    # multiplicity of the real root inside each interval
    multiplicities: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.intervals)


def sturm_sequence(f: Polynomial) -> list[Polynomial]:
    if f.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [f]
    if f.degree == 0:
        return seq
    seq.append(derivative(f))
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _variations(signs) -> int:
    prev = 0
    count = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _var_at(seq: list[Polynomial], x: Fraction) -> int:
    return _variations(_sign(p(x)) for p in seq)


def _var_at_inf(seq: list[Polynomial], positive: bool) -> int:
    return _variations(
        _sign(p.lead) * (1 if positive or p.degree % 2 == 0 else -1) for p in seq
    )


def count_real_roots(f: Polynomial) -> int:
    """Number of distinct real roots on the whole line."""
    seq = sturm_sequence(f)
    return _var_at_inf(seq, False) - _var_at_inf(seq, True)


def count_roots(f: Polynomial, iv: Interval, seq: list[Polynomial] | None = None) -> int:
    """Number of distinct real roots in (lo, hi]."""
    for x in (iv.lo, iv.hi):
        if f(x) == 0:
            raise EndpointRootError(f"endpoint {x} is a root")
    seq = seq or sturm_sequence(f)
    return _var_at(seq, iv.lo) - _var_at(seq, iv.hi)


def cauchy_bound(f: Polynomial) -> Fraction:
    """1 + max |a_k / a0|: every real root lies strictly inside (-B, B)."""
    a0 = f.lead
    return 1 + max((abs(c / a0) for c in f.coeffs[1:]), default=Fraction(0))


def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: f = lead * prod s_i**i with s_i square-free and coprime."""
    out = []
    g = gcd(f, derivative(f))
    if g.degree == 0:
        return [(f.monic(), 1)]
    b = f // g
    c = derivative(f) // g
    d = c - derivative(b)
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - derivative(b)
        i += 1
    return out


def _bisect_isolate(f: Polynomial, seq, lo: Fraction, hi: Fraction, out: list) -> None:
    # invariant: f(lo) != 0, f(hi) != 0
    n = _var_at(seq, lo) - _var_at(seq, hi)
    if n == 0:
        return
    if n == 1:
        out.append(Interval(lo, hi))
        return
    mid = (lo + hi) / 2
    if f(mid) == 0:
        # deterministic rational nudge off the root
        mid += (hi - lo) / 3 / 2
    _bisect_isolate(f, seq, lo, mid, out)
    _bisect_isolate(f, seq, mid, hi, out)


def _isolate_squarefree(f: Polynomial) -> list[Interval]:
    if f.degree < 1:
        return []
    b = cauchy_bound(f)
    seq = sturm_sequence(f)
    out: list[Interval] = []
    _bisect_isolate(f, seq, -b, b, out)
    return out


def isolation_details(f: Polynomial) -> list[tuple[Interval, int, Polynomial]]:
    """(interval, multiplicity, square-free factor owning the root), sorted."""
    if f.is_zero() or f.degree < 1:
        raise ValueError("isolate needs a polynomial of degree >= 1")
    return _isolate_parts(f, squarefree_decomposition(f))


def _isolate_parts(f: Polynomial, parts) -> list[tuple[Interval, int, Polynomial]]:
    found = []
    for s, mult in parts:
        for iv in _isolate_squarefree(s):
            found.append((iv, mult, s))
    found.sort(key=lambda t: t[0].lo)
    # factors are coprime, but intervals from different factors may overlap
    # and an endpoint from one factor may be a root of another
    intervals = [list(t) for t in found]
    changed = True
    while changed:
        changed = False
        for t in intervals:
            if t[0].lo != t[0].hi and (f(t[0].lo) == 0 or f(t[0].hi) == 0):
                t[0] = narrow(t[2], t[0], t[0].width / 2)
                changed = True
        for a, b in zip(intervals, intervals[1:]):
            if a[0].hi > b[0].lo:
                a[0] = narrow(a[2], a[0], a[0].width / 2)
                b[0] = narrow(b[2], b[0], b[0].width / 2)
                changed = True
        intervals.sort(key=lambda t: t[0].lo)
    return [tuple(t) for t in intervals]


def isolate(f: Polynomial) -> IsolationResult:
    """Disjoint sorted intervals, one per distinct real root of f.

    ``multiplicity_flag`` reports whether gcd(f, f') is nonconstant, i.e.
    whether f has any repeated root (real or complex); per-root real
    multiplicities are in ``multiplicities``.
    """
    if f.is_zero() or f.degree < 1:
        raise ValueError("isolate needs a polynomial of degree >= 1")
    parts = squarefree_decomposition(f)
    found = _isolate_parts(f, parts)
    return IsolationResult(
        intervals=tuple(t[0] for t in found),
        multiplicity_flag=any(m > 1 for _, m in parts),
        multiplicities=tuple(t[1] for t in found),
    )


def narrow(f: Polynomial, iv: Interval, width) -> Interval:
    """Bisect an isolating interval of a square-free f down to ``width``.

    The returned interval still has non-root endpoints, or is degenerate
    (lo == hi) when an exact rational root is hit.
    """
    width = Fraction(width)
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        return iv
    s_hi = _sign(f(hi))
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = _sign(f(mid))
        if s == 0:
            return Interval(mid, mid)
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return Interval(lo, hi)


def refine(f: Polynomial, iv: Interval, eps: float, max_iter: int = 200) -> float:
    """Float approximation within ``eps`` of the single simple root in ``iv``.

    Exact bisection brings the bracket down to a size where Newton is safe,
    then guarded Newton iterates in floats.  The result is only returned
    once f changes sign exactly across [x - eps, x + eps].
    """
    if iv.lo == iv.hi:
        return float(iv.lo)
    lo, hi = iv.lo, iv.hi
    s_hi = _sign(f(hi))
    if s_hi == 0 or _sign(f(lo)) == s_hi:
        raise ValueError(f"{iv} does not bracket a simple root")
    e = Fraction(eps)
    scale = max(1, abs(lo), abs(hi))
    while hi - lo > scale / 1024:
        mid = (lo + hi) / 2
        s = _sign(f(mid))
        if s == 0:
            return float(mid)
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    fc = [float(c) for c in f.coeffs]
    dfc = [float(c) for c in derivative(f).coeffs]

    def horner(cs, x):
        acc = 0.0
        for c in cs:
            acc = acc * x + c
        return acc

    x = float((lo + hi) / 2)
    for _ in range(max_iter):
        if hi - lo <= 2 * e:
            return float((lo + hi) / 2)
        xf = Fraction(x)
        a, b = xf - e, xf + e
        if lo <= a and b <= hi and _sign(f(a)) * _sign(f(b)) <= 0:
            return x
        # shrink the bracket with the current iterate
        if lo < xf < hi:
            s = _sign(f(xf))
            if s == 0:
                return x
            if s == s_hi:
                hi = xf
            else:
                lo = xf
        d = horner(dfc, x)
        step = horner(fc, x) / d if d else 0.0
        nx = x - step
        if not (float(lo) < nx < float(hi)) or nx == x:
            nx = float((lo + hi) / 2)
        x = nx
    raise RefinementError(f"root in {iv} not refined to {eps} in {max_iter} iterations")
