"""Exact strict-positivity decisions for elements of G0 on closed sets.

The denominator ``t**a (1-t)**b`` is positive on (0, 1), so everything reduces
to the integer numerator: exact signs at points and interval endpoints plus a
Sturm root count on the open interior. No floating point is used in a
decision.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import NamedTuple

from . import _poly
from .param_sets import ParamSet
from .ring import RingElement, eval_at

__all__ = [
    "Verdict",
    "TraceEntry",
    "PositivityCertificate",
    "Membership",
    "is_positive_on",
    "in_cone_GF",
    "sup_on",
    "count_roots",
    "simplest_between",
]

REFINE_STEPS = 80


class Verdict(enum.Enum):
    POSITIVE = "POSITIVE"
    NOT_POSITIVE = "NOT_POSITIVE"


class TraceEntry(NamedTuple):
    """One checked component: a point has lo == hi and root_count None."""

    lo: Fraction
    hi: Fraction
    root_count: int | None
    lo_sign: int
    hi_sign: int


@dataclass(frozen=True)
class PositivityCertificate:
    verdict: Verdict
    witness: Fraction | None = None
    witness_value: Fraction | None = None
    witness_interval: tuple[Fraction, Fraction] | None = None
    method_trace: tuple[TraceEntry, ...] = field(default_factory=tuple)

    @property
    def positive(self) -> bool:
        return self.verdict is Verdict.POSITIVE

    def __bool__(self) -> bool:
        return self.positive

    def describe(self) -> str:
        lines = [f"verdict: {self.verdict.value}"]
        if self.witness is not None:
            lines.append(f"witness: t* = {self.witness}, value = {self.witness_value}")
        if self.witness_interval is not None:
            lo, hi = self.witness_interval
            lines.append(f"witness interval: [{lo}, {hi}] contains a zero")
        for e in self.method_trace:
            if e.root_count is None:
                lines.append(f"  point {e.lo}: sign {e.lo_sign:+d}")
            else:
                lines.append(
                    f"  interval [{e.lo}, {e.hi}]: endpoint signs {e.lo_sign:+d}/{e.hi_sign:+d}, "
                    f"interior roots {e.root_count}"
                )
        return "\n".join(lines)


class Membership(NamedTuple):
    """Result of a cone-membership test; truthy iff ``member``."""

    member: bool
    certificates: tuple

    def __bool__(self) -> bool:
        return self.member


def simplest_between(p: Fraction, q: Fraction) -> Fraction:
    """The rational with smallest denominator in the open interval (p, q), p < q."""
    if p >= q:
        raise ValueError("need p < q")
    fl = floor(p)
    if fl + 1 < q:
        return Fraction(fl + 1)
    # both lie in [fl, fl + 1); recurse on the reciprocals of the fractional parts
    pf, qf = p - fl, q - fl
    if pf == 0:
        # (0, qf): 1/n for the smallest n with 1/n < qf
        n = floor(1 / qf) + 1
        return fl + Fraction(1, n)
    inner = simplest_between(1 / qf, 1 / pf)
    return fl + 1 / inner


class _Sturm:
    """Sturm machinery for the square-free part of one numerator."""

    def __init__(self, num: tuple):
        self.num = num
        self.sqf = _poly.squarefree_part(num)
        self.chain = _poly.sturm_chain(self.sqf) if len(self.sqf) > 1 else [self.sqf]

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in (lo, hi] (zeros in the chain are skipped, so lo may be a root)."""
        if len(self.sqf) <= 1:
            return 0
        return _poly.sign_variations(self.chain, lo) - _poly.sign_variations(self.chain, hi)

    def sign(self, x: Fraction) -> int:
        return _poly.sign_at(self.num, x)


def count_roots(num: tuple, lo, hi) -> int:
    """Number of distinct real roots of an integer polynomial in the open interval (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    st = _Sturm(_poly.trim(num))
    n = st.count(lo, hi)
    if len(st.sqf) > 1 and _poly.sign_at(st.sqf, hi) == 0:
        n -= 1
    return n


def _witness(st: _Sturm, lo: Fraction, hi: Fraction):
    """Locate a rational point with num <= 0 in (lo, hi), or an isolating interval.

    Precondition: num(lo) > 0, num(hi) > 0 and at least one root inside.
    """
    p, q = lo, hi
    # isolate one root
    while True:
        m = (p + q) / 2
        if st.sign(m) <= 0:
            return m, None
        if st.count(p, m) >= 1:
            q = m
        else:
            p = m
        if st.count(p, q) == 1:
            break
    # one simple root of the square-free part: a sign change of num shows up
    # at the ends, otherwise num touches zero there without crossing
    for _ in range(REFINE_STEPS):
        s = simplest_between(p, q)
        if st.sign(s) <= 0:
            return s, None
        m = (p + q) / 2
        if st.sign(m) <= 0:
            return m, None
        if st.count(p, m) == 1:
            q = m
        else:
            p = m
    return None, (p, q)


def is_positive_on(f: RingElement, S: ParamSet) -> PositivityCertificate:
    """Decide f(t) > 0 for every t in S, exactly."""
    trace: list[TraceEntry] = []
    num = f.num
    if not num:
        if S.is_empty():
            return PositivityCertificate(Verdict.POSITIVE, method_trace=())
        p = S.some_point()
        return PositivityCertificate(
            Verdict.NOT_POSITIVE, witness=p, witness_value=Fraction(0),
            method_trace=(TraceEntry(p, p, None, 0, 0),),
        )

    def fail(t0: Fraction, interval=None) -> PositivityCertificate:
        if interval is not None:
            return PositivityCertificate(
                Verdict.NOT_POSITIVE, witness_interval=interval, method_trace=tuple(trace)
            )
        return PositivityCertificate(
            Verdict.NOT_POSITIVE, witness=t0, witness_value=eval_at(f, t0), method_trace=tuple(trace)
        )

    st = None
    for lo, hi in S.components():
        slo = _poly.sign_at(num, lo)
        if lo == hi:
            trace.append(TraceEntry(lo, hi, None, slo, slo))
            if slo <= 0:
                return fail(lo)
            continue
        shi = _poly.sign_at(num, hi)
        if slo <= 0 or shi <= 0:
            trace.append(TraceEntry(lo, hi, None, slo, shi))
            return fail(lo if slo <= 0 else hi)
        if len(num) == 1:
            trace.append(TraceEntry(lo, hi, 0, slo, shi))
            continue
        if st is None:
            st = _Sturm(num)
        n = st.count(lo, hi)
        trace.append(TraceEntry(lo, hi, n, slo, shi))
        if n:
            point, iv = _witness(st, lo, hi)
            return fail(point, iv) if point is None else fail(point)
    return PositivityCertificate(Verdict.POSITIVE, method_trace=tuple(trace))


def in_cone_GF(f: RingElement, F: ParamSet) -> Membership:
    """Membership of f in the cone {f > 0 on F} together with {0}."""
    if f.is_zero():
        return Membership(True, ())
    cert = is_positive_on(f, F)
    return Membership(cert.positive, (cert,))


def _scaled_gap(c: Fraction, f: RingElement) -> RingElement:
    """A positive multiple of c - f with integer coefficients."""
    return RingElement.const(c.numerator) - c.denominator * f


def _abs_bound(f: RingElement, S: ParamSet) -> Fraction:
    smin, smax = S.bounds()
    top = sum(abs(c) * smax**k for k, c in enumerate(f.num))
    den = smin**f.t_pow * (1 - smax) ** f.omt_pow
    return Fraction(top) / den


def sup_on(f: RingElement, S: ParamSet, tol) -> tuple[Fraction, Fraction]:
    """Rational (lo, hi) with lo <= sup_S f <= hi and hi - lo <= tol."""
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if S.is_empty():
        raise ValueError("sup over the empty set")
    if not S.intervals:
        v = max(eval_at(f, p) for p in S.points)
        return v, v
    lo = max(eval_at(f, c[0]) for c in S.components())
    hi = _abs_bound(f, S)
    if hi < lo:
        hi = lo
    while hi - lo > tol:
        mid = (lo + hi) / 2
        cert = is_positive_on(_scaled_gap(mid, f), S)
        if cert.positive:
            hi = mid
        else:
            lo = mid if cert.witness is None else max(mid, eval_at(f, cert.witness))
    return lo, hi
