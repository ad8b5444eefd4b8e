"""Closed subsets of (0, 1) and the (F, F1) parameter pairs.

Sets are finite unions of rational points and rational closed intervals. All
membership questions are exact; the inverse-temperature coordinate
``beta = ln((1-t)/t)`` only appears at the interface and is a float.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError, EmptyF, HalfPointViolation

HALF = Fraction(1, 2)

RationalLike = Union[Fraction, int, str]


def as_rational(x) -> Fraction:
    return Fraction(x)


@dataclass(frozen=True)
class ParamSet:
    """Union of ``points`` and closed ``intervals`` inside (0, 1).

    Build instances with :func:`normalize`; the constructor assumes its
    input is already normalized.
    """

    points: tuple = ()
    intervals: tuple = ()
    provenance: str | None = field(default=None, compare=False)

    def is_empty(self) -> bool:
        return not self.points and not self.intervals

    def __contains__(self, t0) -> bool:
        return member(self, t0)

    def components(self) -> list[tuple[Fraction, Fraction]]:
        """All components as (lo, hi) pairs in increasing order; points have lo == hi."""
        comps = [(p, p) for p in self.points] + list(self.intervals)
        return sorted(comps)

    def bounds(self) -> tuple[Fraction, Fraction]:
        comps = self.components()
        if not comps:
            raise DomainError("empty set has no bounds")
        return comps[0][0], comps[-1][1]

    def some_point(self) -> Fraction:
        """A deterministic rational point of the set."""
        return self.components()[0][0]

    def union(self, other: "ParamSet") -> "ParamSet":
        return normalize(self.points + other.points, self.intervals + other.intervals)

    def __str__(self) -> str:
        if self.is_empty():
            return "{}"
        parts = []
        for lo, hi in self.components():
            parts.append(str(lo) if lo == hi else f"[{lo}, {hi}]")
        return "{" + ", ".join(parts) + "}"


EMPTY = ParamSet()


def _check_open_unit(x: Fraction) -> Fraction:
    if not 0 < x < 1:
        raise DomainError(f"{x} is not strictly inside (0, 1)")
    return x


def normalize(
    points: Iterable = (),
    intervals: Iterable[Sequence] = (),
    provenance: str | None = None,
) -> ParamSet:
    """Sorted, merged, deduplicated representation of the union."""
    pts = {_check_open_unit(as_rational(p)) for p in points}
    ivs = []
    for iv in intervals:
        lo, hi = (_check_open_unit(as_rational(v)) for v in iv)
        if lo > hi:
            raise DomainError(f"interval [{lo}, {hi}] has lo > hi")
        if lo == hi:
            pts.add(lo)
        else:
            ivs.append((lo, hi))
    ivs.sort()
    merged: list[list[Fraction]] = []
    for lo, hi in ivs:
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    intervals_out = tuple((lo, hi) for lo, hi in merged)
    points_out = tuple(
        sorted(p for p in pts if not any(lo <= p <= hi for lo, hi in intervals_out))
    )
    return ParamSet(points_out, intervals_out, provenance)


def member(S: ParamSet, t0) -> bool:
    t0 = as_rational(t0)
    return t0 in S.points or any(lo <= t0 <= hi for lo, hi in S.intervals)


def points(*ps) -> ParamSet:
    return normalize(ps, ())


def interval(lo, hi) -> ParamSet:
    return normalize((), [(lo, hi)])


@dataclass(frozen=True)
class KmsSpec:
    F: ParamSet
    F1: ParamSet

    @property
    def beta_description(self) -> list[tuple[float, float]]:
        """Components of F1 in beta coordinates (display only, increasing beta)."""
        out = []
        for lo, hi in self.F1.components():
            out.append((t_to_beta(hi), t_to_beta(lo)))
        return sorted(out)

    def __str__(self) -> str:
        return f"F = {self.F}, F1 = {self.F1}"


def validate_spec(F: ParamSet, F1: ParamSet) -> KmsSpec:
    """Check that (F, F1) is admissible: F non-empty, 1/2 in both or neither.

    The boundary condition (no 0 or 1) is already guaranteed by ParamSet.
    """
    if F.is_empty():
        raise EmptyF("F must be non-empty")
    in_f, in_f1 = member(F, HALF), member(F1, HALF)
    if in_f != in_f1:
        where = "F" if in_f else "F1"
        raise HalfPointViolation(f"1/2 lies in {where} only; it must be in both or neither")
    return KmsSpec(F, F1)


def beta_to_t(beta: float, precision: int | None = None):
    """e^{-beta} / (1 + e^{-beta}), evaluated without overflow.

    A float cannot resolve t near 1 (beta below about -36 rounds to 1.0), so
    with ``precision`` set the result is a Fraction carrying that many
    significant digits of min(t, 1 - t).
    """
    if precision is not None:
        return _logistic_rational(beta, precision)
    if beta >= 0:
        e = math.exp(-beta)
        return e / (1.0 + e)
    return 1.0 / (1.0 + math.exp(beta))


def t_to_beta(t) -> float:
    """ln((1 - t)/t); exact rationals keep full relative precision near 0 and 1."""
    if isinstance(t, float):
        if not 0.0 < t < 1.0:
            raise DomainError(f"{t} is not strictly inside (0, 1)")
        return math.log1p(-t) - math.log(t)
    t = Fraction(t)
    if not 0 < t < 1:
        raise DomainError(f"{t} is not strictly inside (0, 1)")
    ratio = (1 - t) / t
    try:
        r = float(ratio)
        if r != 0.0 and math.isfinite(r):
            return math.log(r)
    except OverflowError:
        pass
    return math.log(ratio.numerator) - math.log(ratio.denominator)


def _logistic_rational(beta: float, digits: int) -> Fraction:
    """Rational approximation of 1/(1 + e^beta) with `digits` significant digits
    on whichever of t and 1 - t is smaller, so the result stays inside (0, 1)."""
    with localcontext() as ctx:
        ctx.prec = digits + 20
        b = Decimal(beta)
        small = 1 / (1 + b.exp()) if beta >= 0 else 1 / (1 + (-b).exp())
        ctx.prec = digits
        small = +small
    small_q = Fraction(small)
    return small_q if beta >= 0 else 1 - small_q


def from_beta(K: Iterable, precision: int = 30, extra_points: Iterable = ()) -> ParamSet:
    """Image in t of a compact beta-set K (floats are points, (lo, hi) pairs intervals).

    Because t = 1/(1+e^beta) is decreasing, [lo, hi] maps to [t(hi), t(lo)].
    """
    pts: list[Fraction] = [as_rational(p) for p in extra_points]
    ivs: list[tuple[Fraction, Fraction]] = []
    for comp in K:
        if isinstance(comp, (tuple, list)):
            lo, hi = float(comp[0]), float(comp[1])
            if lo > hi:
                raise DomainError(f"K component [{lo}, {hi}] has lo > hi")
            if lo == hi:
                pts.append(_logistic_rational(lo, precision))
            else:
                ivs.append((_logistic_rational(hi, precision), _logistic_rational(lo, precision)))
        else:
            pts.append(_logistic_rational(float(comp), precision))
    return normalize(
        pts,
        ivs,
        provenance=f"logistic image rounded to {precision} significant digits of min(t, 1-t)",
    )


def f1_for_K(K: Iterable, precision: int = 30) -> ParamSet:
    """F1 whose KMS spectrum is K together with 0: the image of K with 1/2 adjoined."""
    return from_beta(K, precision, extra_points=[HALF])
