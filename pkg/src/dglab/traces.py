"""Evaluation traces on G and the KMS spectrum they produce.

A PLAIN functional at t0 sums x_n(t0) and is multiplied by t0/(1-t0) under
gamma_*; a TWISTED one weights x_n(t0) by (t0/(1-t0))**n and is invariant.
With t0 = e^{-beta}/(1+e^{-beta}) the scaling factor is e^{-beta}, which is
how a point of F1 produces an inverse temperature.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import AtomOutsideF, DomainError, PreconditionError
from .group import GroupElement, gamma_star
from .param_sets import HALF, KmsSpec, ParamSet, member, t_to_beta
from .ring import eval_at


class Kind(enum.Enum):
    PLAIN = "PLAIN"
    TWISTED = "TWISTED"


@dataclass(frozen=True)
class TraceFunctional:
    kind: Kind
    t0: Fraction

    def __post_init__(self):
        t0 = Fraction(self.t0)
        if not 0 < t0 < 1:
            raise DomainError(f"trace point {t0} is not in (0, 1)")
        object.__setattr__(self, "t0", t0)
        object.__setattr__(self, "kind", Kind(self.kind))

    @property
    def ratio(self) -> Fraction:
        return self.t0 / (1 - self.t0)

    def __call__(self, x: GroupElement) -> Fraction:
        return apply(self, x)

    def __str__(self) -> str:
        return f"{self.kind.value} trace at t = {self.t0}"


def plain(t0) -> TraceFunctional:
    return TraceFunctional(Kind.PLAIN, t0)


def twisted(t0) -> TraceFunctional:
    return TraceFunctional(Kind.TWISTED, t0)


def apply(tf: TraceFunctional, x: GroupElement) -> Fraction:
    total = Fraction(0)
    r = tf.ratio
    for n, v in x:
        val = eval_at(v, tf.t0)
        total += val if tf.kind is Kind.PLAIN else r**n * val
    return total


def scaling_check(tf: TraceFunctional, x: GroupElement) -> tuple[Fraction, Fraction]:
    """(value on gamma_*(x), expected value): factor t0/(1-t0) for PLAIN, 1 for TWISTED."""
    lhs = apply(tf, gamma_star(x, 1))
    base = apply(tf, x)
    rhs = tf.ratio * base if tf.kind is Kind.PLAIN else base
    return lhs, rhs


@dataclass(frozen=True)
class AtomicMeasure:
    """Finitely supported positive measure: ((t_i, w_i), ...)."""

    atoms: tuple

    def __post_init__(self):
        atoms = tuple((Fraction(t), Fraction(w)) for t, w in self.atoms)
        if not atoms:
            raise ValueError("an atomic measure needs at least one atom")
        ts = [t for t, _ in atoms]
        if len(set(ts)) != len(ts):
            raise ValueError("atoms must be distinct")
        for t, w in atoms:
            if not 0 < t < 1:
                raise DomainError(f"atom {t} is not in (0, 1)")
            if w <= 0:
                raise ValueError(f"weight {w} at {t} is not positive")
        object.__setattr__(self, "atoms", atoms)

    def check_support(self, F: ParamSet) -> None:
        for t, _ in self.atoms:
            if not member(F, t):
                raise AtomOutsideF(f"atom {t} is not in F")


def measure_trace(m: AtomicMeasure, x: GroupElement, F: ParamSet | None = None) -> Fraction:
    """sum_i w_i * TWISTED(t_i)(x); atoms are checked against F when given."""
    if F is not None:
        m.check_support(F)
    return sum((w * apply(twisted(t), x) for t, w in m.atoms), Fraction(0))


def classify_eigenfunctional(s, spec: KmsSpec) -> TraceFunctional | None:
    """The PLAIN trace with scaling factor s, or None if s/(1+s) is not in F1.

    For s != 1 every positive eigen-homomorphism is a positive multiple of
    this one; a None answer relies on that classification and is not
    re-derived here.
    """
    s = Fraction(s)
    if s <= 0:
        raise PreconditionError("s must be positive")
    if s == 1:
        raise PreconditionError("s = 1 corresponds to measures on F; use measure_trace")
    t1 = s / (1 + s)
    if member(spec.F1, t1):
        return plain(t1)
    return None


@dataclass(frozen=True)
class BetaComponent:
    """A point (lo == hi) or closed interval of inverse temperatures.

    ``t_source`` is the exact t-interval it came from, or None for the
    beta = 0 point that is present for every spec.
    """

    lo: float
    hi: float
    t_source: tuple[Fraction, Fraction] | None

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class BetaSpectrum:
    components: tuple

    def contains(self, beta: float, tol: float = 0.0) -> bool:
        return any(c.lo - tol <= beta <= c.hi + tol for c in self.components)

    def as_pairs(self) -> list[tuple[float, float]]:
        return [(c.lo, c.hi) for c in self.components]

    def __str__(self) -> str:
        parts = []
        for c in self.components:
            parts.append(f"{c.lo:.12g}" if c.is_point else f"[{c.lo:.12g}, {c.hi:.12g}]")
        return "{" + ", ".join(parts) + "}"


def kms_spectrum(spec: KmsSpec) -> BetaSpectrum:
    """{beta != 0 : e^{-beta}/(1+e^{-beta}) in F1} together with beta = 0."""
    comps = []
    for lo, hi in spec.F1.components():
        # t -> beta is decreasing, so endpoints swap
        comps.append(BetaComponent(t_to_beta(hi), t_to_beta(lo), (lo, hi)))
    if not member(spec.F1, HALF):
        comps.append(BetaComponent(0.0, 0.0, None))
    comps.sort(key=lambda c: (c.lo, c.hi))
    return BetaSpectrum(tuple(comps))


def beta_normalize(components: Iterable) -> list[tuple[float, float]]:
    """Merge floats and (lo, hi) pairs into sorted disjoint closed intervals/points."""
    items = []
    for c in components:
        if isinstance(c, (tuple, list)):
            items.append((float(c[0]), float(c[1])))
        else:
            items.append((float(c), float(c)))
    items.sort()
    out: list[list[float]] = []
    for lo, hi in items:
        if out and lo <= out[-1][1]:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return [(lo, hi) for lo, hi in out]
