"""Constructive Riesz interpolation in (G, G+).

Given x1, x2 <= y1, y2 the interpolant is z = [[-b, a, b]]: its plain sum is
a and its twisted sum is a + (2t-1)/(t(1-t)) * b, so a is fitted on F1 and
then b on F.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import PreconditionError
from .group import GroupElement, embed_triple, in_G_plus, sum_alpha, sum_plain
from .param_sets import HALF, KmsSpec, member, points
from .ring import HALF_WEIGHT, ONE, RingElement, eval_at
from .sandwich import (
    DEFAULT_MAX_ITERATIONS,
    Constraint,
    SandwichProblem,
    default_max_degree,
    solve_sandwich_G0,
)


@dataclass(frozen=True)
class Interpolant:
    z: GroupElement
    a: RingElement | None
    b: RingElement | None
    certificates: tuple


def interpolate(
    x1: GroupElement,
    x2: GroupElement,
    y1: GroupElement,
    y2: GroupElement,
    spec: KmsSpec,
    max_degree: int | None = None,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> Interpolant:
    """z with x_i <= z <= y_j for all i, j; every inequality is verified exactly."""
    cap = default_max_degree() if max_degree is None else max_degree
    xs, ys = (x1, x2), (y1, y2)
    for (i, x), (j, y) in product(enumerate(xs, 1), enumerate(ys, 1)):
        m = in_G_plus(y - x, spec)
        if not m:
            raise PreconditionError(f"y{j} - x{i} is not in G+", m.certificates)

    for x, y in product(xs, ys):
        if x == y:
            return Interpolant(x, None, None, _verify(x, xs, ys, spec))

    ax = [sum_alpha(x) for x in xs]
    ay = [sum_alpha(y) for y in ys]
    if spec.F1.is_empty():
        # nothing constrains a; anchor it at one point of F so b stays small
        anchor = points(spec.F.some_point())
        cons = [Constraint(lo, ONE, hi) for lo, hi in product(ax, ay)]
        a = solve_sandwich_G0(SandwichProblem(cons, anchor, cap, max_iterations)).candidate
    else:
        px = [sum_plain(x) for x in xs]
        py = [sum_plain(y) for y in ys]
        cons = [Constraint(lo, ONE, hi) for lo, hi in product(px, py)]
        if member(spec.F1, HALF):
            cons.append(_centering(px, py))
        a = solve_sandwich_G0(SandwichProblem(cons, spec.F1, cap, max_iterations)).candidate

    cons = [Constraint(lo - a, HALF_WEIGHT, hi - a) for lo, hi in product(ax, ay)]
    b = solve_sandwich_G0(SandwichProblem(cons, spec.F, cap, max_iterations)).candidate
    z = embed_triple(a, b)
    return Interpolant(z, a, b, _verify(z, xs, ys, spec))


def _centering(px, py) -> Constraint:
    """Keep a(1/2) in the middle half of its window.

    The weight of b vanishes at 1/2, so step (c) only works if a(1/2) is
    strictly inside the window; rounding can leave it arbitrarily close to an
    edge, which makes the b search needlessly hard.
    """
    lo = max(eval_at(p, HALF) for p in px)
    hi = min(eval_at(p, HALF) for p in py)
    lo, hi = lo + (hi - lo) / 4, hi - (hi - lo) / 4
    den = lo.denominator * hi.denominator
    return Constraint(
        RingElement.const(lo.numerator * hi.denominator),
        RingElement.const(den),
        RingElement.const(hi.numerator * lo.denominator),
        points(HALF),
    )


def _verify(z: GroupElement, xs, ys, spec: KmsSpec) -> tuple:
    certs = []
    for x in xs:
        m = in_G_plus(z - x, spec)
        if not m:
            raise AssertionError("interpolant fails z - x in G+")
        certs.extend(m.certificates)
    for y in ys:
        m = in_G_plus(y - z, spec)
        if not m:
            raise AssertionError("interpolant fails y - z in G+")
        certs.extend(m.certificates)
    return tuple(certs)

