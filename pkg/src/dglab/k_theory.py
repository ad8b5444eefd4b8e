"""The cokernel G / (id - gamma_*)(G) and its identification with G0.

The twisted sum x -> sum_n alpha**n(x_n) kills exactly the coboundaries, so it
induces an isomorphism S from the cokernel onto G0 with inverse a -> class of
[[a]]. Coset equality is therefore decided by comparing S-values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ring
from .errors import HalfPointInfeasible, PreconditionError, SearchExhausted
from .group import (
    GroupElement,
    embed_single,
    gamma_star,
    in_G_plus,
    in_G_plusplus,
    sum_alpha,
    sum_plain,
)
from .param_sets import HALF, KmsSpec, member
from .positivity import sup_on
from .ring import HALF_WEIGHT, RingElement
from .sandwich import (
    DEFAULT_MAX_ITERATIONS,
    Constraint,
    SandwichProblem,
    default_max_degree,
    solve_sandwich,
)


def coboundary(y: GroupElement) -> GroupElement:
    """(id - gamma_*)(y), i.e. (y_n - alpha(y_{n+1}))_n."""
    return y - gamma_star(y, 1)


def in_image(x: GroupElement) -> bool:
    return sum_alpha(x).is_zero()


def solve_coboundary(x: GroupElement) -> GroupElement:
    """The unique y with (id - gamma_*)(y) = x.

    Runs y_n = x_n + alpha(y_{n+1}) downward from the top of the support; the
    value reached at the bottom index is alpha**(-m) of the twisted sum of x,
    which vanishes exactly when x is a coboundary.
    """
    if not in_image(x):
        raise PreconditionError(f"not a coboundary: twisted sum is {sum_alpha(x)}", sum_alpha(x))
    if not x:
        return GroupElement()
    supp = x.support()
    lo, hi = supp[0], supp[-1]
    y: dict[int, RingElement] = {}
    acc = ring.ZERO
    for n in range(hi, lo - 1, -1):
        acc = x[n] + ring.alpha(acc, 1)
        y[n] = acc
    if not y[lo].is_zero():
        raise AssertionError("telescoping residue is nonzero for a coboundary")
    out = GroupElement(y)
    if coboundary(out) != x:
        raise AssertionError("solve_coboundary failed its own check")
    return out


def S_of(x: GroupElement) -> RingElement:
    return sum_alpha(x)


@dataclass(frozen=True, eq=False)
class QuotientClass:
    representative: GroupElement
    s_value: RingElement

    @classmethod
    def of(cls, x: GroupElement) -> "QuotientClass":
        return cls(x, sum_alpha(x))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientClass):
            return NotImplemented
        return self.s_value == other.s_value

    def __hash__(self) -> int:
        return hash(self.s_value)


def S_inverse(a: RingElement) -> QuotientClass:
    return QuotientClass(embed_single(a), a)


@dataclass(frozen=True)
class Representative:
    y: GroupElement
    b: RingElement
    certificates: tuple


def _abs_sup_bound(f: RingElement, S) -> int:
    hi_pos = sup_on(f, S, Fraction(1))[1]
    hi_neg = sup_on(-f, S, Fraction(1))[1]
    return int(max(hi_pos, hi_neg, 0)) + 1


def positive_representative(
    x: GroupElement,
    spec: KmsSpec,
    max_degree: int | None = None,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    retries: int = 3,
) -> Representative:
    """An element of G+ in the coset of x, for x in G++ without 0.

    Moves b(t) * (1-2t)/(t(1-t)) into the plain sum through
    y_1 = x_1 + alpha^{-1}(b), y_{-1} = x_{-1} - alpha(b), which leaves the
    twisted sum unchanged.
    """
    cap = default_max_degree() if max_degree is None else max_degree
    if not x:
        raise PreconditionError("x must be nonzero")
    m = in_G_plusplus(x, spec.F)
    if not m:
        raise PreconditionError("x is not in G++", m.certificates)
    m = in_G_plus(x, spec)
    if m:
        return Representative(x, ring.ZERO, m.certificates)

    plain = sum_plain(x)
    if member(spec.F1, HALF) and not ring.eval_at(plain, HALF) > 0:
        raise HalfPointInfeasible(
            "plain sum must be positive at 1/2 when 1/2 lies in F1; "
            "this needs 1/2 in F as well"
        )
    lower = -plain
    weight = -HALF_WEIGHT
    # an artificial upper bound closes the LP; widen it if the search stalls
    bits = (2 * _abs_sup_bound(plain, spec.F1)).bit_length() + 1
    last: Exception | None = None
    for attempt in range(retries):
        upper = lower + RingElement.const(2 ** (bits + 2 * attempt))
        problem = SandwichProblem([Constraint(lower, weight, upper)], spec.F1, cap, max_iterations)
        try:
            b = solve_sandwich(problem).candidate
            break
        except SearchExhausted as exc:
            last = exc
    else:
        raise SearchExhausted(f"no b found after {retries} widenings: {last}")

    d = x.as_dict()
    d[1] = d.get(1, ring.ZERO) + ring.alpha(b, -1)
    d[-1] = d.get(-1, ring.ZERO) - ring.alpha(b, 1)
    y = GroupElement(d)
    if sum_alpha(y) != sum_alpha(x):
        raise AssertionError("representative changed the twisted sum")
    m = in_G_plus(y, spec)
    if not m:
        raise AssertionError("representative is not in G+")
    return Representative(y, b, m.certificates)
