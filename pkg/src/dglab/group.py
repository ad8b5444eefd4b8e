"""The group G of finitely supported Z-indexed sequences in G0.

``sum_alpha`` (the twisted sum of alpha**n(x_n)) and ``sum_plain`` (the
plain sum of x_n) are the two functions that define the order on G:
x is positive when the first is > 0 on F and the second is > 0 on F1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterator, Mapping

from . import ring
from .errors import LimitError, NotOrderUnit
from .param_sets import KmsSpec, ParamSet
from .positivity import Membership, is_positive_on, sup_on
from .ring import RingElement

INDEX_BOUND = 10**6


@dataclass(frozen=True, init=False)
class GroupElement:
    """Element of G; ``entries`` holds (index, nonzero RingElement) pairs sorted by index."""

    entries: tuple

    def __init__(self, entries: Mapping[int, RingElement] | None = None):
        items = []
        for n, x in (entries or {}).items():
            n = int(n)
            x = RingElement.coerce(x)
            if abs(n) > INDEX_BOUND:
                raise LimitError(f"index {n} outside [-{INDEX_BOUND}, {INDEX_BOUND}]")
            if x:
                items.append((n, x))
        items.sort(key=lambda p: p[0])
        object.__setattr__(self, "entries", tuple(items))

    def as_dict(self) -> dict[int, RingElement]:
        return dict(self.entries)

    def __getitem__(self, n: int) -> RingElement:
        for k, x in self.entries:
            if k == n:
                return x
        return ring.ZERO

    def __iter__(self) -> Iterator[tuple[int, RingElement]]:
        return iter(self.entries)

    def support(self) -> list[int]:
        return [n for n, _ in self.entries]

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        d = self.as_dict()
        for n, x in other.entries:
            d[n] = d.get(n, ring.ZERO) + x
        return GroupElement(d)

    def __neg__(self) -> "GroupElement":
        return GroupElement({n: -x for n, x in self.entries})

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> "GroupElement":
        if not isinstance(k, int):
            return NotImplemented
        return GroupElement({n: k * x for n, x in self.entries})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        return "{" + ", ".join(f"{n}: {x}" for n, x in self.entries) + "}"


ZERO = GroupElement()


def embed_single(a: RingElement) -> GroupElement:
    """[[a]]: a at index 0."""
    return GroupElement({0: a})


def embed_triple(a: RingElement, b: RingElement) -> GroupElement:
    """[[-b, a, b]]: -b at -1, a at 0, b at 1."""
    b = RingElement.coerce(b)
    return GroupElement({-1: -b, 0: a, 1: b})


def gamma_star(x: GroupElement, k: int = 1) -> GroupElement:
    """k-fold power of (x_n) -> (alpha(x_{n+1})); negative k inverts."""
    if k == 0:
        return x
    return GroupElement({n - k: ring.alpha(v, k) for n, v in x.entries})


def sum_alpha(x: GroupElement) -> RingElement:
    out = ring.ZERO
    for n, v in x.entries:
        out = out + ring.alpha(v, n)
    return out


def sum_plain(x: GroupElement) -> RingElement:
    out = ring.ZERO
    for _, v in x.entries:
        out = out + v
    return out


def in_G_plus(x: GroupElement, spec: KmsSpec) -> Membership:
    """x = 0, or sum_alpha > 0 on F and sum_plain > 0 on F1."""
    if not x:
        return Membership(True, ())
    c_f = is_positive_on(sum_alpha(x), spec.F)
    if not c_f.positive:
        return Membership(False, (c_f,))
    c_f1 = is_positive_on(sum_plain(x), spec.F1)
    return Membership(c_f1.positive, (c_f, c_f1))


def in_G_plusplus(x: GroupElement, F: ParamSet) -> Membership:
    """x = 0, or sum_alpha > 0 on F (no condition on F1)."""
    if not x:
        return Membership(True, ())
    c = is_positive_on(sum_alpha(x), F)
    return Membership(c.positive, (c,))


def _ratio_bound(num: RingElement, den: RingElement, S: ParamSet) -> int:
    """An integer k >= 1 with num < k * den on S, given den > 0 on S."""
    if S.is_empty():
        return 1
    _, num_hi = sup_on(num, S, Fraction(1, 16))
    if num_hi <= 0:
        return 1
    # inf den >= -(upper bound of sup(-den)); tighten until positive
    tol = Fraction(1, 16)
    lo_den = -sup_on(-den, S, tol)[1]
    while lo_den <= 0:
        tol /= 16
        lo_den = -sup_on(-den, S, tol)[1]
    return max(1, floor(num_hi / lo_den) + 1)


def order_unit_multiple(x: GroupElement, y: GroupElement, spec: KmsSpec, max_tries: int = 64) -> int:
    """Some k >= 1 with k*x - y in G+ (not necessarily the smallest)."""
    if not x or not in_G_plus(x, spec):
        raise NotOrderUnit("x must be a nonzero element of G+")
    k = max(
        _ratio_bound(sum_alpha(y), sum_alpha(x), spec.F),
        _ratio_bound(sum_plain(y), sum_plain(x), spec.F1),
    )
    for _ in range(max_tries):
        if in_G_plus(k * x - y, spec):
            return k
        k += 1
    raise AssertionError("order-unit bound failed verification")
