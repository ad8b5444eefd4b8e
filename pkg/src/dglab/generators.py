"""Seeded random instances for property tests and the verification harness."""
from __future__ import annotations

import random
from fractions import Fraction

from .group import GroupElement, order_unit_multiple, embed_single
from .param_sets import HALF, KmsSpec, ParamSet, normalize, validate_spec
from .ring import RingElement


def random_ring(rng: random.Random, max_deg: int = 4, height: int = 10, max_pow: int = 3) -> RingElement:
    deg = rng.randint(0, max_deg)
    num = [rng.randint(-height, height) for _ in range(deg + 1)]
    return RingElement(num, rng.randint(0, max_pow), rng.randint(0, max_pow))


def random_poly(rng: random.Random, max_deg: int = 8, height: int = 20) -> RingElement:
    """A nonzero polynomial (no denominator)."""
    while True:
        x = RingElement([rng.randint(-height, height) for _ in range(rng.randint(0, max_deg) + 1)])
        if x:
            return x


def random_rational(rng: random.Random, lo=Fraction(0), hi=Fraction(1), max_den: int = 64) -> Fraction:
    """A rational strictly inside (lo, hi)."""
    while True:
        q = rng.randint(2, max_den)
        p = rng.randint(1, q - 1)
        t = lo + (hi - lo) * Fraction(p, q)
        if lo < t < hi:
            return t


def random_param_set(rng: random.Random, max_points: int = 2, max_intervals: int = 2, max_den: int = 32) -> ParamSet:
    pts = [random_rational(rng, max_den=max_den) for _ in range(rng.randint(0, max_points))]
    ivs = []
    for _ in range(rng.randint(0, max_intervals)):
        a, b = sorted((random_rational(rng, max_den=max_den), random_rational(rng, max_den=max_den)))
        ivs.append((a, b))
    return normalize(pts, ivs)


def random_nonempty_set(rng: random.Random, **kw) -> ParamSet:
    while True:
        S = random_param_set(rng, **kw)
        if not S.is_empty():
            return S


def random_group(rng: random.Random, width: int = 3, lo: int | None = None, **ring_kw) -> GroupElement:
    """Support inside [lo, lo + width)."""
    if lo is None:
        lo = -(width // 2)
    return GroupElement({n: random_ring(rng, **ring_kw) for n in range(lo, lo + width) if rng.random() < 0.8})


# Specs used by the replay suites, ranging from F = F1 = {1/2} to disjoint
# intervals; one of them has an empty F1.
REPLAY_SPECS: dict[str, KmsSpec] = {
    "half_only": validate_spec(normalize([HALF]), normalize([HALF])),
    "disjoint_intervals": validate_spec(
        normalize([], [(Fraction(1, 4), Fraction(1, 3))]),
        normalize([], [(Fraction(3, 5), Fraction(2, 3))]),
    ),
    "mixed": validate_spec(
        normalize([Fraction(1, 3)], [(Fraction(2, 5), Fraction(3, 5))]),
        normalize([HALF, Fraction(1, 5)], [(Fraction(7, 10), Fraction(4, 5))]),
    ),
    "empty_F1": validate_spec(
        normalize([Fraction(3, 4)], [(Fraction(1, 5), Fraction(2, 5))]), normalize([])
    ),
    "wide": validate_spec(
        normalize([], [(Fraction(1, 10), Fraction(9, 10))]),
        normalize([HALF], [(Fraction(1, 8), Fraction(1, 4)), (Fraction(2, 3), Fraction(5, 6))]),
    ),
    "points": validate_spec(
        normalize([Fraction(1, 3), Fraction(3, 4)]),
        normalize([Fraction(1, 4), Fraction(2, 3)]),
    ),
}

# Specs with G++ strictly larger than G+ (F1 not inside the set where the
# two sums agree), for the positive-representative replay.
CONE_SPECS: dict[str, KmsSpec] = {
    "disjoint_intervals": REPLAY_SPECS["disjoint_intervals"],
    "mixed": REPLAY_SPECS["mixed"],
    "points": REPLAY_SPECS["points"],
    "F_point_F1_interval": validate_spec(
        normalize([Fraction(1, 3)]), normalize([], [(Fraction(3, 5), Fraction(4, 5))])
    ),
    "overlap": validate_spec(
        normalize([], [(Fraction(1, 4), Fraction(3, 4))]),
        normalize([HALF], [(Fraction(1, 5), Fraction(2, 5))]),
    ),
}


def random_positive(rng: random.Random, spec: KmsSpec, width: int = 3, **ring_kw) -> GroupElement:
    """r + k[[1]] for random r and the k that makes it land in G+."""
    r = random_group(rng, width, **ring_kw)
    one = embed_single(RingElement.const(1))
    k = order_unit_multiple(one, -r, spec)
    return k * one + r


def random_half_spec_pair(rng: random.Random) -> tuple[ParamSet, ParamSet]:
    """(F, F1) pairs that violate the half-point rule about half the time."""
    F = random_nonempty_set(rng, max_den=8)
    F1 = random_param_set(rng, max_den=8)
    if rng.random() < 0.5:
        F1 = F1.union(normalize([HALF]))
    if rng.random() < 0.3:
        F = F.union(normalize([HALF]))
    return F, F1
