from fractions import Fraction as Q

import pytest

from dglab.errors import PreconditionError
from dglab.group import GroupElement, embed_single, embed_triple, in_G_plus
from dglab.param_sets import HALF, interval, points, validate_spec
from dglab.riesz import interpolate
from dglab.ring import ONE, RingElement


def c(k):
    return embed_single(RingElement.const(k))


HALF_SPEC = validate_spec(points(HALF), points(HALF))


def test_half_spec_picks_the_middle():
    res = interpolate(GroupElement(), GroupElement(), c(2), c(2), HALF_SPEC, max_degree=16)
    assert res.z == c(1)
    assert res.a == ONE and res.b.is_zero()


def test_equal_pair_short_circuits():
    res = interpolate(c(1), GroupElement(), c(1), c(3), HALF_SPEC)
    assert res.z == c(1) and res.a is None


def test_small_interval_spec():
    spec = validate_spec(interval(Q(1, 3), Q(2, 5)), interval(Q(1, 3), Q(2, 5)))
    xs = [c(0), embed_single(RingElement((-1, 1)))]
    ys = [c(1), c(2)]
    res = interpolate(*xs, *ys, spec, max_degree=32)
    for x in xs:
        assert in_G_plus(res.z - x, spec)
    for y in ys:
        assert in_G_plus(y - res.z, spec)


def test_disjoint_intervals_use_both_coordinates():
    spec = validate_spec(interval(Q(1, 4), Q(1, 3)), interval(Q(3, 5), Q(2, 3)))
    t = RingElement((0, 1))
    x1 = embed_triple(t, ONE)
    x2 = c(-3)
    y1 = x1 + c(1)
    y2 = x1 + c(3)
    res = interpolate(x1, x2, y1, y2, spec, max_degree=32)
    assert set(res.z.support()) <= {-1, 0, 1}
    # four inequalities, each certified on both sums
    assert len(res.certificates) == 8 and all(res.certificates)
    for x in (x1, x2):
        assert in_G_plus(res.z - x, spec)
    for y in (y1, y2):
        assert in_G_plus(y - res.z, spec)


def test_rejects_unordered_input():
    with pytest.raises(PreconditionError):
        interpolate(c(2), c(0), c(1), c(3), HALF_SPEC)
