from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from dglab.group import (
    GroupElement,
    embed_single,
    embed_triple,
    gamma_star,
    in_G_plus,
    in_G_plusplus,
    order_unit_multiple,
    sum_alpha,
    sum_plain,
)
from dglab.k_theory import coboundary
from dglab.param_sets import HALF, interval, points, validate_spec
from dglab.ring import ONE, RingElement, alpha, eval_at

from conftest import group_elements, ring_elements

T = RingElement((0, 1))
ALPHA_ONE = RingElement((0, 1), 0, 1)
HALF_SPEC = validate_spec(points(HALF), points(HALF))


def test_embed_single():
    assert embed_single(ONE).as_dict() == {0: ONE}
    assert embed_single(RingElement(())).as_dict() == {}
    assert embed_single(ALPHA_ONE).as_dict() == {0: ALPHA_ONE}


def test_embed_triple():
    assert embed_triple(ONE, RingElement(())).as_dict() == {0: ONE}
    assert embed_triple(RingElement(()), ONE).as_dict() == {-1: -ONE, 1: ONE}
    assert embed_triple(T, T).as_dict() == {-1: -T, 0: T, 1: T}


def test_gamma_star_examples():
    a = RingElement((2, -1, 3), 1, 0)
    assert gamma_star(embed_single(a), 1).as_dict() == {-1: alpha(a)}
    x = GroupElement({0: ONE, 1: T})
    assert gamma_star(x, 1).as_dict() == {-1: ALPHA_ONE, 0: RingElement((0, 0, 1), 0, 1)}


def test_sums():
    a = RingElement((1, 1), 0, 2)
    assert sum_alpha(embed_single(a)) == a
    assert sum_alpha(coboundary(embed_single(a))).is_zero()
    x = GroupElement({-1: -T, 1: T})
    assert sum_alpha(x) == -RingElement((1, -1)) + RingElement((0, 0, 1), 0, 1)
    assert sum_plain(embed_triple(a, T)) == a
    assert sum_plain(GroupElement({2: ONE, 5: -ONE})).is_zero()


def test_positive_cone_examples():
    assert in_G_plus(embed_single(ONE), HALF_SPEC)
    assert not in_G_plus(embed_single(RingElement((-1, 2))), HALF_SPEC)
    x = embed_triple(RingElement(()), T)
    assert eval_at(sum_alpha(x), HALF) == 0
    assert not in_G_plus(x, HALF_SPEC)


def test_strict_cone_examples():
    F = interval(Q(1, 4), Q(3, 4))
    assert in_G_plusplus(embed_single(ONE), F)
    assert not in_G_plusplus(GroupElement({-1: -ALPHA_ONE}), F)


def test_order_unit_multiple_examples():
    one, three = embed_single(ONE), embed_single(RingElement((3,)))
    assert order_unit_multiple(one, three, HALF_SPEC) >= 4
    assert order_unit_multiple(one, GroupElement(), HALF_SPEC) >= 1
    spec = validate_spec(interval(Q(1, 4), Q(1, 3)), interval(Q(1, 4), Q(1, 3)))
    k = order_unit_multiple(embed_single(T), one, spec)
    assert k >= 5
    assert in_G_plus(k * embed_single(T) - one, spec)


def test_group_element_drops_zeros():
    x = GroupElement({0: ONE, 3: RingElement(())})
    assert x.support() == [0]
    assert not (x - x)


@given(group_elements(), st.integers(-3, 3), st.integers(-3, 3))
def test_gamma_star_is_a_group_action(x, j, k):
    assert gamma_star(gamma_star(x, k), -k) == x
    assert gamma_star(gamma_star(x, j), k) == gamma_star(x, j + k)


@given(group_elements(), group_elements())
def test_sums_are_additive(x, y):
    assert sum_alpha(x + y) == sum_alpha(x) + sum_alpha(y)
    assert sum_plain(x + y) == sum_plain(x) + sum_plain(y)
    assert sum_alpha(gamma_star(x, 1)) == sum_alpha(x)


@given(group_elements(width=2, max_deg=2))
def test_coboundaries_are_never_strictly_positive(y):
    x = coboundary(y)
    if x:
        assert not in_G_plusplus(x, interval(Q(1, 5), Q(4, 5)))


@given(ring_elements(), ring_elements())
def test_triple_keeps_plain_sum(a, b):
    assert sum_plain(embed_triple(a, b)) == a
