from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import given, strategies as st

from dglab.param_sets import HALF, interval, normalize, points
from dglab.positivity import Verdict, count_roots, in_cone_GF, is_positive_on, simplest_between, sup_on
from dglab.ring import ONE, RingElement, eval_at

from conftest import unit_rationals

QUAD = RingElement((1, -5, 5))


def test_constant_one_is_positive():
    assert is_positive_on(ONE, interval(Q(1, 10), Q(9, 10))).verdict is Verdict.POSITIVE


def test_zero_at_half_is_a_witness():
    cert = is_positive_on(RingElement((-1, 2)), points(HALF))
    assert cert.verdict is Verdict.NOT_POSITIVE
    assert cert.witness == HALF and cert.witness_value == 0


def test_quadratic_with_two_interior_roots():
    cert = is_positive_on(QUAD, interval(Q(1, 4), Q(3, 4)))
    assert not cert
    assert cert.witness is not None and Q(1, 4) <= cert.witness <= Q(3, 4)
    assert eval_at(QUAD, cert.witness) <= 0
    # quadratic formula: roots (5 +- sqrt 5)/10
    assert count_roots(QUAD.num, Q(1, 4), Q(3, 4)) == 2


def test_certificate_lists_every_component():
    S = normalize([Q(1, 10)], [(Q(1, 5), Q(1, 4)), (Q(4, 5), Q(9, 10))])
    cert = is_positive_on(QUAD, S)
    assert cert.positive
    assert len(cert.method_trace) == 3
    assert "POSITIVE" in cert.describe()


def test_empty_set_is_vacuous():
    assert is_positive_on(-ONE, normalize([])).positive


def test_cone_membership():
    assert in_cone_GF(RingElement(()), interval(Q(1, 4), Q(3, 4)))
    assert in_cone_GF(RingElement((0, 1, -1)), interval(Q(1, 4), Q(3, 4)))
    assert not in_cone_GF(-ONE, points(Q(1, 3)))


@pytest.mark.parametrize(
    "f, S, tol, target",
    [
        (RingElement((0, 1)), interval(Q(1, 4), Q(1, 3)), Q(1, 1000), Q(1, 3)),
        (RingElement((0, 1, -1)), interval(Q(1, 4), HALF), Q(1, 1000), Q(1, 4)),
        (-ONE, points(Q(2, 7)), Q(1, 10), Q(-1)),
    ],
)
def test_sup_on_brackets(f, S, tol, target):
    lo, hi = sup_on(f, S, tol)
    assert lo <= target <= hi
    assert hi - lo <= tol


def test_simplest_between_is_simple():
    assert simplest_between(Q(1, 3), Q(1, 2)) == Q(2, 5)
    assert simplest_between(Q(0), Q(1)) == HALF


@given(st.lists(st.integers(-15, 15), min_size=1, max_size=9), unit_rationals(), unit_rationals())
def test_sturm_count_matches_sympy(num, a, b):
    lo, hi = sorted((a, b))
    if lo == hi or not any(num):
        return
    x = sympy.Symbol("x")
    p = sympy.Poly(list(reversed(num)), x)
    want = len({r for r in p.real_roots() if lo < r < hi})
    assert count_roots(tuple(num), lo, hi) == want


@given(st.lists(st.integers(-15, 15), min_size=1, max_size=7), unit_rationals(), unit_rationals())
def test_verdict_is_sound(num, a, b):
    f = RingElement(num)
    lo, hi = sorted((a, b))
    S = normalize([], [(lo, hi)]) if lo < hi else points(lo)
    cert = is_positive_on(f, S)
    if cert.positive:
        for k in range(21):
            assert eval_at(f, lo + (hi - lo) * k / 20) > 0
    elif cert.witness is not None:
        assert lo <= cert.witness <= hi
        assert eval_at(f, cert.witness) <= 0
    else:
        w_lo, w_hi = cert.witness_interval
        assert lo <= w_lo < w_hi <= hi and count_roots(f.num, w_lo, w_hi) >= 1
