from fractions import Fraction as Q

import sympy
from hypothesis import given, strategies as st

from dglab.oracles import bisection_root_count, min_sign_on_grid, sample_grid
from dglab.param_sets import interval, normalize, points
from dglab.ring import RingElement

from conftest import unit_rationals


def test_bisection_counts_known_roots():
    # (t - 1/3)(t - 1/2)(t - 2/3) scaled to integers: 36t^3 - 54t^2 + 26t - 4
    p = (-4, 26, -54, 36)
    assert bisection_root_count(p, Q(0), Q(1)) == 3
    assert bisection_root_count(p, Q(0), Q(1, 2)) == 1  # open interval excludes 1/2
    assert bisection_root_count(p, Q(2, 5), Q(3, 5)) == 1
    assert bisection_root_count((1, 0, 1), Q(0), Q(1)) == 0


def test_bisection_handles_repeated_roots():
    # (2t - 1)^2 (4t - 1): the double root counts once
    assert bisection_root_count((-1, 8, -20, 16), Q(0), Q(1)) == 2


def test_grid_covers_points_and_intervals():
    S = normalize([Q(1, 10)], [(Q(1, 4), Q(3, 4))])
    g = sample_grid(S, 101)
    pts = list(g)
    assert Q(1, 10) in pts and Q(1, 4) in pts and Q(3, 4) in pts
    assert all(p in S for p in pts)
    assert len(g) == len(pts)


def test_min_sign_finds_a_single_bad_point():
    # positive except at the grid point 1/2 where it vanishes
    f = RingElement((1, -4, 4))
    assert min_sign_on_grid(f, sample_grid(interval(Q(1, 4), Q(3, 4)), 101)) == (0, Q(1, 2))
    assert min_sign_on_grid(f, sample_grid(points(Q(1, 3)), 1))[0] == 1
    assert min_sign_on_grid(-f, sample_grid(points(Q(1, 3)), 1))[0] == -1


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=9), unit_rationals(), unit_rationals())
def test_bisection_agrees_with_sympy(num, a, b):
    lo, hi = sorted((a, b))
    if lo == hi or not any(num[1:]):
        return
    x = sympy.Symbol("x")
    roots = sympy.Poly(list(reversed(num)), x).real_roots()
    assert bisection_root_count(num, lo, hi) == len({r for r in roots if lo < r < hi})


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7), unit_rationals(), unit_rationals())
def test_float_filter_agrees_with_exact_evaluation(num, a, b):
    lo, hi = sorted((a, b))
    S = interval(lo, hi) if lo < hi else points(lo)
    f = RingElement(num)
    g = sample_grid(S, 200)
    sign, _ = min_sign_on_grid(f, g)
    exact = min(((v > 0) - (v < 0)) for v in (f(t) for t in g)) if f else 0
    assert sign == exact
