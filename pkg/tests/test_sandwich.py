from fractions import Fraction as Q

import pytest

from dglab.errors import Infeasible, SearchExhausted
from dglab.param_sets import HALF, interval, normalize, points
from dglab.positivity import is_positive_on
from dglab.ring import HALF_WEIGHT, ONE, RingElement, eval_at
from dglab.sandwich import (
    Constraint,
    SandwichProblem,
    basis_poly,
    coefficients_to_poly,
    solve_sandwich,
    solve_sandwich_G0,
    verify_candidate,
)

T = RingElement((0, 1))
MID = interval(Q(1, 4), Q(3, 4))


def _holds(c: Constraint, a: RingElement, S) -> bool:
    return bool(is_positive_on(c.weight * a - c.lower, S)) and bool(is_positive_on(c.upper - c.weight * a, S))


def test_constant_window():
    sol = solve_sandwich(SandwichProblem([Constraint.between(0, 2)], MID, 16))
    assert sol.candidate == ONE


def test_window_around_t():
    c = Constraint.between(T, T + 2)
    sol = solve_sandwich(SandwichProblem([c], MID, 16))
    assert _holds(c, sol.candidate, MID)
    assert _holds(c, ONE, MID)


def test_vanishing_weight_at_half():
    c = Constraint(-ONE, HALF_WEIGHT, ONE)
    sol = solve_sandwich(SandwichProblem([c], points(HALF), 16))
    assert sol.candidate.is_zero()


def test_narrow_window_needs_degree():
    # t - 1/100 < a < t + 1/100: no constant fits, a = t does
    c = Constraint(100 * T - 1, RingElement.const(100), 100 * T + 1)
    with pytest.raises(SearchExhausted):
        solve_sandwich(SandwichProblem([c], MID, 0))
    sol = solve_sandwich(SandwichProblem([c], MID, 8))
    assert _holds(c, sol.candidate, MID)


def test_empty_window_is_infeasible():
    with pytest.raises(Infeasible):
        solve_sandwich(SandwichProblem([Constraint.between(T, T)], MID, 8))


def test_sign_change_of_weight_is_infeasible_when_bounds_cross():
    # weight 2t-1 vanishes at 1/2 where lower = 1 > 0: no a can satisfy it
    c = Constraint(ONE, RingElement((-1, 2)), RingElement.const(3))
    with pytest.raises(Infeasible):
        solve_sandwich(SandwichProblem([c], MID, 8))


def test_per_constraint_sets():
    near0 = interval(Q(1, 10), Q(1, 5))
    near1 = interval(Q(4, 5), Q(9, 10))
    cons = [Constraint.between(0, 2, where=near0), Constraint.between(4, 6, where=near1)]
    sol = solve_sandwich(SandwichProblem(cons, normalize([], [(Q(1, 10), Q(1, 5)), (Q(4, 5), Q(9, 10))]), 24))
    for c in cons:
        assert _holds(c, sol.candidate, c.where)


def test_pole_bounds_are_easier_with_denominators():
    # 1/t < a < 1/t + 1 on [1/5, 4/5]: a = (1 + t)/t... found with a t-power denominator
    inv_t = RingElement((1,), 1, 0)
    c = Constraint.between(inv_t, inv_t + 1)
    sol = solve_sandwich_G0(SandwichProblem([c], interval(Q(1, 5), Q(4, 5)), 16))
    assert verify_candidate(SandwichProblem([c], interval(Q(1, 5), Q(4, 5)), 16), sol.candidate) is not None
    assert _holds(c, sol.candidate, interval(Q(1, 5), Q(4, 5)))


def test_basis_has_expected_shape():
    # basis {u^j, t u^j} with u = t(1-t): degrees 0, 1, 2, 3, ...
    for k in range(8):
        assert len(basis_poly(k)) == k + 1
    assert coefficients_to_poly([1, 0, 0]) == (1,)
    assert eval_at(RingElement(basis_poly(2)), HALF) == Q(1, 4)
