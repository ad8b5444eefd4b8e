"""
Squeezing an integer polynomial between two bounds
==================================================

The search grows the degree, solves a Chebyshev-center LP on a grid and
rounds the centre with LLL/Babai. Every reported candidate is certified
exactly, so a float mistake can cost time but never correctness.
"""
# %%
from fractions import Fraction as Q

from dglab.param_sets import normalize
from dglab.ring import RingElement
from dglab.sandwich import Constraint, SandwichProblem, solve_sandwich, solve_sandwich_G0

S = normalize([], [(Q(1, 4), Q(3, 4))])
t = RingElement((0, 1))

# %%
# t - 1/100 < a < t + 1/100, written with integer coefficients
narrow = Constraint(100 * t - 1, RingElement.const(100), 100 * t + 1)
sol = solve_sandwich(SandwichProblem([narrow], S, 16))
print("candidate:", sol.candidate, "| degree cap", sol.degree_cap, "| rounds", sol.iterations)

# %%
# 1/t^3 < a < 1/t^3 + 1 near the pole at 0: a pure polynomial exists but is
# large, while letting a carry a denominator (t(1-t))^k keeps it small
inv3 = RingElement((1,), 3, 0)
steep = SandwichProblem([Constraint.between(inv3, inv3 + 1)], normalize([], [(Q(1, 10), Q(1, 2))]), 16)
for solver in (solve_sandwich, solve_sandwich_G0):
    a = solver(steep).candidate
    print(f"{solver.__name__:>18}: numerator degree {len(a.num) - 1}, "
          f"largest coefficient {max(map(abs, a.num))}, denominator exponents {a.t_pow}, {a.omt_pow}")
