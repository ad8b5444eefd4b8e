"""
The cokernel of id - gamma_* and its positive cone
==================================================

The twisted sum S(x) = sum_n alpha^n(x_n) vanishes exactly on coboundaries,
so cosets are compared through S. An element that is only strictly positive
on F can be moved inside its coset into the positive cone G+.
"""
# %%
from fractions import Fraction as Q

from dglab.group import GroupElement, in_G_plus, sum_alpha
from dglab.k_theory import QuotientClass, coboundary, positive_representative, solve_coboundary
from dglab.param_sets import interval, validate_spec
from dglab.ring import RingElement

y = GroupElement({-1: RingElement((1,), 1, 0), 0: RingElement((0, 1)), 2: RingElement((-1, 0, 3))})
x = coboundary(y)
print("x = (id - gamma_*)(y) =", x)
print("twisted sum:", sum_alpha(x), "| recovered y:", solve_coboundary(x) == y)

# %%
u = GroupElement({0: RingElement((2, 1))})
print("same class after adding x:", QuotientClass.of(u + x) == QuotientClass.of(u))

# %%
spec = validate_spec(interval(Q(1, 4), Q(1, 3)), interval(Q(3, 5), Q(2, 3)))
w = GroupElement({0: RingElement((1, -2))})  # 1 - 2t: positive on F, negative on F1
print("w in G+?", bool(in_G_plus(w, spec)))
rep = positive_representative(w, spec, max_degree=32)
print("representative:", rep.y, "| b =", rep.b)
print("in G+:", bool(in_G_plus(rep.y, spec)), "| same S:", sum_alpha(rep.y) == sum_alpha(w))
