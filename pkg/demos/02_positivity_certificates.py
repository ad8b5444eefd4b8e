"""
Certified positivity on finite unions of points and intervals
=============================================================

A POSITIVE verdict comes with a per-component Sturm trace; a NOT_POSITIVE
verdict comes with a rational witness (or an isolating interval).
"""
# %%
from fractions import Fraction as Q

from dglab.param_sets import normalize
from dglab.positivity import is_positive_on, sup_on
from dglab.ring import RingElement

f = RingElement((1, -5, 5))  # 5t^2 - 5t + 1, roots near 0.276 and 0.724
middle = normalize([], [(Q(1, 4), Q(3, 4))])
print(is_positive_on(f, middle).describe())

# %%
# away from the roots the same polynomial is positive
edges = normalize([Q(1, 10)], [(Q(4, 5), Q(9, 10))])
print(is_positive_on(f, edges).describe())

# %%
# rigorous bracket on the supremum
lo, hi = sup_on(f, middle, Q(1, 1000))
print(f"sup of f on [1/4, 3/4] lies in [{float(lo):.5f}, {float(hi):.5f}]")
