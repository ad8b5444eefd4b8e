"""
Exact arithmetic in Z[t, 1/t, 1/(1-t)]
======================================

Elements are integer polynomials over a denominator t^a (1-t)^b, kept in a
reduced form so that equality is structural.
"""
# %%
from fractions import Fraction

import numpy as np

from dglab.ring import ONE, RingElement, alpha, eval_at, eval_float

t = RingElement((0, 1))
one_minus_t = RingElement((1, -1))
print("t + (1-t) =", t + one_minus_t)

# %%
# (t - t^2)/(1 - t) reduces to t as soon as it is built
x = RingElement((0, 1, -1), 0, 1)
print("(t - t^2)/(1-t) =", x, "| stored as", repr(x))

# %%
# alpha multiplies by t/(1-t); negative powers divide by it
w = RingElement((-1, 2), 1, 1)  # (2t - 1)/(t(1-t))
print("w        =", w)
print("alpha(w) =", alpha(w))
print("alpha^-2(alpha^2(w)) == w:", alpha(alpha(w, 2), -2) == w)

# %%
# evaluation is exact on rationals; the float path is for plotting or sampling
print("alpha(1) at 1/3 =", eval_at(alpha(ONE), Fraction(1, 3)))
ts = np.linspace(0.05, 0.95, 7)
print(np.round([eval_float(w, s) for s in ts], 4))
