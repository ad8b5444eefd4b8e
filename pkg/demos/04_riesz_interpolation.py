"""
Riesz interpolation in the ordered group G
==========================================

Given x1, x2 <= y1, y2 we build z = [[-b, a, b]] with x_i <= z <= y_j. The
coefficient a fixes the plain sum on F1, b corrects the twisted sum on F.
"""
# %%
from fractions import Fraction as Q

from dglab.group import embed_single, embed_triple, in_G_plus
from dglab.param_sets import HALF, interval, points, validate_spec
from dglab.riesz import interpolate
from dglab.ring import ONE, RingElement

half = validate_spec(points(HALF), points(HALF))
zero, two = embed_single(RingElement(())), embed_single(RingElement.const(2))
res = interpolate(zero, zero, two, two, half)
print("F = F1 = {1/2}: z =", res.z)

# %%
spec = validate_spec(interval(Q(1, 4), Q(1, 3)), interval(Q(3, 5), Q(2, 3)))
t = RingElement((0, 1))
x1 = embed_triple(t, ONE)
x2 = embed_single(RingElement.const(-3))
y1, y2 = x1 + embed_single(ONE), x1 + embed_single(RingElement.const(3))
res = interpolate(x1, x2, y1, y2, spec, max_degree=32)
print("disjoint intervals: z =", res.z)
print("a =", res.a, "| b =", res.b)
print("all four inequalities hold:",
      all(in_G_plus(res.z - x, spec) for x in (x1, x2)) and all(in_G_plus(y - res.z, spec) for y in (y1, y2)))
