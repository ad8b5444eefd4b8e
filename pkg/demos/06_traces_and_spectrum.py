"""
Trace functionals and the inverse-temperature spectrum
======================================================

Point evaluations give two kinds of trace on G. The PLAIN one scales by
t/(1-t) under gamma_*, the TWISTED one is invariant. With t = 1/(1+e^beta)
a compact set K of inverse temperatures becomes a parameter set F1.
"""
# %%
from fractions import Fraction as Q

from dglab.group import GroupElement, gamma_star
from dglab.param_sets import HALF, f1_for_K, points, validate_spec
from dglab.ring import RingElement
from dglab.traces import classify_eigenfunctional, kms_spectrum, plain, twisted

x = GroupElement({-1: RingElement((1,), 1, 0), 2: RingElement((0, 1))})
tp, tw = plain(Q(1, 3)), twisted(Q(1, 3))
print("PLAIN:   ", tp(gamma_star(x)), "=", tp.ratio, "*", tp(x))
print("TWISTED: ", tw(gamma_star(x)), "=", tw(x))

# %%
K = [(-1.0, 1.0), 2.5]
spec = validate_spec(points(HALF), f1_for_K(K))
print("F1 =", [(float(a), float(b)) for a, b in spec.F1.components()])
print("spectrum:", kms_spectrum(spec))

# %%
# an eigenfunctional with factor s lives at t = s/(1+s) and exists iff that t is in F1
t_point = min(spec.F1.points)
for s in (Q(2, 3), t_point / (1 - t_point), Q(5)):
    tf = classify_eigenfunctional(s, spec)
    label = f"{float(s):.6g}"
    print(f"s = {label}: {tf if tf else 'none'}")
