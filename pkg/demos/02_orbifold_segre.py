#!/usr/bin/env python3
"""Orbifold pairs and their higher-order cotangent classes.

A boundary component of multiplicity m participates in the order-k
structure with coefficient (1 - k/m)^+: it weakens as k grows, drops out
entirely at k = m, and logarithmic components (m = inf) never drop.  The
order-k cotangent Chern class multiplies c(Omega_X) by
(1 - (k/m) D) / (1 - D) for each surviving component.
"""

from fractions import Fraction

from orbichern import (OrbifoldPair, cotangent_chern, cotangent_segre,
                       delta_k, projective_space)

P2 = projective_space(2)
h = P2.generator("h")

pair = OrbifoldPair(P2, [
    (h * 4, 2),                # conic-like component, multiplicity 2
    (h * 3, Fraction(7, 2)),   # rational multiplicity 7/2
    (h, "inf"),                # logarithmic line
])

print("order-k boundary coefficients (1 - k/m)^+ per component:")
for k in (1, 2, 3, 4, 5):
    coeffs = [str(t.coefficient) for t in delta_k(pair, k)]
    print("  k=%d: %s" % (k, "  ".join(coeffs)))

print()
print("cotangent classes by order:")
for k in (1, 2, 3, 4, 6):
    print("  k=%d:  c = %s" % (k, cotangent_chern(pair, k)))
    print("        s = %s" % cotangent_segre(pair, k))

print()
print("stabilization: from k = %d on, only the logarithmic line remains"
      % pair.stabilization_order())
log_profile = pair.logarithmic_part()
print("log profile s =", cotangent_segre(log_profile, 1))
assert cotangent_segre(pair, 4) == cotangent_segre(log_profile, 1)
