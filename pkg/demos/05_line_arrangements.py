#!/usr/bin/env python3
"""Degree thresholds for multiplicity-2 arrangements on the plane.

With c components of equal degree d, the order-1 coefficient is
chi_1 = 6 - (3/2) c d + c(c-3) d^2 / 8; the search returns the least d with
c d > 6 (general type) and chi_1 > 0.  Eleven components succeed at d = 1.
"""

from orbichern import chi_k, line_arrangement_pair, line_arrangement_threshold

print(" c   minimal d   chi_1 at the threshold")
for c in range(4, 13):
    rec = line_arrangement_threshold(c)
    print("%2d   %-9d %s" % (c, rec.minimal_value, rec.chi_at_min))
print("c <= 3:", line_arrangement_threshold(3), "(quadratic term kills positivity)")

print()
print("the threshold is about equal degrees; mixed degrees can dip lower:")
mixed = chi_k(line_arrangement_pair([9, 9, 1, 1, 1, 1]), 1)
floor = min(chi_k(line_arrangement_pair([d] * 6), 1) for d in range(1, 10))
print("  chi_1(9,9,1,1,1,1) =", mixed, " vs best constant-degree value", floor)
