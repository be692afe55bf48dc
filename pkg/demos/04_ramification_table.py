#!/usr/bin/env python3
"""Minimal ramification orders for smooth plane curves at jet order 2.

For each degree d >= 12 the search finds the smallest multiplicity a making
both the order-2 canonical class and chi_2 positive, by an integer-exact
quadratic root bound plus verification of the nearest candidates.  Below
d = 12 no multiplicity works.
"""

from orbichern import min_multiplicity_for_degree, table1

print("degree range   minimal a   chi_2 at the minimum")
for row in table1():
    label = "%d-%s" % (row.d_lo, row.d_hi if row.d_hi is not None else "inf") \
        if row.d_hi != row.d_lo else str(row.d_lo)
    print("  %-12s %-11d %s" % (label, row.a_min, row.chi_at_min))

print()
rec = min_multiplicity_for_degree(12)
print("witnesses at d=12: chi_2(a=%d) = %s > 0 > %s = chi_2(a=%d)"
      % (rec.minimal_value, rec.chi_at_min, rec.chi_below_min,
         rec.minimal_value - 1))

print()
for d in (8, 11):
    print("d=%d:" % d, min_multiplicity_for_degree(d),
          "(no admissible multiplicity below degree 12)")
