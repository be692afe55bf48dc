#!/usr/bin/env python3
"""Tour of the exact truncated ring.

Classes on an ambient space are polynomials in named generators with exact
rational coefficients, truncated above the space dimension.  The only numeric
output is the top-degree integral, looked up in the intersection table.
"""

from fractions import Fraction

from orbichern import abelian_variety, projective_space, surface_with_invariants

print("== projective plane ==")
P2 = projective_space(2)
h = P2.generator("h")
print("c(T) =", P2.tangent_chern)
print("c(Omega) = dual:", P2.tangent_chern.dual())
print("s(Omega) = 1/c  :", P2.tangent_chern.dual().inverse())
print("(1+h)(1-h)      =", (1 + h) * (1 - h))
print("(1-h)(1+h+h^2)  =", (1 - h) * (1 + h + h * h), " (degree 3 truncated)")
print("int 6h^2        =", (6 * h * h).integrate())
print("int 5h          =", (5 * h).integrate(), " (not top degree)")

print()
print("== abelian surface with one polarization, D.D = 6 ==")
A = abelian_variety(2, selfint=6)
D = A.generator("D")
print("c(T) =", A.tangent_chern, " (trivial tangent bundle)")
print("1/(1-D) =", (1 - D).inverse())
print("int D^2 =", (D * D).integrate())

print()
print("== surface with K3 invariants: c2 = 24, one divisor D, D.D = 6 ==")
S = surface_with_invariants(c2=24, divisors=["D"], dd=[[6]])
K, e, DS = S.generator("K"), S.generator("e"), S.generator("D")
print("c(T) =", S.tangent_chern)
print("int e =", e.integrate(), " (the c2 budget, independent data)")
print("int (K^2 + 2e) =", (K * K + 2 * e).integrate())
print("fractions stay exact:", str(DS * Fraction(1, 3) - 2))
