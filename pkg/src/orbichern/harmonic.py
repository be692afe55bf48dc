"""Partial harmonic sums and the diagonal boundary coefficient.

Everything here is exact; callers that want binary64 values pass
exact=False and get plain floats from the same loops.
"""

from __future__ import annotations

from fractions import Fraction


def harmonic_range(a, b, power=1, exact=True):
    """Sum of 1/j**power over a <= j <= b (0 when the range is empty)."""
    if b < a:
        return Fraction(0) if exact else 0.0
    if exact:
        return sum(Fraction(1, j ** power) for j in range(a, b + 1))
    total = 0.0
    for j in range(a, b + 1):
        total += 1.0 / j ** power
    return total


def harmonic(k, exact=True):
    """H_k = 1 + 1/2 + ... + 1/k."""
    return harmonic_range(1, k, 1, exact)


def harmonic_squares(k, exact=True):
    """H_k^(2) = 1 + 1/4 + ... + 1/k^2."""
    return harmonic_range(1, k, 2, exact)


def diagonal_coefficient(m) -> Fraction:
    """sum_{2<=j1<j2<=m} 1/(j1 j2) - (m-1)/(2m), for an integer m >= 2.

    This is the self-intersection weight of a boundary component of
    multiplicity m in the trivial-canonical closed form; it vanishes at
    m = 4 and first becomes positive at m = 5.
    """
    if m < 2:
        raise ValueError("defined for integers m >= 2, got %s" % m)
    s = Fraction(0)
    pair_sum = Fraction(0)
    for j in range(2, m + 1):
        pair_sum += s * Fraction(1, j)
        s += Fraction(1, j)
    return pair_sum - Fraction(m - 1, 2 * m)
