"""Flag-bundle Gysin coefficient on an abelian n-fold.

For a partition lam (padded with zeros to n parts) the top Segre number of
the associated flag line bundle is kappa(lam) * c1(D)^n, where kappa is the
coefficient of t1^n t2^(n-1) ... tn^1 in

    (lam_1 t1 + ... + lam_n tn)^n
        * prod_p (t_{j_p+1} ... t_{j_{p+1}})^(-j_p)
        * prod_{i<j} (t_i - t_j),

with j_1 < ... < j_m the jumps of lam and j_{m+1} = n.  Clearing the negative
powers turns this into a plain coefficient extraction: shift the target
exponent vector upward by prod_p (t_{j_p+1} ... t_{j_{p+1}})^(j_p).

The shift raises the target degree by the defect sum (j_{p+1} - j_p) j_p,
while the polynomial degree stays n(n+1)/2, so any positive defect forces
the coefficient to vanish.  The overall sign convention is not normalized;
callers should rely on vanishing and magnitude only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import DomainError
from .partitions import Partition

#: Above this the n!-permutation expansion becomes unreasonable.
MAX_DIMENSION = 6


@dataclass(frozen=True)
class JumpData:
    """Padded partition, its descent positions and the degree defect."""
    n: int
    padded: tuple
    jumps: tuple
    defect: int


def jump_data(n: int, lam) -> JumpData:
    """Jumps of lam in dimension n: the indices i <= n with lam_i > lam_{i+1}
    (lam_{n+1} = 0), and the defect sum (j_{p+1} - j_p) j_p with j_{m+1} = n.

    The defect vanishes exactly for constant partitions (including zero).
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if n < 1:
        raise DomainError("dimension must be >= 1")
    if len(lam) > n:
        raise DomainError("partition has more than n parts")
    padded = lam.parts + (0,) * (n - len(lam))
    jumps = tuple(i for i in range(1, n + 1)
                  if padded[i - 1] > (padded[i] if i < n else 0))
    defect = 0
    fence = jumps + (n,)
    for p, jp in enumerate(jumps):
        defect += (fence[p + 1] - jp) * jp
    return JumpData(n=n, padded=padded, jumps=jumps, defect=defect)


def shifted_target_degree(n: int, lam) -> int:
    """Total degree of the shifted target monomial, n(n+1)/2 + defect;
    the polynomial being searched has degree n(n+1)/2."""
    return sum(_target_exponents(jump_data(n, lam)))


def _target_exponents(data: JumpData) -> tuple:
    # (n, n-1, ..., 1) shifted by j_p on each slot in (j_p, j_{p+1}].
    n = data.n
    shift = [0] * n
    fence = (0,) + data.jumps + (n,)
    for p in range(1, len(fence) - 1):
        jp = fence[p]
        for i in range(jp + 1, fence[p + 1] + 1):
            shift[i - 1] = jp
    return tuple(n - i + shift[i] for i in range(n))


def gysin_coefficient(n: int, lam) -> Fraction:
    """Exact coefficient kappa(lam); zero whenever the defect is positive.

    The multinomial expansion of the power is convolved against the signed
    permutation expansion of the Vandermonde product, all in integers.
    """
    if n > MAX_DIMENSION:
        raise DomainError("dimension capped at %d" % MAX_DIMENSION)
    data = jump_data(n, lam)
    target = _target_exponents(data)
    # target degree = n(n+1)/2 + defect, polynomial degree = n(n+1)/2: a
    # positive defect leaves no matching term below, with no shortcut taken.
    total = 0
    nfact = math.factorial(n)
    for sigma in permutations(range(n)):
        # Vandermonde term: sign(sigma) * prod t_i^(n - 1 - sigma(i)).
        alpha = [target[i] - (n - 1 - sigma[i]) for i in range(n)]
        if any(a < 0 for a in alpha) or sum(alpha) != n:
            continue
        sign = _permutation_sign(sigma)
        coeff = nfact
        for a in alpha:
            coeff //= math.factorial(a)
        term = coeff
        for lam_i, a in zip(data.padded, alpha):
            term *= lam_i ** a
        total += sign * term
    return Fraction(total)


def _permutation_sign(sigma) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
