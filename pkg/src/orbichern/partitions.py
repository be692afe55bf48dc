"""Partitions, Pieri products and the graded jet-bundle summands.

Products of symmetric powers decompose into Schur functors by iterated Pieri
multiplication (adding horizontal strips); full Littlewood-Richardson is
never needed here because every tensor factor in scope is a symmetric power.
The classical Weyl product formula supplies dimensions as an independent
cross-check on the decompositions.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .orbifold import OrbifoldPair, delta_k


class Partition:
    """A weakly decreasing tuple of positive integers; () is trivial."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts if p != 0)
        for i, p in enumerate(parts):
            if p < 1:
                raise DomainError("parts must be positive, got %s" % (parts,))
            if i and parts[i - 1] < p:
                raise DomainError("parts must be weakly decreasing: %s" % (parts,))
        self.parts = parts

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return "(%s)" % ",".join(str(p) for p in self.parts)

    def __repr__(self):
        return "Partition(%s)" % (self.parts,)


def _horizontal_strips(parts: tuple, m: int):
    """All partitions mu >= parts with mu/parts a horizontal strip of m boxes
    (at most one added box per column, so rows interlace)."""
    rows = len(parts) + 1
    out = []
    prefix = [0] * rows

    def rec(i, remaining):
        if i == rows:
            if remaining == 0:
                out.append(tuple(v for v in prefix if v))
            return
        lo = parts[i] if i < len(parts) else 0
        hi = lo + remaining if i == 0 else min(parts[i - 1], lo + remaining)
        for v in range(lo, hi + 1):
            prefix[i] = v
            rec(i + 1, remaining - (v - lo))
        prefix[i] = 0

    rec(0, m)
    return out


class SchurExpansion:
    """A nonnegative integer combination of Schur functors."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for lam, mult in (terms or {}).items():
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            if mult < 0:
                raise DomainError("multiplicities must be nonnegative")
            if mult:
                self.terms[lam] = int(mult)

    @classmethod
    def unit(cls) -> "SchurExpansion":
        return cls({Partition(): 1})

    def items(self):
        return self.terms.items()

    def multiplicity(self, lam) -> int:
        if not isinstance(lam, Partition):
            lam = Partition(lam)
        return self.terms.get(lam, 0)

    def __eq__(self, other):
        return isinstance(other, SchurExpansion) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0].weight, tuple(-p for p in kv[0].parts)))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join("%d*%s" % (m, lam) for lam, m in self.sorted_terms())

    def __repr__(self):
        return "SchurExpansion(%s)" % self


def pieri_multiply(expansion: SchurExpansion, m: int) -> SchurExpansion:
    """Multiply by the m-th complete homogeneous functor (a horizontal
    strip of m boxes on every term), multiplicities accumulated exactly."""
    if m < 0:
        raise DomainError("strip size must be nonnegative")
    out = {}
    for lam, mult in expansion.items():
        for mu in _horizontal_strips(lam.parts, m):
            key = Partition(mu)
            out[key] = out.get(key, 0) + mult
    return SchurExpansion(out)


def decompose_sym_tensor(degrees) -> SchurExpansion:
    """Schur decomposition of Sym^{a_1} x ... x Sym^{a_p}; every resulting
    partition has at most p parts."""
    out = SchurExpansion.unit()
    for a in degrees:
        if a < 0:
            raise DomainError("degrees must be nonnegative")
        out = pieri_multiply(out, a)
    return out


def schur_dimension(lam, r: int) -> int:
    """Dimension of the Schur functor of shape lam on an r-dimensional space,
    by the Weyl product formula; 0 when lam has more than r parts."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if r < 1:
        raise DomainError("rank must be positive")
    if len(lam) > r:
        return 0
    padded = lam.parts + (0,) * (r - len(lam))
    value = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            value *= Fraction(padded[i] - padded[j] + j - i, j - i)
    assert value.denominator == 1
    return int(value)


def weighted_vectors(k: int, n_weight: int) -> list[tuple]:
    """All l in Z_{>=0}^k with sum j*l_j = n_weight, largest-first order.

    The count equals the number of partitions of the weight into parts <= k.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    if n_weight < 0:
        raise DomainError("weight must be >= 0")
    memo = {}

    def suffixes(j, remaining):
        # all (l_j, ..., l_k) with sum of i*l_i = remaining, leading entry
        # descending, so the assembled vectors come out largest-first
        if j > k:
            return [()] if remaining == 0 else []
        key = (j, remaining)
        found = memo.get(key)
        if found is None:
            found = [(lj,) + tail
                     for lj in range(remaining // j, -1, -1)
                     for tail in suffixes(j + 1, remaining - j * lj)]
            memo[key] = found
        return found

    return suffixes(1, n_weight)


def graded_summands(pair: OrbifoldPair, k: int, n_weight: int):
    """The graded pieces of the order-k weight-N jet bundle: for each weight
    vector l, the tensor factors Sym^{l_j} of the order-j cotangent bundle
    together with the order-j boundary coefficient profile.

    Returns a list of (l, factors) with factors = [(j, l_j, delta_k(pair, j))]
    over the orders with l_j > 0; display-oriented.
    """
    out = []
    profiles = {}
    for ell in weighted_vectors(k, n_weight):
        factors = []
        for j, lj in enumerate(ell, start=1):
            if lj == 0:
                continue
            if j not in profiles:
                profiles[j] = delta_k(pair, j)
            factors.append((j, lj, profiles[j]))
        out.append((ell, factors))
    return out
