"""Orbifold pairs and the characteristic-class machinery attached to them.

An orbifold pair is an ambient geometry together with boundary components,
each a degree-1 divisor class with an extended-rational multiplicity
m in Q(>=1) or infinity.  The order-k boundary keeps each component with
coefficient (1 - k/m)^+, and the order-k cotangent class is the Whitney
product

    c(Omega^(k)) = c(Omega_X) * prod_{m_i > k} (1 - (k/m_i) D_i) / (1 - D_i),

with the division meaning the truncated geometric-series inverse.  Segre
classes are the inverses of these, and the order-k Euler-characteristic
coefficient is

    chi_k = (-1)^n * integral of the degree-n part of
            prod_{j=1..k} s(Omega^(j)) with the degree-q part of the j-th
            factor weighted by j^(-q).

All values are reported per unit covering degree: classes live on the base,
never on an adapted cover, so rational coefficients are allowed and any
overall covering-degree factor is dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import DomainError, GeometryMismatch
from .harmonic import diagonal_coefficient, harmonic_range
from .ring import INFINITE_ORDER, Geometry, GradedClass, Multiplicity

#: Largest order for which chi is evaluated in exact arithmetic; the
#: harmonic-type rationals involved grow super-polynomially beyond this.
EXACT_ORDER_LIMIT = 10_000


class BoundaryComponent(NamedTuple):
    divisor: GradedClass
    multiplicity: Multiplicity


class DeltaTerm(NamedTuple):
    divisor: GradedClass
    coefficient: Fraction
    surviving: bool


@dataclass(frozen=True)
class ChiReport:
    """chi_k together with its Riemann-Roch scale and a positivity verdict.

    `leading_scale` is 1/((k!)^n ((k+1)n - 1)!) exactly;
    `canonical_positive` is True/False when the preset decides positivity of
    K_X + Delta^(k), None when it cannot.
    """
    k: int
    chi: Fraction
    leading_scale: Fraction
    canonical_positive: Optional[bool]


class OrbifoldPair:
    """A geometry plus boundary components (divisor class, multiplicity)."""

    def __init__(self, geometry: Geometry, components):
        self.geometry = geometry
        comps = []
        for divisor, mult in components:
            if divisor.geometry is not geometry and divisor.geometry != geometry:
                raise GeometryMismatch("component divisor lives elsewhere")
            if divisor.degrees_present() not in ([], [1]):
                raise DomainError("component class must be homogeneous of degree 1")
            comps.append(BoundaryComponent(divisor, Multiplicity.parse(mult)))
        self.components = comps

    def with_component(self, divisor, mult) -> "OrbifoldPair":
        return OrbifoldPair(self.geometry,
                            [(c.divisor, c.multiplicity) for c in self.components]
                            + [(divisor, mult)])

    def logarithmic_part(self) -> "OrbifoldPair":
        """The sub-pair of infinite-multiplicity components."""
        return OrbifoldPair(self.geometry,
                            [(c.divisor, c.multiplicity) for c in self.components
                             if c.multiplicity.is_infinite])

    def stabilization_order(self) -> int:
        """Smallest j* with every finite multiplicity <= j*; classes of
        order j >= j* coincide with the logarithmic profile."""
        worst = 1
        for c in self.components:
            if not c.multiplicity.is_infinite:
                worst = max(worst, math.ceil(c.multiplicity.value))
        return worst

    def __repr__(self):
        return "OrbifoldPair(%r, %d components)" % (self.geometry, len(self.components))


def _check_order(k):
    if k is INFINITE_ORDER:
        return
    if not isinstance(k, int) or k < 1:
        raise DomainError("order k must be a positive integer or infinite")


def order_coefficient(mult: Multiplicity, k) -> Fraction:
    """(1 - k/m)^+ with the convention k/inf = 0."""
    if mult.is_infinite:
        return Fraction(1)
    if k is INFINITE_ORDER:
        return Fraction(0)
    return max(Fraction(0), 1 - mult.ratio(k))


def delta_k(pair: OrbifoldPair, k) -> list[DeltaTerm]:
    """Per-component coefficients of the order-k boundary divisor."""
    _check_order(k)
    out = []
    for comp in pair.components:
        coeff = order_coefficient(comp.multiplicity, k)
        out.append(DeltaTerm(comp.divisor, coeff, coeff > 0))
    return out


def cotangent_chern(pair: OrbifoldPair, k: int) -> GradedClass:
    """Total Chern class of the order-k orbifold cotangent bundle."""
    _check_order(k)
    c = pair.geometry.tangent_chern.dual()
    one = pair.geometry.one()
    for comp in pair.components:
        if not comp.multiplicity.exceeds(k):
            continue  # (1 - k/m)^+ = 0: the component drops out entirely
        ratio = comp.multiplicity.ratio(k)
        c = c * (one - comp.divisor * ratio) * (one - comp.divisor).inverse()
    return c


def cotangent_segre(pair: OrbifoldPair, k: int) -> GradedClass:
    """Total Segre class s = 1/c of the order-k orbifold cotangent bundle."""
    return cotangent_chern(pair, k).inverse()


def canonical_class(pair: OrbifoldPair, k) -> GradedClass:
    """c1(K_X) + sum of (1 - k/m_i)^+ D_i."""
    _check_order(k)
    out = -pair.geometry.tangent_chern.component(1)
    for term in delta_k(pair, k):
        out = out + term.divisor * term.coefficient
    return out


def canonical_positivity(pair: OrbifoldPair, cls: GradedClass) -> Optional[bool]:
    """Preset-level positivity of a degree-1 class.

    Projective space: the h coefficient decides.  Abelian presets have ample
    generators, so nonzero with all coefficients >= 0 decides.  Anything else
    is reported as not decidable (None).
    """
    kind = pair.geometry.kind
    coeffs = [cls.coefficient(tuple(1 if j == i else 0
                                    for j in range(len(pair.geometry.names))))
              for i in range(len(pair.geometry.names))]
    if kind == "projective":
        return coeffs[0] > 0
    if kind == "abelian":
        return all(c >= 0 for c in coeffs) and any(c > 0 for c in coeffs)
    return None


def canonical_k(pair: OrbifoldPair, k):
    """The order-k canonical class and its positivity tri-state."""
    cls = canonical_class(pair, k)
    return cls, canonical_positivity(pair, cls)


# -- the Euler-characteristic coefficient -------------------------------------

def _segre_profile(pair: OrbifoldPair, k: int, numeric: bool):
    """Distinct per-order Segre classes: a dict for orders below the
    stabilization order, plus the stabilized (logarithmic) class when it
    is reached within the first k orders."""
    j_star = pair.stabilization_order()
    distinct = {}
    for j in range(1, min(k, j_star - 1) + 1):
        s = cotangent_segre(pair, j)
        distinct[j] = s.map_coefficients(float) if numeric else s
    stable = None
    if k >= j_star:
        stable = cotangent_segre(pair.logarithmic_part(), 1)
        if numeric:
            stable = stable.map_coefficients(float)
    return distinct, j_star, stable


def chi_k(pair: OrbifoldPair, k: int, numeric: bool = False):
    """Order-k Euler-characteristic coefficient (exact by default).

    Exact evaluation is limited to k <= EXACT_ORDER_LIMIT; pass numeric=True
    for a binary64 evaluation without that limit.  For surfaces the double
    sum over Segre components collapses to prefix sums, so the cost is O(k)
    scalar work; in higher dimension the truncated-class product is taken
    order by order.
    """
    _check_order(k)
    if k is INFINITE_ORDER:
        raise DomainError("chi is indexed by finite orders")
    if not numeric and k > EXACT_ORDER_LIMIT:
        raise DomainError(
            "exact evaluation is limited to k <= %d; use numeric=True"
            % EXACT_ORDER_LIMIT)
    n = pair.geometry.dim
    distinct, j_star, stable = _segre_profile(pair, k, numeric)
    if n == 2:
        return _chi_surface(pair, k, distinct, j_star, stable, numeric)
    sign = -1 if n % 2 else 1
    product = pair.geometry.one()
    if numeric:
        product = product.map_coefficients(float)
    for j in range(1, k + 1):
        s = distinct.get(j, stable)
        t = 1.0 / j if numeric else Fraction(1, j)
        product = product * s.scale_degrees(t)
    return sign * product.integrate()


def _chi_surface(pair, k, distinct, j_star, stable, numeric):
    # chi = sum_j s2^(j)/j^2 + sum_{j1<j2} (s1^(j1)/j1)(s1^(j2)/j2), and the
    # pair sum is (A^2 - Q)/2 with A, Q accumulated in one pass; orders past
    # the stabilization point contribute through harmonic ranges only.
    zero = 0.0 if numeric else Fraction(0)
    A = pair.geometry.zero()
    if numeric:
        A = A.map_coefficients(float)
    B = zero
    Q = zero
    for j in sorted(distinct):
        s = distinct[j]
        a = s.component(1)
        w = 1.0 / j if numeric else Fraction(1, j)
        A = A + a * w
        B = B + s.component(2).integrate() * w * w
        Q = Q + (a * a).integrate() * w * w
    if k >= j_star:
        h1 = harmonic_range(j_star, k, 1, exact=not numeric)
        h2 = harmonic_range(j_star, k, 2, exact=not numeric)
        a_inf = stable.component(1)
        A = A + a_inf * h1
        B = B + stable.component(2).integrate() * h2
        Q = Q + (a_inf * a_inf).integrate() * h2
    pair_sum = ((A * A).integrate() - Q) / 2
    return B + pair_sum


def leading_scale(n: int, k: int) -> Fraction:
    """1/((k!)^n ((k+1)n - 1)!)."""
    return Fraction(1, math.factorial(k) ** n * math.factorial((k + 1) * n - 1))


def chi_leading_term(pair: OrbifoldPair, k: int) -> ChiReport:
    """Package chi_k with its asymptotic scale and the positivity verdict."""
    _, positive = canonical_k(pair, k)
    return ChiReport(k=k, chi=chi_k(pair, k),
                     leading_scale=leading_scale(pair.geometry.dim, k),
                     canonical_positive=positive)


def log_asymptotic_coefficient(pair: OrbifoldPair) -> Fraction:
    """(K_X + Delta^(inf))^n / n!, the (log k)^n rate of chi_k."""
    cls = canonical_class(pair, INFINITE_ORDER)
    n = pair.geometry.dim
    return (cls ** n).integrate() / math.factorial(n)


# -- trivial-canonical closed form --------------------------------------------

def chi_trivial_canonical_closed_form(pair: OrbifoldPair, k: int) -> Fraction:
    """chi_k on a trivial-canonical surface, by harmonic sums alone.

    Requires n = 2 with the canonical class pairing to zero against every
    generator, integer finite multiplicities >= 2, and k at least the largest
    finite multiplicity.  Then

        chi_k = -H_k^(2) c2 + sum_{i1<i2} S_{i1} S_{i2} int(D_{i1} D_{i2})
                + sum_i diag(m_i) int(D_i^2),

    with S_i = H_{m_i} - 1 for finite m_i and H_k for infinite ones, and
    diag(m) the pair-sum coefficient (for infinite m, its order-k truncation
    (H_k^2 - H_k^(2))/2).  Agrees exactly with chi_k on its whole domain.
    """
    geom = pair.geometry
    if geom.dim != 2:
        raise DomainError("closed form is for surfaces")
    if not isinstance(k, int) or k < 1:
        raise DomainError("order k must be a positive integer")
    kappa = -geom.tangent_chern.component(1)
    for name in geom.names:
        g = geom.generator(name)
        if g.degrees_present() == [1] and (kappa * g).integrate() != 0:
            raise DomainError("closed form needs a trivial canonical class")
    for comp in pair.components:
        m = comp.multiplicity
        if m.is_infinite:
            continue
        if not m.is_integer or m.value < 2:
            raise DomainError("finite multiplicities must be integers >= 2")
        if k < m.value:
            raise DomainError("needs k >= every finite multiplicity")

    c2 = geom.tangent_chern.component(2).integrate()
    hk = harmonic_range(1, k, 1)
    hk2 = harmonic_range(1, k, 2)
    total = -hk2 * c2
    factors = []
    for comp in pair.components:
        m = comp.multiplicity
        if m.is_infinite:
            factors.append((comp.divisor, hk, (hk * hk - hk2) / 2))
        else:
            mi = int(m.value)
            factors.append((comp.divisor, harmonic_range(2, mi, 1),
                            diagonal_coefficient(mi)))
    for i, (div_i, s_i, diag_i) in enumerate(factors):
        total += diag_i * (div_i * div_i).integrate()
        for div_j, s_j, _ in factors[i + 1:]:
            total += s_i * s_j * (div_i * div_j).integrate()
    return total
