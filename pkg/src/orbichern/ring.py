"""Truncated graded ring with exact rational coefficients.

Classes on an ambient space are represented as polynomials in a fixed list of
named generators, truncated above the space dimension.  All coefficients are
`fractions.Fraction`; the only numeric output is the degree-n integral, read
off an intersection table attached to the geometry.  Intermediate relations
between generators are deliberately not modelled: every quantity of interest
ends in a top-degree integral, which the table evaluates.

The three ambient presets used throughout the package are built by
`projective_space`, `abelian_variety` and `surface_with_invariants`.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError, GeometryMismatch, NonUnitError

Rat = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("exact ring does not accept floats, got %r" % x)
    return Fraction(x)


class Multiplicity:
    """Orbifold multiplicity: a rational >= 1, or infinite (logarithmic).

    The arithmetic convention k/inf = 0 is built into `ratio`.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        if value is not None:
            value = _as_fraction(value)
            if value < 1:
                raise DomainError("multiplicity must be >= 1, got %s" % value)
        self.value = value

    @classmethod
    def infinite(cls) -> "Multiplicity":
        return cls(None)

    @classmethod
    def parse(cls, text) -> "Multiplicity":
        """Parse "inf", "m" or "p/q"."""
        if isinstance(text, Multiplicity):
            return text
        if isinstance(text, str):
            text = text.strip()
            if text in ("inf", "infinity", "oo"):
                return cls(None)
        return cls(Fraction(text))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_integer(self) -> bool:
        return self.value is not None and self.value.denominator == 1

    def ratio(self, k) -> Fraction:
        """k/m as an exact rational; 0 when m is infinite."""
        if self.value is None:
            return Fraction(0)
        if k is INFINITE_ORDER:
            raise DomainError("inf/m is undefined for finite m")
        return Fraction(k) / self.value

    def exceeds(self, k) -> bool:
        """Whether m > k (always true for infinite m)."""
        if self.value is None:
            return True
        if k is INFINITE_ORDER:
            return False
        return self.value > k

    def __eq__(self, other):
        return isinstance(other, Multiplicity) and self.value == other.value

    def __hash__(self):
        return hash(("Multiplicity", self.value))

    def __str__(self):
        return "inf" if self.value is None else str(self.value)

    def __repr__(self):
        return "Multiplicity(%s)" % self


#: Sentinel accepted by order-indexed operations in place of a finite order.
INFINITE_ORDER = math.inf


class Geometry:
    """Ambient-space data: dimension, generators, intersection table, c(T).

    Parameters
    ----------
    dim:
        Complex dimension n; every class is truncated above degree n.
    generators:
        List of (name, degree) with degree 1 or 2.
    integrals:
        Map from degree-n exponent tuples to exact rationals.  Monomials
        absent from the table integrate to 0.
    kind:
        Preset tag ("projective", "abelian", "surface" or "custom"), used
        only by positivity decisions downstream.
    """

    def __init__(self, dim, generators, integrals, kind="custom"):
        if dim < 1:
            raise DomainError("dimension must be >= 1")
        names = [name for name, _ in generators]
        if len(set(names)) != len(names):
            raise DomainError("generator names must be distinct")
        for name, deg in generators:
            if deg not in (1, 2):
                raise DomainError("generator %s has degree %s, want 1 or 2" % (name, deg))
        self.dim = dim
        self.generators = list(generators)
        self.names = names
        self.degrees = tuple(deg for _, deg in generators)
        self.kind = kind
        self._degree_cache = {}
        self.integrals = {}
        for exps, value in integrals.items():
            exps = tuple(exps)
            if self._degree_of(exps) != dim:
                raise DomainError("integration entry %s is not of top degree" % (exps,))
            self.integrals[exps] = _as_fraction(value)
        self.tangent_chern = self.one()
        self.preset_data = None  # filled in by the preset constructors

    # -- class constructors ------------------------------------------------

    def zero(self) -> "GradedClass":
        return GradedClass(self, {})

    def one(self) -> "GradedClass":
        return self.scalar(1)

    def scalar(self, c) -> "GradedClass":
        return GradedClass(self, {(0,) * len(self.generators): _as_fraction(c)})

    def generator(self, name) -> "GradedClass":
        i = self.names.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(self.names)))
        return GradedClass(self, {exps: Fraction(1)})

    def monomial(self, exps, coefficient=1) -> "GradedClass":
        return GradedClass(self, {tuple(exps): _as_fraction(coefficient)})

    def _degree_of(self, exps) -> int:
        cached = self._degree_cache.get(exps)
        if cached is None:
            cached = sum(e * d for e, d in zip(exps, self.degrees))
            self._degree_cache[exps] = cached
        return cached

    def __eq__(self, other):
        """Structural equality: same dimension, generators, intersection
        table and tangent data (independent constructions interoperate)."""
        return (isinstance(other, Geometry)
                and self.dim == other.dim
                and self.generators == other.generators
                and self.integrals == other.integrals
                and self.tangent_chern.coeffs == other.tangent_chern.coeffs)

    def __hash__(self):
        return hash((self.dim, tuple(map(tuple, self.generators))))

    def __repr__(self):
        return "Geometry(dim=%d, kind=%s, generators=%s)" % (
            self.dim, self.kind, self.names)


class GradedClass:
    """A truncated graded polynomial over a geometry's generators.

    Coefficients are exact rationals keyed by exponent tuples; monomials of
    total weighted degree above the geometry dimension are discarded, and
    zero coefficients are never stored.
    """

    __slots__ = ("geometry", "coeffs")

    def __init__(self, geometry, coeffs):
        self.geometry = geometry
        clean = {}
        for exps, c in coeffs.items():
            if not c:
                continue
            if geometry._degree_of(exps) > geometry.dim:
                continue
            clean[exps] = c
        self.coeffs = clean

    # -- structure ----------------------------------------------------------

    def items(self):
        return self.coeffs.items()

    def coefficient(self, exps) -> Fraction:
        return self.coeffs.get(tuple(exps), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        zero = (0,) * len(self.geometry.names)
        return self.coeffs.get(zero, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees_present(self):
        return sorted({self.geometry._degree_of(e) for e in self.coeffs})

    def _check_same_geometry(self, other):
        if self.geometry is not other.geometry and self.geometry != other.geometry:
            raise GeometryMismatch("operands live over different geometries")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GradedClass):
            other = self.geometry.scalar(other)
        self._check_same_geometry(other)
        out = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            out[exps] = out.get(exps, 0) + c
        return GradedClass(self.geometry, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.geometry, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, GradedClass):
            other = self.geometry.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.geometry.scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, GradedClass):
            c = other if isinstance(other, float) else _as_fraction(other)
            return GradedClass(self.geometry,
                               {e: v * c for e, v in self.coeffs.items()})
        self._check_same_geometry(other)
        geom = self.geometry
        n = geom.dim
        out = {}
        for e1, c1 in self.coeffs.items():
            d1 = geom._degree_of(e1)
            for e2, c2 in other.coeffs.items():
                if d1 + geom._degree_of(e2) > n:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return GradedClass(geom, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise DomainError("negative powers are not defined")
        out = self.geometry.one()
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "GradedClass":
        """Multiplicative inverse modulo truncation, by geometric series.

        Requires a nonzero constant term; with a = a0(1 - u) the inverse is
        (1 + u + ... + u^n)/a0.
        """
        a0 = self.constant_term
        if not a0:
            raise NonUnitError("cannot invert a class with zero constant term")
        inv_a0 = Fraction(1) / a0
        u = self.geometry.one() - self * inv_a0
        out = self.geometry.one() + u
        power = u
        for _ in range(self.geometry.dim - 1):
            power = power * u
            if power.is_zero():
                break
            out = out + power
        return out if a0 == 1 else out * inv_a0

    def component(self, q) -> "GradedClass":
        """The part of exact total degree q (zero class when q > n)."""
        if q < 0:
            raise DomainError("component degree must be >= 0")
        geom = self.geometry
        return GradedClass(geom, {e: c for e, c in self.coeffs.items()
                                  if geom._degree_of(e) == q})

    def integrate(self) -> Fraction:
        """Pair the top-degree part against the intersection table."""
        geom = self.geometry
        total = Fraction(0)
        for exps, c in self.coeffs.items():
            if geom._degree_of(exps) == geom.dim:
                entry = geom.integrals.get(exps)
                if entry is not None:
                    total += c * entry
        return total

    def scale_degrees(self, t) -> "GradedClass":
        """Multiply each degree-q component by t**q."""
        geom = self.geometry
        return GradedClass(geom, {e: c * t ** geom._degree_of(e)
                                  for e, c in self.coeffs.items()})

    def map_coefficients(self, fn) -> "GradedClass":
        return GradedClass(self.geometry, {e: fn(c) for e, c in self.coeffs.items()})

    def dual(self) -> "GradedClass":
        """Total Chern class of the dual bundle: degree-q part times (-1)^q."""
        geom = self.geometry
        return GradedClass(geom, {e: c if geom._degree_of(e) % 2 == 0 else -c
                                  for e, c in self.coeffs.items()})

    # -- comparison and display ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            try:
                other = self.geometry.scalar(other)
            except TypeError:
                return NotImplemented
        return ((self.geometry is other.geometry or self.geometry == other.geometry)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.geometry, frozenset(self.coeffs.items())))

    def _sorted_terms(self):
        geom = self.geometry
        return sorted(self.coeffs.items(),
                      key=lambda item: (geom._degree_of(item[0]), item[0]))

    def __str__(self):
        """Canonical text form: terms by (degree, lex), e.g. "1 + 3 h + 6 h^2"."""
        if not self.coeffs:
            return "0"
        parts = []
        for exps, c in self._sorted_terms():
            mono = " ".join(
                name if e == 1 else "%s^%d" % (name, e)
                for name, e in zip(self.geometry.names, exps) if e)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%s %s" % (abs(c), mono)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "GradedClass(%s)" % self


# -- geometry presets --------------------------------------------------------

def projective_space(n) -> Geometry:
    """Projective n-space: one degree-1 generator h, int h^n = 1,
    c(T) = (1+h)^(n+1) truncated."""
    geom = Geometry(n, [("h", 1)], {(n,): Fraction(1)}, kind="projective")
    geom.tangent_chern = GradedClass(
        geom, {(q,): Fraction(math.comb(n + 1, q)) for q in range(n + 1)})
    geom.preset_data = {"preset": "P%d" % n if n == 2 else "Pn", "n": n}
    return geom


def abelian_variety(n, selfint=None, names=None, pairing=None) -> Geometry:
    """Abelian n-fold: trivial tangent Chern class, ample divisor generators.

    Either a single polarization with `selfint` = int D^n, or (n = 2 only)
    several generators with a symmetric `pairing` matrix of int Di.Dj.
    """
    if selfint is not None:
        names = names or ["D"]
        if len(names) != 1:
            raise DomainError("selfint form takes a single generator")
        geom = Geometry(n, [(names[0], 1)], {(n,): _as_fraction(selfint)},
                        kind="abelian")
        geom.preset_data = {"preset": "abelian", "n": n,
                            "selfint": str(Fraction(selfint))}
        return geom
    if pairing is None:
        raise DomainError("abelian preset needs selfint or a pairing matrix")
    if n != 2:
        raise DomainError("multi-generator abelian preset is limited to n = 2")
    names = list(names or ("D%d" % (i + 1) for i in range(len(pairing))))
    r = len(names)
    if len(pairing) != r or any(len(row) != r for row in pairing):
        raise DomainError("pairing matrix shape does not match generators")
    integrals = {}
    for i in range(r):
        for j in range(i, r):
            vij = _as_fraction(pairing[i][j])
            if _as_fraction(pairing[j][i]) != vij:
                raise DomainError("pairing matrix must be symmetric")
            exps = [0] * r
            exps[i] += 1
            exps[j] += 1
            integrals[tuple(exps)] = vij
    geom = Geometry(2, [(nm, 1) for nm in names], integrals, kind="abelian")
    geom.preset_data = {"preset": "abelian", "n": 2, "generators": names,
                        "pairing": [[str(_as_fraction(v)) for v in row]
                                    for row in pairing]}
    return geom


def surface_with_invariants(c2, divisors=("D",), kk=0, kd=None, dd=None) -> Geometry:
    """Surface preset: degree-1 generators K (canonical) and the divisors,
    plus one abstract degree-2 generator e with int e = c2(X).

    `kk` = int K^2, `kd[i]` = int K.Di, `dd[i][j]` = int Di.Dj.  c2 is
    independent data, never rewritten in terms of divisor products.
    """
    divisors = list(divisors)
    r = len(divisors)
    kd = list(kd) if kd is not None else [0] * r
    dd = [list(row) for row in dd] if dd is not None else [[0] * r for _ in range(r)]
    if len(kd) != r or len(dd) != r or any(len(row) != r for row in dd):
        raise DomainError("kd/dd shapes do not match the divisor list")
    if "K" in divisors or "e" in divisors:
        raise DomainError("divisor names K and e are reserved")
    gens = [("K", 1)] + [(nm, 1) for nm in divisors] + [("e", 2)]
    ngen = len(gens)

    def exp(*pairs):
        e = [0] * ngen
        for idx, v in pairs:
            e[idx] += v
        return tuple(e)

    integrals = {exp((0, 2)): _as_fraction(kk), exp((ngen - 1, 1)): _as_fraction(c2)}
    for i in range(r):
        integrals[exp((0, 1), (1 + i, 1))] = _as_fraction(kd[i])
        for j in range(i, r):
            if _as_fraction(dd[i][j]) != _as_fraction(dd[j][i]):
                raise DomainError("dd matrix must be symmetric")
            integrals[exp((1 + i, 1), (1 + j, 1))] = _as_fraction(dd[i][j])
    geom = Geometry(2, gens, integrals, kind="surface")
    geom.tangent_chern = (geom.one() - geom.generator("K")) + geom.generator("e")
    geom.preset_data = {
        "preset": "surface", "c2": str(_as_fraction(c2)), "divisors": divisors,
        "kk": str(_as_fraction(kk)), "kd": [str(_as_fraction(v)) for v in kd],
        "dd": [[str(_as_fraction(v)) for v in row] for row in dd]}
    return geom
