"""JSON pair descriptions.

Grammar (rationals are "p/q" strings or JSON integers; multiplicities are
"inf", "m" or "p/q" and must be >= 1):

    {"geometry": {"preset": "P2"},
     "components": [{"degree": 12, "mult": "107"}]}

    {"geometry": {"preset": "Pn", "n": 3},
     "components": [{"degree": 2, "mult": "inf"}]}

    {"geometry": {"preset": "abelian", "n": 2, "selfint": 6},
     "components": [{"mult": "2"}]}                    # class defaults to D

    {"geometry": {"preset": "abelian", "n": 2,
                  "generators": ["D1", "D2"], "pairing": [[1, 2], [2, 1]]},
     "components": [{"class": "D1", "mult": "2"},
                    {"class": {"D1": 1, "D2": "1/2"}, "mult": "inf"}]}

    {"geometry": {"preset": "surface", "c2": 24, "divisors": ["D"],
                  "kk": 0, "kd": [0], "dd": [[6]]},
     "components": [{"class": "D", "mult": "5"}]}

On projective presets a component is named by its degree d (the class d*h);
elsewhere by a generator name or a {name: coefficient} combination.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import PairFormatError
from .orbifold import OrbifoldPair
from .ring import (Geometry, Multiplicity, abelian_variety, projective_space,
                   surface_with_invariants)


def _rational(value, where):
    try:
        if isinstance(value, float):
            raise ValueError("floats are not exact")
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise PairFormatError("%s: bad rational %r (%s)" % (where, value, exc))


def _multiplicity(value, where):
    try:
        return Multiplicity.parse(value)
    except Exception as exc:
        raise PairFormatError("%s: bad multiplicity %r (%s)" % (where, value, exc))


def parse_geometry(data) -> Geometry:
    if not isinstance(data, dict) or "preset" not in data:
        raise PairFormatError("geometry: expected an object with a preset")
    preset = data["preset"]
    if preset == "P2":
        return projective_space(2)
    if preset == "Pn":
        n = data.get("n")
        if not isinstance(n, int) or n < 1:
            raise PairFormatError("geometry.n: need a positive integer")
        return projective_space(n)
    if preset == "abelian":
        n = data.get("n")
        if not isinstance(n, int) or n < 1:
            raise PairFormatError("geometry.n: need a positive integer")
        if "selfint" in data:
            return abelian_variety(n, selfint=_rational(data["selfint"],
                                                        "geometry.selfint"))
        if "pairing" in data:
            pairing = [[_rational(v, "geometry.pairing") for v in row]
                       for row in data["pairing"]]
            return abelian_variety(n, names=data.get("generators"),
                                   pairing=pairing)
        raise PairFormatError("geometry: abelian preset needs selfint or pairing")
    if preset == "surface":
        if "divisors" not in data:
            raise PairFormatError("geometry.divisors: required for surfaces")
        divisors = list(data["divisors"])
        kd = [_rational(v, "geometry.kd") for v in data.get("kd", [0] * len(divisors))]
        dd = [[_rational(v, "geometry.dd") for v in row]
              for row in data.get("dd", [[0] * len(divisors)] * len(divisors))]
        return surface_with_invariants(
            c2=_rational(data.get("c2", 0), "geometry.c2"),
            divisors=divisors, kk=_rational(data.get("kk", 0), "geometry.kk"),
            kd=kd, dd=dd)
    raise PairFormatError("geometry.preset: unknown preset %r" % (preset,))


def _component_class(geom, entry, where):
    if geom.kind == "projective":
        if "degree" not in entry:
            raise PairFormatError("%s.degree: required on projective presets" % where)
        d = entry["degree"]
        if not isinstance(d, int) or d < 1:
            raise PairFormatError("%s.degree: need a positive integer" % where)
        return geom.generator("h") * d
    cls_spec = entry.get("class")
    if cls_spec is None:
        if geom.kind == "abelian" and len(geom.names) == 1:
            return geom.generator(geom.names[0])
        raise PairFormatError("%s.class: required" % where)
    if isinstance(cls_spec, str):
        if cls_spec not in geom.names:
            raise PairFormatError("%s.class: unknown generator %r" % (where, cls_spec))
        return geom.generator(cls_spec)
    if isinstance(cls_spec, dict):
        out = geom.zero()
        for name, coeff in cls_spec.items():
            if name not in geom.names:
                raise PairFormatError("%s.class: unknown generator %r" % (where, name))
            out = out + geom.generator(name) * _rational(coeff, where + ".class")
        return out
    raise PairFormatError("%s.class: expected a name or a combination" % where)


def parse_pair(text) -> OrbifoldPair:
    """Parse a pair description from JSON text (or an already-decoded dict)."""
    if isinstance(text, (str, bytes)):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PairFormatError("malformed JSON: %s" % exc)
    else:
        data = text
    if not isinstance(data, dict):
        raise PairFormatError("expected a top-level object")
    geom = parse_geometry(data.get("geometry"))
    components = []
    comp_list = data.get("components", [])
    if not isinstance(comp_list, list):
        raise PairFormatError("components: expected a list")
    for i, entry in enumerate(comp_list):
        where = "components[%d]" % i
        if not isinstance(entry, dict):
            raise PairFormatError("%s: expected an object" % where)
        if "mult" not in entry:
            raise PairFormatError("%s.mult: required" % where)
        mult = _multiplicity(entry["mult"], where + ".mult")
        components.append((_component_class(geom, entry, where), mult))
    return OrbifoldPair(geom, components)


def load_pair(path) -> OrbifoldPair:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_pair(fh.read())


def serialize_pair(pair: OrbifoldPair) -> str:
    """Canonical JSON for a pair over a preset geometry (round-trips through
    parse_pair)."""
    geom = pair.geometry
    if geom.preset_data is None:
        raise PairFormatError("only preset geometries serialize")
    components = []
    for comp in pair.components:
        mult = str(comp.multiplicity)
        if geom.kind == "projective":
            components.append({"degree": int(comp.divisor.coefficient((1,))),
                               "mult": mult})
            continue
        cls = {}
        for i, name in enumerate(geom.names):
            exps = tuple(1 if j == i else 0 for j in range(len(geom.names)))
            c = comp.divisor.coefficient(exps)
            if c:
                cls[name] = str(c)
        components.append({"class": cls, "mult": mult})
    return json.dumps({"geometry": geom.preset_data, "components": components},
                      sort_keys=True)
