"""JSON wire formats for elements, tuples, and morphisms.

Tuples are JSON arrays of element encodings (integers as numbers, rationals
as "p/q" strings in lowest terms, free-monoid elements as sorted "a^2*b"
strings) and the empty tuple is [].  A morphism is an object with keys
monoid, domain, codomain, and a 1-based map.
"""

from __future__ import annotations

from .category import FactorTuple, Morphism, validate_morphism
from .monoids import Monoid, monoid_by_name


def encode_tuple(t: FactorTuple) -> list:
    return [t.monoid.encode(e) for e in t.entries]


def decode_tuple(monoid: Monoid, values) -> FactorTuple:
    if not isinstance(values, list):
        raise ValueError(f"expected a JSON array of elements, got {values!r}")
    return FactorTuple(monoid, tuple(monoid.decode(v) for v in values))


def encode_morphism(m: Morphism) -> dict:
    return {
        "monoid": m.monoid.name,
        "domain": encode_tuple(m.domain),
        "codomain": encode_tuple(m.codomain),
        "map": list(m.values),
    }


def decode_morphism(obj, monoid: Monoid | None = None) -> Morphism:
    """Parse and validate a morphism object; raises ValueError on malformed
    input and InvalidMorphismError when the map breaks the order constraint."""
    if not isinstance(obj, dict):
        raise ValueError(f"expected a morphism object, got {obj!r}")
    for key in ("monoid", "domain", "codomain", "map"):
        if key not in obj:
            raise ValueError(f"morphism object is missing the {key!r} key")
    named = monoid_by_name(obj["monoid"])
    if monoid is not None and named != monoid:
        raise ValueError(
            f"morphism is over {named.name!r} but {monoid.name!r} was requested"
        )
    domain = decode_tuple(named, obj["domain"])
    codomain = decode_tuple(named, obj["codomain"])
    values = obj["map"]
    if not isinstance(values, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in values
    ):
        raise ValueError("morphism map must be a JSON array of 1-based integers")
    return validate_morphism(domain, codomain, values)
