"""Wire-format round trips for tuples and morphisms."""

from fractions import Fraction

import pytest

from factorcat import (
    FactorTuple,
    INTERVAL,
    InvalidMorphismError,
    ZX,
    decode_morphism,
    decode_tuple,
    encode_morphism,
    encode_tuple,
    free_monoid,
    validate_morphism,
)

FREE = free_monoid("ab")


def test_tuple_round_trip_integers():
    t = FactorTuple(ZX, (6, -35))
    assert encode_tuple(t) == [6, -35]
    assert decode_tuple(ZX, [6, -35]) == t


def test_empty_tuple_is_empty_array():
    t = decode_tuple(ZX, [])
    assert len(t) == 0
    assert encode_tuple(t) == []


def test_tuple_round_trip_rationals():
    t = FactorTuple(INTERVAL, (Fraction(1, 2), Fraction(1)))
    assert encode_tuple(t) == ["1/2", "1/1"]
    assert decode_tuple(INTERVAL, ["1/2", "1/1"]) == t


def test_tuple_round_trip_free():
    t = FactorTuple(FREE, (("a", "a", "b"), ()))
    assert encode_tuple(t) == ["a^2*b", "1"]
    assert decode_tuple(FREE, ["a^2*b", "1"]) == t


def test_morphism_round_trip():
    m = validate_morphism(FactorTuple(ZX, (6, 35)), FactorTuple(ZX, (2, 3, 5, 7)), [1, 1, 2, 2])
    obj = encode_morphism(m)
    assert obj == {
        "monoid": "zx",
        "domain": [6, 35],
        "codomain": [2, 3, 5, 7],
        "map": [1, 1, 2, 2],
    }
    assert decode_morphism(obj) == m


def test_morphism_key_order_is_stable():
    m = validate_morphism(FactorTuple(ZX, (2,)), FactorTuple(ZX, (6,)), [1])
    assert list(encode_morphism(m)) == ["monoid", "domain", "codomain", "map"]


def test_decode_rejects_missing_keys():
    with pytest.raises(ValueError):
        decode_morphism({"monoid": "zx", "domain": [2], "map": [1]})


def test_decode_rejects_monoid_mismatch():
    obj = {"monoid": "zx", "domain": [2], "codomain": [6], "map": [1]}
    from factorcat import NAT

    with pytest.raises(ValueError):
        decode_morphism(obj, NAT)


def test_decode_rejects_bad_map():
    obj = {"monoid": "zx", "domain": [2], "codomain": [6], "map": ["1"]}
    with pytest.raises(ValueError):
        decode_morphism(obj)


def test_decode_validates_order_constraint():
    obj = {"monoid": "zx", "domain": [6, 2, 1], "codomain": [6], "map": [1]}
    with pytest.raises(InvalidMorphismError):
        decode_morphism(obj)


def test_decode_free_morphism():
    obj = {
        "monoid": "free:a,b",
        "domain": ["a"],
        "codomain": ["a", "b"],
        "map": [1, 1],
    }
    m = decode_morphism(obj)
    assert m.monoid == FREE
    assert encode_morphism(m) == obj
