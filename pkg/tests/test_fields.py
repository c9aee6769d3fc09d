"""Scalar fields: parsing, arithmetic, and the tag registry."""
from fractions import Fraction

import pytest

from lbxmod import GF2, GF3, QQ, InputDataError
from lbxmod.fields import FpElement, PrimeField, get_field


def test_rational_parse_and_serialize_round_trip():
    assert QQ.parse_scalar("3/4") == Fraction(3, 4)
    assert QQ.parse_scalar("-7") == Fraction(-7)
    assert QQ.parse_scalar(5) == Fraction(5)
    assert QQ.scalar_to_json(Fraction(-1, 2)) == "-1/2"
    assert QQ.parse_scalar(QQ.scalar_to_json(Fraction(22, 7))) == Fraction(22, 7)


@pytest.mark.parametrize("bad", [True, False, "1/0", "abc", 0.5, None, [1]])
def test_rational_rejects_non_scalars(bad):
    with pytest.raises(InputDataError):
        QQ.parse_scalar(bad)


def test_prime_field_arithmetic_matches_int_arithmetic():
    p = 5
    f = PrimeField(p)
    for a in range(p):
        for b in range(p):
            x, y = FpElement(a, p), FpElement(b, p)
            assert (x + y).value == (a + b) % p
            assert (x - y).value == (a - b) % p
            assert (x * y).value == (a * b) % p
            assert (-x).value == (-a) % p
            if b:
                assert ((x / y) * y) == x
    assert f.zero + f.one == f.one


def test_prime_field_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GF3.one / GF3.zero


def test_fp_elements_refuse_to_mix():
    with pytest.raises(TypeError):
        FpElement(1, 2) + FpElement(1, 3)
    with pytest.raises(TypeError):
        FpElement(1, 2) + 1  # type: ignore[operator]


def test_coerce_rationals_into_prime_fields():
    assert GF3.coerce(Fraction(1, 2)) == FpElement(2, 3)  # 1/2 = 2 mod 3
    assert GF2.coerce(7) == GF2.one
    with pytest.raises(InputDataError):
        GF3.coerce(Fraction(1, 3))
    with pytest.raises(TypeError):
        GF2.coerce("1")


def test_get_field_registry():
    assert get_field("q") is QQ
    assert get_field("F3") is GF3
    assert get_field("f7") == PrimeField(7)
    with pytest.raises(InputDataError):
        get_field("f4")  # not prime
    with pytest.raises(InputDataError):
        get_field("r")


def test_field_objects_hash_by_value():
    assert PrimeField(5) == PrimeField(5)
    assert hash(PrimeField(5)) == hash(PrimeField(5))
    assert get_field("q") == QQ and hash(get_field("q")) == hash(QQ)


def test_fp_truthiness():
    assert not FpElement(0, 3)
    assert FpElement(2, 3)
