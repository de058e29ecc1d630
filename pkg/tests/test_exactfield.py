from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leibniz3.errors import FieldMismatchError, FormatError, UsageError
from leibniz3.exactfield import GF, QQ, FieldSpec, char_of, field_from_json, parse_field


def test_rational_add():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_prime_mul_and_inverse():
    assert GF(5).mul(3, 4) == 2
    assert GF(7).inv(3) == 5


@pytest.mark.parametrize("field, expected", [(QQ, 0), (GF(2), 2), (GF(13), 13)])
def test_char_of(field, expected):
    assert char_of(field) == expected


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QQ.div(Fraction(1), Fraction(0))
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        GF(5).add(Fraction(1, 2), 1)
    with pytest.raises(FieldMismatchError):
        QQ.mul(3, Fraction(1))
    with pytest.raises(FieldMismatchError):
        GF(5).add(7, 1)  # not a reduced residue


@pytest.mark.parametrize("p", [1, 4, 9, 65521 * 2, 1 << 16, 65537])
def test_bad_moduli(p):
    with pytest.raises(UsageError):
        GF(p)


def test_largest_prime_below_bound():
    assert GF(65521).char == 65521


def test_text_form():
    assert QQ.parse("-6/4") == Fraction(-3, 2)
    assert QQ.format(Fraction(-3, 2)) == "-3/2"
    assert QQ.format(Fraction(4)) == "4"
    assert GF(7).parse("10") == 3
    with pytest.raises(FormatError):
        QQ.parse("1.5")
    with pytest.raises(FormatError):
        GF(7).parse("1/2")


def test_field_grammar():
    assert parse_field("Q") == QQ
    assert parse_field("Fp:11") == GF(11)
    assert field_from_json({"Fp": 3}) == GF(3)
    for bad in ["Fp:4", "F:3", "Fp:x", "R"]:
        with pytest.raises(FormatError):
            parse_field(bad)
    with pytest.raises(FormatError):
        field_from_json({"Fp": 4})


def test_coerce_fraction_into_prime_field():
    assert GF(7)(Fraction(1, 3)) == 5


rationals = st.fractions(max_denominator=50).map(lambda x: Fraction(x))
FIELDS = [QQ, GF(2), GF(5), GF(251)]


def elements(field: FieldSpec):
    if field.kind == "Q":
        return rationals
    return st.integers(0, field.p - 1)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(data=st.data())
def test_field_axioms(field, data):
    a, b, c = (data.draw(elements(field)) for _ in range(3))
    assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
    assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
    assert field.add(a, field.neg(a)) == field.zero
    if a != 0:
        assert field.mul(a, field.inv(a)) == field.one
        assert field.div(field.mul(a, b), a) == b


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(data=st.data())
def test_canonical_text_round_trip(field, data):
    a = data.draw(elements(field))
    text = field.format(a)
    assert field.format(field.parse(text)) == text
    assert field.parse(text) == a
