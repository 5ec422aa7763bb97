from fractions import Fraction

import pytest

from core.errors import DocumentError, DuplicateGenerator, EmptyName, NotInRing, NotPrime
from core.ring import Integers, PLocalIntegers, Rationals, make_ring
from core.scalars import format_rational, is_p_power, parse_rational, require_prime, to_rational


def test_parse_and_format_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("7") == Fraction(7)
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    assert to_rational("5/10") == Fraction(1, 2)


@pytest.mark.parametrize("text", ["1/0", "abc", "1.5", ""])
def test_parse_rational_rejects_malformed(text):
    with pytest.raises(DocumentError):
        parse_rational(text)


def test_require_prime():
    assert require_prime(5) == 5
    for bad in (0, 1, 4, 9, -3):
        with pytest.raises(NotPrime):
            require_prime(bad)


def test_is_p_power():
    assert is_p_power(1, 2)
    assert is_p_power(8, 2)
    assert is_p_power(9, 3)
    assert not is_p_power(6, 2)
    assert not is_p_power(0, 3)


def test_make_ring_with_weighted_generators():
    ring = make_ring(PLocalIntegers(2), [("m1", 1), ("m3", 3)])
    assert ring.rank == 2
    assert ring.names == ("m1", "m3")
    assert ring.weight_of((2, 1)) == 5
    assert str(ring) == "Z_(2)[m1, m3]"


def test_make_ring_rejects_duplicates_and_empty_names():
    with pytest.raises(DuplicateGenerator):
        make_ring(Rationals, [("a", 1), ("a", 2)])
    with pytest.raises(EmptyName):
        make_ring(Rationals, [("", 1)])


def test_p_local_base_needs_a_prime():
    with pytest.raises(NotPrime):
        PLocalIntegers(4)


def test_base_ring_membership_and_units():
    z2 = PLocalIntegers(2)
    assert z2.contains(Fraction(1, 3))
    assert not z2.contains(Fraction(1, 2))
    assert z2.is_unit(Fraction(3))
    assert not z2.is_unit(Fraction(2))
    assert Integers.is_unit(Fraction(-1))
    assert not Integers.is_unit(Fraction(2))
    assert Rationals.is_unit(Fraction(2, 7))


def test_check_scalar_raises_outside_base():
    ring = make_ring(Integers)
    with pytest.raises(NotInRing):
        ring.check_scalar(Fraction(1, 2))
