from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from closurelab import GF, QQ, UsageError, field_from_name
from closurelab.coeffs import DEFAULT_PRIME


def test_rational_sum():
    assert QQ(Fraction(1, 2)) + QQ(Fraction(1, 3)) == QQ(Fraction(5, 6))


def test_prime_field_product():
    F7 = GF(7)
    assert F7(3) * F7(5) == F7(1)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QQ(0).inverse()
    with pytest.raises(ZeroDivisionError):
        GF(7)(0).inverse()


def test_mixed_fields_rejected():
    with pytest.raises(UsageError):
        GF(7)(1) + GF(11)(1)


def test_composite_modulus_rejected():
    with pytest.raises(UsageError):
        GF(15)


def test_rational_to_prime_field():
    F = GF(7)
    assert F(Fraction(1, 2)) == F(4)
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))


def test_field_names():
    assert field_from_name("q") is QQ
    assert field_from_name("fp").p == DEFAULT_PRIME
    assert field_from_name("GF(101)").p == 101
    with pytest.raises(UsageError):
        field_from_name("reals")


nonzero = st.integers(-50, 50).filter(bool)


@given(st.integers(-50, 50), nonzero, st.integers(-50, 50), nonzero)
def test_rational_field_axioms(a, b, c, d):
    x, y = QQ(Fraction(a, b)), QQ(Fraction(c, d))
    assert x + y == y + x
    assert x * y == y * x
    assert (x - y) + y == x
    if not y.is_zero():
        assert (x / y) * y == x


@given(st.integers(0, 10 ** 6), st.integers(1, 10 ** 6))
def test_prime_field_inverse(a, b):
    F = GF(65537)
    y = F(b)
    if y.is_zero():
        return
    assert y * y.inverse() == F(1)
    assert (F(a) / y) * y == F(a)
