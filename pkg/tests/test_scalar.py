from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fqg.scalar import (CFloat, QQi, backend_name, parse_scalar, format_scalar,
                        scalar, set_backend, tolerance, use_backend)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
qqis = st.builds(QQi, fractions, fractions)


def test_exact_field_values():
    a = QQi(Fraction(3, 4), Fraction(1, 2))
    assert (a * a.inv() - QQi(1)).is_zero()
    assert a.conj() == QQi(Fraction(3, 4), Fraction(-1, 2))
    assert (QQi(1, 2) * QQi(1, -2)) == QQi(5)


def test_exact_equality_is_decidable():
    assert QQi(Fraction(1, 3)) == QQi(Fraction(2, 6))
    assert QQi(Fraction(1, 3)) != QQi(Fraction(1, 3), Fraction(1, 10 ** 12))


@given(qqis, qqis, qqis)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b).conj() == a.conj() * b.conj()


@given(qqis)
def test_inverse_roundtrip(a):
    if not a.is_zero():
        assert ((a * a.inv()) - QQi(1)).is_zero()


def test_float_backend_tolerance():
    set_backend("float", 1e-9)
    try:
        assert CFloat(1e-10, 0.0).is_zero()
        assert CFloat(1.0, 0.0) == CFloat(1.0 + 1e-10, -1e-11)
        assert CFloat(1.0, 0.0) != CFloat(1.0 + 1e-6, 0.0)
    finally:
        set_backend("exact")


def test_backend_switch_and_factory():
    assert isinstance(scalar(1, 2), QQi)
    with use_backend("float", 1e-6):
        assert backend_name() == "float"
        assert tolerance() == 1e-6
        assert isinstance(scalar(1, 2), CFloat)
    assert backend_name() == "exact"


@pytest.mark.parametrize("re,im", [("3/4", "0"), ("-1/2", "7"), ("0.25", "1e-3")])
def test_parse_format_roundtrip_exact(re, im):
    s = parse_scalar(re, im)
    again = parse_scalar(*format_scalar(s))
    assert s == again


def test_parse_float_backend():
    with use_backend("float"):
        s = parse_scalar("3/4", "0.5")
        assert abs(s.re - 0.75) < 1e-12 and abs(s.im - 0.5) < 1e-12
