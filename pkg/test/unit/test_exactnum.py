# :coding: utf-8

import random

import mpmath
import pytest

import borosmoll.exactnum
from borosmoll.exactnum import QuadSurd, Rational
from borosmoll.exception import DomainError, UnsupportedComparison


def _decimal(value):
    """Return *value* evaluated with mpmath at 50 digits."""
    with mpmath.workdps(50):
        if isinstance(value, QuadSurd):
            return (
                mpmath.mpf(value.p.numerator) / value.p.denominator
                + mpmath.mpf(value.q.numerator) / value.q.denominator
                * mpmath.sqrt(value.d)
            )

        return mpmath.mpf(value.numerator) / value.denominator


@pytest.mark.parametrize("number, expected", [
    (0, (0, 1)),
    (1, (1, 1)),
    (9, (3, 1)),
    (12, (2, 3)),
    (13, (1, 13)),
    (72, (6, 2)),
    (1009 ** 2, (1009, 1)),
    (2 * 1009 ** 2, (1009, 2)),
    (3 * (1009 * 1013) ** 2, (1009 * 1013, 3)),
    (1009 * 1013, (1, 1009 * 1013)),
], ids=[
    "zero",
    "one",
    "square",
    "square-factor",
    "square-free",
    "several-factors",
    "large-prime-square",
    "large-prime-square-factor",
    "several-large-prime-square-factors",
    "large-primes-square-free",
])
def test_extract_square(number, expected):
    """Extract square factors from integer."""
    assert borosmoll.exactnum.extract_square(number) == expected


@pytest.mark.parametrize("arguments, expected", [
    ((0, 1, 9), Rational(3)),
    (
        (Rational(31, 12), Rational(1, 12), 13),
        QuadSurd(Rational(31, 12), Rational(1, 12), 13)
    ),
    ((0, 1, 12), QuadSurd(0, 2, 3)),
    ((5, 0, 7), Rational(5)),
    ((Rational(1, 2), 3, 0), Rational(1, 2)),
], ids=[
    "perfect-square",
    "irreducible",
    "square-factor",
    "zero-coefficient",
    "zero-radicand",
])
def test_surd_normalize(arguments, expected):
    """Normalize surds."""
    result = borosmoll.exactnum.surd_normalize(*arguments)
    assert result == expected
    assert type(result) is type(expected)


def test_surd_normalize_square_factor_fields():
    """Extract square factor of radicand into coefficient."""
    result = borosmoll.exactnum.surd_normalize(0, 1, 12)
    assert (result.p, result.q, result.d) == (0, 2, 3)


def test_surd_normalize_large_square_factor():
    """Extract square of large prime from radicand."""
    result = borosmoll.exactnum.surd_normalize(0, 1, 2 * 1009 ** 2)
    assert (result.p, result.q, result.d) == (0, 1009, 2)


def test_surd_hash_after_normalization():
    """Hash equal surds identically whatever the input radicand."""
    first = borosmoll.exactnum.surd_normalize(1, 1, 2 * 1009 ** 2)
    second = borosmoll.exactnum.surd_normalize(1, 1009, 2)
    assert first == second
    assert hash(first) == hash(second)
    assert len({first, second}) == 1


def test_surd_normalize_idempotent():
    """Normalize surd twice."""
    value = borosmoll.exactnum.surd_normalize(Rational(3, 4), 5, 48)
    assert borosmoll.exactnum.surd_normalize(*value) == value
    assert tuple(borosmoll.exactnum.surd_normalize(*value)) == tuple(value)


def test_surd_normalize_negative_radicand():
    """Fail to normalize surd with negative radicand."""
    with pytest.raises(DomainError):
        borosmoll.exactnum.surd_normalize(0, 1, -1)


@pytest.mark.parametrize("value, expected", [
    (QuadSurd(-2, 1, 3), -1),
    (QuadSurd(-3, 1, 13), 1),
    (QuadSurd(-3, 1, 9), 0),
    (QuadSurd(3, -1, 9), 0),
    (QuadSurd(2, 1, 3), 1),
    (QuadSurd(-2, -1, 3), -1),
    (QuadSurd(0, -1, 5), -1),
    (Rational(-1, 3), -1),
    (0, 0),
], ids=[
    "negative-rational-part-dominates",
    "radical-dominates",
    "exact-zero",
    "exact-zero-negative-radical",
    "both-positive",
    "both-negative",
    "pure-radical",
    "rational",
    "integer-zero",
])
def test_surd_sign(value, expected):
    """Compute exact sign of surd."""
    assert borosmoll.exactnum.surd_sign(value) == expected


def test_surd_sign_agrees_with_decimal_oracle():
    """Compare exact sign with 50-digit decimal evaluation."""
    generator = random.Random(42)

    for _ in range(500):
        p = Rational(
            generator.randint(-10 ** 6, 10 ** 6), generator.randint(1, 1000)
        )
        q = Rational(
            generator.randint(-10 ** 3, 10 ** 3), generator.randint(1, 1000)
        )
        d = generator.randint(0, 10 ** 6)

        value = QuadSurd(p, q, d)
        decimal = _decimal(value)
        if abs(decimal) <= mpmath.mpf(10) ** -30:
            continue

        expected = 1 if decimal > 0 else -1
        assert borosmoll.exactnum.surd_sign(value) == expected


def test_surd_sign_near_zero():
    """Compute exact sign of surds with tiny magnitude."""
    # 99² · 2 = 19602 = 140² + 2
    value = QuadSurd(-140, 99, 2)
    assert borosmoll.exactnum.surd_sign(value) == 1
    assert borosmoll.exactnum.surd_sign(-value) == -1


@pytest.mark.parametrize("first, second, expected", [
    (
        Rational(43, 15),
        QuadSurd(Rational(31, 12), Rational(1, 12), 13),
        -1
    ),
    (Rational(17, 6), Rational(43, 15), -1),
    (QuadSurd(1, 1, 2), QuadSurd(1, 1, 2), 0),
    (QuadSurd(1, 1, 2), QuadSurd(1, 1, 8), -1),
    (QuadSurd(0, 1, 2 * 1009 ** 2), QuadSurd(0, 1009, 2), 0),
    (QuadSurd(3, 0, 0), 3, 0),
], ids=[
    "rational-against-surd",
    "rationals",
    "reflexive",
    "same-radicand-after-normalization",
    "radicands-with-square-quotient",
    "folded-surd",
])
def test_cmp(first, second, expected):
    """Compare exact values."""
    assert borosmoll.exactnum.cmp(first, second) == expected
    assert borosmoll.exactnum.cmp(second, first) == -expected


def test_cmp_unsupported():
    """Fail to compare surds with unrelated radicands."""
    with pytest.raises(UnsupportedComparison) as error:
        borosmoll.exactnum.cmp(QuadSurd(0, 1, 2), QuadSurd(0, 1, 3))

    assert error.value.radicands == (2, 3)


def test_cmp_total_order():
    """Check antisymmetry and transitivity on random values."""
    generator = random.Random(7)
    values = [
        borosmoll.exactnum.surd_normalize(
            Rational(generator.randint(-50, 50), generator.randint(1, 9)),
            Rational(generator.randint(-50, 50), generator.randint(1, 9)),
            13
        )
        for _ in range(40)
    ]

    for first in values:
        for second in values:
            order = borosmoll.exactnum.cmp(first, second)
            assert order == -borosmoll.exactnum.cmp(second, first)
            assert order == borosmoll.exactnum.surd_sign(first - second)

    ordered = sorted(values)
    for first, second in zip(ordered, ordered[1:]):
        assert borosmoll.exactnum.cmp(first, second) <= 0


def test_comparison_operators():
    """Compare surds with operators."""
    value = QuadSurd(Rational(31, 12), Rational(1, 12), 13)

    assert Rational(43, 15) < value
    assert value > Rational(43, 15)
    assert value >= value
    assert value <= value
    assert value != Rational(43, 15)
    assert value == QuadSurd(Rational(31, 12), Rational(1, 12), 13)
    assert value != QuadSurd(0, 1, 2)


def test_arithmetic():
    """Compute with surds sharing one radicand."""
    first = QuadSurd(1, 2, 3)
    second = QuadSurd(Rational(1, 2), -1, 3)

    assert first + second == QuadSurd(Rational(3, 2), 1, 3)
    assert first - second == QuadSurd(Rational(1, 2), 3, 3)
    assert first * second == Rational(-11, 2)
    assert (first / second) * second == first
    assert 1 / first == QuadSurd(Rational(-1, 11), Rational(2, 11), 3)
    assert 2 - first == QuadSurd(1, -2, 3)
    assert first ** 2 == first * first
    assert first * first.conjugate() == first.norm()
    assert -first == QuadSurd(-1, -2, 3)
    assert abs(QuadSurd(-3, 1, 2)) == QuadSurd(3, -1, 2)


def test_arithmetic_folds_to_rational():
    """Fold product of conjugates to a rational."""
    value = QuadSurd(0, 1, 2)
    result = value * value
    assert result == 2
    assert isinstance(result, Rational)


def test_division_by_zero():
    """Fail to divide by zero surd."""
    with pytest.raises(ZeroDivisionError):
        QuadSurd(1, 1, 2) / QuadSurd(0)


def test_rational_arithmetic():
    """Keep rationals canonical."""
    a = Rational(6, 4)
    b = Rational(-10, 15)

    assert (a.numerator, a.denominator) == (3, 2)
    assert (a / b) * b == a
    assert (b.numerator, b.denominator) == (-2, 3)


@pytest.mark.parametrize("value, expected", [
    (QuadSurd(0, 1, 2), 1),
    (QuadSurd(0, -1, 2), -2),
    (QuadSurd(Rational(1, 2), 1, 2), 1),
    (QuadSurd(-140, 99, 2), 0),
    (Rational(-7, 2), -4),
], ids=[
    "positive-radical",
    "negative-radical",
    "mixed",
    "tiny-positive",
    "rational",
])
def test_surd_floor(value, expected):
    """Compute floor of exact value."""
    assert borosmoll.exactnum.surd_floor(value) == expected


@pytest.mark.parametrize("value, digits, expected", [
    (Rational(25, 7), 6, "3.571429"),
    (Rational(1, 8), 2, "0.12"),
    (Rational(3, 8), 2, "0.38"),
    (Rational(-1, 3), 6, "-0.333333"),
    (Rational(-1, 10 ** 9), 6, "0.000000"),
    (Rational(4), 6, "4.000000"),
    (QuadSurd(Rational(31, 12), Rational(1, 12), 13), 6, "2.883796"),
    (QuadSurd(0, -1, 2), 3, "-1.414"),
], ids=[
    "rational",
    "half-even-down",
    "half-even-up",
    "negative",
    "negative-rounded-to-zero",
    "integer",
    "surd",
    "negative-surd",
])
def test_render(value, digits, expected):
    """Render exact values as decimal strings."""
    assert borosmoll.exactnum.render(value, digits) == expected


def test_render_agrees_with_decimal_oracle():
    """Compare renderings with 50-digit decimal evaluation."""
    generator = random.Random(3)

    for _ in range(100):
        value = borosmoll.exactnum.surd_normalize(
            Rational(generator.randint(-999, 999), generator.randint(1, 99)),
            Rational(generator.randint(-99, 99), generator.randint(1, 99)),
            generator.randint(2, 10 ** 4)
        )
        rendered = borosmoll.exactnum.render(value, 6)
        assert abs(float(rendered) - float(_decimal(value))) <= 6e-7


def test_render_invalid_digits():
    """Fail to render value without decimal."""
    with pytest.raises(ValueError):
        borosmoll.exactnum.render(Rational(1, 3), 0)


def test_float():
    """Convert surd to float."""
    assert float(QuadSurd(1, 1, 4)) == 3.0
    assert float(QuadSurd(0, 1, 2)) == pytest.approx(1.4142135623730951)
