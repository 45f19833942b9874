# :coding: utf-8

import collections

from borosmoll.exactnum import Rational, surd_normalize
from borosmoll.exception import UsageError


#: Reference values for one cell (m, i).
BoundSet = collections.namedtuple(
    "BoundSet", ["m", "i", "T", "Q", "F", "u", "ulc_upper", "rulc_lower"]
)

#: Quantities used to compare T(m,i) and F(m,i) with a single radicand.
#:
#: With A = sqrt(a2) and B = sqrt(b2), ``x = (i - 4i³) + i·AB`` and
#: ``y = alpha·A - beta·B``. Only ``y²`` is representable with the radicand
#: ``a2·b2``, so *y_square* is stored instead of *y*. ``g·AB - h`` must equal
#: ``x² - y²``.
LemmaTerms = collections.namedtuple(
    "LemmaTerms", [
        "a2", "b2", "ab", "x", "alpha", "beta", "y_square", "g", "h"
    ]
)


def _ensure_range(m, i, lower, upper):
    """Raise :exc:`~borosmoll.exception.UsageError` if *i* not in range."""
    if not lower <= i <= upper:
        raise UsageError(
            "Index {} is outside of range {}..{} for m={}.".format(
                i, lower, upper, m
            )
        )


def bound_T(m, i):
    """Return upper bound ``T(m, i)`` of ``d_i(m+1) / d_i(m)``.

    .. math::

        T(m,i) = \\frac{4m^2+7m+3-2i^2+i\\sqrt{4m+4i^2+1}}{2(m-i+1)(m+1)}

    The value is rational when ``i = 0`` or ``i = m``, and more generally
    whenever ``4m+4i²+1`` is a perfect square.

    :param m: integer greater or equal to 1.

    :param i: index in ``0..m``.

    """
    if m < 1:
        raise UsageError("T(m, i) requires m >= 1, got {}.".format(m))

    _ensure_range(m, i, 0, m)

    denominator = 2 * (m - i + 1) * (m + 1)
    return surd_normalize(
        Rational(4 * m * m + 7 * m + 3 - 2 * i * i, denominator),
        Rational(i, denominator),
        4 * m + 4 * i * i + 1
    )


def bound_Q(m, i):
    """Return lower bound ``Q(m, i)`` of ``d_i(m+1) / d_i(m)``.

    .. math::

        Q(m,i) = \\frac{4m^2+7m+i+3}{2(m+1-i)(m+1)}

    :param m: non-negative integer.

    :param i: index in ``0..m``.

    """
    _ensure_range(m, i, 0, m)

    return Rational(
        4 * m * m + 7 * m + i + 3, 2 * (m + 1 - i) * (m + 1)
    )


def rationalization_identity(m, i):
    """Return both sides of the identity rationalizing ``F(m, i)``.

    .. math::

        (4m^2+9m+5-2i^2)^2 - i^2(4m+4i^2+5) = (4m+5)^2(m+i+1)(m-i+1)

    :return: tuple of integers (*left*, *right*).

    """
    base = 4 * m * m + 9 * m + 5 - 2 * i * i
    left = base * base - i * i * (4 * m + 4 * i * i + 5)
    right = (4 * m + 5) ** 2 * (m + i + 1) * (m - i + 1)
    return left, right


def bound_F(m, i):
    """Return auxiliary bound ``F(m, i)`` with a rationalized denominator.

    .. math::

        F(m,i) = \\frac{(m+i+1)(4m+3)(4m+5)}
        {2(m+1)(4m^2-2i^2+9m+5-i\\sqrt{4m+4i^2+5})}
        = \\frac{(4m+3)(4m^2+9m+5-2i^2+i\\sqrt{4m+4i^2+5})}
        {2(m+1)(4m+5)(m-i+1)}

    Both expressions are computed and compared on construction.

    :param m: integer greater or equal to 2.

    :param i: index in ``1..m-1``.

    :raise ArithmeticError: if both expressions disagree.

    """
    _ensure_range(m, i, 1, m - 1)

    left, right = rationalization_identity(m, i)
    if left != right:
        raise ArithmeticError(
            "Rationalization identity fails for m={}, i={}: {} != {}".format(
                m, i, left, right
            )
        )

    base = 4 * m * m + 9 * m + 5 - 2 * i * i
    radicand = 4 * m + 4 * i * i + 5

    direct = Rational(
        (m + i + 1) * (4 * m + 3) * (4 * m + 5), 2 * (m + 1)
    ) / surd_normalize(base, -i, radicand)

    denominator = 2 * (m + 1) * (4 * m + 5) * (m - i + 1)
    value = surd_normalize(
        Rational((4 * m + 3) * base, denominator),
        Rational((4 * m + 3) * i, denominator),
        radicand
    )

    if direct != value:
        raise ArithmeticError(
            "Rationalized F({}, {}) differs from its definition.".format(m, i)
        )

    return value


def bound_R(m, i):
    """Return ``R(m, i)`` in its defining form and in its closed form.

    .. math::

        R(m,i) = \\frac{-4i^2+8m^2+24m+19}{2(m-i+2)(m+2)} - T(m+1,i)
        = \\frac{4m^2+9m+5-2i^2-i\\sqrt{4m+4i^2+5}}{2(m-i+2)(m+2)}

    :param m: integer greater or equal to 2.

    :param i: index in ``1..m-1``.

    :return: tuple (*defining*, *closed*).

    """
    _ensure_range(m, i, 1, m - 1)

    denominator = 2 * (m - i + 2) * (m + 2)
    defining = Rational(
        -4 * i * i + 8 * m * m + 24 * m + 19, denominator
    ) - bound_T(m + 1, i)

    closed = surd_normalize(
        Rational(4 * m * m + 9 * m + 5 - 2 * i * i, denominator),
        Rational(-i, denominator),
        4 * m + 4 * i * i + 5
    )

    return defining, closed


def reference_ratios(m, i):
    """Return :class:`BoundSet` for cell (*m*, *i*).

    *ulc_upper* is ``(m-i+1)(i+1) / ((m-i)i)``, *rulc_lower* is
    ``ulc_upper · (m+i) / (m+i+1)`` and *u* is ``(1+1/i)(1+1/(m-i))``.

    :param m: integer greater or equal to 2.

    :param i: index in ``1..m-1``.

    """
    _ensure_range(m, i, 1, m - 1)

    ulc_upper = Rational((m - i + 1) * (i + 1), (m - i) * i)
    rulc_lower = ulc_upper * Rational(m + i, m + i + 1)
    u = (1 + Rational(1, i)) * (1 + Rational(1, m - i))

    return BoundSet(
        m, i,
        T=bound_T(m, i),
        Q=bound_Q(m, i),
        F=bound_F(m, i),
        u=u,
        ulc_upper=ulc_upper,
        rulc_lower=rulc_lower
    )


def upper_quadratic(m, i):
    """Return coefficients (a, b, c) of the quadratic in the successive ratio
    equivalent to ``c_i(m) < (m-i+1)(i+1) / ((m-i)i)``.

    The inequality holds if and only if the quadratic is negative at
    ``d_i(m+1) / d_i(m)``.

    """
    _ensure_range(m, i, 1, m - 1)

    a = 4 * (m - i + 1) ** 2 * (m + 1) ** 2
    b = -4 * (m - i + 1) * (m + 1) * (4 * m * m - 2 * i * i + 7 * m + 3)
    c = -(
        32 * m * i * i - 56 * m ** 3 - 73 * m * m - 42 * m + 13 * i * i - 9
        - 16 * m ** 4 + 16 * i * i * m * m
    )
    return a, b, c


def lower_quadratic(m, i):
    """Return coefficients (a, b, c) of the quadratic in the successive ratio
    equivalent to ``c_i(m) > (m-i+1)(i+1)(m+i) / ((m-i)i(m+i+1))``.

    The inequality holds if and only if the quadratic is positive at
    ``d_i(m+1) / d_i(m)``. The constant term is
    ``(m+i+1)((m-i+1)(4m+3)² - 4i²)``, the product of the numerators of the
    two roots.

    """
    _ensure_range(m, i, 1, m - 1)

    a = 4 * (m + 1) ** 2 * (m - i + 1) ** 2
    b = -4 * (m - i + 1) * (m + 1) * (4 * m * m + 7 * m - 2 * i * i + 3)
    c = (m + i + 1) * ((m - i + 1) * (4 * m + 3) ** 2 - 4 * i * i)
    return a, b, c


def discriminant(coefficients):
    """Return discriminant ``b² - 4ac`` of quadratic *coefficients*."""
    a, b, c = coefficients
    return b * b - 4 * a * c


def quadratic_roots(coefficients):
    """Return exact roots (x1, x2) of quadratic *coefficients*.

    :param coefficients: tuple (a, b, c) with ``a > 0`` and a non-negative
        discriminant.

    :raise borosmoll.exception.DomainError: if the discriminant is negative.

    :return: tuple (*x1*, *x2*) with ``x1 <= x2``.

    """
    a, b, c = coefficients
    if a <= 0:
        raise UsageError("Leading coefficient must be positive.")

    delta = discriminant(coefficients)
    center = Rational(-b, 2 * a)
    spread = Rational(1, 2 * a)

    return (
        surd_normalize(center, -spread, delta),
        surd_normalize(center, spread, delta)
    )


def evaluate_quadratic(coefficients, value):
    """Return ``a·value² + b·value + c``."""
    a, b, c = coefficients
    return (a * value + b) * value + c


def g_coefficient(m, i):
    """Return polynomial factor g(m, i) such that ``G(m, i) = g(m, i)·AB``."""
    return (
        32 * m ** 4 - 32 * m * m * i * i + 128 * m ** 3 - 64 * m * i * i
        + 190 * m * m - 30 * i * i + 124 * m + 30
    )


def h_polynomial(m, i):
    """Return polynomial ``H(m, i)``."""
    return (
        128 * m ** 5 + 608 * m ** 4 + 1128 * m ** 3 + 1014 * m * m + 436 * m
        + 128 * m ** 4 * i * i + 384 * m ** 3 * i * i + 408 * m * m * i * i
        - 128 * m * m * i ** 4 + 200 * m * i * i - 256 * m * i ** 4
        - 120 * i ** 4 + 50 * i * i + 70
    )


def gh_factorization(m, i):
    """Return factored value of ``G(m, i)² - H(m, i)²``.

    .. math::

        16(4m+5)^2(16mi^2+12i^2-1)(m+i+1)^2(m-i+1)^2

    """
    return (
        16 * (4 * m + 5) ** 2 * (16 * m * i * i + 12 * i * i - 1)
        * (m + i + 1) ** 2 * (m - i + 1) ** 2
    )


def lemma_terms(m, i):
    """Return :class:`LemmaTerms` for cell (*m*, *i*).

    :param m: integer greater or equal to 2.

    :param i: index in ``1..m-1``.

    """
    _ensure_range(m, i, 1, m - 1)

    a2 = 4 * m + 4 * i * i + 1
    b2 = a2 + 4
    ab = surd_normalize(0, 1, a2 * b2)

    alpha = 4 * m * m + 9 * m + 5 - 2 * i * i
    beta = 4 * m * m + 7 * m + 3 - 2 * i * i

    return LemmaTerms(
        a2=a2,
        b2=b2,
        ab=ab,
        x=(i - 4 * i ** 3) + i * ab,
        alpha=alpha,
        beta=beta,
        y_square=alpha * alpha * a2 + beta * beta * b2 - 2 * alpha * beta * ab,
        g=g_coefficient(m, i),
        h=h_polynomial(m, i)
    )


def uv_terms(m):
    """Return (U, V) comparing ``d_m(m+2) / d_m(m+1)`` with ``T(m+1, m)``.

    ``U = (2m²+3m)·sqrt(4m²+4m+5)`` and ``V = 4m³+8m²+5m``; the strict
    bound holds if and only if ``U > V``.

    """
    return (
        surd_normalize(0, 2 * m * m + 3 * m, 4 * m * m + 4 * m + 5),
        4 * m ** 3 + 8 * m * m + 5 * m
    )


def boundary_step(m):
    """Return closed form of ``d_m(m+2) / d_m(m+1)``.

    .. math::

        \\frac{(m+1)(4m^2+18m+21)}{2(2m+3)(m+2)}

    """
    return Rational(
        (m + 1) * (4 * m * m + 18 * m + 21), 2 * (2 * m + 3) * (m + 2)
    )
