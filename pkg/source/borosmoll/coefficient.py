# :coding: utf-8

import collections
import math

from borosmoll.exactnum import Rational
from borosmoll.exception import UsageError

#: Row computed from the closed-form sum.
CLOSED_FORM = "closed-form"

#: Row computed with the recurrence on (m, i-1) and (m, i).
RECURRENCE = "recurrence"

#: Row loaded from a row-cache file.
CACHE_FILE = "cache-file"

#: All computation paths a row can come from.
SOURCES = (CLOSED_FORM, RECURRENCE, CACHE_FILE)


class CoeffRow(collections.namedtuple("CoeffRow", ["m", "coeffs", "source"])):
    """Coefficients ``d_0(m), ..., d_m(m)`` with their provenance.

    :raise borosmoll.exception.UsageError: if the row does not contain m+1
        strictly positive rationals or if the source is unknown.

    """

    __slots__ = ()

    def __new__(cls, m, coeffs, source):
        coeffs = tuple(Rational(value) for value in coeffs)

        if m < 0:
            raise UsageError(
                "Row index must be non-negative, got {}.".format(m)
            )

        if len(coeffs) != m + 1:
            raise UsageError(
                "Row {} must contain {} coefficients, got {}.".format(
                    m, m + 1, len(coeffs)
                )
            )

        for index, value in enumerate(coeffs):
            if value <= 0:
                raise UsageError(
                    "Coefficient d_{}({}) must be positive, got {}.".format(
                        index, m, value
                    )
                )

        if source not in SOURCES:
            raise UsageError("Unknown row source {!r}.".format(source))

        return super(CoeffRow, cls).__new__(cls, m, coeffs, source)

    def coefficient(self, i):
        """Return ``d_i(m)``, or zero if *i* is outside of ``0..m``."""
        if 0 <= i <= self.m:
            return self.coeffs[i]

        return Rational(0)

    def same_values(self, other):
        """Indicate whether *other* holds the same coefficients."""
        return self.m == other.m and self.coeffs == other.coeffs


def closed_form_row(m):
    """Return row *m* computed from the closed-form sum.

    .. math::

        d_i(m) = 2^{-2m} \\sum_{k=i}^{m} 2^k \\binom{2m-2k}{m-k}
        \\binom{m+k}{m} \\binom{k}{i}

    :param m: non-negative integer.

    :return: :class:`CoeffRow` instance with source :data:`CLOSED_FORM`.

    """
    if m < 0:
        raise UsageError("Row index must be non-negative, got {}.".format(m))

    terms = [
        2 ** k * math.comb(2 * m - 2 * k, m - k) * math.comb(m + k, m)
        for k in range(m + 1)
    ]

    scale = Rational(1, 2 ** (2 * m))
    coeffs = [
        scale * sum(terms[k] * math.comb(k, i) for k in range(i, m + 1))
        for i in range(m + 1)
    ]

    return CoeffRow(m, coeffs, CLOSED_FORM)


def next_row_rec21(row):
    """Return row m+1 computed from *row* m.

    Uses ``2(m+1) d_i(m+1) = 2(m+i) d_{i-1}(m) + (4m+2i+3) d_i(m)`` for
    ``0 <= i <= m+1`` with ``d_{-1}(m) = d_{m+1}(m) = 0``.

    :param row: :class:`CoeffRow` instance.

    :return: :class:`CoeffRow` instance with source :data:`RECURRENCE`.

    """
    m = row.m
    denominator = 2 * (m + 1)

    coeffs = [
        (
            2 * (m + i) * row.coefficient(i - 1)
            + (4 * m + 2 * i + 3) * row.coefficient(i)
        ) / denominator
        for i in range(m + 2)
    ]

    return CoeffRow(m + 1, coeffs, RECURRENCE)


def iterate_rows(m_max):
    """Yield rows 0 to *m_max* computed with :func:`next_row_rec21`."""
    row = CoeffRow(0, [1], RECURRENCE)
    yield row

    for _ in range(m_max):
        row = next_row_rec21(row)
        yield row


def boundary_value(m):
    """Return ``d_m(m) = 2^{-m} C(2m, m)``."""
    return Rational(math.comb(2 * m, m), 2 ** m)


def _ensure_consecutive(*rows):
    """Raise :exc:`~borosmoll.exception.UsageError` if *rows* are not
    consecutive."""
    for previous, current in zip(rows, rows[1:]):
        if current.m != previous.m + 1:
            raise UsageError(
                "Rows must be consecutive, got m={} followed by m={}.".format(
                    previous.m, current.m
                )
            )


def residual_rec22(row_m, row_m1, i):
    """Return residual of the recurrence linking rows m and m+1 on (i, i+1).

    .. math::

        2(m+1)(m+1-i) d_i(m+1) - (4m-2i+3)(m+i+1) d_i(m) + 2i(i+1) d_{i+1}(m)

    :param row_m: :class:`CoeffRow` for m.

    :param row_m1: :class:`CoeffRow` for m+1.

    :param i: index in ``0..m+1``.

    :raise borosmoll.exception.UsageError: if rows are not consecutive or if
        *i* is out of range.

    :return: exact :class:`~borosmoll.exactnum.Rational`, zero for genuine
        rows.

    """
    _ensure_consecutive(row_m, row_m1)

    m = row_m.m
    if not 0 <= i <= m + 1:
        raise UsageError(
            "Index {} is outside of range 0..{}.".format(i, m + 1)
        )

    return (
        2 * (m + 1) * (m + 1 - i) * row_m1.coefficient(i)
        - (4 * m - 2 * i + 3) * (m + i + 1) * row_m.coefficient(i)
        + 2 * i * (i + 1) * row_m.coefficient(i + 1)
    )


def residual_rec23(row_m, row_m1, row_m2, i):
    """Return residual of the second order recurrence in m at index *i*.

    .. math::

        4(m+2-i)(m+1)(m+2) d_i(m+2)
        - 2(m+1)(-4i^2+8m^2+24m+19) d_i(m+1)
        + (m+i+1)(4m+3)(4m+5) d_i(m)

    :param row_m: :class:`CoeffRow` for m.

    :param row_m1: :class:`CoeffRow` for m+1.

    :param row_m2: :class:`CoeffRow` for m+2.

    :param i: index in ``0..m+2``.

    :raise borosmoll.exception.UsageError: if rows are not consecutive or if
        *i* is out of range.

    :return: exact :class:`~borosmoll.exactnum.Rational`, zero for genuine
        rows.

    """
    _ensure_consecutive(row_m, row_m1, row_m2)

    m = row_m.m
    if not 0 <= i <= m + 2:
        raise UsageError(
            "Index {} is outside of range 0..{}.".format(i, m + 2)
        )

    return (
        4 * (m + 2 - i) * (m + 1) * (m + 2) * row_m2.coefficient(i)
        - 2 * (m + 1) * (-4 * i * i + 8 * m * m + 24 * m + 19)
        * row_m1.coefficient(i)
        + (m + i + 1) * (4 * m + 3) * (4 * m + 5) * row_m.coefficient(i)
    )


def ratio_successive(m, i, cache):
    """Return ``d_i(m+1) / d_i(m)``.

    :param m: non-negative integer.

    :param i: index in ``0..m``.

    :param cache: :class:`borosmoll.cache.RowCache` instance.

    """
    if not 0 <= i <= m:
        raise UsageError("Index {} is outside of range 0..{}.".format(i, m))

    return cache.row(m + 1).coefficient(i) / cache.row(m).coefficient(i)


def ratio_c(m, i, cache):
    """Return ``c_i(m) = d_i(m)² / (d_{i-1}(m) d_{i+1}(m))``.

    :param m: integer greater or equal to 2.

    :param i: index in ``1..m-1``.

    :param cache: :class:`borosmoll.cache.RowCache` instance.

    """
    if not 1 <= i <= m - 1:
        raise UsageError(
            "Index {} is outside of range 1..{}.".format(i, m - 1)
        )

    row = cache.row(m)
    value = row.coeffs[i]
    return value * value / (row.coeffs[i - 1] * row.coeffs[i + 1])
