# :coding: utf-8

import collections
import math

from borosmoll.exactnum import Rational
from borosmoll.exception import UsageError


#: Classification of a finite non-negative sequence.
SequenceClass = collections.namedtuple(
    "SequenceClass", ["log_concave", "ultra_lc", "reverse_ultra_lc", "n"]
)


def _validate(sequence, n, exact_length=True):
    """Return *sequence* as a list of rationals after validation.

    :param exact_length: Indicate whether *sequence* must contain exactly n+1
        values. Otherwise it must fit within positions 0 to n.

    """
    values = [Rational(value) for value in sequence]

    if n < 0:
        raise UsageError(
            "Binomial parameter must be non-negative, got {}.".format(n)
        )

    if len(values) > n + 1 or (exact_length and len(values) != n + 1):
        raise UsageError(
            "Sequence must contain n+1={} values, got {}.".format(
                n + 1, len(values)
            )
        )

    for index, value in enumerate(values):
        if value < 0:
            raise UsageError(
                "Sequence value at index {} is negative: {}.".format(
                    index, value
                )
            )

    return values


def log_concavity_terms(sequence):
    """Return list of (k, a_k², a_{k-1}·a_{k+1}) for each interior index k.
    """
    values = [Rational(value) for value in sequence]
    return [
        (k, values[k] * values[k], values[k - 1] * values[k + 1])
        for k in range(1, len(values) - 1)
    ]


def ultra_terms(sequence, n):
    """Return both sides of the ultra log-concavity inequality.

    For each interior index k of *sequence* with ``1 <= k <= n-1``, the tuple
    ``(k, k(n-k)a_k², (n-k+1)(k+1)a_{k-1}a_{k+1})`` is returned. The sequence
    is ultra log-concave when the left side is never lower than the right
    side, and reverse ultra log-concave when it is never greater.

    :param sequence: list of non-negative exact rationals occupying positions
        0 to ``len(sequence)-1`` of a binomial frame of size n.

    :param n: binomial parameter.

    :raise borosmoll.exception.UsageError: if *sequence* does not fit within
        positions 0 to n or if a value is negative.

    """
    values = _validate(sequence, n, exact_length=False)
    return [
        (
            k,
            k * (n - k) * values[k] * values[k],
            (n - k + 1) * (k + 1) * values[k - 1] * values[k + 1]
        )
        for k in range(1, min(len(values) - 1, n))
    ]


def classify_sequence(sequence, n):
    """Return :class:`SequenceClass` for *sequence*.

    Each flag is computed independently from its defining inequality, so a
    sequence with an empty interior is reported as belonging to all three
    classes.

    :param sequence: list of n+1 non-negative exact rationals.

    :param n: binomial parameter.

    :raise borosmoll.exception.UsageError: if the length of *sequence* is not
        n+1 or if a value is negative.

    Example::

        >>> classify_sequence([1, 3, 3], 2).reverse_ultra_lc
        True

    """
    values = _validate(sequence, n)
    terms = ultra_terms(values, n)

    return SequenceClass(
        log_concave=all(
            left >= right for _, left, right in log_concavity_terms(values)
        ),
        ultra_lc=all(left >= right for _, left, right in terms),
        reverse_ultra_lc=all(left <= right for _, left, right in terms),
        n=n
    )


def bessel_row(n):
    """Return coefficients of the Bessel polynomial ``y_n(x)``.

    .. math::

        y_n(x) = \\sum_{k=0}^{n} \\frac{(n+k)!}{2^k k! (n-k)!} x^k

    """
    if n < 0:
        raise UsageError("Degree must be non-negative, got {}.".format(n))

    return [
        Rational(
            math.factorial(n + k),
            2 ** k * math.factorial(k) * math.factorial(n - k)
        )
        for k in range(n + 1)
    ]
