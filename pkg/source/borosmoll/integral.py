# :coding: utf-8

import collections
import logging
import math

import scipy.integrate

from borosmoll.exception import UsageError

#: Default relative tolerance requested from the quadrature.
QUADRATURE_TOLERANCE = 1e-10

#: Default absolute tolerance requested from the quadrature.
ABSOLUTE_TOLERANCE = 1e-14

#: Default acceptance threshold on the relative residual.
ACCEPTANCE_TOLERANCE = 1e-8

#: Default maximum number of subintervals used by the quadrature.
QUADRATURE_LIMIT = 200


#: Outcome of one quadrature evaluation.
IntegralResult = collections.namedtuple(
    "IntegralResult", [
        "m", "a", "numeric", "closed_form", "residual", "error_estimate",
        "converged"
    ]
)


def evaluate_polynomial(row, a):
    """Return ``P_m(a)`` in floating point from exact *row*."""
    return math.fsum(
        float(value) * a ** i for i, value in enumerate(row.coeffs)
    )


def closed_form(row, a):
    """Return closed-form value of the quartic integral for *row* at *a*.

    .. math::

        \\int_0^\\infty \\frac{dx}{(x^4 + 2ax^2 + 1)^{m+1}}
        = \\frac{\\pi P_m(a)}{2^{m+3/2} (a+1)^{m+1/2}}

    """
    m = row.m
    return (
        math.pi * evaluate_polynomial(row, a)
        / (2 ** (m + 1.5) * (a + 1) ** (m + 0.5))
    )


def integrand(t, m, a):
    """Return integrand after the substitution ``x = t / (1 - t)``."""
    if t >= 1.0:
        return 0.0

    x = t / (1.0 - t)
    x2 = x * x
    return 1.0 / ((x2 * x2 + 2.0 * a * x2 + 1.0) ** (m + 1) * (1.0 - t) ** 2)


def integral_residual(
    m, a, cache, tolerance=QUADRATURE_TOLERANCE,
    absolute_tolerance=ABSOLUTE_TOLERANCE, limit=QUADRATURE_LIMIT
):
    """Compare quadrature of the quartic integral with its closed form.

    :param m: non-negative integer.

    :param a: float greater than -1.

    :param cache: :class:`borosmoll.cache.RowCache` instance providing the
        exact row *m*.

    :param tolerance: relative tolerance requested from the quadrature.
        Default is :data:`QUADRATURE_TOLERANCE`.

    :param absolute_tolerance: absolute tolerance requested from the
        quadrature. Default is :data:`ABSOLUTE_TOLERANCE`.

    :param limit: maximum number of subintervals for the adaptive quadrature.
        Default is :data:`QUADRATURE_LIMIT`.

    :raise borosmoll.exception.UsageError: if *m* is negative or *a* is not
        greater than -1.

    :return: :class:`IntegralResult` instance. The *converged* flag is False
        when the quadrature did not reach the requested tolerance within
        *limit* subintervals, in which case the result is inconclusive.

    """
    logger = logging.getLogger(__name__ + ".integral_residual")

    if m < 0:
        raise UsageError("Row index must be non-negative, got {}.".format(m))

    if a <= -1:
        raise UsageError(
            "Parameter a must be greater than -1, got {}.".format(a)
        )

    outcome = scipy.integrate.quad(
        integrand, 0.0, 1.0, args=(m, a),
        epsabs=absolute_tolerance, epsrel=tolerance, limit=limit,
        full_output=1
    )

    numeric, error_estimate = outcome[0], outcome[1]
    converged = len(outcome) < 4

    if not converged:
        logger.warning(
            "Quadrature inconclusive for m={}, a={}: {}".format(
                m, a, outcome[3]
            )
        )

    reference = closed_form(cache.row(m), a)
    residual = abs(numeric - reference) / abs(reference)

    logger.debug(
        "m={}, a={}: quadrature={!r}, closed form={!r}, residual={!r}".format(
            m, a, numeric, reference, residual
        )
    )

    return IntegralResult(
        m, a, numeric, reference, residual, error_estimate, converged
    )
