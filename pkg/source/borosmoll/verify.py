# :coding: utf-8

import collections
import logging
import math
import multiprocessing
import os
import time

import borosmoll.bounds
import borosmoll.coefficient
import borosmoll.sequence
from borosmoll.cache import RowCache
from borosmoll.exactnum import Rational, cmp, surd_sign, surd_normalize, render
from borosmoll.exception import UsageError

#: Default number of processes used by :func:`verify_suite`.
PROCESS_COUNT = int(os.getenv("BOROSMOLL_PROCESS_COUNT", 1))

LESS = "<"
LESS_EQUAL = "<="
GREATER = ">"
GREATER_EQUAL = ">="
EQUAL = "="
BETWEEN = "in"

#: Relations which can be recorded in a verdict.
RELATIONS = (LESS, LESS_EQUAL, GREATER, GREATER_EQUAL, EQUAL, BETWEEN)

#: Proof identities checked by :func:`verify_proof_identities`.
IDENTITY_CHECKS = (
    "identity.rationalize",
    "identity.xy-gh",
    "identity.gh-factor",
    "identity.delta",
    "identity.delta-lower",
    "identity.root-t",
    "identity.root-q",
    "identity.r-form",
    "identity.r-positive",
    "identity.uv",
    "identity.uv-order",
)


class CellVerdict(
    collections.namedtuple(
        "CellVerdict", [
            "check", "m", "i", "relation", "passed", "strict",
            "margin_sign", "lhs", "rhs"
        ]
    )
):
    """Outcome of one check at one cell (m, i).

    *lhs* and *rhs* are exact values. For the relation :data:`BETWEEN`, *rhs*
    is a tuple (*lower*, *upper*) of exclusive bounds.

    *margin_sign* is the sign of the slack of the relation: 1 when the
    relation holds strictly, 0 on the boundary and -1 when it is violated.
    For :data:`EQUAL`, it is the sign of ``lhs - rhs``.

    *i* is None for checks which only depend on *m*.

    """

    __slots__ = ()

    @property
    def key(self):
        """Return sorting key (check, m, i)."""
        return self.check, self.m, -1 if self.i is None else self.i

    def display(self, digits=6):
        """Return decimal renderings of *lhs* and *rhs* as a tuple."""
        if self.relation == BETWEEN:
            lower, upper = self.rhs
            rhs = "({}, {})".format(
                render(lower, digits), render(upper, digits)
            )
        else:
            rhs = render(self.rhs, digits)

        return render(self.lhs, digits), rhs


def _verdict(check, m, i, lhs, relation, rhs, slack=None):
    """Return :class:`CellVerdict` comparing *lhs* to *rhs*.

    :param slack: optional sign of the slack computed by the caller, for
        values which :func:`~borosmoll.exactnum.cmp` cannot compare.

    """
    if slack is None:
        if relation == BETWEEN:
            lower, upper = rhs
            slack = min(cmp(lhs, lower), cmp(upper, lhs))
        elif relation in (LESS, LESS_EQUAL):
            slack = cmp(rhs, lhs)
        else:
            slack = cmp(lhs, rhs)

    if relation == EQUAL:
        passed, strict = slack == 0, False
    elif relation in (LESS_EQUAL, GREATER_EQUAL):
        passed, strict = slack >= 0, slack > 0
    else:
        passed = strict = slack > 0

    return CellVerdict(check, m, i, relation, passed, strict, slack, lhs, rhs)


class ScanReport(object):
    """Aggregation of verdicts over a range of *m*."""

    def __init__(self, name, config=None, observational=False):
        """Initialize report.

        :param name: name of the suite which produced the report.

        :param config: mapping echoing the configuration used.

        :param observational: Indicate whether the report records
            observations rather than claims. Failures of an observational
            report are findings and do not fail a run.

        """
        self.name = name
        self.config = config or {}
        self.observational = observational
        self.notes = []
        self.summary = {}
        self.wall_time = None

        self._verdicts = []
        self._vacuous = set()

    def add(self, verdict):
        """Record *verdict*."""
        self._verdicts.append(verdict)

    def extend(self, verdicts):
        """Record all *verdicts*."""
        self._verdicts.extend(verdicts)

    def mark_vacuous(self, check, m):
        """Record that *check* has no cell to verify for *m*."""
        self._vacuous.add((check, m))

    @property
    def verdicts(self):
        """Return verdicts sorted by (check, m, i)."""
        return sorted(self._verdicts, key=lambda verdict: verdict.key)

    @property
    def vacuous(self):
        """Return sorted list of (check, m) without any cell."""
        return sorted(self._vacuous)

    @property
    def passed(self):
        """Indicate whether every verdict passed."""
        return all(verdict.passed for verdict in self._verdicts)

    def counts(self):
        """Return mapping of check to cell, pass and strict counts."""
        counts = {}
        for check, _ in self._vacuous:
            counts.setdefault(check, {"cells": 0, "passed": 0, "strict": 0})

        for verdict in self._verdicts:
            count = counts.setdefault(
                verdict.check, {"cells": 0, "passed": 0, "strict": 0}
            )
            count["cells"] += 1
            count["passed"] += int(verdict.passed)
            count["strict"] += int(verdict.strict)

        return {check: counts[check] for check in sorted(counts)}

    def failures(self):
        """Return failing verdicts sorted by (check, m, i)."""
        return [verdict for verdict in self.verdicts if not verdict.passed]


def _ensure_minimum(m, minimum):
    if m < minimum:
        raise UsageError(
            "Row index must be greater or equal to {}, got {}.".format(
                minimum, m
            )
        )


def verify_row_inequalities(m, cache):
    """Return verdicts on ``c_i(m)`` for ``1 <= i <= m-1``.

    Four checks are emitted per index:

    * ``rulc``: ``c_i(m) < (m-i+1)(i+1) / ((m-i)i)``;
    * ``lower``: ``c_i(m) > (m-i+1)(i+1)(m+i) / ((m-i)i(m+i+1))``;
    * ``factorial``: ``c_i(m) > (i+1) / i``;
    * ``sandwich``: ``(m+i) / (m+i+1) < c_i(m) / u_i(m) < 1``.

    :raise borosmoll.exception.UsageError: if *m* is lower than 2.

    """
    _ensure_minimum(m, 2)

    verdicts = []

    for i in range(1, m):
        value = borosmoll.coefficient.ratio_c(m, i, cache)
        bound = borosmoll.bounds.reference_ratios(m, i)

        verdicts.extend([
            _verdict("rulc", m, i, value, LESS, bound.ulc_upper),
            _verdict("lower", m, i, value, GREATER, bound.rulc_lower),
            _verdict("factorial", m, i, value, GREATER, Rational(i + 1, i)),
            _verdict(
                "sandwich", m, i, value / bound.u, BETWEEN,
                (Rational(m + i, m + i + 1), Rational(1))
            ),
        ])

    return verdicts


def verify_binomial_form(m, cache):
    """Return verdicts on the reverse ultra log-concavity of row *m* computed
    from binomial-normalized coefficients.

    .. math::

        \\frac{d_{i-1}(m)}{\\binom{m}{i-1}} \\frac{d_{i+1}(m)}{\\binom{m}{i+1}}
        > \\left(\\frac{d_i(m)}{\\binom{m}{i}}\\right)^2

    This form does not rely on ``c_i(m)`` and serves as an independent oracle
    for the ``rulc`` check.

    """
    _ensure_minimum(m, 2)

    row = cache.row(m)
    normalized = [
        value / math.comb(m, index) for index, value in enumerate(row.coeffs)
    ]

    return [
        _verdict(
            "binomial", m, i, normalized[i - 1] * normalized[i + 1], GREATER,
            normalized[i] * normalized[i]
        )
        for i in range(1, m)
    ]


def verify_ratio_bounds(m, cache):
    """Return verdicts on ``d_i(m+1) / d_i(m)`` for ``0 <= i <= m``.

    Interior indices emit ``q`` (ratio strictly greater than ``Q(m, i)``)
    and ``t`` (ratio strictly lower than ``T(m, i)``). Indices 0 and m emit
    ``boundary``, the exact equality of the ratio with ``T(m, i)``.

    """
    _ensure_minimum(m, 2)

    verdicts = []

    for i in range(m + 1):
        ratio = borosmoll.coefficient.ratio_successive(m, i, cache)
        upper = borosmoll.bounds.bound_T(m, i)

        if i in (0, m):
            verdicts.append(_verdict("boundary", m, i, ratio, EQUAL, upper))
            continue

        verdicts.extend([
            _verdict(
                "q", m, i, ratio, GREATER, borosmoll.bounds.bound_Q(m, i)
            ),
            _verdict("t", m, i, ratio, LESS, upper),
        ])

    return verdicts


def verify_boundary_step(m, cache):
    """Return verdicts on ``d_m(m+2) / d_m(m+1)``.

    ``step.form`` compares the ratio with its closed form and ``step.bound``
    checks that it is strictly lower than ``T(m+1, m)``. Both verdicts are
    recorded at index m.

    """
    _ensure_minimum(m, 1)

    ratio = borosmoll.coefficient.ratio_successive(m + 1, m, cache)

    return [
        _verdict(
            "step.form", m, m, ratio, EQUAL,
            borosmoll.bounds.boundary_step(m)
        ),
        _verdict(
            "step.bound", m, m, ratio, LESS,
            borosmoll.bounds.bound_T(m + 1, m)
        ),
    ]


def verify_quadratics(m, cache):
    """Return verdicts on both quadratics evaluated at the successive ratio.

    ``quadratic.upper`` must be negative and ``quadratic.lower`` positive for
    ``1 <= i <= m-1``.

    """
    _ensure_minimum(m, 2)

    verdicts = []

    for i in range(1, m):
        ratio = borosmoll.coefficient.ratio_successive(m, i, cache)

        verdicts.extend([
            _verdict(
                "quadratic.upper", m, i,
                borosmoll.bounds.evaluate_quadratic(
                    borosmoll.bounds.upper_quadratic(m, i), ratio
                ),
                LESS, Rational(0)
            ),
            _verdict(
                "quadratic.lower", m, i,
                borosmoll.bounds.evaluate_quadratic(
                    borosmoll.bounds.lower_quadratic(m, i), ratio
                ),
                GREATER, Rational(0)
            ),
        ])

    return verdicts


def _sign(value):
    return (value > 0) - (value < 0)


def _difference_sign(first_sign, second_sign, square_sign):
    """Return sign of ``x - y`` from the signs of x, y and ``x² - y²``."""
    if first_sign != second_sign:
        return _sign(first_sign - second_sign)

    # x and y share sign s: x - y has the sign of s·(x² - y²).
    return first_sign * square_sign


def _radical_difference_sign(alpha, a2, beta, b2):
    """Return sign of ``alpha·sqrt(a2) - beta·sqrt(b2)`` for integers."""
    first_sign = _sign(alpha) if a2 else 0
    second_sign = _sign(beta) if b2 else 0

    return _difference_sign(
        first_sign, second_sign, _sign(alpha * alpha * a2 - beta * beta * b2)
    )


def lemma_sign(m, i):
    """Return exact sign of ``F(m, i) - T(m, i)``.

    The difference equals ``i(X - Y) / (2(m+1)(m-i+1)(P - i·B))`` where
    ``P = 4m²+9m+5-2i²``. The sign of X and of ``X² - Y²`` only involve the
    radicand ``A²B²``, the sign of Y compares two square roots of integers.

    """
    terms = borosmoll.bounds.lemma_terms(m, i)

    x_sign = surd_sign(terms.x)
    y_sign = _radical_difference_sign(
        terms.alpha, terms.a2, terms.beta, terms.b2
    )
    square_sign = cmp(terms.x * terms.x, terms.y_square)

    denominator_sign = surd_sign(surd_normalize(terms.alpha, -i, terms.b2))

    return (
        _sign(i) * _difference_sign(x_sign, y_sign, square_sign)
        * denominator_sign
    )


def verify_lemma_TF(m):
    """Return ``lemma`` verdicts stating ``T(m, i) < F(m, i)``.

    T and F have different radicands, so the verdict relies on
    :func:`lemma_sign` instead of a direct comparison.

    """
    _ensure_minimum(m, 2)

    return [
        _verdict(
            "lemma", m, i,
            borosmoll.bounds.bound_T(m, i), LESS,
            borosmoll.bounds.bound_F(m, i),
            slack=lemma_sign(m, i)
        )
        for i in range(1, m)
    ]


def _cell_identities(m, i):
    """Return identity verdicts at cell (m, i)."""
    left, right = borosmoll.bounds.rationalization_identity(m, i)
    terms = borosmoll.bounds.lemma_terms(m, i)
    upper = borosmoll.bounds.upper_quadratic(m, i)
    lower = borosmoll.bounds.lower_quadratic(m, i)
    defining, closed = borosmoll.bounds.bound_R(m, i)

    return [
        _verdict("identity.rationalize", m, i, left, EQUAL, right),
        _verdict(
            "identity.xy-gh", m, i, terms.x * terms.x - terms.y_square, EQUAL,
            terms.g * terms.ab - terms.h
        ),
        _verdict(
            "identity.gh-factor", m, i,
            terms.g ** 2 * terms.a2 * terms.b2 - terms.h ** 2, EQUAL,
            borosmoll.bounds.gh_factorization(m, i)
        ),
        _verdict(
            "identity.delta", m, i,
            borosmoll.bounds.discriminant(upper), EQUAL,
            16 * i * i * (m + 1) ** 2 * (4 * i * i + 4 * m + 1)
            * (m - i + 1) ** 2
        ),
        _verdict(
            "identity.delta-lower", m, i,
            borosmoll.bounds.discriminant(lower), EQUAL,
            16 * i * i * (2 * i + 1) ** 2 * (m + 1) ** 2 * (m - i + 1) ** 2
        ),
        _verdict(
            "identity.root-t", m, i,
            borosmoll.bounds.quadratic_roots(upper)[1], EQUAL,
            borosmoll.bounds.bound_T(m, i)
        ),
        _verdict(
            "identity.root-q", m, i,
            borosmoll.bounds.quadratic_roots(lower)[1], EQUAL,
            borosmoll.bounds.bound_Q(m, i)
        ),
        _verdict("identity.r-form", m, i, defining, EQUAL, closed),
        _verdict("identity.r-positive", m, i, closed, GREATER, Rational(0)),
    ]


def verify_proof_identities(m, i=None):
    """Return verdicts on the identities used by the proofs.

    :param m: integer greater or equal to 2.

    :param i: index in ``1..m-1``. If None, every index is checked together
        with the identities which only depend on *m* (``identity.uv`` and
        ``identity.uv-order``, recorded without index).

    :raise borosmoll.exception.UsageError: if (m, i) is out of range.

    """
    _ensure_minimum(m, 2)

    if i is not None:
        if not 1 <= i <= m - 1:
            raise UsageError(
                "Index {} is outside of range 1..{}.".format(i, m - 1)
            )

        return _cell_identities(m, i)

    verdicts = []
    for index in range(1, m):
        verdicts.extend(_cell_identities(m, index))

    u, v = borosmoll.bounds.uv_terms(m)
    verdicts.extend([
        _verdict(
            "identity.uv", m, None, u * u - v * v, EQUAL,
            Rational(4 * m * m * (4 * m + 5))
        ),
        _verdict("identity.uv-order", m, None, u, GREATER, Rational(v)),
    ])

    return verdicts


def verify_recurrences(m, cache):
    """Return verdicts cross-checking computation paths of row *m*.

    ``crosspath`` compares each cached coefficient with the closed-form
    value; ``rec22`` and ``rec23`` require exactly zero residuals on every
    valid index.

    """
    _ensure_minimum(m, 0)

    row_m, row_m1, row_m2 = cache.rows(m, m + 2)
    closed = borosmoll.coefficient.closed_form_row(m)

    verdicts = [
        _verdict("crosspath", m, i, row_m.coeffs[i], EQUAL, closed.coeffs[i])
        for i in range(m + 1)
    ]

    verdicts.extend(
        _verdict(
            "rec22", m, i,
            borosmoll.coefficient.residual_rec22(row_m, row_m1, i),
            EQUAL, Rational(0)
        )
        for i in range(m + 2)
    )

    verdicts.extend(
        _verdict(
            "rec23", m, i,
            borosmoll.coefficient.residual_rec23(row_m, row_m1, row_m2, i),
            EQUAL, Rational(0)
        )
        for i in range(m + 3)
    )

    return verdicts


def _verify_lemma(m, cache):
    return verify_lemma_TF(m)


def _verify_identities(m, cache):
    return verify_proof_identities(m)


#: Verification suites as (check identifiers, function, minimum m).
SUITES = (
    (
        ("rulc", "lower", "factorial", "sandwich"),
        verify_row_inequalities, 2
    ),
    (("binomial",), verify_binomial_form, 2),
    (("q", "t", "boundary"), verify_ratio_bounds, 2),
    (("step.form", "step.bound"), verify_boundary_step, 1),
    (("quadratic.upper", "quadratic.lower"), verify_quadratics, 2),
    (("lemma",), _verify_lemma, 2),
    (("crosspath", "rec22", "rec23"), verify_recurrences, 0),
    (IDENTITY_CHECKS, _verify_identities, 2),
)

#: All check identifiers known by :func:`verify_suite`.
CHECKS = tuple(
    identifier for identifiers, _, _ in SUITES for identifier in identifiers
)


def resolve_checks(names=None):
    """Return check identifiers selected by *names*.

    A name is either a check identifier, a group prefix such as "identity"
    or "quadratic", or "all".

    :raise borosmoll.exception.UsageError: if a name does not match any
        check.

    """
    if not names:
        return CHECKS

    selected = set()

    for name in names:
        name = name.strip()
        if name == "all":
            selected.update(CHECKS)
            continue

        matched = [
            check for check in CHECKS
            if check == name or check.startswith(name + ".")
        ]
        if not matched:
            raise UsageError(
                "Unknown check {!r}. Available checks are: {}".format(
                    name, ", ".join(CHECKS)
                )
            )

        selected.update(matched)

    return tuple(check for check in CHECKS if check in selected)


def _verify_rows(m, cache, checks):
    """Return verdicts of *checks* for row *m*."""
    selected = set(checks)
    verdicts = []

    for identifiers, function, minimum in SUITES:
        if m < minimum or not selected.intersection(identifiers):
            continue

        verdicts.extend(
            verdict for verdict in function(m, cache)
            if verdict.check in selected
        )

    return verdicts


def _verify_task(arguments):
    """Return verdicts for one row in a worker process.

    :param arguments: tuple (m, rows, checks) where *rows* are the rows m to
        m+2.

    """
    m, rows, checks = arguments
    return _verify_rows(m, RowCache(rows), checks)


def verify_suite(
    m_min, m_max, checks=None, cache=None, workers=None, config=None
):
    """Run *checks* for every m from *m_min* to *m_max* included.

    :param checks: list of check names resolved with :func:`resolve_checks`.
        Default is all checks.

    :param cache: :class:`borosmoll.cache.RowCache` instance. A new cache is
        created if None.

    :param workers: number of processes. Default is :data:`PROCESS_COUNT`.
        Rows are always computed in the calling process.

    :param config: mapping echoed in the report.

    :return: :class:`ScanReport` instance.

    """
    logger = logging.getLogger(__name__ + ".verify_suite")

    if m_min < 0 or m_max < m_min:
        raise UsageError(
            "Invalid range of rows {}..{}.".format(m_min, m_max)
        )

    checks = resolve_checks(checks)
    cache = cache if cache is not None else RowCache()
    workers = workers or PROCESS_COUNT

    report = ScanReport("verify", config=config)
    start = time.time()

    logger.info(
        "Verify {} for m in {}..{}".format(", ".join(checks), m_min, m_max)
    )

    cache.row(m_max + 2)
    indices = range(m_min, m_max + 1)

    if workers > 1:
        logger.debug("Distribute rows over {} processes".format(workers))
        tasks = [(m, cache.rows(m, m + 2), checks) for m in indices]

        pool = multiprocessing.Pool(workers)
        try:
            results = pool.map(_verify_task, tasks)
        finally:
            pool.close()
            pool.join()

    else:
        results = (_verify_rows(m, cache, checks) for m in indices)

    for m, verdicts in zip(indices, results):
        report.extend(verdicts)

        found = set(verdict.check for verdict in verdicts)
        for check in checks:
            if check not in found:
                report.mark_vacuous(check, m)

        logger.debug("m={}: {} verdicts".format(m, len(verdicts)))

    report.wall_time = time.time() - start
    _log_outcome(report, logger)
    return report


def _log_outcome(report, logger):
    """Log summary of *report* and its first failures."""
    failures = report.failures()

    for verdict in failures[:10]:
        lhs, rhs = verdict.display()
        logger.warning(
            "{} failed at m={}, i={}: {} {} {}".format(
                verdict.check, verdict.m, verdict.i, lhs, verdict.relation,
                rhs
            )
        )

    logger.info(
        "{}: {} verdicts, {} failures [{:0.2f}s]".format(
            report.name, len(report.verdicts), len(failures),
            report.wall_time or 0.0
        )
    )


def conjecture_verdicts(m, cache, n_offset=4):
    """Return verdicts on the sequence ``e_i = d_{i+1}d_{i-1} / d_i²``.

    The sequence is taken over ``2 <= i <= m-2`` and reindexed with
    ``k = i - 2``. ``conjecture.log-concave`` requires ``e_k² >=
    e_{k-1}e_{k+1}`` and ``conjecture.reverse-ulc`` requires the reverse
    ultra log-concavity inequality with binomial parameter
    ``n = m - n_offset``. Verdicts are recorded at the original index i.

    :raise borosmoll.exception.UsageError: if *n_offset* is not in ``0..4``.

    """
    if not 0 <= n_offset <= 4:
        raise UsageError(
            "Offset must be in range 0..4, got {}.".format(n_offset)
        )

    if m < 6:
        return []

    coeffs = cache.row(m).coeffs
    values = [
        coeffs[i + 1] * coeffs[i - 1] / (coeffs[i] * coeffs[i])
        for i in range(2, m - 1)
    ]

    verdicts = [
        _verdict(
            "conjecture.log-concave", m, k + 2, left, GREATER_EQUAL, right
        )
        for k, left, right in borosmoll.sequence.log_concavity_terms(values)
    ]

    verdicts.extend(
        _verdict("conjecture.reverse-ulc", m, k + 2, left, LESS_EQUAL, right)
        for k, left, right in borosmoll.sequence.ultra_terms(
            values, m - n_offset
        )
    )

    return verdicts


def scan_conjectures(
    m_min, m_max, cache=None, n_offset=4, config=None
):
    """Scan both conjectures on ``d_{i+1}d_{i-1} / d_i²`` over a range of m.

    Rows without interior index (m < 6) are recorded as vacuous. The
    classification of each sequence is stored in the report summary when
    its length matches the binomial parameter.

    :return: :class:`ScanReport` instance.

    """
    logger = logging.getLogger(__name__ + ".scan_conjectures")

    if m_min < 0 or m_max < m_min:
        raise UsageError(
            "Invalid range of rows {}..{}.".format(m_min, m_max)
        )

    cache = cache if cache is not None else RowCache()

    report = ScanReport("scan", config=config)
    report.notes.append(
        "Binomial parameter n = m - {} for the sequence "
        "d_(i+1)(m)d_(i-1)(m)/d_i(m)^2, 2 <= i <= m-2, reindexed with "
        "k = i - 2.".format(n_offset)
    )

    start = time.time()
    logger.info("Scan conjectures for m in {}..{}".format(m_min, m_max))

    for m in range(m_min, m_max + 1):
        verdicts = conjecture_verdicts(m, cache, n_offset=n_offset)
        report.extend(verdicts)

        found = set(verdict.check for verdict in verdicts)
        for check in ("conjecture.log-concave", "conjecture.reverse-ulc"):
            if check not in found:
                report.mark_vacuous(check, m)

        n = m - n_offset
        if m >= 4 and m - 3 == n + 1:
            coeffs = cache.row(m).coeffs
            report.summary[m] = borosmoll.sequence.classify_sequence(
                [
                    coeffs[i + 1] * coeffs[i - 1] / (coeffs[i] * coeffs[i])
                    for i in range(2, m - 1)
                ],
                n
            )

    report.wall_time = time.time() - start
    _log_outcome(report, logger)
    return report


def verify_bessel(n_max, config=None):
    """Check that Bessel polynomial rows are log-concave and reverse ultra
    log-concave for ``2 <= n <= n_max``.

    Verdicts are recorded with m set to the degree n and i to the index k.

    """
    logger = logging.getLogger(__name__ + ".verify_bessel")

    if n_max < 2:
        raise UsageError(
            "Maximum degree must be greater or equal to 2, got {}.".format(
                n_max
            )
        )

    report = ScanReport("bessel", config=config)
    start = time.time()

    for n in range(2, n_max + 1):
        values = borosmoll.sequence.bessel_row(n)

        report.extend(
            _verdict("bessel.log-concave", n, k, left, GREATER_EQUAL, right)
            for k, left, right in borosmoll.sequence.log_concavity_terms(
                values
            )
        )
        report.extend(
            _verdict("bessel.reverse-ulc", n, k, left, LESS_EQUAL, right)
            for k, left, right in borosmoll.sequence.ultra_terms(values, n)
        )

        report.summary[n] = borosmoll.sequence.classify_sequence(values, n)

    report.wall_time = time.time() - start
    _log_outcome(report, logger)
    return report


def normalized_ratios(m, cache):
    """Return list of (i, c_i(m) / u_i(m)) for ``1 <= i <= m-1``."""
    _ensure_minimum(m, 2)

    return [
        (
            i,
            borosmoll.coefficient.ratio_c(m, i, cache)
            / ((1 + Rational(1, i)) * (1 + Rational(1, m - i)))
        )
        for i in range(1, m)
    ]


def monotonicity_report(m, cache, config=None):
    """Observe whether ``c_i(m) / u_i(m)`` increases strictly with i.

    Each ``monotonic`` verdict compares index i with index i-1. The report
    is observational: a failure is recorded as a finding.

    """
    logger = logging.getLogger(__name__ + ".monotonicity_report")

    report = ScanReport("monotonicity", config=config, observational=True)
    start = time.time()

    values = normalized_ratios(m, cache)
    if len(values) < 2:
        report.mark_vacuous("monotonic", m)

    for (_, previous), (i, current) in zip(values, values[1:]):
        report.add(_verdict("monotonic", m, i, current, GREATER, previous))

    report.wall_time = time.time() - start

    if not report.passed:
        logger.info(
            "c_i({0})/u_i({0}) is not strictly increasing.".format(m)
        )

    return report
