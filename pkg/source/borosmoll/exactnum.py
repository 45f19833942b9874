# :coding: utf-8

import collections
import fractions
import functools
import math
import numbers

from borosmoll.exception import DomainError, UnsupportedComparison

#: Exact rational type used for every coefficient and ratio.
Rational = fractions.Fraction


@functools.lru_cache(maxsize=None)
def _sieve(limit):
    """Return all primes lower or equal to *limit*."""
    flags = [True] * (limit + 1)
    flags[0:2] = [False] * min(2, limit + 1)
    for number in range(2, math.isqrt(limit) + 1):
        if flags[number]:
            flags[number * number::number] = [False] * len(
                range(number * number, limit + 1, number)
            )

    return tuple(index for index, flag in enumerate(flags) if flag)


def _primes(limit):
    """Return primes up to the power of two above *limit*."""
    return _sieve(1 << max(limit, 1).bit_length())


def _icbrt(number):
    """Return the integer cube root of non-negative integer *number*."""
    if number < 2:
        return number

    root = 1 << -(-number.bit_length() // 3)
    while True:
        candidate = (2 * root + number // (root * root)) // 3
        if candidate >= root:
            break
        root = candidate

    while root ** 3 > number:
        root -= 1

    return root


def is_square(number):
    """Indicate whether the non-negative integer *number* is a perfect square.
    """
    if number < 0:
        return False

    root = math.isqrt(number)
    return root * root == number


def extract_square(number):
    """Return tuple (*factor*, *rest*) such that number = factor² · rest.

    *rest* is square-free. Primes up to the cube root of *number* are divided
    out, so the remaining cofactor has at most two prime factors and is
    either a perfect square or square-free.

    :param number: non-negative integer.

    Example::

        >>> extract_square(12)
        (2, 3)
        >>> extract_square(2 * 1009 ** 2)
        (1009, 2)

    """
    if number == 0:
        return 0, 1

    factor, rest = 1, 1
    for prime in _primes(_icbrt(number)):
        if prime ** 3 > number:
            break

        exponent = 0
        while number % prime == 0:
            number //= prime
            exponent += 1

        factor *= prime ** (exponent // 2)
        if exponent % 2:
            rest *= prime

    root = math.isqrt(number)
    if root * root == number:
        return factor * root, rest

    return factor, rest * number


def _rational(value):
    """Return *value* as a :class:`Rational`.

    :raise TypeError: if *value* is not an exact rational number.

    """
    if isinstance(value, Rational):
        return value

    if isinstance(value, numbers.Rational) or isinstance(value, str):
        return Rational(value)

    raise TypeError(
        "Expected an exact rational number, got {!r}.".format(value)
    )


def _sign(value):
    """Return sign of a rational *value* as -1, 0 or 1."""
    return (value > 0) - (value < 0)


class QuadSurd(collections.namedtuple("QuadSurd", ["p", "q", "d"])):
    """Exact real number ``p + q*sqrt(d)``.

    *p* and *q* are :class:`Rational` instances and *d* is a non-negative
    integer. Instances should be created with :func:`surd_normalize` which
    folds rational values back to :class:`Rational`.

    A QuadSurd whose *q* is zero or whose radicand is a perfect square is
    stored with ``q == 0`` and ``d == 0``.

    """

    __slots__ = ()

    def __new__(cls, p, q=0, d=0):
        """Create normalized surd from *p*, *q* and *d*."""
        p = _rational(p)
        q = _rational(q)

        if not isinstance(d, numbers.Integral):
            raise TypeError("Radicand must be an integer, got {!r}.".format(d))

        d = int(d)
        if d < 0:
            raise DomainError(
                "Radicand must be non-negative, got {}.".format(d)
            )

        if q != 0 and d != 0:
            factor, d = extract_square(d)
            q *= factor

            if d == 1:
                p, q, d = p + q, Rational(0), 0

        if q == 0 or d == 0:
            p, q, d = p, Rational(0), 0

        return super(QuadSurd, cls).__new__(cls, p, q, d)

    @property
    def is_rational(self):
        """Indicate whether the surd holds a rational value."""
        return self.q == 0

    def rational(self):
        """Return value as :class:`Rational`.

        :raise ValueError: if the value is irrational.

        """
        if not self.is_rational:
            raise ValueError("{} is not rational.".format(self))

        return self.p

    def conjugate(self):
        """Return conjugate surd ``p - q*sqrt(d)``."""
        return QuadSurd(self.p, -self.q, self.d)

    def norm(self):
        """Return rational norm ``p² - q²·d``."""
        return self.p * self.p - self.q * self.q * self.d

    def sign(self):
        """Return exact sign of the surd as -1, 0 or 1."""
        sign_p = _sign(self.p)
        sign_q = _sign(self.q)

        if sign_q == 0:
            return sign_p

        if sign_p == 0 or sign_p == sign_q:
            return sign_q

        # Opposite signs: the larger magnitude wins.
        return sign_p * _sign(self.norm())

    def __repr__(self):
        return "QuadSurd({!r}, {!r}, {!r})".format(self.p, self.q, self.d)

    def __str__(self):
        if self.is_rational:
            return str(self.p)

        return "{} {} {}*sqrt({})".format(
            self.p, "-" if self.q < 0 else "+", abs(self.q), self.d
        )

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(self.d)

    def __bool__(self):
        return self.sign() != 0

    def __hash__(self):
        if self.is_rational:
            return hash(self.p)

        return hash((self.p, self.q, self.d))

    def __neg__(self):
        return QuadSurd(-self.p, -self.q, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __add__(self, other):
        pair = _align(self, other)
        if pair is None:
            return NotImplemented

        (p1, q1), (p2, q2), d = pair
        return surd_normalize(p1 + p2, q1 + q2, d)

    __radd__ = __add__

    def __sub__(self, other):
        pair = _align(self, other)
        if pair is None:
            return NotImplemented

        (p1, q1), (p2, q2), d = pair
        return surd_normalize(p1 - p2, q1 - q2, d)

    def __rsub__(self, other):
        pair = _align(other, self)
        if pair is None:
            return NotImplemented

        (p1, q1), (p2, q2), d = pair
        return surd_normalize(p1 - p2, q1 - q2, d)

    def __mul__(self, other):
        pair = _align(self, other)
        if pair is None:
            return NotImplemented

        (p1, q1), (p2, q2), d = pair
        return surd_normalize(p1 * p2 + q1 * q2 * d, p1 * q2 + p2 * q1, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        pair = _align(self, other)
        if pair is None:
            return NotImplemented

        (p1, q1), (p2, q2), d = pair
        norm = p2 * p2 - q2 * q2 * d
        if norm == 0:
            raise ZeroDivisionError("Division of {} by zero.".format(self))

        # Multiply both terms by the conjugate of the denominator.
        return surd_normalize(
            (p1 * p2 - q1 * q2 * d) / norm, (q1 * p2 - p1 * q2) / norm, d
        )

    def __rtruediv__(self, other):
        pair = _align(other, self)
        if pair is None:
            return NotImplemented

        return QuadSurd(pair[0][0], pair[0][1], pair[2]) / self

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral) or exponent < 0:
            return NotImplemented

        result = QuadSurd(1)
        for _ in range(exponent):
            result = result * self

        return result

    def __eq__(self, other):
        if not isinstance(other, (QuadSurd, numbers.Rational)):
            return NotImplemented

        try:
            return cmp(self, other) == 0
        except UnsupportedComparison:
            return False

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __lt__(self, other):
        if not isinstance(other, (QuadSurd, numbers.Rational)):
            return NotImplemented

        return cmp(self, other) < 0

    def __le__(self, other):
        if not isinstance(other, (QuadSurd, numbers.Rational)):
            return NotImplemented

        return cmp(self, other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (QuadSurd, numbers.Rational)):
            return NotImplemented

        return cmp(self, other) > 0

    def __ge__(self, other):
        if not isinstance(other, (QuadSurd, numbers.Rational)):
            return NotImplemented

        return cmp(self, other) >= 0


def _align(first, second):
    """Return both operands expressed over one common radicand.

    :return: tuple ``((p1, q1), (p2, q2), d)``, or None if one operand is not
        an exact number.

    :raise UnsupportedComparison: if both operands are irrational surds with
        radicands whose quotient is not a rational square.

    """
    terms = []
    for value in (first, second):
        if isinstance(value, QuadSurd):
            terms.append(value)
        elif isinstance(value, numbers.Rational):
            terms.append(QuadSurd(value))
        else:
            return None

    left, right = terms

    if left.d == right.d or right.is_rational:
        return (left.p, left.q), (right.p, right.q), left.d

    if left.is_rational:
        return (left.p, left.q), (right.p, right.q), right.d

    # sqrt(d2) = sqrt(d1·d2) / d1 · sqrt(d1) when d1·d2 is a square.
    product = left.d * right.d
    if not is_square(product):
        raise UnsupportedComparison(left.d, right.d)

    scale = Rational(math.isqrt(product), left.d)
    return (left.p, left.q), (right.p, right.q * scale), left.d


def surd_normalize(p, q, d):
    """Return canonical value of ``p + q*sqrt(d)``.

    :param p: rational part.

    :param q: rational coefficient of the radical.

    :param d: non-negative integer radicand.

    :raise borosmoll.exception.DomainError: if *d* is negative.

    :return: :class:`Rational` if the value is rational, :class:`QuadSurd`
        otherwise.

    Example::

        >>> surd_normalize(0, 1, 9)
        Fraction(3, 1)
        >>> surd_normalize(0, 1, 12)
        QuadSurd(Fraction(0, 1), Fraction(2, 1), 3)

    """
    value = QuadSurd(p, q, d)
    if value.is_rational:
        return value.p

    return value


def surd_sign(value):
    """Return exact sign of *value* as -1, 0 or 1.

    :param value: :class:`QuadSurd` or exact rational number.

    The sign of ``p + q*sqrt(d)`` is decided from the signs of *p* and *q*,
    comparing ``p²`` against ``q²·d`` when they disagree.

    """
    if isinstance(value, QuadSurd):
        return value.sign()

    return _sign(_rational(value))


def cmp(first, second):
    """Compare two exact values.

    :param first: :class:`QuadSurd` or exact rational number.

    :param second: :class:`QuadSurd` or exact rational number.

    :raise borosmoll.exception.UnsupportedComparison: if both values are
        irrational surds with unrelated radicands.

    :return: -1 if *first* is lower than *second*, 0 if both values are equal
        and 1 otherwise.

    """
    (p1, q1), (p2, q2), d = _align(first, second)
    return QuadSurd(p1 - p2, q1 - q2, d).sign()


def surd_floor(value):
    """Return the largest integer lower or equal to *value*."""
    if not isinstance(value, QuadSurd):
        return math.floor(_rational(value))

    if value.is_rational:
        return math.floor(value.p)

    # floor(sqrt(r)) == isqrt(floor(r)) for any rational r >= 0.
    radical = math.isqrt(math.floor(value.q * value.q * value.d))
    if value.q < 0:
        radical = -radical - 1

    estimate = math.floor(value.p) + radical

    while cmp(value, estimate) < 0:
        estimate -= 1

    while cmp(value, estimate + 1) >= 0:
        estimate += 1

    return estimate


def render(value, digits=6):
    """Return decimal string for *value* rounded to *digits* decimals.

    Rounding is half-to-even and decided with exact arithmetic. The string
    returned is only meant for display.

    :param value: :class:`QuadSurd` or exact rational number.

    :param digits: number of decimals. Default is 6.

    Example::

        >>> render(Rational(25, 7))
        '3.571429'

    """
    if digits < 1:
        raise ValueError("At least one decimal is required.")

    scaled = value * 10 ** digits
    number = surd_floor(scaled)

    half = cmp(scaled - number, Rational(1, 2))
    if half > 0 or (half == 0 and number % 2 == 1):
        number += 1

    text = str(abs(number)).rjust(digits + 1, "0")
    return "{}{}.{}".format(
        "-" if number < 0 else "", text[:-digits], text[-digits:]
    )
