"""Exact scalar arithmetic: rational numbers, rising factorials, binomials.

Every quantity in this package is an exact integer or an exact rational.
``Rational`` is the universal scalar type; it is the standard-library
``fractions.Fraction``, which keeps values in canonical form (positive
denominator, gcd(numerator, denominator) = 1) at all times and never rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


class ExactError(Exception):
    """Base class for errors raised by the exact-arithmetic layer."""


class ZeroDenominator(ExactError, ZeroDivisionError):
    """A reciprocal rising-factorial product contained a zero factor."""


class NegativeN(ExactError, ValueError):
    """binomial() was called with a negative upper index."""


class DomainError(ExactError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class PoleEncountered(ExactError):
    """A rational-function evaluation hit a pole at the requested point."""


def rising_factorial(x: int | Rational, r: int) -> Rational:
    """Return x^(r) = x(x+1)...(x+r-1), extended to all integer exponents.

    For r = 0 the empty product is 1.  For r < 0 the value is the reciprocal
    product 1 / ((x-1)(x-2)...(x+r)), which has |r| factors; a zero factor
    there raises ZeroDenominator.  The base may be rational.
    """
    x = Fraction(x)
    if r >= 0:
        prod = Fraction(1)
        for i in range(r):
            prod *= x + i
        return prod
    prod = Fraction(1)
    for i in range(1, -r + 1):
        factor = x - i
        if factor == 0:
            raise ZeroDenominator(f"rising factorial pole: base {x}, exponent {r}")
        prod *= factor
    return 1 / prod


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); 0 outside 0 <= k <= n.

    Negative n is rejected: nothing in this package needs the extension of
    the upper index to negative integers.
    """
    if n < 0:
        raise NegativeN(f"binomial upper index must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    """Exact n! for n >= 0."""
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return math.factorial(n)
