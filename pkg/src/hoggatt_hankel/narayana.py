"""Higher-dimensional Narayana and Catalan numbers, and the A polynomials.

The dimension-r Narayana numbers N(r, s, j) are defined operationally by
generating-function extraction:

    (1-x)^(rs+1) * sum_k <k+s s>_r x^k  =  sum_j N(r, s, j) x^j,

a polynomial of degree (r-1)(s-1) whose coefficients are positive integers
summing to the r-dimensional Catalan number
C_{r,s} = (rs)! * prod_{j<r} j!/(s+j)!.

The same polynomials reappear as A_{m,r}(x) in the scaled generating
function of the size-r Hankel determinants of binomial column m:

    (1-x)^(r(m-r+1)+1) * sum_k d_k(m, r) x^k
        = (-1)^C(r,2) x^(m-r+1) A_{m,r}(x),

with A_{m,r} = sum_j N(r, m-r+1, j) x^j.  A third, independent route goes
through the differential operator F_n(a, b, x) = (x^a D^b)^n 1/(1-x):

    A_{m,r}(x) = (1-x)^(r(m-r+1)+1) F_{m-r+1}(r-1, r, x)
                 / (x^(r-1) prod_{j<r} (m+j+1-r)!/j!)        (m >= r).

All three routes are implemented and cross-checked against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, ExactError
from .hankel import determinant_sign, hankel_determinant
from .hoggatt import hoggatt_binomial
from .polyring import Poly, TruncatedSeries

DEFAULT_MARGIN = 5


class MismatchReported(ExactError):
    """Two supposedly equal computation routes produced different values."""


@dataclass(frozen=True)
class NarayanaTable:
    """Row s of the dimension-r Narayana numbers, as a polynomial."""

    r: int
    s: int
    coeffs: Poly

    @classmethod
    def build(cls, r: int, s: int, margin: int = DEFAULT_MARGIN) -> NarayanaTable:
        return cls(r, s, narayana_poly(r, s, margin))

    @property
    def row_sum(self) -> int:
        value = self.coeffs.eval(1)
        return value.numerator


@dataclass(frozen=True)
class APoly:
    """The polynomial A_{m,r}(x) together with its parameters."""

    m: int
    r: int
    poly: Poly


def catalan_r(r: int, n: int) -> int:
    """The r-dimensional Catalan number C_{r,n} = (rn)! prod_{j<r} j!/(n+j)!.

    Symmetric in (r, n); C_{1,n} = 1 and C_{2,n} is the classical Catalan
    number.
    """
    if r < 1 or n < 0:
        raise DomainError("catalan_r needs r >= 1 and n >= 0")
    value = Fraction(math.factorial(r * n))
    for j in range(r):
        value *= Fraction(math.factorial(j), math.factorial(n + j))
    if value.denominator != 1:
        raise ArithmeticError(f"catalan_r({r}, {n}) is not integral: {value}")
    return value.numerator


def narayana_poly(r: int, s: int, margin: int = DEFAULT_MARGIN) -> Poly:
    """sum_j N(r, s, j) x^j extracted from the Hoggatt column series.

    Builds sum_k <k+s s>_r x^k to a certified order, multiplies by
    (1-x)^(rs+1), and checks that everything beyond degree (r-1)(s-1)
    vanishes (DegreeOverflow otherwise).  The result has integer
    coefficients; s = 0 is allowed and gives the constant 1.
    """
    if r < 1 or s < 0:
        raise DomainError("narayana_poly needs r >= 1 and s >= 0")
    degree_bound = max(0, (r - 1) * (s - 1))
    order = r * s + 1 + degree_bound + margin
    series = TruncatedSeries.from_terms(
        lambda k: hoggatt_binomial(k + s, s, r), order
    )
    product = series.scale_by_one_minus_x_power(r * s + 1)
    poly = product.to_poly(degree_bound, margin)
    if not poly.is_integer():
        raise ArithmeticError(f"narayana_poly({r}, {s}) has non-integer coefficients")
    return poly


def hankel_column_series(m: int, r: int, order: int, s: int = 1) -> TruncatedSeries:
    """sum_k d_k(s, m, r) x^k up to the given order."""
    return TruncatedSeries.from_terms(lambda k: hankel_determinant(k, m, r, s), order)


def a_poly_via_determinants(
    m: int, r: int, margin: int = DEFAULT_MARGIN, cross_check: bool = True
) -> APoly:
    """A_{m,r} extracted from the generating function of d_k(m, r).

    Scales the determinant series by (1-x)^(r(m-r+1)+1), certifies the
    result is a polynomial, strips the sign (-1)^C(r,2) and the factor
    x^(m-r+1), and (by default) asserts agreement with the Narayana-route
    polynomial, raising MismatchReported on any structural failure.
    """
    if r < 1 or m < r - 1:
        raise DomainError("a_poly_via_determinants needs r >= 1 and m >= r-1")
    shift = m - r + 1
    degree = max(0, (r - 1) * (m - r))
    scale = r * (m - r + 1) + 1
    order = shift + degree + margin
    series = hankel_column_series(m, r, order)
    product = series.scale_by_one_minus_x_power(scale)
    poly = product.to_poly(shift + degree, margin)
    try:
        stripped = poly.shift_down(shift)
    except DomainError as exc:
        raise MismatchReported(f"low coefficients not zero for (m={m}, r={r}): {exc}")
    a_poly = stripped * determinant_sign(r)
    if cross_check:
        expected = narayana_poly(r, m - r + 1, margin)
        if a_poly != expected:
            raise MismatchReported(
                f"determinant route disagrees with Narayana route at (m={m}, r={r}): "
                f"{a_poly!r} vs {expected!r}"
            )
    return APoly(m, r, a_poly)


def f_operator(n: int, a: int, b: int, order: int) -> TruncatedSeries:
    """(x^a D^b)^n applied to 1/(1-x), as a truncated series.

    Starts from the geometric series at the stated order and alternates
    b-fold differentiation with multiplication by x^a, n times.  The order
    shrinks by b and grows by a per round; TruncationTooShort is raised if
    the series is exhausted.
    """
    if n < 0 or a < 0 or b < 1:
        raise DomainError("f_operator needs n >= 0, a >= 0, b >= 1")
    series = TruncatedSeries.geometric(order)
    for _ in range(n):
        series = series.derivative(b).shift_up(a)
    return series


def a_poly_via_operator(
    m: int, r: int, margin: int = DEFAULT_MARGIN, cross_check: bool = True
) -> APoly:
    """A_{m,r} via the differential-operator route, valid for m >= r.

    Computes (1-x)^(r(m-r+1)+1) F_{m-r+1}(r-1, r, x), divides by x^(r-1)
    and by the constant prod_{j<r} (m+j+1-r)!/j!, and certifies the result.
    The boundary m = r-1 returns the constant polynomial 1 directly.
    """
    if r < 1 or m < r - 1:
        raise DomainError("a_poly_via_operator needs r >= 1 and m >= r-1")
    if m == r - 1:
        return APoly(m, r, Poly.one())
    applications = m - r + 1
    degree = max(0, (r - 1) * (m - r))
    order = degree + margin + applications + (r - 1)
    series = f_operator(applications, r - 1, r, order)
    series = series.scale_by_one_minus_x_power(r * (m - r + 1) + 1)
    try:
        series = series.shift_down(r - 1)
    except DomainError as exc:
        raise MismatchReported(f"operator route low coefficients nonzero: {exc}")
    constant = Fraction(1)
    for j in range(r):
        constant *= Fraction(math.factorial(m + j + 1 - r), math.factorial(j))
    poly = series.to_poly(degree, margin) * (1 / constant)
    if cross_check:
        expected = a_poly_via_determinants(m, r, margin, cross_check=False).poly
        if poly != expected:
            raise MismatchReported(
                f"operator route disagrees with determinant route at (m={m}, r={r})"
            )
    return APoly(m, r, poly)
