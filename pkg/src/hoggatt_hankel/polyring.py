"""Dense exact polynomials and truncated power series over the rationals.

``Poly`` is a dense univariate polynomial with Fraction coefficients and no
trailing zeros.  ``TruncatedSeries`` is a power series known exactly up to a
stated order; coefficients beyond the order are undefined, never silently
zero.  On top of the ring operations this module provides (1-x)^N scaling,
formal differentiation, exact Lagrange interpolation, palindromicity and
unimodality tests, and the gamma decomposition of palindromic polynomials
p(x) = sum_j gamma_j x^j (1+x)^(n-2j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exact import DomainError, ExactError, Rational

NEG_INF = float("-inf")


class TruncationTooShort(ExactError):
    """A series is not known to high enough order to certify a result."""


class DuplicateAbscissa(ExactError, ValueError):
    """Lagrange interpolation received two points with the same abscissa."""


class NotPalindromic(ExactError, ValueError):
    """gamma_decompose() requires a palindromic coefficient sequence."""


class DegreeOverflow(ExactError):
    """A certified-zero coefficient window contained a nonzero value."""


class Poly:
    """Dense univariate polynomial over exact rationals.

    Coefficient i is the coefficient of x^i.  Trailing zeros are trimmed on
    construction; the zero polynomial has an empty coefficient tuple and
    degree -inf.  Instances are immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int | Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def monomial(cls, coeff: int | Rational, exponent: int) -> Poly:
        if exponent < 0:
            raise DomainError("monomial exponent must be >= 0")
        return cls([0] * exponent + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | float:
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int) -> Fraction:
        if i < 0:
            raise DomainError(f"coefficient index must be >= 0, got {i}")
        return self._coeffs[i] if i < len(self._coeffs) else Fraction(0)

    def is_integer(self) -> bool:
        """True if every coefficient has denominator 1."""
        return all(c.denominator == 1 for c in self._coeffs)

    def eval(self, x: int | Rational) -> Fraction:
        """Evaluate by Horner's rule."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    __call__ = eval

    def shift_down(self, e: int) -> Poly:
        """Exact division by x^e; the e lowest coefficients must vanish."""
        if e < 0:
            raise DomainError("shift exponent must be >= 0")
        if any(c != 0 for c in self._coeffs[:e]):
            raise DomainError(f"polynomial not divisible by x^{e}")
        return Poly(self._coeffs[e:])

    def primitive(self) -> tuple[Fraction, Poly]:
        """Return (scalar, q) with q = scalar * self primitive over Z.

        q has integer coefficients with content 1 and positive leading
        coefficient; the zero polynomial returns scalar 1.
        """
        if not self._coeffs:
            return Fraction(1), Poly()
        den_lcm = 1
        for c in self._coeffs:
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        ints = [c.numerator * (den_lcm // c.denominator) for c in self._coeffs]
        content = 0
        for v in ints:
            content = math.gcd(content, abs(v))
        scalar = Fraction(den_lcm, content)
        if ints[-1] < 0:
            scalar = -scalar
        return scalar, self * scalar

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: Poly) -> Poly:
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly([-c for c in self._coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Union[Poly, int, Rational]) -> Poly:
        if isinstance(other, Poly):
            if not self._coeffs or not other._coeffs:
                return Poly()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a:
                    for j, b in enumerate(other._coeffs):
                        out[i + j] += a * b
            return Poly(out)
        scalar = Fraction(other)
        return Poly([c * scalar for c in self._coeffs])

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self._coeffs]})"


class TruncatedSeries:
    """Power series known exactly up to a stated truncation order.

    Holds coefficients 0..order inclusive.  Reading past the order raises
    rather than returning a fake zero, so certifications of polynomial
    degree stay honest.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[int | Rational]):
        if len(coeffs) == 0:
            raise DomainError("a truncated series needs at least order 0")
        self._coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def geometric(cls, order: int) -> TruncatedSeries:
        """The series 1/(1-x) = 1 + x + x^2 + ... up to the given order."""
        return cls([1] * (order + 1))

    @classmethod
    def from_terms(cls, term, order: int) -> TruncatedSeries:
        """Build from a callable giving coefficient i for i = 0..order."""
        return cls([term(i) for i in range(order + 1)])

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, i: int) -> Fraction:
        if i < 0:
            raise DomainError(f"coefficient index must be >= 0, got {i}")
        if i > self.order:
            raise TruncationTooShort(
                f"coefficient {i} requested but series only known to order {self.order}"
            )
        return self._coeffs[i]

    def truncate(self, new_order: int) -> TruncatedSeries:
        if new_order > self.order:
            raise TruncationTooShort(
                f"cannot extend order {self.order} series to {new_order}"
            )
        return TruncatedSeries(self._coeffs[: new_order + 1])

    def derivative(self, b: int = 1) -> TruncatedSeries:
        """b-fold formal derivative; the order drops by b."""
        if b < 0:
            raise DomainError("derivative count must be >= 0")
        if b > self.order:
            raise TruncationTooShort(
                f"order {self.order} series cannot survive {b} derivatives"
            )
        cs = list(self._coeffs)
        for _ in range(b):
            cs = [Fraction(i + 1) * cs[i + 1] for i in range(len(cs) - 1)]
        return TruncatedSeries(cs)

    def shift_up(self, a: int) -> TruncatedSeries:
        """Multiply by x^a; the order grows by a."""
        if a < 0:
            raise DomainError("shift exponent must be >= 0")
        return TruncatedSeries((Fraction(0),) * a + self._coeffs)

    def shift_down(self, e: int) -> TruncatedSeries:
        """Exact division by x^e; the e lowest coefficients must vanish."""
        if e < 0:
            raise DomainError("shift exponent must be >= 0")
        if e > self.order:
            raise TruncationTooShort(f"cannot drop {e} coefficients of order {self.order}")
        if any(c != 0 for c in self._coeffs[:e]):
            raise DomainError(f"series not divisible by x^{e}")
        return TruncatedSeries(self._coeffs[e:])

    def scale_by_one_minus_x_power(self, n: int) -> TruncatedSeries:
        """Multiply by (1-x)^n via n backward-difference passes."""
        if n < 0:
            raise DomainError("power of (1-x) must be >= 0")
        cs = list(self._coeffs)
        for _ in range(n):
            cs = [cs[0]] + [cs[i] - cs[i - 1] for i in range(1, len(cs))]
        return TruncatedSeries(cs)

    def divide_by_one_minus_x_power(self, n: int) -> TruncatedSeries:
        """Multiply by 1/(1-x)^n via n cumulative-sum passes."""
        if n < 0:
            raise DomainError("power of (1-x) must be >= 0")
        cs = list(self._coeffs)
        for _ in range(n):
            acc = Fraction(0)
            for i in range(len(cs)):
                acc += cs[i]
                cs[i] = acc
        return TruncatedSeries(cs)

    def mul_poly(self, p: Poly) -> TruncatedSeries:
        """Exact product with a polynomial, truncated back to this order."""
        out = [Fraction(0)] * (self.order + 1)
        for j, b in enumerate(p.coeffs):
            if b:
                for i in range(self.order + 1 - j):
                    out[i + j] += self._coeffs[i] * b
        return TruncatedSeries(out)

    def to_poly(self, degree_bound: int, margin: int = 5) -> Poly:
        """Certify that the series is a polynomial of degree <= degree_bound.

        Requires the order to exceed degree_bound by at least margin so the
        zero tail is actually observed; a nonzero coefficient in the window
        (degree_bound, order] raises DegreeOverflow.
        """
        if margin < 1:
            raise DomainError("certification margin must be >= 1")
        if self.order < degree_bound + margin:
            raise TruncationTooShort(
                f"order {self.order} cannot certify degree {degree_bound} "
                f"with margin {margin}"
            )
        for i in range(degree_bound + 1, self.order + 1):
            if self._coeffs[i] != 0:
                raise DegreeOverflow(
                    f"nonzero coefficient {self._coeffs[i]} at index {i}, "
                    f"beyond claimed degree {degree_bound}"
                )
        return Poly(self._coeffs[: degree_bound + 1])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncatedSeries) and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={[str(c) for c in self._coeffs]})"


@dataclass(frozen=True)
class GammaVector:
    """Coefficients gamma_0..gamma_floor(n/2) of the palindromic decomposition.

    A degree-n palindromic polynomial p satisfies
    p(x) = sum_j gammas[j] * x^j * (1+x)^(n-2j) exactly.
    """

    gammas: tuple[Fraction, ...]
    center: int

    def reconstruct(self) -> Poly:
        total = Poly()
        base = Poly((1, 1))
        for j, g in enumerate(self.gammas):
            if g == 0:
                continue
            term = Poly.monomial(g, j)
            power = self.center - 2 * j
            for _ in range(power):
                term = term * base
            total = total + term
        return total

    @property
    def is_positive(self) -> bool:
        """True if the vector is strictly positive up to its last nonzero entry.

        This is the positivity judgment for gamma-positivity: zeros may only
        appear as a trailing run (so (1, 0, 0) passes but (1, 0, 2) fails).
        """
        last = -1
        for j, g in enumerate(self.gammas):
            if g != 0:
                last = j
        return all(g > 0 for g in self.gammas[: last + 1])

    @property
    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_eval(p: Poly, x: int | Rational) -> Fraction:
    return p.eval(x)


def scale_by_one_minus_x_power(
    f: Poly | TruncatedSeries, n: int
) -> Poly | TruncatedSeries:
    """Multiply a polynomial or series by (1-x)^n, exactly.

    Polynomials grow in degree by up to n; series keep their truncation
    order (every retained coefficient of the product only needs retained
    coefficients of the input).
    """
    if isinstance(f, TruncatedSeries):
        return f.scale_by_one_minus_x_power(n)
    if n < 0:
        raise DomainError("power of (1-x) must be >= 0")
    cs = list(f.coeffs) + [Fraction(0)] * n
    for _ in range(n):
        cs = [cs[0]] + [cs[i] - cs[i - 1] for i in range(1, len(cs))]
    return Poly(cs)


def derivative(f: TruncatedSeries, b: int) -> TruncatedSeries:
    return f.derivative(b)


def lagrange_interpolate(
    points: Sequence[tuple[int | Rational, int | Rational]]
) -> Poly:
    """The unique polynomial of degree < len(points) through all points.

    Coefficients are exact rationals; repeated abscissas are rejected.
    """
    if not points:
        raise DomainError("interpolation needs at least one point")
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation abscissas must be distinct")
    total = Poly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = Poly.one()
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * Poly((-xj, 1))
            denom *= xi - xj
        total = total + basis * (yi / denom)
    return total


def is_palindromic(p: Poly, n: int) -> bool:
    """True iff coeff(i) == coeff(n-i) for 0 <= i <= n (center n/2)."""
    if not p.is_zero() and n < p.degree:
        raise DomainError(f"palindromicity center {n} below degree {p.degree}")
    return all(p.coeff(i) == p.coeff(n - i) for i in range(n + 1))


def is_unimodal(p: Poly) -> bool:
    """True iff the coefficients weakly rise and then weakly fall."""
    cs = p.coeffs
    i = 0
    while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
        i += 1
    return i + 1 >= len(cs)


def gamma_decompose(p: Poly, n: int) -> GammaVector:
    """Peel off the unique gamma-vector of a palindromic polynomial.

    gamma_0 is the constant coefficient; subtract gamma_0 (1+x)^n, divide by
    x, and recurse with center n-2.  The reconstruction identity
    sum_j gamma_j x^j (1+x)^(n-2j) == p holds exactly for the result.
    """
    if n < 0:
        raise DomainError("decomposition center must be >= 0")
    if not is_palindromic(p, n):
        raise NotPalindromic(f"coefficients are not palindromic around {n}/2")
    work = list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p.coeffs))
    gammas = []
    m = n
    while m >= 0:
        g = work[0]
        gammas.append(g)
        for i in range(m + 1):
            work[i] -= g * math.comb(m, i)
        work = work[1:]
        m -= 2
    if any(c != 0 for c in work):
        raise NotPalindromic("nonzero residue after peeling all centers")
    return GammaVector(tuple(gammas), n)


def gamma_positivity(p: Poly, n: int) -> tuple[bool, GammaVector | None, bool]:
    """Auditable gamma-positivity verdict: (palindromic?, vector, positive?)."""
    if not is_palindromic(p, n):
        return False, None, False
    gv = gamma_decompose(p, n)
    return True, gv, gv.is_positive
