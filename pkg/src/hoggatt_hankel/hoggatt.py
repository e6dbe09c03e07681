"""Hoggatt binomials: r-dimensional analogs of the binomial coefficients.

The r-Hoggatt binomial <n k>_r generalizes C(n, k) (which is the r = 1
case); it counts semistandard Young tableaux of rectangular shape with r
columns and k rows filled from {1..n}.  Rows of fixed n form the r-Hoggatt
triangle, a Pascal-triangle analog whose rows are palindromic, unimodal and
gamma-positive.

Four independent routes to the same numbers live here:

* ``hoggatt_binomial`` -- the quotient prod_j C(n+j, k) / C(k+j, k),
  evaluated exactly and asserted integral;
* ``l_factorization`` -- the product of r rising-factorial ratios
  L_j = (n+1-k+j)^(k+r-1-2j) / (1+j)^(k+r-1-2j), where the exponents may
  be negative;
* ``row_genfun_hypergeometric`` -- the terminating hypergeometric sum for a
  whole row's generating function;
* ``ssyt_count_bruteforce`` -- literal tableau enumeration, the
  combinatorial ground truth for small shapes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, ExactError, Rational, rising_factorial


class TooLarge(ExactError):
    """Brute-force enumeration refused: the shape exceeds the guard."""


SSYT_CELL_GUARD = 16


@dataclass(frozen=True)
class HoggattParams:
    """Parameter bundle (n, k, r) for <n k>_r; out-of-range k is legal."""

    n: int
    k: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"row index n must be >= 0, got {self.n}")
        if self.r < 1:
            raise DomainError(f"dimension r must be >= 1, got {self.r}")


@dataclass(frozen=True)
class LFactor:
    """One factor L_j of the rising-factorial product for <n k>_r."""

    j: int
    value: Fraction


def hoggatt_basic(n: int, r: int) -> int:
    """The basic sequence <n>_r = C(n+r-1, r) for n >= 1."""
    if n < 1:
        raise DomainError(f"hoggatt_basic needs n >= 1, got {n}")
    if r < 1:
        raise DomainError(f"dimension r must be >= 1, got {r}")
    return math.comb(n + r - 1, r)


def hoggatt_basic_rising(n: int, r: int) -> Fraction:
    """Alternative form (r+1)^(n-1) / (1)^(n-1) of the basic sequence.

    Kept as an independent expression so tests can confirm it agrees with
    C(n+r-1, r).
    """
    if n < 1 or r < 1:
        raise DomainError("hoggatt_basic_rising needs n >= 1 and r >= 1")
    return rising_factorial(r + 1, n - 1) / rising_factorial(1, n - 1)


def hoggatt_binomial(n: int, k: int, r: int) -> int:
    """<n k>_r, an exact integer; 0 outside 0 <= k <= n.

    Computed as the quotient prod_{j=0}^{r-1} C(n+j, k) / C(k+j, k), which
    keeps intermediates small compared with factorial quotients.  The result
    is asserted integral, which doubles as a self-check of the route.
    """
    if r < 1:
        raise DomainError(f"dimension r must be >= 1, got {r}")
    if n < 0 or k < 0 or k > n:
        return 0
    value = Fraction(1)
    for j in range(r):
        value *= Fraction(math.comb(n + j, k), math.comb(k + j, k))
    if value.denominator != 1:
        raise ArithmeticError(
            f"binomial quotient for (n={n}, k={k}, r={r}) is not integral: {value}"
        )
    return value.numerator


def l_factorization(n: int, k: int, r: int) -> list[LFactor]:
    """The r factors whose product is <n k>_r, for 0 <= k <= n.

    L_j = (n+1-k+j)^(k+r-1-2j) / (1+j)^(k+r-1-2j); for large j the shared
    exponent goes negative and both rising factorials become reciprocal
    products.
    """
    if r < 1:
        raise DomainError(f"dimension r must be >= 1, got {r}")
    if not 0 <= k <= n:
        raise DomainError(f"l_factorization needs 0 <= k <= n, got n={n}, k={k}")
    factors = []
    for j in range(r):
        e = k + r - 1 - 2 * j
        value = rising_factorial(n + 1 - k + j, e) / rising_factorial(1 + j, e)
        factors.append(LFactor(j, value))
    return factors


def hypergeometric_terminating(
    upper: list[int | Rational],
    lower: list[int | Rational],
    z: int | Rational,
    max_terms: int,
) -> Fraction:
    """Sum of a hypergeometric series that terminates within max_terms.

    Terms are prod_i (a_i)^(k) / prod_i (b_i)^(k) * z^k / k!; summation stops
    once a term vanishes (a nonpositive-integer upper parameter has been
    exhausted) or max_terms have been added.
    """
    z = Fraction(z)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(max_terms + 1):
        total += term
        ratio = Fraction(1)
        for a in upper:
            ratio *= Fraction(a) + k
        for b in lower:
            ratio /= Fraction(b) + k
        term = term * ratio * z / (k + 1)
        if term == 0:
            break
    return total


def row_genfun_hypergeometric(n: int, r: int, t: int | Rational) -> Fraction:
    """Row generating function sum_k <n k>_r t^k via a hypergeometric sum.

    Evaluates the terminating series with upper parameters -n, ..., -n-r+1,
    lower parameters 2, ..., r and argument (-1)^r t; the first upper
    parameter kills every term past k = n.
    """
    if n < 0 or r < 1:
        raise DomainError("row_genfun_hypergeometric needs n >= 0 and r >= 1")
    upper = [-n - i for i in range(r)]
    lower = list(range(2, r + 1))
    z = Fraction((-1) ** r) * Fraction(t)
    return hypergeometric_terminating(upper, lower, z, max_terms=n + 1)


def ssyt_count_bruteforce(n: int, k: int, r: int) -> int:
    """Count semistandard Young tableaux of shape r^k by backtracking.

    Fillings of a k-row, r-column box with entries in {1..n}, rows weakly
    increasing and columns strictly increasing.  Guarded to k*r <= 16 cells;
    the count equals hoggatt_binomial(n, k, r).
    """
    if n < 1 or k < 1 or r < 1:
        raise DomainError("ssyt_count_bruteforce needs n, k, r >= 1")
    if k * r > SSYT_CELL_GUARD:
        raise TooLarge(f"shape {r}^{k} has {k * r} cells > guard {SSYT_CELL_GUARD}")
    grid = [[0] * r for _ in range(k)]

    def fill(pos: int) -> int:
        if pos == k * r:
            return 1
        i, j = divmod(pos, r)
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        hi = n - (k - 1 - i)  # room for a strictly increasing column below
        count = 0
        for v in range(lo, hi + 1):
            grid[i][j] = v
            count += fill(pos + 1)
        grid[i][j] = 0
        return count

    return fill(0)


def triangle(r: int, rows: int) -> list[list[int]]:
    """Rows n = 0..rows-1 of the r-Hoggatt triangle, entries <n k>_r."""
    if r < 1 or rows < 1:
        raise DomainError("triangle needs r >= 1 and rows >= 1")
    return [[hoggatt_binomial(n, k, r) for k in range(n + 1)] for n in range(rows)]
