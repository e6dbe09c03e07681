import math
from fractions import Fraction

import pytest

from hoggatt_hankel.exact import DomainError
from hoggatt_hankel.hoggatt import (
    TooLarge,
    hoggatt_basic,
    hoggatt_basic_rising,
    hoggatt_binomial,
    l_factorization,
    row_genfun_hypergeometric,
    ssyt_count_bruteforce,
    triangle,
)
from hoggatt_hankel.polyring import (
    Poly,
    gamma_decompose,
    is_palindromic,
    is_unimodal,
    lagrange_interpolate,
)


class TestBasic:
    def test_values(self):
        assert hoggatt_basic(1, 3) == 1
        assert hoggatt_basic(2, 2) == 3
        assert hoggatt_basic(4, 2) == 10

    def test_triangle_numbers(self):
        assert [hoggatt_basic(n, 2) for n in range(1, 5)] == [1, 3, 6, 10]

    def test_rejects_n_below_one(self):
        with pytest.raises(DomainError):
            hoggatt_basic(0, 3)

    def test_rising_factorial_form_agrees(self):
        # the two closed forms of <n>_r must coincide
        for n in range(1, 9):
            for r in range(1, 9):
                assert hoggatt_basic_rising(n, r) == hoggatt_basic(n, r)


class TestHoggattBinomial:
    def test_printed_triangle_entries(self):
        assert hoggatt_binomial(4, 2, 3) == 50
        assert hoggatt_binomial(7, 3, 3) == 4116
        assert hoggatt_binomial(6, 2, 3) == 490

    def test_out_of_range_zero(self):
        assert hoggatt_binomial(5, 7, 3) == 0
        assert hoggatt_binomial(5, -1, 3) == 0

    def test_r1_is_binomial(self):
        for n in range(0, 12):
            for k in range(0, n + 1):
                assert hoggatt_binomial(n, k, 1) == math.comb(n, k)

    def test_r2_closed_form(self):
        # <n k>_2 = C(n,k) C(n+1,k) / (k+1)
        for n in range(0, 12):
            for k in range(0, n + 1):
                expected = math.comb(n, k) * math.comb(n + 1, k) // (k + 1)
                assert hoggatt_binomial(n, k, 2) == expected


class TestLFactorization:
    def test_column_one_dimension_three(self):
        factors = l_factorization(5, 1, 3)
        assert [f.j for f in factors] == [0, 1, 2]
        assert math.prod(f.value for f in factors) == math.comb(7, 3) == 35

    def test_single_factor(self):
        factors = l_factorization(3, 3, 1)
        assert len(factors) == 1 and factors[0].value == 1

    def test_dimension_two(self):
        factors = l_factorization(4, 2, 2)
        product = math.prod(f.value for f in factors)
        assert product == Fraction(math.comb(4, 2) * math.comb(5, 2), 3) == 20

    def test_matches_quotient_route(self):
        for r in range(1, 5):
            for n in range(0, 9):
                for k in range(0, n + 1):
                    product = math.prod(f.value for f in l_factorization(n, k, r))
                    assert product == hoggatt_binomial(n, k, r)

    def test_out_of_range_rejected(self):
        with pytest.raises(DomainError):
            l_factorization(3, 5, 2)


class TestRowGenfun:
    def test_row_two(self):
        assert row_genfun_hypergeometric(2, 3, 1) == 6  # row 1, 4, 1

    def test_empty_row(self):
        assert row_genfun_hypergeometric(0, 5, Fraction(7, 3)) == 1

    def test_row_three_at_two(self):
        # row 1, 10, 10, 1 evaluated at t=2: 1 + 20 + 40 + 8
        assert row_genfun_hypergeometric(3, 3, 2) == 69

    def test_matches_row_sums(self):
        for n in range(0, 11):
            for r in range(1, 5):
                expected = sum(hoggatt_binomial(n, k, r) for k in range(n + 1))
                assert row_genfun_hypergeometric(n, r, 1) == expected

    def test_rational_argument(self):
        t = Fraction(1, 2)
        for n in range(0, 7):
            expected = sum(hoggatt_binomial(n, k, 2) * t**k for k in range(n + 1))
            assert row_genfun_hypergeometric(n, 2, t) == expected


class TestSsyt:
    def test_tiny_shapes(self):
        assert ssyt_count_bruteforce(2, 1, 2) == 3  # (1,1), (1,2), (2,2)
        assert ssyt_count_bruteforce(1, 1, 5) == 1

    def test_printed_entry(self):
        assert ssyt_count_bruteforce(4, 2, 3) == 50

    def test_single_column_is_subset_count(self):
        for n in range(1, 7):
            for k in range(1, n + 1):
                assert ssyt_count_bruteforce(n, k, 1) == math.comb(n, k)

    def test_weakly_increasing_pairs(self):
        for n in range(1, 8):
            assert ssyt_count_bruteforce(n, 1, 2) == math.comb(n + 1, 2)

    def test_guard(self):
        with pytest.raises(TooLarge):
            ssyt_count_bruteforce(3, 5, 4)

    def test_agrees_with_quotient_route(self):
        for n in range(1, 7):
            for k in range(1, 5):
                for r in range(1, 5):
                    if k * r > 12:
                        continue
                    assert ssyt_count_bruteforce(n, k, r) == hoggatt_binomial(n, k, r)


class TestTriangle:
    def test_dimension_three(self):
        assert triangle(3, 5)[-1] == [1, 20, 50, 20, 1]

    def test_dimension_one_is_pascal(self):
        assert triangle(1, 4) == [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1]]

    def test_dimension_two_row_three(self):
        rows = triangle(2, 4)
        expected = [math.comb(3, k) * math.comb(4, k) // (k + 1) for k in range(4)]
        assert rows[3] == expected == [1, 6, 6, 1]


class TestRowProperties:
    def test_symmetry(self):
        for r in range(1, 6):
            for n in range(0, 21):
                for k in range(0, n + 1):
                    assert hoggatt_binomial(n, k, r) == hoggatt_binomial(n, n - k, r)

    def test_unimodality(self):
        for r in range(1, 6):
            for n in range(0, 21):
                row = Poly([hoggatt_binomial(n, k, r) for k in range(n + 1)])
                assert is_unimodal(row)

    def test_rows_gamma_nonnegative(self):
        for r in range(1, 5):
            for n in range(0, 15):
                row = Poly([hoggatt_binomial(n, k, r) for k in range(n + 1)])
                assert is_palindromic(row, n)
                gv = gamma_decompose(row, n)
                assert gv.gammas[0] == 1
                assert gv.is_nonnegative

    def test_polynomial_degree_in_n(self):
        # for fixed (k, r) the map n -> <n k>_r is a polynomial of degree k*r
        for k, r in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2), (2, 4)]:
            degree = k * r
            points = [(n, hoggatt_binomial(n, k, r)) for n in range(degree + 1)]
            fitted = lagrange_interpolate(points)
            assert fitted.degree == degree
            for n in range(degree + 1, degree + 6):
                assert fitted.eval(n) == hoggatt_binomial(n, k, r)
