import math
import random
from fractions import Fraction

import pytest

from hoggatt_hankel.exact import DomainError
from hoggatt_hankel.hankel import (
    HankelMatrix,
    HankelParams,
    build_matrix,
    check_condensation,
    check_condensation_ratios,
    determinant_cofactor,
    determinant_fraction_free,
    determinant_sign,
    hankel_determinant,
    signed_hankel_determinant,
)
from hoggatt_hankel.hoggatt import hoggatt_binomial
from hoggatt_hankel.polyring import lagrange_interpolate
from hoggatt_hankel.conjectures import s_weight


class TestParams:
    def test_validation(self):
        with pytest.raises(DomainError):
            HankelParams(-1, 0, 1)
        with pytest.raises(DomainError):
            HankelParams(0, -1, 1)
        with pytest.raises(DomainError):
            HankelParams(0, 0, 1, 0)


class TestBuildMatrix:
    def test_binomial_entries(self):
        m = build_matrix(HankelParams(2, 2, 2, 1))
        assert m.entries == ((1, 3), (3, 6))

    def test_all_ones(self):
        m = build_matrix(HankelParams(0, 0, 3, 1))
        assert m.entries == ((1, 1, 1),) * 3

    def test_hoggatt_entries(self):
        m = build_matrix(HankelParams(1, 2, 2, 2))
        assert m.entries == ((0, 1), (1, 6))

    def test_anti_diagonal_invariant_enforced(self):
        with pytest.raises(DomainError):
            HankelMatrix(((1, 2), (3, 4)), HankelParams(0, 0, 2, 1))

    def test_non_square_rejected(self):
        with pytest.raises(DomainError):
            HankelMatrix(((1, 2),), HankelParams(0, 0, 2, 1))


class TestDeterminants:
    def test_two_by_two(self):
        assert determinant_fraction_free([[1, 3], [3, 6]]) == -3

    def test_identity(self):
        identity = [[int(i == j) for j in range(4)] for i in range(4)]
        assert determinant_fraction_free(identity) == 1

    def test_empty_matrix(self):
        assert determinant_fraction_free([]) == 1
        assert determinant_cofactor([]) == 1

    def test_zero_pivot_handled(self):
        matrix = [[0, 1, 2], [1, 0, 3], [2, 3, 0]]
        assert determinant_fraction_free(matrix) == determinant_cofactor(matrix) == 16

    def test_singular(self):
        matrix = [[1, 2, 3], [2, 4, 6], [1, 1, 1]]
        assert determinant_fraction_free(matrix) == 0

    def test_matches_cofactor_on_random_matrices(self):
        rng = random.Random(20260810)
        for _ in range(200):
            n = rng.randint(1, 5)
            matrix = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert determinant_fraction_free(matrix) == determinant_cofactor(matrix)

    def test_accepts_hankel_matrix(self):
        m = build_matrix(HankelParams(2, 2, 2, 1))
        assert determinant_fraction_free(m) == determinant_cofactor(m) == -3


class TestHankelDeterminant:
    def test_printed_sequences(self):
        assert [-hankel_determinant(k, 4, 3) for k in range(7)] == [0, 0, 1, 10, 50, 175, 490]
        assert [-hankel_determinant(k, 3, 3) for k in range(6)] == [0, 1, 4, 10, 20, 35]

    def test_size_one_is_binomial(self):
        for m in range(0, 6):
            for k in range(0, 12):
                assert hankel_determinant(k, m, 1) == math.comb(k, m)

    def test_signed_example(self):
        assert hankel_determinant(2, 3, 2) == -6
        assert determinant_cofactor(build_matrix(HankelParams(2, 3, 2, 1))) == -6

    def test_size_zero_convention(self):
        assert hankel_determinant(5, 3, 0) == 1
        assert hankel_determinant(2, 3, 0) == 0
        assert hankel_determinant(0, 4, 0, s=2) == 1

    def test_vanishing_band(self):
        for r in range(1, 5):
            for m in range(r - 1, 9):
                for k in range(0, m - r + 1):
                    assert hankel_determinant(k, m, r) == 0

    def test_band_boundary_is_sign(self):
        # the first nonzero value, at k = m-r+1, is exactly the sign
        for r in range(1, 6):
            for m in range(r - 1, 10):
                k = m - r + 1
                assert hankel_determinant(k, m, r) == determinant_sign(r)

    def test_signed_equals_hoggatt_column(self):
        for r in range(1, 5):
            for m in range(r - 1, 9):
                for k in range(0, 13):
                    assert signed_hankel_determinant(k, m, r) == hoggatt_binomial(
                        k, m - r + 1, r
                    )

    def test_polynomial_degree_in_k(self):
        # k -> d_k(s, m, r) agrees with a polynomial of degree r(ms - r + 1)
        for s, m, r in [(1, 4, 3), (1, 5, 2), (2, 3, 2), (2, 3, 3), (3, 2, 2)]:
            degree = r * (m * s - r + 1)
            points = [(k, hankel_determinant(k, m, r, s)) for k in range(degree + 1)]
            fitted = lagrange_interpolate(points)
            assert fitted.degree == degree
            for k in range(degree + 1, degree + 6):
                assert fitted.eval(k) == hankel_determinant(k, m, r, s)


class TestCondensation:
    def test_interior_point(self):
        assert check_condensation(3, 4, 3).status == "pass"

    def test_boundary_uses_size_zero_convention(self):
        report = check_condensation(0, 2, 2)
        assert report.status == "pass"
        assert "size-0 convention" in report.notes

    def test_hoggatt_entries_point(self):
        assert check_condensation(2, 2, 3, s=2).status == "pass"

    def test_small_grid(self):
        for r in range(2, 5):
            for m in range(r - 1, 8):
                for k in range(0, 6):
                    assert check_condensation(k, m, r).status == "pass"

    def test_normalized_form_noted(self):
        report = check_condensation(4, 3, 2)
        assert "normalized quotient sum = 1" in report.notes

    def test_size_below_two_rejected(self):
        with pytest.raises(DomainError):
            check_condensation(0, 2, 1)


class TestCondensationRatios:
    def test_interior_point(self):
        report = check_condensation_ratios(5, 6, 3)
        assert report.status == "pass"

    def test_pole_is_skipped(self):
        # k = m - r + 1 sits on the vanishing band: middle product is zero
        report = check_condensation_ratios(2, 4, 3)
        assert report.status == "skipped"

    def test_closed_form_denominator_pole_skipped(self):
        # k + 2r - m - 2 = 0 at (k=4, m=10, r=4)
        report = check_condensation_ratios(4, 10, 4)
        assert report.status == "skipped"

    def test_first_quotient_is_weight_ratio(self):
        # the first closed form equals S_{r-1} / S_{r-2} of the staircase
        k, m, r = 10, 9, 4
        ratio = s_weight(1, m, r, r - 1, k) / s_weight(1, m, r, r - 2, k)
        assert ratio == Fraction((r - 1) * (m - r + 2), (k + 1) * (k + 2 * r - m - 2))

    def test_random_pole_free_points(self):
        rng = random.Random(99)
        passes = 0
        while passes < 60:
            r = rng.randint(2, 6)
            m = rng.randint(r - 1, 12)
            k = rng.randint(0, 20)
            report = check_condensation_ratios(k, m, r)
            if report.status == "pass":
                passes += 1
            else:
                assert report.status == "skipped"
