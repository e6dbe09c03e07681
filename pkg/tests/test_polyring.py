import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hoggatt_hankel.exact import DomainError
from hoggatt_hankel.hoggatt import hoggatt_binomial
from hoggatt_hankel.polyring import (
    DegreeOverflow,
    DuplicateAbscissa,
    GammaVector,
    NotPalindromic,
    Poly,
    TruncatedSeries,
    TruncationTooShort,
    gamma_decompose,
    gamma_positivity,
    is_palindromic,
    is_unimodal,
    lagrange_interpolate,
    poly_add,
    poly_eval,
    poly_mul,
    scale_by_one_minus_x_power,
)


class TestPoly:
    def test_trailing_zeros_trimmed(self):
        assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
        assert Poly((0, 0)).is_zero()

    def test_zero_degree_sentinel(self):
        assert Poly().degree == float("-inf")
        assert Poly((7,)).degree == 0

    def test_eval_horner(self):
        p = Poly((1, 3, 1))
        # value at 1 should be 5, the 3-dimensional Catalan number for
        # index 2: 6! * 0!1!2! / (2!3!4!) = 5
        oracle = math.factorial(6) * 2 // (2 * 6 * 24)
        assert poly_eval(p, 1) == 5 == oracle
        assert poly_eval(Poly(), 7) == 0

    def test_mul(self):
        assert poly_mul(Poly((1, 1)), Poly((1, -1))) == Poly((1, 0, -1))

    def test_add(self):
        assert poly_add(Poly((1, 2)), Poly((0, -2, 3))) == Poly((1, 0, 3))

    def test_scalar_mul_and_shift_down(self):
        p = Poly((0, 0, 2, 4))
        assert (p * Fraction(1, 2)).coeffs == (0, 0, 1, 2)
        assert p.shift_down(2).coeffs == (2, 4)
        with pytest.raises(DomainError):
            Poly((1, 2)).shift_down(1)

    def test_primitive(self):
        scalar, prim = Poly((Fraction(-2, 3), Fraction(-4, 3))).primitive()
        assert prim == Poly((1, 2))
        assert scalar == Fraction(-3, 2)
        assert Poly().primitive() == (1, Poly())


class TestScaleByOneMinusX:
    def test_all_ones_collapses(self):
        series = TruncatedSeries([1] * 11)
        scaled = series.scale_by_one_minus_x_power(1)
        assert scaled.coeffs == (1,) + (0,) * 10

    def test_binomial_column_collapses_to_one(self):
        series = TruncatedSeries.from_terms(lambda k: math.comb(k + 2, 2), 12)
        assert series.scale_by_one_minus_x_power(3).to_poly(0, 5) == Poly.one()

    def test_hoggatt_column_gives_narayana_row(self):
        series = TruncatedSeries.from_terms(lambda k: hoggatt_binomial(k + 2, 2, 3), 12)
        assert series.scale_by_one_minus_x_power(7).to_poly(2, 5) == Poly((1, 3, 1))

    def test_poly_input(self):
        assert scale_by_one_minus_x_power(Poly((1, 1)), 1) == Poly((1, 0, -1))

    def test_divide_back_roundtrip(self):
        rng = random.Random(7)
        series = TruncatedSeries([rng.randint(-5, 5) for _ in range(15)])
        for n in (1, 2, 4):
            back = series.scale_by_one_minus_x_power(n).divide_by_one_minus_x_power(n)
            assert back == series

    def test_to_poly_needs_margin(self):
        series = TruncatedSeries([1, 0, 0])
        with pytest.raises(TruncationTooShort):
            series.to_poly(0, margin=5)

    def test_to_poly_degree_overflow(self):
        series = TruncatedSeries([1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0])
        with pytest.raises(DegreeOverflow):
            series.to_poly(0, margin=5)


class TestDerivative:
    def test_geometric_derivative(self):
        d = TruncatedSeries.geometric(5).derivative(1)
        assert d.coeffs == tuple(Fraction(i + 1) for i in range(5))

    def test_second_derivative_of_cube(self):
        cube = TruncatedSeries([0, 0, 0, 1, 0, 0])
        assert cube.derivative(2).coeffs == (0, 6, 0, 0)

    def test_triple_derivative_termwise(self):
        d3 = TruncatedSeries.geometric(9).derivative(3)
        for i in range(d3.order + 1):
            assert d3.coeff(i) == (i + 1) * (i + 2) * (i + 3)

    def test_order_exhaustion(self):
        with pytest.raises(TruncationTooShort):
            TruncatedSeries.geometric(2).derivative(3)

    def test_coeff_past_order_refused(self):
        with pytest.raises(TruncationTooShort):
            TruncatedSeries.geometric(3).coeff(4)


class TestLagrange:
    def test_constant(self):
        assert lagrange_interpolate([(0, 9)]) == Poly((9,))

    def test_square(self):
        assert lagrange_interpolate([(0, 0), (1, 1), (2, 4)]) == Poly((0, 0, 1))

    def test_binomial_cubic(self):
        points = [(k, math.comb(k, 3)) for k in range(4)]
        cubic = lagrange_interpolate(points)
        assert cubic == Poly((0, Fraction(2, 6), Fraction(-3, 6), Fraction(1, 6)))
        assert cubic.eval(7) == math.comb(7, 3) == 35

    def test_duplicate_abscissa(self):
        with pytest.raises(DuplicateAbscissa):
            lagrange_interpolate([(1, 1), (1, 2)])

    def test_exactness_on_random_polys(self):
        rng = random.Random(11)
        for _ in range(30):
            degree = rng.randint(0, 6)
            target = Poly([rng.randint(-9, 9) for _ in range(degree)] + [rng.randint(1, 9)])
            xs = rng.sample(range(-20, 21), degree + 1)
            recovered = lagrange_interpolate([(x, target.eval(x)) for x in xs])
            assert recovered == target
            fresh = max(xs) + 3
            assert recovered.eval(fresh) == target.eval(fresh)


class TestPalindromicUnimodal:
    def test_palindromic(self):
        assert is_palindromic(Poly((1, 3, 1)), 2)
        assert not is_palindromic(Poly((1, 2)), 1)

    def test_hoggatt_row_palindromic(self):
        row = Poly([hoggatt_binomial(5, k, 3) for k in range(6)])
        assert row.coeffs == (1, 35, 175, 175, 35, 1)
        assert is_palindromic(row, 5)

    def test_center_below_degree_rejected(self):
        with pytest.raises(DomainError):
            is_palindromic(Poly((1, 2, 1)), 1)

    def test_unimodal(self):
        assert is_unimodal(Poly((1, 10, 20, 10, 1)))
        assert not is_unimodal(Poly((1, 0, 1)))
        assert is_unimodal(Poly((1, 1)))
        assert is_unimodal(Poly())


class TestGamma:
    def test_examples(self):
        assert gamma_decompose(Poly((1, 3, 1)), 2).gammas == (1, 1)
        assert gamma_decompose(Poly((1, 4, 6, 4, 1)), 4).gammas == (1, 0, 0)
        assert gamma_decompose(Poly((1, 10, 20, 10, 1)), 4).gammas == (1, 6, 2)

    def test_not_palindromic(self):
        with pytest.raises(NotPalindromic):
            gamma_decompose(Poly((1, 2)), 1)

    def test_positivity_judgment(self):
        assert GammaVector((Fraction(1), Fraction(0)), 2).is_positive
        assert not GammaVector((Fraction(1), Fraction(0), Fraction(2)), 4).is_positive
        assert not GammaVector((Fraction(1), Fraction(-1)), 2).is_positive

    def test_positivity_triple(self):
        palindromic, gv, positive = gamma_positivity(Poly((1, 3, 1)), 2)
        assert palindromic and positive and gv.gammas == (1, 1)
        assert gamma_positivity(Poly((1, 2)), 1) == (False, None, False)

    def test_reconstruction_roundtrip_random(self):
        rng = random.Random(13)
        for _ in range(500):
            half = rng.randint(0, 4)
            gammas = tuple(Fraction(rng.randint(-8, 8)) for _ in range(half + 1))
            center = 2 * half + rng.randint(0, 1)
            gv = GammaVector(gammas, center)
            poly = gv.reconstruct()
            assert gamma_decompose(poly, center).gammas == gammas


@settings(max_examples=60)
@given(
    gammas=st.lists(
        st.fractions(min_value=-9, max_value=9, max_denominator=6),
        min_size=1,
        max_size=5,
    ),
    parity=st.integers(min_value=0, max_value=1),
)
def test_gamma_roundtrip_property(gammas, parity):
    center = 2 * (len(gammas) - 1) + parity
    gv = GammaVector(tuple(gammas), center)
    poly = gv.reconstruct()
    assert is_palindromic(poly, center)
    assert gamma_decompose(poly, center).gammas == tuple(gammas)
