"""Exact computation and verification for Hankel determinants of binomial
columns, Hoggatt triangles, and higher-dimensional Narayana numbers.

All arithmetic is exact (arbitrary-precision integers and rationals); there
is no floating point anywhere in a computation path, so every equality
check in the verification harness is a genuine identity test.
"""

from .exact import (
    DomainError,
    ExactError,
    NegativeN,
    PoleEncountered,
    Rational,
    ZeroDenominator,
    binomial,
    factorial,
    rising_factorial,
)
from .polyring import (
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
from .hoggatt import (
    HoggattParams,
    LFactor,
    TooLarge,
    hoggatt_basic,
    hoggatt_binomial,
    l_factorization,
    row_genfun_hypergeometric,
    ssyt_count_bruteforce,
    triangle,
)
from .hankel import (
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
from .narayana import (
    APoly,
    MismatchReported,
    NarayanaTable,
    a_poly_via_determinants,
    a_poly_via_operator,
    catalan_r,
    f_operator,
    narayana_poly,
)
from .conjectures import (
    CHECK_IDS,
    GridSpec,
    InterpolationInconsistent,
    RecoveredPoly,
    check_a_poly_routes,
    check_catalan_row_sum,
    check_det2_closed_form,
    check_genfun,
    check_signed_hankel_column,
    check_u_recovery,
    check_U_recovery,
    recover_u,
    recover_U,
    s_weight,
    sweep,
    w_weight,
)
from .reports import (
    FAIL,
    MISMATCH,
    PASS,
    SKIPPED,
    VerificationReport,
    reports_to_csv,
    reports_to_json,
    summarize,
)

__version__ = "0.1.0"
