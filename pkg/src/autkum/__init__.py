"""Exact-arithmetic toolkit for the Kummer curve-lattice construction: odd
prime fields and F_p(t), Legendre curves with supersingularity
certificates, the 24-curve intersection configuration with fiber
classification and blow-up calculus, affine actions on the distinguished
curve, and non-finite-generation certificates."""

from .curvelattice import (
    Divisor,
    GenericOnCurve,
    GenericOnSurface,
    KodairaType,
    NamedPoint,
    NOT_A_FIBER,
    blow_up,
    canonical_class,
    check_section,
    classify_fiber,
    gram_csv,
    gram_rank,
    i8_fiber_divisor,
    intersect,
    iv_star_fiber_divisor,
    kummer_config,
    minus_two_config,
    parse_divisor,
    rr_chi,
    theta_class_action,
    total_transform,
    unique_fixed_component_through,
)
from .ellcurve import (
    CurvePoint,
    LegendreCurve,
    NonIsogenyCert,
    enumerate_points,
    find_supersingular_lambda,
    hasse_poly,
    is_ordinary_generic,
    non_isogeny_certificate,
    point_add,
    point_count,
    point_mul,
    two_torsion,
)
from .exactfield import (
    ExtField,
    ExtFieldElem,
    FunctionField,
    LaurentVector,
    Poly,
    PrimeField,
    PrimeFieldElem,
    RatFunc,
    ext_field_build,
    field_ops,
    laurent_coeffs,
    parse_laurent,
    parse_ratfunc,
    ratfunc_normalize,
    ratfunc_text,
)
from .fgcert import (
    CosetTable,
    NonFGCert,
    SpanBasis,
    build_coset_table,
    escape_witness,
    nielsen_schreier_expected,
    non_fg_certificate,
    parse_permutations,
    schreier_generators,
    span_basis,
    span_dimension,
    span_membership,
    word_permutation,
)
from .lineaction import (
    INFINITY,
    AffineMap,
    DifferentialPair,
    FibrationCert,
    FixedPoint,
    GroupWord,
    affine,
    affine_group_ops,
    certify_fibration,
    conjugate_generator,
    evaluate_word,
    fixed_points,
    mw_action,
    pair_calculus,
    scale_by_t,
    shift_by_one,
)
from .verifier import PipelineParams, VerificationReport, emit_report, run_pipeline

__version__ = "0.1.0"
