"""sascone: positivity in the w-Sasaki cone of weighted 3-sphere joins.

The library decides positive vs indefinite for rays in the w-cone of a
join, computes the exact positivity range, integer topological and
contact invariants, quasi-regular quotient data, and constructs and
certifies explicit admissible metric profiles with positive Ricci
curvature. All classification arithmetic is exact (integers and
rationals); the metric kernel uses closed-form integration in double
precision. Every public type is an immutable value.
"""

from .classifier import (
    PositivityRange,
    RangeKind,
    TypeVerdict,
    WholeConeReport,
    classify_ray,
    h1_signed,
    positivity_range,
    positivity_range_raw,
    whole_cone_rules,
)
from .core import BaseManifold, JoinParams, Rational, ReebRay, parse_base, validate_join
from .errors import (
    BaseMismatchError,
    BoxViolationError,
    BracketFailureError,
    GoldenMismatchError,
    InvalidParameterError,
    NonpositiveVolumeError,
    NotCoprimeError,
    NotFanoError,
    OddTotalError,
    PreconditionError,
    ProductCaseError,
    SasconeError,
    SmoothnessViolationError,
    ValidationError,
)
from .goldens import CheckOutcome, GoldenCheck, default_checks, replay_tables
from .profile import (
    LiftReport,
    MetricProfile,
    ProfileParams,
    ProfileSample,
    VerificationReport,
    build_profile,
    f_of_k,
    g_dt,
    g_func,
    profile_F,
    profile_params_from_ray,
    ricci_box_check,
    ricci_box_holds,
    ricci_coefficients,
    sasaki_lift_check,
    solve_k,
    weight_poly,
)
from .quotient import (
    OrbChernReport,
    QuotientData,
    orb_c1_report,
    orb_fano_predicate,
    quotient_data,
    quotient_data_raw,
)
from .topology import (
    BouquetLabel,
    b_invariant_wcone,
    bouquet_label,
    bouquet_level_set,
    bouquet_partition,
    c1_gamma_coeff_sphere_join,
    spin_check,
    torsion_order,
)

__version__ = "0.1.0"

__all__ = [
    "BaseManifold",
    "BaseMismatchError",
    "BouquetLabel",
    "BoxViolationError",
    "BracketFailureError",
    "CheckOutcome",
    "GoldenCheck",
    "GoldenMismatchError",
    "InvalidParameterError",
    "JoinParams",
    "LiftReport",
    "MetricProfile",
    "NonpositiveVolumeError",
    "NotCoprimeError",
    "NotFanoError",
    "OddTotalError",
    "OrbChernReport",
    "PositivityRange",
    "PreconditionError",
    "ProductCaseError",
    "ProfileParams",
    "ProfileSample",
    "QuotientData",
    "RangeKind",
    "Rational",
    "ReebRay",
    "SasconeError",
    "SmoothnessViolationError",
    "TypeVerdict",
    "ValidationError",
    "VerificationReport",
    "WholeConeReport",
    "b_invariant_wcone",
    "bouquet_label",
    "bouquet_level_set",
    "bouquet_partition",
    "build_profile",
    "c1_gamma_coeff_sphere_join",
    "classify_ray",
    "default_checks",
    "f_of_k",
    "g_dt",
    "g_func",
    "h1_signed",
    "orb_c1_report",
    "orb_fano_predicate",
    "parse_base",
    "positivity_range",
    "positivity_range_raw",
    "profile_F",
    "profile_params_from_ray",
    "quotient_data",
    "quotient_data_raw",
    "replay_tables",
    "ricci_box_check",
    "ricci_box_holds",
    "ricci_coefficients",
    "sasaki_lift_check",
    "solve_k",
    "spin_check",
    "torsion_order",
    "validate_join",
    "weight_poly",
    "whole_cone_rules",
]
