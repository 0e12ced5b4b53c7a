"""Exact measure algebras over finite measure spaces.

Spaces carry partition-generated sigma-algebras with rational (or
infinite) atom weights; the measure algebra is their quotient by null
sets, metrized by symmetric-difference distance on the finite ideal.
Measurable maps induce contravariant Boolean homomorphisms whose
Lipschitz constant equals the map's compression, and the package
computes that constant three independent ways and checks the functor
laws, all in exact arithmetic.
"""

from .algebra import (
    AlgebraElement,
    L1Function,
    MeasureAlgebra,
    build_algebra,
    chi_embed,
    elem_complement,
    elem_join,
    elem_meet,
    elem_symmdiff,
    is_fin,
    l1_distance,
    mu_bar,
    project,
    rho,
    rho_c,
)
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    DuplicatePoint,
    ForeignElement,
    ForeignFunction,
    ForeignSet,
    IndeterminateRatio,
    InvalidDocument,
    MalgError,
    MetricAxiomViolation,
    NegativeWeight,
    NonPositiveFactor,
    NotInFinIdeal,
    NotInverseNilPreserving,
    NotMeasurable,
    PartitionGap,
    PartitionOverlap,
    SpaceMismatch,
    UnknownPoint,
    ZeroDenominator,
)
from .instances import (
    SplitMix64,
    random_composable_pair,
    random_instance,
    random_map,
    random_space,
    trial_rng,
)
from .maps import (
    UNBOUNDED,
    BooleanHom,
    BruteForceReport,
    CompressionResult,
    LawReport,
    LawViolation,
    MeasurableMap,
    PushforwardMeasure,
    apply_hom,
    check_hom_laws,
    check_well_definedness,
    compose,
    compression,
    identity_map,
    induced_homomorphism,
    is_inverse_nil_preserving,
    lipschitz_bruteforce,
    lipschitz_fast,
    make_map,
    null_ideal_preserved,
    pushforward,
    radon_nikodym,
)
from .metric import (
    FiniteMetricMeasureSpace,
    MorphismClassification,
    classify,
    compression_submultiplicativity,
    contravariance_check,
    lipschitz_point,
    make_metric_space,
    rescale_space,
)
from .rationals import INF, ExtRational
from .spaces import (
    FiniteMeasureSpace,
    MeasurableSet,
    is_measurable,
    is_null,
    make_space,
    measure,
    set_complement,
    set_from_points,
    set_intersection,
    set_symmetric_difference,
    set_union,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "ArityMismatch",
    "BooleanHom",
    "BruteForceReport",
    "BudgetExceeded",
    "CompressionResult",
    "DuplicatePoint",
    "ExtRational",
    "FiniteMeasureSpace",
    "FiniteMetricMeasureSpace",
    "ForeignElement",
    "ForeignFunction",
    "ForeignSet",
    "INF",
    "IndeterminateRatio",
    "InvalidDocument",
    "L1Function",
    "LawReport",
    "LawViolation",
    "MalgError",
    "MeasurableMap",
    "MeasurableSet",
    "MeasureAlgebra",
    "MetricAxiomViolation",
    "MorphismClassification",
    "NegativeWeight",
    "NonPositiveFactor",
    "NotInFinIdeal",
    "NotInverseNilPreserving",
    "NotMeasurable",
    "PartitionGap",
    "PartitionOverlap",
    "PushforwardMeasure",
    "SpaceMismatch",
    "SplitMix64",
    "UNBOUNDED",
    "UnknownPoint",
    "ZeroDenominator",
    "apply_hom",
    "build_algebra",
    "check_hom_laws",
    "check_well_definedness",
    "chi_embed",
    "classify",
    "compose",
    "compression",
    "compression_submultiplicativity",
    "contravariance_check",
    "elem_complement",
    "elem_join",
    "elem_meet",
    "elem_symmdiff",
    "identity_map",
    "induced_homomorphism",
    "is_fin",
    "is_inverse_nil_preserving",
    "is_measurable",
    "is_null",
    "l1_distance",
    "lipschitz_bruteforce",
    "lipschitz_fast",
    "lipschitz_point",
    "make_map",
    "make_metric_space",
    "make_space",
    "measure",
    "mu_bar",
    "null_ideal_preserved",
    "project",
    "pushforward",
    "radon_nikodym",
    "random_composable_pair",
    "random_instance",
    "random_map",
    "random_space",
    "rescale_space",
    "rho",
    "rho_c",
    "set_complement",
    "set_from_points",
    "set_intersection",
    "set_symmetric_difference",
    "set_union",
    "trial_rng",
]
