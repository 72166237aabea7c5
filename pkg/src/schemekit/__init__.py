"""Exact association schemes, composite Hamming-type schemes, weight
enumerators with their duality transforms, and modular invariance."""

from .builders import cycle_scheme, group_scheme, hamming, one_class
from .codes import (
    Code,
    GRAY_BITS,
    Z4Enumerators,
    dual_code,
    dual_weight_enumerator_direct,
    exact_idempotents,
    gray_image,
    gray_lee_check,
    inner_distribution,
    is_additive,
    macwilliams_transform,
    translation_duality_check,
    weight_enumerator,
    z4_enumerators,
)
from .errors import (
    AxiomViolation,
    ClosureFailure,
    DimensionMismatch,
    DuplicateWords,
    FormatError,
    MathError,
    NegativeKrein,
    NotAdditive,
    NotScalar,
    SchemeKitError,
    SingularMatrix,
    SizeCapExceeded,
    SnapFailure,
)
from .exact import (
    ExactMatrix,
    GaussRat,
    MPoly,
    compositions,
    composition_index,
    induced_matrix,
    substitute_linear,
    substitute_polys,
)
from .genham import (
    GHScheme,
    build_explicit,
    dual_eigenmatrix_gh,
    eigenmatrix_gh,
    formal_duality_check,
    fusion_check_trans,
    h_vector,
)
from .modular import (
    InducedModular,
    ModularWitness,
    induced_modular_check,
    search_T,
    verify_modular,
)
from .scheme import (
    AssociationScheme,
    TranslationStructure,
    canonical_row_key,
    certify_eigenmatrix,
    dual_eigenmatrix,
    eigenmatrix,
    fusion,
    intersection_numbers,
    krein_parameters,
    numeric_eigenmatrix,
    orbit_fusion,
    sort_rows_canonically,
    tensor_product,
    verify_axioms,
)

__version__ = "0.1.0"

__all__ = [
    "AssociationScheme",
    "AxiomViolation",
    "ClosureFailure",
    "Code",
    "DimensionMismatch",
    "DuplicateWords",
    "ExactMatrix",
    "FormatError",
    "GHScheme",
    "GRAY_BITS",
    "GaussRat",
    "InducedModular",
    "MPoly",
    "MathError",
    "ModularWitness",
    "NegativeKrein",
    "NotAdditive",
    "NotScalar",
    "SchemeKitError",
    "SingularMatrix",
    "SizeCapExceeded",
    "SnapFailure",
    "TranslationStructure",
    "Z4Enumerators",
    "build_explicit",
    "canonical_row_key",
    "certify_eigenmatrix",
    "composition_index",
    "compositions",
    "cycle_scheme",
    "dual_code",
    "dual_eigenmatrix",
    "dual_eigenmatrix_gh",
    "dual_weight_enumerator_direct",
    "eigenmatrix",
    "eigenmatrix_gh",
    "exact_idempotents",
    "formal_duality_check",
    "fusion",
    "fusion_check_trans",
    "gray_image",
    "gray_lee_check",
    "group_scheme",
    "h_vector",
    "hamming",
    "induced_matrix",
    "induced_modular_check",
    "inner_distribution",
    "intersection_numbers",
    "is_additive",
    "krein_parameters",
    "macwilliams_transform",
    "numeric_eigenmatrix",
    "one_class",
    "orbit_fusion",
    "search_T",
    "sort_rows_canonically",
    "substitute_linear",
    "substitute_polys",
    "tensor_product",
    "translation_duality_check",
    "verify_axioms",
    "verify_modular",
    "weight_enumerator",
    "z4_enumerators",
]
