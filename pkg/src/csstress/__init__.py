"""Exact stress spaces and face-number certificates for centrally
symmetric simplicial complexes."""

from __future__ import annotations

from .claims import (
    CLAIM_CM,
    CLAIM_EQUIVALENCE,
    CLAIM_EQUIVALENCE_AFFINE,
    CLAIM_EXPECT,
    CLAIM_G_PROPAGATION,
    CLAIM_H_PROPAGATION,
    CLAIM_HALF_CROSSPOLY,
    CLAIM_LBT,
    CLAIM_LBT_AFFINE,
    CLAIM_RESTRICTION,
    CLAIM_SQUAREFREE,
    CLAIM_STAR_SUPPORT,
    CLAIM_SYMMETRY_PROPAGATION,
    CorpusInstance,
    VerificationReport,
    derived_seed,
    derived_stress,
    instance_from_json,
    merge_reports,
    run_claims,
    verify_cor37,
    verify_cor_equivalence,
    verify_lbt,
    verify_lemma31,
    verify_lemma32_34,
    verify_polytope_cor37,
    verify_polytope_cor_equivalence,
    verify_polytope_lbt,
    verify_polytope_thm36,
    verify_thm35,
    verify_thm36,
)
from .complexes import (
    FHGVectors,
    SimplicialComplex,
    complex_from_json,
    complex_to_json_obj,
    cross_polytope_boundary,
    detect_cross_polytope_subcomplexes,
    face,
    join,
    negate,
)
from .engine import (
    FormSequence,
    StressSpace,
    canonical_forms,
    cm_certificate,
    generic_lsop,
    is_stress,
    lsop_check,
    restrict_stress_space,
    special_lsop,
    stress_space,
)
from .errors import (
    CsStressError,
    CsViolation,
    GroundSetOverlap,
    HypothesisUnmet,
    IndexMismatch,
    InputError,
    LengthMismatch,
    LsopNotFound,
    NotAFace,
    NotCs,
    NotPure,
    NotSimplicial,
    NotSquarefree,
    NotSubcomplex,
    PreconditionUnmet,
    RedundantFacet,
    ZeroPolynomial,
)
from .exactla import Basis, SparseMatrix, intersect, nullspace, rank, span_basis
from .polynomials import (
    LinearForm,
    Monomial,
    ONE,
    Polynomial,
    apply_derivative,
    delta_monomials,
    expand_y_representation,
    involution_action,
    is_squarefree,
    is_symmetric,
    pair_sum,
    partial_derivative,
    pm_split,
    stress_support,
    y_representation,
)
from .polytopes import (
    Polytope,
    bipyramid,
    cross_polytope,
    polygon,
    polytope_from_json,
    polytope_to_json_obj,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "CLAIM_CM",
    "CLAIM_EQUIVALENCE",
    "CLAIM_EQUIVALENCE_AFFINE",
    "CLAIM_EXPECT",
    "CLAIM_G_PROPAGATION",
    "CLAIM_H_PROPAGATION",
    "CLAIM_HALF_CROSSPOLY",
    "CLAIM_LBT",
    "CLAIM_LBT_AFFINE",
    "CLAIM_RESTRICTION",
    "CLAIM_SQUAREFREE",
    "CLAIM_STAR_SUPPORT",
    "CLAIM_SYMMETRY_PROPAGATION",
    "CorpusInstance",
    "CsStressError",
    "CsViolation",
    "FHGVectors",
    "FormSequence",
    "GroundSetOverlap",
    "HypothesisUnmet",
    "IndexMismatch",
    "InputError",
    "LengthMismatch",
    "LinearForm",
    "LsopNotFound",
    "Monomial",
    "NotAFace",
    "NotCs",
    "NotPure",
    "NotSimplicial",
    "NotSquarefree",
    "NotSubcomplex",
    "ONE",
    "Polynomial",
    "Polytope",
    "PreconditionUnmet",
    "RedundantFacet",
    "SimplicialComplex",
    "SparseMatrix",
    "StressSpace",
    "VerificationReport",
    "ZeroPolynomial",
    "apply_derivative",
    "bipyramid",
    "canonical_forms",
    "cm_certificate",
    "complex_from_json",
    "complex_to_json_obj",
    "cross_polytope",
    "cross_polytope_boundary",
    "delta_monomials",
    "derived_seed",
    "derived_stress",
    "detect_cross_polytope_subcomplexes",
    "expand_y_representation",
    "face",
    "generic_lsop",
    "instance_from_json",
    "intersect",
    "involution_action",
    "is_squarefree",
    "is_stress",
    "is_symmetric",
    "join",
    "lsop_check",
    "merge_reports",
    "negate",
    "nullspace",
    "pair_sum",
    "partial_derivative",
    "pm_split",
    "polygon",
    "polytope_from_json",
    "polytope_to_json_obj",
    "rank",
    "restrict_stress_space",
    "run_claims",
    "span_basis",
    "special_lsop",
    "stress_space",
    "stress_support",
    "verify_cor37",
    "verify_cor_equivalence",
    "verify_lbt",
    "verify_lemma31",
    "verify_lemma32_34",
    "verify_polytope_cor37",
    "verify_polytope_cor_equivalence",
    "verify_polytope_lbt",
    "verify_polytope_thm36",
    "verify_thm35",
    "verify_thm36",
    "y_representation",
]
