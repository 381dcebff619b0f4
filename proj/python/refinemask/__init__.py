"""Exact refinable polynomials and their masks."""

from ._core import (
    CascadeReport,
    DomainError,
    Mask,
    ParseError,
    Polynomial,
    RefinablePair,
    antiderivative_constant,
    cascade,
    equivalence_witness,
    extend_mask,
    mask_from_poly,
    mask_from_poly_at_nodes,
    mask_sum,
    masks_equivalent,
    poly_from_mask,
    reduce_mod_difference,
    refine_apply,
    refinement_matrix,
    verify_refines,
)

__all__ = [
    "CascadeReport",
    "DomainError",
    "Mask",
    "ParseError",
    "Polynomial",
    "RefinablePair",
    "antiderivative_constant",
    "cascade",
    "equivalence_witness",
    "extend_mask",
    "mask_from_poly",
    "mask_from_poly_at_nodes",
    "mask_sum",
    "masks_equivalent",
    "poly_from_mask",
    "reduce_mod_difference",
    "refine_apply",
    "refinement_matrix",
    "verify_refines",
]
