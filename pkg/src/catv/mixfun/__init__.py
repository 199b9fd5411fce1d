#!/usr/bin/env python3
"""Functors of mixed variance, their decompositions and standard examples."""
from .targets import FINSET, CategoryTarget, FinSetTarget, SetMap, as_target
from .core import MixedFunctor, SetValuedMixedFunctor, precompose, validate_mixed_functor
from .decomposition import (
    CompatiblePair,
    assemble_covariant,
    assemble_mixed,
    check_compatible_pair,
    e_subcategory,
    m_subcategory,
    restrict_to_pair,
)
from .constructions import (
    constant_functor,
    covariant_from_inverted,
    e_projection_is_homomorphism,
    e_projection_report,
    external_product,
    hom_functor,
    invert_contravariant,
    mixed_from_opposite,
    mixed_to_opposite,
    set_hom_functor,
    starting_equals_terminating_e,
)

__all__ = [
    "FINSET", "CategoryTarget", "FinSetTarget", "SetMap", "as_target",
    "MixedFunctor", "SetValuedMixedFunctor", "precompose", "validate_mixed_functor",
    "CompatiblePair", "assemble_covariant", "assemble_mixed", "check_compatible_pair",
    "e_subcategory", "m_subcategory", "restrict_to_pair",
    "constant_functor", "covariant_from_inverted", "e_projection_is_homomorphism",
    "e_projection_report", "external_product", "hom_functor", "invert_contravariant",
    "mixed_from_opposite", "mixed_to_opposite", "set_hom_functor",
    "starting_equals_terminating_e",
]
