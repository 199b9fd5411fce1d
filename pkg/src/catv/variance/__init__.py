#!/usr/bin/env python3
"""Strict factorization systems, variances and their constructions."""
from .core import (
    Factorization,
    VarianceStruct,
    WideSubcategory,
    build_variance,
    check_sfs,
    check_variance,
    everything,
    factor,
    identities,
    variance_from_tables,
    wide_subcategory,
)
from .constructions import (
    contravariant_variance,
    coproduct_variance,
    covariant_variance,
    equalizer_variance,
    index_variance,
    inherited_variance,
    path_component_variance,
    preserves_variance,
    product_variance,
    semidirect_variance,
)
from .search import (
    VarianceSearch,
    enumerate_variances,
    enumerate_wide_subcategories,
    factor_positive_integer,
    is_normal_subgroup,
    is_variance_pair,
)
from .laws import (
    composite_equations_report,
    discrete_intersection_report,
    factor_identities_report,
    relative_cancellation_report,
)

__all__ = [
    "Factorization", "VarianceStruct", "WideSubcategory", "build_variance", "check_sfs",
    "check_variance", "everything", "factor", "identities", "variance_from_tables",
    "wide_subcategory", "contravariant_variance", "coproduct_variance", "covariant_variance",
    "equalizer_variance", "index_variance", "inherited_variance", "path_component_variance",
    "preserves_variance", "product_variance", "semidirect_variance", "VarianceSearch",
    "enumerate_variances", "enumerate_wide_subcategories", "factor_positive_integer",
    "is_normal_subgroup", "is_variance_pair", "composite_equations_report",
    "discrete_intersection_report", "factor_identities_report", "relative_cancellation_report",
]
