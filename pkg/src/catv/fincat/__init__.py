#!/usr/bin/env python3
"""
Finite categories: storage, validation, products, generation and built-in
fixtures. ``FinCategory`` is composed from a storage core and mixins the same
way every other structure in catv is assembled.
"""
from .core import CategoryCore, CompositionMixin, HomSetMixin, PlainFunctor, Subgraph
from .category import FinCategory
from .validate import is_faithful, validate_category, validate_functor
from .products import (
    ProductCategory,
    diagonal,
    disjoint_union,
    opposite_category,
    pairing,
    product_category,
    product_functor,
    projection,
)
from .generation import (
    SubCategory,
    coordinate_morphisms,
    generated_morphisms,
    identities_only,
    is_generating,
    path_components,
    restrict_functor,
    subcategory,
)
from .fixtures import (
    FinSetSkeleton,
    chain,
    cyclic_group,
    finset_skeleton,
    group_from_table,
    klein_four,
    semidirect_product,
    symmetric_group,
    walking_arrow,
)

__all__ = [
    "CategoryCore", "CompositionMixin", "HomSetMixin", "PlainFunctor", "Subgraph",
    "FinCategory", "is_faithful", "validate_category", "validate_functor",
    "ProductCategory", "diagonal", "disjoint_union", "opposite_category", "pairing",
    "product_category", "product_functor", "projection",
    "SubCategory", "coordinate_morphisms", "generated_morphisms", "identities_only",
    "is_generating", "path_components", "restrict_functor", "subcategory",
    "FinSetSkeleton", "chain", "cyclic_group", "finset_skeleton", "group_from_table",
    "klein_four", "semidirect_product", "symmetric_group", "walking_arrow",
]
