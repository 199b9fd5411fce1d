#!/usr/bin/env python3
"""Spans, partitions of arguments and heuristic naturality."""
from .spans import Span, diagonal_leg, diagonal_span, identity_span, product_span, split
from .partition import (
    PartitionOfArguments,
    PartitionSpan,
    build_span_from_partition,
    derive_partition,
    is_generalized_extranatural,
    partition_from_classes,
    single_class_generators,
)
from .check import (
    TransformationFamily,
    check_classical_naturality,
    check_heuristic_naturality,
    check_twisted_naturality,
    is_natural,
    selected_morphisms,
    square_sides,
)
from .dinatural import DinaturalForm, check_dinatural, index_flags, to_dinatural
from .fixtures import evaluation_family, hom_times_functor, identity_family, skeleton_identity_functor

__all__ = [
    "Span", "diagonal_leg", "diagonal_span", "identity_span", "product_span", "split",
    "PartitionOfArguments", "PartitionSpan", "build_span_from_partition", "derive_partition",
    "is_generalized_extranatural", "partition_from_classes", "single_class_generators",
    "TransformationFamily", "check_classical_naturality", "check_heuristic_naturality",
    "check_twisted_naturality", "is_natural", "selected_morphisms", "square_sides",
    "DinaturalForm", "check_dinatural", "index_flags", "to_dinatural",
    "evaluation_family", "hom_times_functor", "identity_family", "skeleton_identity_functor",
]
