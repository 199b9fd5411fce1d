#!/usr/bin/env python3
"""Generalized comma categories and the componentwise lifting theorem."""
from .core import (
    CommaCategory,
    algebra_category,
    build_comma,
    classical_comma,
    forgetful,
    require_section,
    section_to_transformation,
    transformation_to_section,
)
from .lifting import componentwise_lift

__all__ = [
    "CommaCategory", "algebra_category", "build_comma", "classical_comma", "forgetful",
    "require_section", "section_to_transformation", "transformation_to_section",
    "componentwise_lift",
]
