#!/usr/bin/env python3
"""Ready-made transformations: identities and the evaluation family of finite sets."""
from __future__ import annotations

from typing import Optional

import numpy as np

from ..fincat import finset_skeleton
from ..mixfun import MixedFunctor, SetMap, SetValuedMixedFunctor
from ..variance import covariant_variance, index_variance
from .check import TransformationFamily
from .partition import build_span_from_partition, derive_partition
from .spans import diagonal_span


def identity_family(F: MixedFunctor) -> TransformationFamily:
    """id: F ⇒ F along the diagonal span of F's source."""
    span = diagonal_span(F.source)
    T = F.target
    return TransformationFamily(F, F, span, [T.identity(F.on_object(x)) for x in F.source.objects()], name=f"id_{F.name}")


def skeleton_identity_functor(c) -> SetValuedMixedFunctor:
    """A FinSet skeleton mapped into finite sets: size k ↦ {0..k-1}, f ↦ f."""
    maps = [SetMap.of(c.function(f), c.size(c.cod(f))) for f in c.morphisms()]
    return SetValuedMixedFunctor(covariant_variance(c), list(c.sizes), maps, name="U")


def hom_times_functor(c, cap: Optional[int] = None) -> SetValuedMixedFunctor:
    """
    (a, b, d) ↦ Hom(a, b) × d on C×C×C with index-variance (1,0,0); the pair
    (h, i) is numbered h·|d| + i and (f₁, f₂, f₃) acts by (f₂∘h∘f₁, f₃(i)).
    """
    v = index_variance([c, c, c], (1, 0, 0), cap=cap)
    p = v.owner
    sizes = []
    for x in p.objects():
        a, b, d = p.object_components(x)
        sizes.append(len(c.hom(a, b)) * c.size(d))

    def image(f: int) -> SetMap:
        f1, f2, f3 = p.components(f)
        hs = c.hom(c.cod(f1), c.dom(f2))
        moved = np.array([c.hom_position(c.compose_path(f2, h, f1)) for h in hs], dtype=np.int64)
        third = np.array(c.function(f3), dtype=np.int64)
        width = c.size(c.cod(f3))
        values = np.add.outer(moved * width, third).reshape(-1)
        return SetMap.of(values, len(c.hom(c.dom(f1), c.cod(f2))) * width)

    return SetValuedMixedFunctor(v, sizes, image, name="[-,-]⊗-")


def evaluation_family(max_size: int = 3, cap: Optional[int] = None) -> TransformationFamily:
    """
    ev_{a,b}: [a,b]⊗a → b in the skeleton of finite sets on sizes 1..max_size,
    indexed along the partition read from ``F(a,b,a) -> G(b)``.
    """
    c = finset_skeleton(max_size)
    F = hom_times_functor(c, cap=cap)
    G = skeleton_identity_functor(c)
    p = derive_partition("F(a,b,a) -> G(b)").bind([c, c, c], [c])
    span = build_span_from_partition(p, cap=cap, name="ev")
    R = span.apex
    components = []
    for x in R.objects():
        a, b = R.object_components(x)
        values = [c.function(h)[i] for h in c.hom(a, b) for i in range(c.size(a))]
        components.append(SetMap.of(values, c.size(b)))
    return TransformationFamily(F, G, span, components, name="ev")
