#!/usr/bin/env python3
"""
Concrete functors of mixed variance: hom-functors, constants, external
products, Hom(F-, G-), the inversion construction and its converse, and
adapters to and from opposite categories.
"""
from __future__ import annotations

from itertools import product as cartesian
from typing import Optional

import numpy as np

from ..base import NotInvertibleError, StructuralError, logger
from ..fincat import PlainFunctor, opposite_category
from ..report import Report
from ..variance import (
    VarianceStruct,
    contravariant_variance,
    index_variance,
    product_variance,
)
from .core import MixedFunctor, SetValuedMixedFunctor
from .targets import CategoryTarget, SetMap


def hom_functor(c, cap: Optional[int] = None) -> SetValuedMixedFunctor:
    """
    Hom: c×c → FinSet of index-variance (1,0). Elements of Hom(x, y) are
    numbered in the canonical order of ``c.hom(x, y)``; (f, g) acts by
    h ↦ g∘h∘f.
    """
    v = index_variance([c, c], (1, 0), cap=cap)
    p = v.owner
    sizes = [len(c.hom(*p.object_components(x))) for x in p.objects()]
    maps = []
    for fg in p.morphisms():
        f, g = p.components(fg)
        x_src, y_src = p.object_components(int(v.start_obj[fg]))
        values = [c.hom_position(c.compose_path(g, h, f)) for h in c.hom(x_src, y_src)]
        maps.append(SetMap.of(values, sizes[int(v.term_obj[fg])]))
    labels = lambda xy: [c.morphism_label(h) for h in c.hom(*p.object_components(xy))]
    logger.debug("hom functor on %s: %d morphisms", c.name, p.n_morphisms)
    return SetValuedMixedFunctor(v, sizes, maps, name=f"Hom_{c.name}", element_labels=labels)


def constant_functor(v: VarianceStruct, size: int, name: str = "") -> SetValuedMixedFunctor:
    ident = SetMap.identity(size)
    return SetValuedMixedFunctor(v, [size] * v.owner.n_objects, lambda f: ident, name=name or f"const{size}")


def external_product(F1: SetValuedMixedFunctor, F2: SetValuedMixedFunctor, cap: Optional[int] = None) -> SetValuedMixedFunctor:
    """
    F1 ⊠ F2 on A×B with the product variance: (a, b) ↦ F1(a)×F2(b), pairs
    (i, j) numbered i·|F2(b)| + j.
    """
    v = product_variance([(F1.source, F1.variance), (F2.source, F2.variance)], cap=cap)
    p = v.owner
    sizes = []
    for x in p.objects():
        a, b = p.object_components(x)
        sizes.append(F1.size(a) * F2.size(b))

    def image(f: int) -> SetMap:
        f1, f2 = p.components(f)
        m1, m2 = F1(f1), F2(f2)
        values = np.add.outer(m1.values * m2.size, m2.values).reshape(-1)
        return SetMap.of(values, m1.size * m2.size)

    return SetValuedMixedFunctor(v, sizes, image, name=f"{F1.name}⊠{F2.name}")


def _functions(a: int, b: int) -> np.ndarray:
    """All functions a → b as rows, lexicographic with the first value most significant."""
    if a == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(cartesian(range(b), repeat=a)), dtype=np.int64).reshape(-1, a)


def _encode(rows: np.ndarray, base: int) -> np.ndarray:
    out = np.zeros(rows.shape[0], dtype=np.int64)
    for col in range(rows.shape[1]):
        out = out * base + rows[:, col]
    return out


def set_hom_functor(F: SetValuedMixedFunctor, G: SetValuedMixedFunctor, cap: Optional[int] = None) -> SetValuedMixedFunctor:
    """
    Hom(F-, G-): C×C → FinSet of index-variance (1,0) for covariant F, G on C.
    (f, g) sends φ: F x' → G y to G(g)∘φ∘F(f).
    """
    c = F.source
    if G.source is not c:
        raise StructuralError("Hom(F-, G-) needs functors on the same category")
    for H in (F, G):
        if len(H.variance.M) != c.n_objects:
            raise StructuralError(f"{H.name or 'functor'} must be covariant")
    v = index_variance([c, c], (1, 0), cap=cap)
    p = v.owner
    sizes = []
    for xy in p.objects():
        x, y = p.object_components(xy)
        sizes.append(G.size(y) ** F.size(x))

    def image(fg: int) -> SetMap:
        f, g = p.components(fg)
        x_src, y_src = p.object_components(int(v.start_obj[fg]))
        x_dst, y_dst = c.dom(f), c.cod(g)
        phis = _functions(F.size(x_src), G.size(y_src))
        Ff, Gg = F(f), G(g)
        moved = Gg.values[phis[:, Ff.values]]
        return SetMap.of(_encode(moved, G.size(y_dst)), G.size(y_dst) ** F.size(x_dst))

    return SetValuedMixedFunctor(v, sizes, image, name=f"Hom({F.name}-,{G.name}-)")


def invert_contravariant(F: PlainFunctor, v: VarianceStruct) -> MixedFunctor:
    """G(e) = F(e), G(m) = F(m)⁻¹, so G(f) = F(fᵉ)∘F(f_m)⁻¹."""
    if v.owner is not F.source:
        raise StructuralError("variance does not live on the functor's source")
    D = F.target
    inverses = {}
    for m in v.M:
        inv = D.inverse(F.on_morphism(m))
        if inv is None:
            c = F.source
            raise NotInvertibleError(
                f"F({c.morphism_label(m)}) = {D.morphism_label(F.on_morphism(m))} is not invertible",
                witness=(c.morphism_label(m),),
            )
        inverses[m] = inv
    images = []
    for f in F.source.morphisms():
        fac = v.factor(f)
        images.append(D.compose(F.on_morphism(fac.term_e), inverses[fac.start_m]))
    return MixedFunctor(v, D, F.obj_map, images, name=f"{F.name}^inv")


def covariant_from_inverted(G: MixedFunctor) -> PlainFunctor:
    """The converse construction: F(f) = G(fᵐ)⁻¹∘G(fᵉ)."""
    if not isinstance(G.target, CategoryTarget):
        raise StructuralError("covariant_from_inverted needs a category-valued functor")
    v, T = G.variance, G.target
    c = G.source
    images = []
    for f in c.morphisms():
        fac = v.factor(f)
        inv = T.inverse(G(fac.term_m))
        if inv is None:
            raise NotInvertibleError(
                f"G({c.morphism_label(fac.term_m)}) is not invertible", witness=(c.morphism_label(fac.term_m),)
            )
        images.append(T.compose(inv, G(fac.term_e)))
    return PlainFunctor(c, T.category, G.obj_map, images, name=f"{G.name}^cov")


def mixed_to_opposite(F: MixedFunctor, op=None) -> PlainFunctor:
    """A functor that is contravariant on every morphism as a functor out of c^op."""
    c = F.source
    if len(F.variance.E) != c.n_objects or not isinstance(F.target, CategoryTarget):
        raise StructuralError("mixed_to_opposite needs a contravariant, category-valued functor")
    op = op if op is not None else opposite_category(c)
    return PlainFunctor(op, F.target.category, F.obj_map, F.images(), name=f"{F.name}^op")


def mixed_from_opposite(P: PlainFunctor, c) -> MixedFunctor:
    op = P.source
    if op.n_morphisms != c.n_morphisms or any(op.dom(f) != c.cod(f) for f in c.morphisms()):
        raise StructuralError(f"{op.name} is not the opposite of {c.name}")
    return MixedFunctor(contravariant_variance(c), P.target, P.obj_map, P.mor_map, name=P.name)


def e_projection_is_homomorphism(v: VarianceStruct) -> bool:
    """On a one-object category: (g∘h)ᵉ = gᵉ∘hᵉ for all g, h."""
    c = v.owner
    return all(
        v.factor(c.compose(g, h)).term_e == c.compose(v.factor(g).term_e, v.factor(h).term_e)
        for g in c.morphisms() for h in c.morphisms()
    )


def starting_equals_terminating_e(v: VarianceStruct) -> bool:
    return all(v.factor(g).term_e == v.factor(g).start_e for g in v.owner.morphisms())


def e_projection_report(v: VarianceStruct) -> Report:
    """Both sides of: g ↦ gᵉ is a homomorphism iff gᵉ = g_e for every g."""
    report = Report(f"g ↦ gᵉ on {v.owner.name}")
    hom = e_projection_is_homomorphism(v)
    agree = starting_equals_terminating_e(v)
    if hom != agree:
        report.add("mismatch", (hom, agree), "homomorphism test and gᵉ = g_e test disagree")
    report.notes.append(f"homomorphism={hom} gᵉ=g_e={agree}")
    return report
