#!/usr/bin/env python3
"""
Both decomposition theorems.

A functor of mixed variance is the same thing as a compatible pair: a
covariant G on E and a contravariant H on M with equal object maps and
G(fᵉ)∘H(f_m) = H(fᵐ)∘G(f_e). A covariant functor is likewise assembled from
covariant functors on E and M whenever H(fᵐ)∘G(fᵉ) = G(f_e)∘H(f_m).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from ..base import CompatibilityError, PreconditionError, StructuralError
from ..fincat import PlainFunctor, subcategory
from ..report import Report
from ..variance import VarianceStruct
from .core import MixedFunctor, SetValuedMixedFunctor, validate_mixed_functor
from .targets import as_target


@dataclass(eq=False)
class CompatiblePair:
    """G on E (covariant) and H on M (contravariant), keyed by owner morphism indices."""

    variance: VarianceStruct
    target: Any
    g_obj: Tuple[Any, ...]
    h_obj: Tuple[Any, ...]
    g_map: Dict[int, Any]
    h_map: Dict[int, Any]
    name: str = ""

    def __post_init__(self) -> None:
        self.target = as_target(self.target)
        self.g_obj = tuple(self.g_obj)
        self.h_obj = tuple(self.h_obj)
        if set(self.g_map) != set(self.variance.E.morphisms):
            raise StructuralError("G must be given on exactly the covariant morphisms")
        if set(self.h_map) != set(self.variance.M.morphisms):
            raise StructuralError("H must be given on exactly the contravariant morphisms")

    def G(self, e: int) -> Any:
        return self.g_map[e]

    def H(self, m: int) -> Any:
        return self.h_map[m]

    def same_as(self, other: "CompatiblePair") -> bool:
        T = self.target
        return (
            self.variance is other.variance
            and T == other.target
            and self.g_obj == other.g_obj
            and self.h_obj == other.h_obj
            and all(T.equal(self.g_map[e], other.g_map[e]) for e in self.g_map)
            and all(T.equal(self.h_map[m], other.h_map[m]) for m in self.h_map)
        )


def restrict_to_pair(F: MixedFunctor, validate: bool = True) -> CompatiblePair:
    if validate:
        report = validate_mixed_functor(F)
        if not report.ok:
            raise PreconditionError(f"{F.name or 'functor'} is not a functor of mixed variance", report.witnesses()[0])
    v = F.variance
    return CompatiblePair(
        v, F.target, F.obj_map, F.obj_map,
        {e: F(e) for e in v.E}, {m: F(m) for m in v.M},
        name=F.name,
    )


def _functoriality_report(p: CompatiblePair) -> Report:
    v, T = p.variance, p.target
    c = v.owner
    lbl = c.morphism_label
    report = Report(f"functoriality of {p.name or 'pair'}")
    for e in v.E:
        if not T.typed(p.G(e), p.g_obj[c.dom(e)], p.g_obj[c.cod(e)]):
            report.add("G-typing", (lbl(e),), "G(e) does not map G(dom e) to G(cod e)")
    for m in v.M:
        if not T.typed(p.H(m), p.h_obj[c.cod(m)], p.h_obj[c.dom(m)]):
            report.add("H-typing", (lbl(m),), "H(m) does not map H(cod m) to H(dom m)")
    for x in c.objects():
        i = c.identity(x)
        if not T.equal(p.G(i), T.identity(p.g_obj[x])):
            report.add("G-identity", (c.object_label(x),), "identity not preserved")
        if not T.equal(p.H(i), T.identity(p.h_obj[x])):
            report.add("H-identity", (c.object_label(x),), "identity not preserved")
    if not report.ok:
        return report.finish()
    for e1 in v.E:
        for e2 in c.out_of(c.cod(e1)):
            if e2 in v.E and not T.equal(p.G(c.compose(e2, e1)), T.compose(p.G(e2), p.G(e1))):
                report.add("G-composition", (lbl(e2), lbl(e1)), "G(e2∘e1) != G(e2)∘G(e1)")
    for m1 in v.M:
        for m2 in c.out_of(c.cod(m1)):
            if m2 in v.M and not T.equal(p.H(c.compose(m2, m1)), T.compose(p.H(m1), p.H(m2))):
                report.add("H-composition", (lbl(m2), lbl(m1)), "H(m2∘m1) != H(m1)∘H(m2)")
    return report.finish()


def check_compatible_pair(p: CompatiblePair) -> Report:
    """Functoriality of G and H, then the square G(fᵉ)∘H(f_m) = H(fᵐ)∘G(f_e)."""
    c = p.variance.owner
    for x in c.objects():
        if p.g_obj[x] != p.h_obj[x]:
            raise CompatibilityError(
                f"G and H disagree on object {c.object_label(x)}", witness=(c.object_label(x),)
            )
    report = _functoriality_report(p)
    if not report.ok:
        return report
    v, T = p.variance, p.target
    for f in c.morphisms():
        report.checked += 1
        fac = v.factor(f)
        lhs = T.compose(p.G(fac.term_e), p.H(fac.start_m))
        rhs = T.compose(p.H(fac.term_m), p.G(fac.start_e))
        if not T.equal(lhs, rhs):
            report.add(
                "compatibility", (c.morphism_label(f),),
                "G(fᵉ)∘H(f_m) != H(fᵐ)∘G(f_e)", lhs=T.render(lhs), rhs=T.render(rhs),
            )
    return report.finish()


def assemble_mixed(p: CompatiblePair) -> MixedFunctor:
    """F(f) = G(fᵉ)∘H(f_m)."""
    report = check_compatible_pair(p)
    if not report.ok:
        raise CompatibilityError(f"{p.name or 'pair'} is not compatible", witness=report.witnesses()[0])
    v, T = p.variance, p.target
    images = []
    for f in v.owner.morphisms():
        fac = v.factor(f)
        images.append(T.compose(p.G(fac.term_e), p.H(fac.start_m)))
    if T.kind == "finset":
        return SetValuedMixedFunctor(v, p.g_obj, images, name=p.name)
    return MixedFunctor(v, T, p.g_obj, images, name=p.name)


def e_subcategory(v: VarianceStruct):
    return subcategory(v.owner, v.E.morphisms, objects=list(v.owner.objects()), name="E")


def m_subcategory(v: VarianceStruct):
    return subcategory(v.owner, v.M.morphisms, objects=list(v.owner.objects()), name="M")


def assemble_covariant(G: PlainFunctor, H: PlainFunctor, v: VarianceStruct) -> PlainFunctor:
    """
    The unique functor F with F|E = G and F|M = H, F(f) = H(fᵐ)∘G(fᵉ).

    ``G`` and ``H`` are functors out of the materialised wide subcategories
    E and M of ``v.owner`` (see ``e_subcategory`` and ``m_subcategory``).
    """
    c = v.owner
    for functor, part, role in ((G, v.E, "G"), (H, v.M, "H")):
        src = functor.source
        if getattr(src, "owner", None) is not c or set(src.owner_morphisms) != set(part.morphisms):
            raise StructuralError(f"{role} must be a functor out of the {'E' if role == 'G' else 'M'} subcategory")
        if not src.is_wide:
            raise StructuralError(f"{role} is defined on a subcategory that is not wide")
    if G.target is not H.target:
        raise StructuralError("G and H must share their target")
    if G.obj_map != H.obj_map:
        x = next(i for i, (a, b) in enumerate(zip(G.obj_map, H.obj_map)) if a != b)
        raise CompatibilityError(f"G and H disagree on object {c.object_label(x)}", witness=(c.object_label(x),))
    D = G.target
    g = lambda f: G.on_morphism(G.source.to_local(f))
    h = lambda f: H.on_morphism(H.source.to_local(f))
    images = []
    for f in c.morphisms():
        fac = v.factor(f)
        lhs = D.compose(h(fac.term_m), g(fac.term_e))
        rhs = D.compose(g(fac.start_e), h(fac.start_m))
        if lhs != rhs:
            raise CompatibilityError(
                f"H(fᵐ)∘G(fᵉ) != G(f_e)∘H(f_m) at {c.morphism_label(f)}", witness=(c.morphism_label(f),)
            )
        images.append(lhs)
    return PlainFunctor(c, D, G.obj_map, images, name=f"[{G.name},{H.name}]")
