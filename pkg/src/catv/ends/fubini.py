#!/usr/bin/env python3
"""
Ends with a parameter and the Fubini isomorphism.

For F on A×B and a span L₁: R₁ → A, b ↦ ∫_{L₁} F(-, b) extends to a functor
on B whose action is the unique map commuting with the universal wedges.
Fubini compares ∫_{L₁×L₂} F with ∫_{L₂} ∫_{L₁} F through the transposition
θ ↦ θ̃, θ̃_{x,y} = ω^{L₂y}_x(θ_y).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from ..base import StructuralError, logger
from ..fincat import PlainFunctor, product_functor
from ..mixfun import SetMap, SetValuedMixedFunctor, precompose
from ..report import Report
from .compute import EndResult, compute_end
from .wedges import as_leg


def _factors(F: SetValuedMixedFunctor):
    p = F.source
    if len(getattr(p, "factors", ())) != 2 or len(F.variance.factor_variances) != 2:
        raise StructuralError(f"{F.name or 'F'} is not a functor on a binary product with product variance")
    return p, p.factors, F.variance.factor_variances


def _slice(p, a_cat, b: int) -> PlainFunctor:
    """a ↦ (a, b), f ↦ (f, id_b)."""
    B = p.factors[1]
    idb = B.identity(b)
    return PlainFunctor(
        a_cat, p,
        [p.object_index([a, b]) for a in a_cat.objects()],
        [p.index_of([f, idb]) for f in a_cat.morphisms()],
        name=f"(-,{B.object_label(b)})",
    )


class ParameterEnd(SetValuedMixedFunctor):
    """b ↦ ∫_{L₁} F(-, b), keeping every pointwise end."""

    ends: Dict[int, EndResult]


def parameter_functor(F: SetValuedMixedFunctor, span, cap: Optional[int] = None) -> ParameterEnd:
    p, (A, B), (vA, vB) = _factors(F)
    leg = as_leg(span)
    if leg.target is not A:
        raise StructuralError(f"span lands in {leg.target.name}, not in {A.name}")
    ends: Dict[int, EndResult] = {}
    for b in B.objects():
        Fb = precompose(F, _slice(p, A, b), vA, name=f"{F.name or 'F'}(-,{B.object_label(b)})")
        ends[b] = compute_end(Fb, leg, cap=cap)
    R = leg.source
    maps = []
    for g in B.morphisms():
        fac = vB.factor(g)
        src, dst = ends[fac.start_obj], ends[fac.term_obj]
        values = []
        for row in src.elements:
            moved = [F(p.index_of([A.identity(leg.on_object(x)), g]))(int(row[x])) for x in R.objects()]
            i = dst.index_of(moved)
            if i is None:
                raise StructuralError(f"no element of the end over {B.object_label(fac.term_obj)} matches")
            values.append(i)
        maps.append(SetMap.of(values, dst.size))
    P = ParameterEnd(vB, [ends[b].size for b in B.objects()], maps, name=f"∫{F.name or 'F'}")
    P.ends = ends
    logger.debug("parameter end %s: sizes %s", P.name, P.obj_map)
    return P


@dataclass(eq=False)
class FubiniWitness:
    total: EndResult
    iterated: EndResult
    inner: ParameterEnd
    mapping: np.ndarray
    report: Report = field(default_factory=lambda: Report("Fubini"))

    @property
    def ok(self) -> bool:
        return self.report.ok

    def to_dict(self) -> dict:
        return {
            "total": self.total.size,
            "iterated": self.iterated.size,
            "mapping": self.mapping.tolist(),
            "report": self.report.to_dict(),
        }


def transpose(inner: ParameterEnd, leg2: PlainFunctor, theta) -> List[int]:
    """θ̃ in the (x, y) order of R₁×R₂, x most significant."""
    R2 = leg2.source
    some = next(iter(inner.ends.values()))
    R1 = some.leg.source
    out = []
    for x in R1.objects():
        for y in R2.objects():
            e = inner.ends[leg2.on_object(y)]
            out.append(int(e.elements[int(theta[y]), x]))
    return out


def fubini_check(F: SetValuedMixedFunctor, span1, span2, cap: Optional[int] = None) -> FubiniWitness:
    """
    Build ∫_{L₁×L₂} F and ∫_{L₂}∫_{L₁} F and the transposition between them;
    the report lists anything that keeps it from being a bijection commuting
    with both universal wedges.
    """
    p, (A, B), _ = _factors(F)
    leg1, leg2 = as_leg(span1), as_leg(span2)
    if leg2.target is not B:
        raise StructuralError(f"second span lands in {leg2.target.name}, not in {B.name}")
    joint = product_functor([leg1, leg2], cap=cap)
    if joint.target is not p:
        raise StructuralError("L₁×L₂ does not land in the functor's source")
    total = compute_end(F, joint, cap=cap)
    inner = parameter_functor(F, leg1, cap=cap)
    iterated = compute_end(inner, leg2, cap=cap)
    report = Report(f"Fubini for {F.name or 'F'}")
    mapping = np.full(iterated.size, -1, dtype=np.int64)
    for i, theta in enumerate(iterated.elements):
        report.checked += 1
        image = transpose(inner, leg2, theta)
        j = total.index_of(image)
        if j is None:
            report.add("not-a-wedge", (i,), "transposed element is not in the end over L₁×L₂")
            continue
        mapping[i] = j
    if report.ok:
        if total.size != iterated.size:
            report.add("size", (total.size, iterated.size), "the two ends have different sizes")
        elif len(set(mapping.tolist())) != iterated.size:
            report.add("injectivity", (), "transposition identifies two elements")
    logger.debug("Fubini: %d vs %d elements", total.size, iterated.size)
    return FubiniWitness(total, iterated, inner, mapping, report.finish())
