#!/usr/bin/env python3
"""
Wedges and cowedges of finite-set-valued functors of mixed variance along a
span L: R → A, and the parallel pair whose equalizer is the end.

An L-wedge with apex W is a family ω_x: W → F(Lx) such that
F(L(f)ᵉ)∘ω_x = F(L(f)ᵐ)∘ω_y for every f: x → y in R. A cowedge is a family
ω_x: F(Lx) → W with ω_x∘F(L(f)_m) = ω_y∘F(L(f)_e).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..base import StructuralError
from ..config import ensure_within_cap
from ..fincat import PlainFunctor
from ..mixfun import SetMap, SetValuedMixedFunctor
from ..natural import Span, selected_morphisms
from ..report import Report


def as_leg(span) -> PlainFunctor:
    """The functor L of a span on A; a span A → B contributes ⟨L₁, L₂⟩."""
    if isinstance(span, PlainFunctor):
        return span
    if isinstance(span, Span):
        return span.paired if span.two_sided else span.leg
    raise StructuralError(f"not a span: {span!r}")


def _require_leg(F: SetValuedMixedFunctor, leg: PlainFunctor) -> None:
    if leg.target is not F.source:
        raise StructuralError(f"span lands in {leg.target.name}, {F.name or 'F'} lives on {F.source.name}")


@dataclass(eq=False)
class Wedge:
    apex: int
    family: List[SetMap] = field(default_factory=list)


@dataclass(eq=False)
class Cowedge:
    apex: int
    family: List[SetMap] = field(default_factory=list)


def value_sizes(F: SetValuedMixedFunctor, leg: PlainFunctor) -> List[int]:
    return [F.size(leg.on_object(x)) for x in leg.source.objects()]


def check_wedge(F: SetValuedMixedFunctor, span, w: Wedge, gens=None) -> Report:
    leg = as_leg(span)
    _require_leg(F, leg)
    R = leg.source
    report = Report(f"wedge over {F.name or 'F'} along {getattr(span, 'name', '') or leg.name or 'L'}")
    sizes = value_sizes(F, leg)
    if len(w.family) != R.n_objects:
        raise StructuralError(f"wedge has {len(w.family)} components for {R.n_objects} objects")
    for x in R.objects():
        if w.family[x].domain_size != w.apex or w.family[x].size != sizes[x]:
            report.add("typing", (R.object_label(x),), f"ω_x = {w.family[x]!r} is not a map {w.apex} → {sizes[x]}")
    if not report.ok:
        return report.finish()
    for f in selected_morphisms(R, gens):
        report.checked += 1
        fac = F.variance.factor(leg.on_morphism(f))
        upper = F(fac.term_e).after(w.family[R.dom(f)])
        lower = F(fac.term_m).after(w.family[R.cod(f)])
        if upper != lower:
            report.add("wedge", (R.morphism_label(f),), "F(L(f)ᵉ)∘ω_x != F(L(f)ᵐ)∘ω_y", upper=upper, lower=lower)
    return report.finish()


def check_cowedge(F: SetValuedMixedFunctor, span, w: Cowedge, gens=None) -> Report:
    leg = as_leg(span)
    _require_leg(F, leg)
    R = leg.source
    report = Report(f"cowedge under {F.name or 'F'} along {getattr(span, 'name', '') or leg.name or 'L'}")
    sizes = value_sizes(F, leg)
    if len(w.family) != R.n_objects:
        raise StructuralError(f"cowedge has {len(w.family)} components for {R.n_objects} objects")
    for x in R.objects():
        if w.family[x].domain_size != sizes[x] or w.family[x].size != w.apex:
            report.add("typing", (R.object_label(x),), f"ω_x = {w.family[x]!r} is not a map {sizes[x]} → {w.apex}")
    if not report.ok:
        return report.finish()
    for f in selected_morphisms(R, gens):
        report.checked += 1
        fac = F.variance.factor(leg.on_morphism(f))
        upper = w.family[R.dom(f)].after(F(fac.start_m))
        lower = w.family[R.cod(f)].after(F(fac.start_e))
        if upper != lower:
            report.add("cowedge", (R.morphism_label(f),), "ω_x∘F(L(f)_m) != ω_y∘F(L(f)_e)", upper=upper, lower=lower)
    return report.finish()


def product_elements(sizes: Sequence[int], cap: Optional[int] = None, what: str = "product") -> np.ndarray:
    """All tuples of ∏ range(sizes[x]) as rows, lexicographic with the first coordinate most significant."""
    ensure_within_cap(what, prod(sizes), cap)
    if not sizes:
        return np.zeros((1, 0), dtype=np.int64)
    return np.indices(sizes, dtype=np.int64).reshape(len(sizes), -1).T.copy()


def parallel_pair(F: SetValuedMixedFunctor, span, rows: np.ndarray, gens=None) -> Tuple[np.ndarray, np.ndarray, Tuple[int, ...]]:
    """
    The maps s, t: ∏_x F(Lx) → ∏_f F(L(f)_t), with s reading the component
    at dom f through F(L(f)ᵉ) and t the component at cod f through F(L(f)ᵐ).
    Evaluated on ``rows``; column j belongs to the j-th returned morphism.
    """
    leg = as_leg(span)
    _require_leg(F, leg)
    R = leg.source
    mors = tuple(selected_morphisms(R, gens))
    s = np.zeros((rows.shape[0], len(mors)), dtype=np.int64)
    t = np.zeros_like(s)
    for j, f in enumerate(mors):
        fac = F.variance.factor(leg.on_morphism(f))
        s[:, j] = F(fac.term_e).values[rows[:, R.dom(f)]]
        t[:, j] = F(fac.term_m).values[rows[:, R.cod(f)]]
    return s, t, mors


def wedge_to_cone(w: Wedge) -> np.ndarray:
    """The map apex → ∏_x F(Lx) as rows, one per apex element."""
    if not w.family:
        return np.zeros((w.apex, 0), dtype=np.int64)
    return np.stack([m.values for m in w.family], axis=1)


def cone_to_wedge(rows: np.ndarray, sizes: Sequence[int]) -> Wedge:
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, len(sizes))
    return Wedge(rows.shape[0], [SetMap.of(rows[:, x], sizes[x]) for x in range(len(sizes))])
