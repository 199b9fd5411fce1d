#!/usr/bin/env python3
"""Structural laws every variance satisfies, checked exhaustively."""
from __future__ import annotations

from ..report import Report
from .core import VarianceStruct


def relative_cancellation_report(v: VarianceStruct) -> Report:
    """r∘s ∈ E with s ∈ E forces r ∈ E; g∘f ∈ M with g ∈ M forces f ∈ M."""
    c = v.owner
    report = Report(f"relative cancellation for {v.name or 'variance'} on {c.name}")
    for g, f in c.composable_pairs():
        report.checked += 1
        gf = c.compose(g, f)
        if gf in v.E and f in v.E and g not in v.E:
            report.add("right-cancellation", (c.morphism_label(g), c.morphism_label(f)), "left factor not covariant")
        if gf in v.M and g in v.M and f not in v.M:
            report.add("left-cancellation", (c.morphism_label(g), c.morphism_label(f)), "right factor not contravariant")
    return report.finish()


def discrete_intersection_report(v: VarianceStruct) -> Report:
    c = v.owner
    report = Report(f"E∩M discrete for {v.name or 'variance'} on {c.name}")
    for f in sorted(v.E.morphisms & v.M.morphisms):
        if not c.is_identity(f):
            report.add("non-identity", (c.morphism_label(f),), "both covariant and contravariant")
    return report.finish()


def composite_equations_report(v: VarianceStruct) -> Report:
    """
    For composable g, f:
    (gf)ᵐ = gᵐ(gᵉfᵐ)ᵐ, (gf)ᵉ = (gᵉfᵐ)ᵉfᵉ, (gf)_m = (g_m f_e)_m f_m,
    (gf)_e = g_e(g_m f_e)_e, (gf)_s = (g_m f_e)_s and (gf)_t = (gᵉfᵐ)_t.
    """
    c = v.owner
    report = Report(f"composite factorization equations for {v.name or 'variance'} on {c.name}")
    lbl = c.morphism_label
    for g, f in c.composable_pairs():
        report.checked += 1
        fg, ff, fgf = v.factor(g), v.factor(f), v.factor(c.compose(g, f))
        upper = v.factor(c.compose(fg.term_e, ff.term_m))
        lower = v.factor(c.compose(fg.start_m, ff.start_e))
        checks = {
            "term_m": (fgf.term_m, c.compose(fg.term_m, upper.term_m)),
            "term_e": (fgf.term_e, c.compose(upper.term_e, ff.term_e)),
            "start_m": (fgf.start_m, c.compose(lower.start_m, ff.start_m)),
            "start_e": (fgf.start_e, c.compose(fg.start_e, lower.start_e)),
        }
        for name, (lhs, rhs) in checks.items():
            if lhs != rhs:
                report.add(name, (lbl(g), lbl(f)), f"{lbl(lhs)} != {lbl(rhs)}")
        if fgf.start_obj != lower.start_obj:
            report.add("start_obj", (lbl(g), lbl(f)), "(gf)_s differs from (g_m f_e)_s")
        if fgf.term_obj != upper.term_obj:
            report.add("term_obj", (lbl(g), lbl(f)), "(gf)_t differs from (gᵉfᵐ)_t")
    return report.finish()


def factor_identities_report(v: VarianceStruct) -> Report:
    """For e ∈ E: eᵉ = e_e = e and eᵐ, e_m identities; dually for M."""
    c = v.owner
    report = Report(f"factor identities for {v.name or 'variance'} on {c.name}")
    for f in c.morphisms():
        fac = v.factor(f)
        x, y = c.dom(f), c.cod(f)
        if f in v.E:
            expected = (f, c.identity(y), c.identity(x), f, x, y)
        elif f in v.M:
            expected = (c.identity(x), f, f, c.identity(y), y, x)
        else:
            continue
        if tuple(fac) != expected:
            report.add("factor-table", (c.morphism_label(f),), f"got {tuple(fac)}, expected {expected}")
    return report.finish()
