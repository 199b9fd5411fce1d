#!/usr/bin/env python3
"""Axiom checks for categories and plain functors, reported as ``Report``s."""
from __future__ import annotations

from ..report import Report
from .core import PlainFunctor


def validate_category(c) -> Report:
    """
    Check identities, composite typing, identity laws and associativity.

    Out-of-range indices never reach this point: they are rejected as
    ``StructuralError`` when the category is constructed.
    """
    report = Report(f"category {c.name}")
    for x in c.objects():
        i = c.identity(x)
        if c.dom(i) != x or c.cod(i) != x:
            report.add("identity-typing", (c.object_label(x),), f"identity {c.morphism_label(i)} is not an endomorphism of {c.object_label(x)}")

    label = c.morphism_label
    well_typed = set()
    for g, f in c.composable_pairs():
        report.checked += 1
        h = c.composite_or_none(g, f)
        if h is None:
            report.add("missing-composite", (label(g), label(f)), "composable pair has no composite")
            continue
        if c.dom(h) != c.dom(f) or c.cod(h) != c.cod(g):
            report.add(
                "composite-typing", (label(g), label(f)),
                f"{label(g)}∘{label(f)} = {label(h)} has type "
                f"{c.object_label(c.dom(h))}→{c.object_label(c.cod(h))}, expected "
                f"{c.object_label(c.dom(f))}→{c.object_label(c.cod(g))}",
            )
            continue
        well_typed.add((g, f))

    for f in c.morphisms():
        left = c.composite_or_none(c.identity(c.cod(f)), f)
        right = c.composite_or_none(f, c.identity(c.dom(f)))
        if left != f:
            report.add("left-identity", (label(f),), f"id∘{label(f)} is not {label(f)}")
        if right != f:
            report.add("right-identity", (label(f),), f"{label(f)}∘id is not {label(f)}")

    for g, f in sorted(well_typed, key=lambda p: (p[1], p[0])):
        gf = c.composite_or_none(g, f)
        for h in c.out_of(c.cod(g)):
            if (h, g) not in well_typed or (h, gf) not in well_typed:
                continue
            lhs = c.composite_or_none(h, gf)
            rhs = c.composite_or_none(c.composite_or_none(h, g), f)
            if lhs != rhs:
                report.add("associativity", (label(h), label(g), label(f)), f"{label(lhs)} != {label(rhs)}")
    return report.finish()


def validate_functor(F: PlainFunctor) -> Report:
    src, tgt = F.source, F.target
    report = Report(f"functor {F.name or '?'}: {src.name} -> {tgt.name}")
    for f in src.morphisms():
        Ff = F.mor_map[f]
        if tgt.dom(Ff) != F.obj_map[src.dom(f)] or tgt.cod(Ff) != F.obj_map[src.cod(f)]:
            report.add("typing", (src.morphism_label(f),), f"image {tgt.morphism_label(Ff)} has the wrong type")
    for x in src.objects():
        if F.mor_map[src.identity(x)] != tgt.identity(F.obj_map[x]):
            report.add("identity", (src.object_label(x),), "identity not preserved")
    if not report.ok:
        return report.finish()
    for g, f in src.composable_pairs():
        report.checked += 1
        lhs = F.mor_map[src.compose(g, f)]
        rhs = tgt.compose(F.mor_map[g], F.mor_map[f])
        if lhs != rhs:
            report.add(
                "composition", (src.morphism_label(g), src.morphism_label(f)),
                f"F(g∘f) = {tgt.morphism_label(lhs)} but F(g)∘F(f) = {tgt.morphism_label(rhs)}",
            )
    return report.finish()


def is_faithful(F: PlainFunctor) -> bool:
    src = F.source
    for x in src.objects():
        for y in src.objects():
            images = [F.mor_map[f] for f in src.hom(x, y)]
            if len(set(images)) != len(images):
                return False
    return True
