#!/usr/bin/env python3
"""
Variance constructions: covariant, contravariant, product and index
variances, path-component variances, inherited variances on factoring-closed
subcategories, coproducts, semidirect products and equalizers.
"""
from __future__ import annotations

from typing import Optional, Sequence, Tuple

import numpy as np

from ..base import InheritanceError, StructuralError, logger
from ..fincat import (
    FinCategory,
    PlainFunctor,
    disjoint_union,
    path_components,
    product_category,
    semidirect_product,
    subcategory,
)
from ..report import Report
from .core import VarianceStruct, build_variance, everything, identities, variance_from_tables


def covariant_variance(c) -> VarianceStruct:
    """Every morphism covariant: fᵉ = f_e = f, f_s = dom f, f_t = cod f."""
    mors = np.arange(c.n_morphisms, dtype=np.int64)
    ids_dom = np.array([c.identity(c.dom(f)) for f in c.morphisms()], dtype=np.int64)
    ids_cod = np.array([c.identity(c.cod(f)) for f in c.morphisms()], dtype=np.int64)
    return variance_from_tables(
        c, everything(c), identities(c),
        term_e=mors, term_m=ids_cod, start_m=ids_dom, start_e=mors,
        start_obj=c.dom_array, term_obj=c.cod_array, name="covariant",
    )


def contravariant_variance(c) -> VarianceStruct:
    """Every morphism contravariant: fᵐ = f_m = f, f_s = cod f, f_t = dom f."""
    mors = np.arange(c.n_morphisms, dtype=np.int64)
    ids_dom = np.array([c.identity(c.dom(f)) for f in c.morphisms()], dtype=np.int64)
    ids_cod = np.array([c.identity(c.cod(f)) for f in c.morphisms()], dtype=np.int64)
    return variance_from_tables(
        c, identities(c), everything(c),
        term_e=ids_dom, term_m=mors, start_m=mors, start_e=ids_cod,
        start_obj=c.cod_array, term_obj=c.dom_array, name="contravariant",
    )


def product_variance(factors: Sequence[Tuple[FinCategory, VarianceStruct]], cap: Optional[int] = None) -> VarianceStruct:
    """
    Canonical variance on a product: a morphism is covariant (contravariant)
    iff every component is, and factorizations are taken componentwise.
    """
    cats = [c for c, _ in factors]
    for c, v in factors:
        if v.owner is not c:
            raise StructuralError(f"variance {v.name or '?'} does not live on {c.name}")
    p = product_category(cats, cap=cap)
    comp = p.component_matrix
    tables = {}
    for key in ("term_e", "term_m", "start_m", "start_e"):
        tables[key] = p.encode_columns([getattr(v, key)[comp[i]] for i, (_, v) in enumerate(factors)])
    for key in ("start_obj", "term_obj"):
        tables[key] = p.encode_object_columns([getattr(v, key)[comp[i]] for i, (_, v) in enumerate(factors)])
    e_mask = np.ones(p.n_morphisms, dtype=bool)
    m_mask = np.ones(p.n_morphisms, dtype=bool)
    for i, (_, v) in enumerate(factors):
        e_mask &= v.e_mask[comp[i]]
        m_mask &= v.m_mask[comp[i]]
    name = "×".join(v.name or "?" for _, v in factors)
    return variance_from_tables(
        p, np.nonzero(e_mask)[0].tolist(), np.nonzero(m_mask)[0].tolist(),
        name=name, factor_variances=tuple(v for _, v in factors), **tables,
    )


def index_variance(factors: Sequence[FinCategory], flags: Sequence[int], cap: Optional[int] = None) -> VarianceStruct:
    """Product variance with factor i covariant when flags[i] = 0, contravariant when 1."""
    if len(factors) != len(flags):
        raise StructuralError(f"index-variance has {len(flags)} flags for {len(factors)} factors")
    if any(v not in (0, 1) for v in flags):
        raise StructuralError(f"index-variance flags must be 0 or 1, got {tuple(flags)}")
    chosen = [(c, contravariant_variance(c) if v else covariant_variance(c)) for c, v in zip(factors, flags)]
    result = product_variance(chosen, cap=cap)
    object.__setattr__(result, "index_flags", tuple(int(v) for v in flags))
    object.__setattr__(result, "name", "index(" + ",".join(str(v) for v in flags) + ")")
    return result


def path_component_variance(c, J) -> VarianceStruct:
    """Morphisms with domain in J covariant, all others contravariant."""
    J = frozenset(int(x) for x in J)
    for comp in path_components(c):
        inside = comp & J
        if inside and inside != comp:
            raise StructuralError(
                f"J splits the path component {{{', '.join(sorted(c.object_label(x) for x in comp))}}}"
            )
    cov, contra = covariant_variance(c), contravariant_variance(c)
    rows = np.array([c.dom(f) in J for f in c.morphisms()], dtype=bool)
    pick = lambda key: np.where(rows, getattr(cov, key), getattr(contra, key))
    E = [f for f in c.morphisms() if rows[f]]
    M = [f for f in c.morphisms() if not rows[f]]
    return variance_from_tables(
        c, E, M,
        **{key: pick(key) for key in ("term_e", "term_m", "start_m", "start_e", "start_obj", "term_obj")},
        name="path-component",
    )


def inherited_variance(c, v: VarianceStruct, r) -> VarianceStruct:
    """
    Restrict ``v`` to a subcategory ``r`` (a ``SubCategory`` of ``c``).

    Succeeds iff r is closed under factoring; otherwise raises
    ``InheritanceError`` naming a morphism whose factor leaves r.
    """
    if v.owner is not c or getattr(r, "owner", None) is not c:
        raise StructuralError("inherited_variance: subcategory and variance must live on the same category")
    inside = set(r.owner_morphisms)
    parts = ("term_e", "term_m", "start_m", "start_e")
    for f in r.owner_morphisms:
        fac = v.factor(f)
        for part in parts:
            g = getattr(fac, part)
            if g not in inside:
                raise InheritanceError(
                    f"{c.morphism_label(f)} has {part} = {c.morphism_label(g)} outside {r.name}",
                    witness=(c.morphism_label(f), part, c.morphism_label(g)),
                )
    tables = {key: [] for key in parts + ("start_obj", "term_obj")}
    for f in r.owner_morphisms:
        fac = v.factor(f)
        for part in parts:
            tables[part].append(r.to_local(getattr(fac, part)))
        tables["start_obj"].append(r.local_object(fac.start_obj))
        tables["term_obj"].append(r.local_object(fac.term_obj))
    E = [r.to_local(f) for f in r.owner_morphisms if f in v.E]
    M = [r.to_local(f) for f in r.owner_morphisms if f in v.M]
    return variance_from_tables(r, E, M, name=f"{v.name or 'variance'}|{r.name}", **tables)


def coproduct_variance(parts: Sequence[Tuple[FinCategory, VarianceStruct]], name: Optional[str] = None):
    """Variance on the disjoint union, returned with the union and its injections."""
    union, injections = disjoint_union([c for c, _ in parts], name=name)
    tables = {key: [] for key in ("term_e", "term_m", "start_m", "start_e", "start_obj", "term_obj")}
    E, M = [], []
    for (c, v), inj in zip(parts, injections):
        for f in c.morphisms():
            fac = v.factor(f)
            for key in ("term_e", "term_m", "start_m", "start_e"):
                tables[key].append(inj.on_morphism(getattr(fac, key)))
            tables["start_obj"].append(inj.on_object(fac.start_obj))
            tables["term_obj"].append(inj.on_object(fac.term_obj))
        E.extend(inj.on_morphism(f) for f in v.E)
        M.extend(inj.on_morphism(f) for f in v.M)
    return union, injections, variance_from_tables(union, E, M, name="⊔".join(v.name or "?" for _, v in parts), **tables)


def semidirect_variance(n: int, k: int, a: int) -> VarianceStruct:
    """(N, H) on Z_n ⋊ Z_k: N = Z_n covariant, H = Z_k contravariant."""
    c = semidirect_product(n, k, a)
    N = [x * k for x in range(n)]
    H = list(range(k))
    return build_variance(c, N, H, name="semidirect")


def preserves_variance(F: PlainFunctor, v_src: VarianceStruct, v_tgt: VarianceStruct) -> Report:
    """F maps E into E and M into M."""
    report = Report(f"variance preservation of {F.name or '?'}")
    for f in v_src.E:
        if F.on_morphism(f) not in v_tgt.E:
            report.add("covariant-image", (F.source.morphism_label(f),), "image is not covariant")
    for f in v_src.M:
        if F.on_morphism(f) not in v_tgt.M:
            report.add("contravariant-image", (F.source.morphism_label(f),), "image is not contravariant")
    return report.finish()


def equalizer_variance(F: PlainFunctor, G: PlainFunctor, v_src: VarianceStruct, v_tgt: VarianceStruct):
    """
    Equalizer of two variance-preserving functors with the variance created
    through the forgetful functor. Returns ``(subcategory, variance)``.
    """
    if F.source is not G.source or F.target is not G.target:
        raise StructuralError("equalizer needs parallel functors")
    for H in (F, G):
        report = preserves_variance(H, v_src, v_tgt)
        if not report.ok:
            raise StructuralError(f"{H.name or '?'} does not preserve variance: {report.witnesses()[0]}")
    c = F.source
    objs = [x for x in c.objects() if F.on_object(x) == G.on_object(x)]
    mors = [f for f in c.morphisms() if F.on_morphism(f) == G.on_morphism(f)]
    eq = subcategory(c, mors, objects=objs, name=f"Eq({F.name or 'F'},{G.name or 'G'})")
    logger.debug("equalizer: %d of %d morphisms", eq.n_morphisms, c.n_morphisms)
    return eq, inherited_variance(c, v_src, eq)
