#!/usr/bin/env python3
"""
Products, coproducts and opposites of finite categories, and the functors
between them (projections, pairings, componentwise products).

Product indices are mixed-radix with the first factor most significant, so
the canonical index order is lexicographic in the component indices.
"""
from __future__ import annotations

import weakref
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..base import StructuralError, logger
from ..config import ensure_within_cap
from .category import FinCategory
from .core import PlainFunctor


def _strides(sizes: Sequence[int]) -> np.ndarray:
    out = np.ones(len(sizes), dtype=np.int64)
    for i in range(len(sizes) - 2, -1, -1):
        out[i] = out[i + 1] * sizes[i + 1]
    return out


class ProductCategory(FinCategory):
    """Materialised product of finite categories with componentwise structure."""

    def __init__(self, factors: Sequence[FinCategory], name: Optional[str] = None):
        self.factors: Tuple[FinCategory, ...] = tuple(factors)
        self._mor_sizes = [c.n_morphisms for c in self.factors]
        self._obj_sizes = [c.n_objects for c in self.factors]
        self._mor_strides = _strides(self._mor_sizes)
        self._obj_strides = _strides(self._obj_sizes)
        n_mor = prod(self._mor_sizes)
        n_obj = prod(self._obj_sizes)

        comps = self._decode_all(n_mor, self._mor_sizes, self._mor_strides)
        dom = np.zeros(n_mor, dtype=np.int64)
        cod = np.zeros(n_mor, dtype=np.int64)
        for c, col, stride in zip(self.factors, comps, self._obj_strides):
            dom += c.dom_array[col] * stride
            cod += c.cod_array[col] * stride
        ocomps = self._decode_all(n_obj, self._obj_sizes, self._obj_strides)
        ids = np.zeros(n_obj, dtype=np.int64)
        for c, col, stride in zip(self.factors, ocomps, self._mor_strides):
            ids += np.array([c.identity(int(x)) for x in range(c.n_objects)], dtype=np.int64)[col] * stride
        self._component_matrix = np.array(comps, dtype=np.int64).reshape(len(self.factors), n_mor)
        label = name or "×".join(c.name for c in self.factors) or "1"
        super().__init__(label, None, dom, cod, ids, None, None, n_objects=n_obj)
        logger.debug("product %s: %d objects, %d morphisms", label, n_obj, n_mor)

    @staticmethod
    def _decode_all(n: int, sizes: Sequence[int], strides: np.ndarray) -> List[np.ndarray]:
        idx = np.arange(n, dtype=np.int64)
        return [(idx // s) % size for size, s in zip(sizes, strides)]

    @property
    def component_matrix(self) -> np.ndarray:
        """Array of shape (factors, morphisms) holding each morphism's components."""
        return self._component_matrix

    def components(self, f: int) -> Tuple[int, ...]:
        return tuple(int(v) for v in self._component_matrix[:, f])

    def object_components(self, x: int) -> Tuple[int, ...]:
        return tuple(int((x // s) % n) for n, s in zip(self._obj_sizes, self._obj_strides))

    def index_of(self, components: Sequence[int]) -> int:
        if len(components) != len(self.factors):
            raise StructuralError(f"{self.name}: expected {len(self.factors)} components, got {len(components)}")
        return int(sum(int(c) * int(s) for c, s in zip(components, self._mor_strides)))

    def object_index(self, components: Sequence[int]) -> int:
        if len(components) != len(self.factors):
            raise StructuralError(f"{self.name}: expected {len(self.factors)} components, got {len(components)}")
        return int(sum(int(c) * int(s) for c, s in zip(components, self._obj_strides)))

    def encode_columns(self, columns: Sequence[np.ndarray]) -> np.ndarray:
        """Vectorised ``index_of`` over equal-length component arrays."""
        out = np.zeros(len(columns[0]) if columns else 1, dtype=np.int64)
        for col, s in zip(columns, self._mor_strides):
            out += np.asarray(col, dtype=np.int64) * s
        return out

    def encode_object_columns(self, columns: Sequence[np.ndarray]) -> np.ndarray:
        out = np.zeros(len(columns[0]) if columns else 1, dtype=np.int64)
        for col, s in zip(columns, self._obj_strides):
            out += np.asarray(col, dtype=np.int64) * s
        return out

    def composite_or_none(self, g: int, f: int) -> Optional[int]:
        if self.cod(f) != self.dom(g):
            return None
        parts = []
        for c, gi, fi in zip(self.factors, self.components(g), self.components(f)):
            h = c.composite_or_none(gi, fi)
            if h is None:
                return None
            parts.append(h)
        return self.index_of(parts)

    def composition_entries(self):
        for g, f in self.composable_pairs():
            yield (g, f), self.composite_or_none(g, f)

    def object_label(self, x: int) -> str:
        parts = [c.object_label(i) for c, i in zip(self.factors, self.object_components(x))]
        return "(" + ",".join(parts) + ")"

    def morphism_label(self, f: int) -> str:
        parts = [c.morphism_label(i) for c, i in zip(self.factors, self.components(f))]
        return "(" + ",".join(parts) + ")"


_PRODUCTS: "weakref.WeakValueDictionary[Tuple[int, ...], ProductCategory]" = weakref.WeakValueDictionary()


def product_category(factors: Sequence[FinCategory], cap: Optional[int] = None) -> ProductCategory:
    """
    Product of ``factors`` with componentwise dom/cod/identity/composition.

    Products of the same factor objects are shared while any of them is alive,
    so two calls with the same factors return the same category. The cap is
    checked on every call, cached or not.
    """
    factors = tuple(factors)
    ensure_within_cap("product category", prod(c.n_morphisms for c in factors), cap)
    key = tuple(id(c) for c in factors)
    cached = _PRODUCTS.get(key)
    if cached is not None and all(a is b for a, b in zip(cached.factors, factors)):
        return cached
    result = ProductCategory(factors)
    _PRODUCTS[key] = result
    return result


def projection(p: ProductCategory, i: int) -> PlainFunctor:
    c = p.factors[i]
    obj_map = [p.object_components(x)[i] for x in p.objects()]
    return PlainFunctor(p, c, obj_map, p.component_matrix[i].tolist(), name=f"π{i + 1}")


def pairing(functors: Sequence[PlainFunctor], cap: Optional[int] = None) -> PlainFunctor:
    """⟨F1,…,Fk⟩: R → ∏ targets for functors sharing the source R."""
    if not functors:
        raise StructuralError("pairing needs at least one functor")
    source = functors[0].source
    if any(F.source is not source for F in functors):
        raise StructuralError("pairing: functors must share their source")
    target = product_category([F.target for F in functors], cap=cap)
    mor = target.encode_columns([np.array(F.mor_map, dtype=np.int64) for F in functors])
    obj = [target.object_index([F.obj_map[x] for F in functors]) for x in source.objects()]
    return PlainFunctor(source, target, obj, mor.tolist(), name="⟨" + ",".join(F.name for F in functors) + "⟩")


def diagonal(c: FinCategory, n: int = 2, cap: Optional[int] = None) -> PlainFunctor:
    ident = PlainFunctor.identity(c)
    d = pairing([ident] * n, cap=cap)
    return PlainFunctor(d.source, d.target, d.obj_map, d.mor_map, name="Δ")


def product_functor(functors: Sequence[PlainFunctor], cap: Optional[int] = None) -> PlainFunctor:
    """F1×…×Fk between the products of sources and targets."""
    source = product_category([F.source for F in functors], cap=cap)
    target = product_category([F.target for F in functors], cap=cap)
    cols = [np.array(F.mor_map, dtype=np.int64)[source.component_matrix[i]] for i, F in enumerate(functors)]
    mor = target.encode_columns(cols)
    obj = []
    for x in source.objects():
        comps = source.object_components(x)
        obj.append(target.object_index([F.obj_map[c] for F, c in zip(functors, comps)]))
    return PlainFunctor(source, target, obj, mor.tolist(), name="×".join(F.name for F in functors))


def disjoint_union(cats: Sequence[FinCategory], name: Optional[str] = None) -> Tuple[FinCategory, List[PlainFunctor]]:
    """Coproduct of categories together with its injections."""
    raw_labels = [c.object_label(x) for c in cats for x in c.objects()]
    clash = len(set(raw_labels)) != len(raw_labels)
    obj_labels, mor_labels, dom, cod, ids = [], [], [], [], []
    table: Dict[Tuple[int, int], int] = {}
    obj_offset = mor_offset = 0
    offsets = []
    for c in cats:
        offsets.append((obj_offset, mor_offset))
        prefix = f"{c.name}." if clash else ""
        obj_labels.extend(prefix + c.object_label(x) for x in c.objects())
        mor_labels.extend(prefix + c.morphism_label(f) for f in c.morphisms())
        dom.extend(c.dom(f) + obj_offset for f in c.morphisms())
        cod.extend(c.cod(f) + obj_offset for f in c.morphisms())
        ids.extend(c.identity(x) + mor_offset for x in c.objects())
        for g, f in c.composable_pairs():
            h = c.composite_or_none(g, f)
            if h is not None:
                table[(g + mor_offset, f + mor_offset)] = h + mor_offset
        obj_offset += c.n_objects
        mor_offset += c.n_morphisms
    union = FinCategory(name or "⊔".join(c.name for c in cats), obj_labels, dom, cod, ids, table, mor_labels)
    injections = [
        PlainFunctor(
            c, union,
            [x + oo for x in c.objects()],
            [f + mo for f in c.morphisms()],
            name=f"ι{i + 1}",
        )
        for i, (c, (oo, mo)) in enumerate(zip(cats, offsets))
    ]
    return union, injections


def opposite_category(c: FinCategory) -> FinCategory:
    table: Dict[Tuple[int, int], int] = {}
    for g, f in c.composable_pairs():
        h = c.composite_or_none(g, f)
        if h is not None:
            table[(f, g)] = h
    return FinCategory(
        f"{c.name}^op",
        [c.object_label(x) for x in c.objects()],
        [c.cod(f) for f in c.morphisms()],
        [c.dom(f) for f in c.morphisms()],
        [c.identity(x) for x in c.objects()],
        table,
        [c.morphism_label(f) for f in c.morphisms()],
    )
