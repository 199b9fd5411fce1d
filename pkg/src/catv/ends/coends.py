#!/usr/bin/env python3
"""
Coends as quotients of ⨆_x F(Lx) by the smallest equivalence relation with
(x, F(L(f)_m)(a)) ~ (y, F(L(f)_e)(a)) for f: x → y and a ∈ F(L(f)_s).
This is the formal dual of the equalizer construction of ends, checked
against a brute-force count of cowedges into a two-element set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from ..base import PreconditionError, StructuralError, logger
from ..config import ensure_within_cap
from ..fincat import PlainFunctor
from ..mixfun import SetMap, SetValuedMixedFunctor
from ..natural import selected_morphisms
from .wedges import Cowedge, _require_leg, as_leg, value_sizes

DUALIZED_NOTE = "dualized construction"


@dataclass(eq=False)
class CoendResult:
    """Classes of the disjoint union, numbered by their least element."""

    functor: SetValuedMixedFunctor
    leg: PlainFunctor
    offsets: np.ndarray
    class_of: np.ndarray
    notes: List[str] = field(default_factory=lambda: [DUALIZED_NOTE])

    @property
    def size(self) -> int:
        return int(self.class_of.max()) + 1 if self.class_of.size else 0

    def element(self, x: int, a: int) -> int:
        return int(self.offsets[x]) + a

    def injection(self, x: int) -> SetMap:
        start, stop = int(self.offsets[x]), int(self.offsets[x + 1])
        return SetMap.of(self.class_of[start:stop], self.size)

    def universal_cowedge(self) -> Cowedge:
        return Cowedge(self.size, [self.injection(x) for x in self.leg.source.objects()])

    def classes(self) -> List[List[Tuple[int, int]]]:
        """Members (x, a) of each class, in class order."""
        out: List[List[Tuple[int, int]]] = [[] for _ in range(self.size)]
        for x in self.leg.source.objects():
            for a in range(int(self.offsets[x + 1] - self.offsets[x])):
                out[int(self.class_of[self.element(x, a)])].append((x, a))
        return out

    def mediating_map(self, w: Cowedge) -> SetMap:
        """The unique map coend → apex(w) through which w factors."""
        values = [-1] * self.size
        for x, m in enumerate(w.family):
            for a in range(m.domain_size):
                k = int(self.class_of[self.element(x, a)])
                if values[k] == -1:
                    values[k] = m(a)
                elif values[k] != m(a):
                    raise PreconditionError(f"class {k} is sent to two values: not a cowedge", witness=(k,))
        return SetMap.of(values, w.apex)

    def to_dict(self) -> dict:
        R = self.leg.source
        rendered = [
            "{" + ",".join(f"{R.object_label(x)}:{self.functor.label_element(self.leg.on_object(x), a)}" for x, a in members) + "}"
            for members in self.classes()
        ]
        return {"functor": self.functor.name, "size": self.size, "classes": rendered, "notes": list(self.notes)}


def compute_coend(F: SetValuedMixedFunctor, span, gens=None, cap: Optional[int] = None) -> CoendResult:
    leg = as_leg(span)
    _require_leg(F, leg)
    R = leg.source
    sizes = value_sizes(F, leg)
    total = sum(sizes)
    ensure_within_cap(f"coend of {F.name or 'F'}", total, cap)
    offsets = np.concatenate([[0], np.cumsum(sizes, dtype=np.int64)]).astype(np.int64)
    parent = list(range(total))

    def find(u: int) -> int:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for f in selected_morphisms(R, gens):
        if R.is_identity(f):
            continue
        fac = F.variance.factor(leg.on_morphism(f))
        left, right = F(fac.start_m), F(fac.start_e)
        ox, oy = int(offsets[R.dom(f)]), int(offsets[R.cod(f)])
        for a in range(left.domain_size):
            u, v = find(ox + left(a)), find(oy + right(a))
            if u != v:
                parent[max(u, v)] = min(u, v)
    roots = [find(u) for u in range(total)]
    numbering = {}
    for r in roots:
        numbering.setdefault(r, len(numbering))
    class_of = np.array([numbering[r] for r in roots], dtype=np.int64)
    logger.debug("coend of %s: %d classes from %d elements", F.name or "F", len(numbering), total)
    return CoendResult(F, leg, offsets, class_of)


def count_cowedges_into_two(F: SetValuedMixedFunctor, span, cap: Optional[int] = None) -> int:
    """Number of cowedges with apex {0, 1}, by testing every family of maps."""
    leg = as_leg(span)
    _require_leg(F, leg)
    R = leg.source
    sizes = value_sizes(F, leg)
    total = sum(sizes)
    if total >= 63:
        raise StructuralError(f"{total} elements are too many for the cowedge oracle")
    ensure_within_cap("cowedge oracle", 1 << total, cap)
    offsets = np.concatenate([[0], np.cumsum(sizes, dtype=np.int64)])
    codes = np.arange(1 << total, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(total, dtype=np.int64)[None, :]) & 1
    keep = np.ones(codes.shape[0], dtype=bool)
    for f in R.morphisms():
        fac = F.variance.factor(leg.on_morphism(f))
        left, right = F(fac.start_m), F(fac.start_e)
        ox, oy = int(offsets[R.dom(f)]), int(offsets[R.cod(f)])
        for a in range(left.domain_size):
            keep &= bits[:, ox + left(a)] == bits[:, oy + right(a)]
    return int(keep.sum())


def oracle_coend_size(F: SetValuedMixedFunctor, span, cap: Optional[int] = None) -> int:
    """k with 2^k cowedges into a two-element set; the coend has k elements when it is initial."""
    count = count_cowedges_into_two(F, span, cap)
    return count.bit_length() - 1
