#!/usr/bin/env python3
"""
Ends of finite-set-valued functors as equalizers, a brute-force oracle, and
sets of natural transformations computed as ends of Hom(F-, G-).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..base import PreconditionError, StructuralError, logger
from ..config import ensure_within_cap
from ..fincat import PlainFunctor, diagonal
from ..mixfun import SetMap, SetValuedMixedFunctor, set_hom_functor
from ..natural import Span, selected_morphisms
from .wedges import Wedge, _require_leg, as_leg, product_elements, value_sizes, wedge_to_cone


@dataclass(eq=False)
class EndResult:
    """
    The end as a set of canonical tuples (a_x)_x, sorted lexicographically,
    with the universal wedge given by the coordinate projections.
    """

    functor: SetValuedMixedFunctor
    leg: PlainFunctor
    elements: np.ndarray
    generators: Tuple[int, ...]
    notes: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._index: Dict[Tuple[int, ...], int] = {tuple(int(v) for v in row): i for i, row in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return int(self.elements.shape[0])

    @property
    def sizes(self) -> List[int]:
        return value_sizes(self.functor, self.leg)

    def tuples(self) -> List[Tuple[int, ...]]:
        return [tuple(int(v) for v in row) for row in self.elements]

    def index_of(self, element: Sequence[int]) -> Optional[int]:
        return self._index.get(tuple(int(v) for v in element))

    def projection(self, x: int) -> SetMap:
        return SetMap.of(self.elements[:, x], self.sizes[x])

    def universal_wedge(self) -> Wedge:
        return Wedge(self.size, [self.projection(x) for x in self.leg.source.objects()])

    def jointly_monic(self) -> bool:
        """Any two distinct elements are told apart by some projection."""
        if self.size < 2:
            return True
        columns = np.stack([self.projection(x).values for x in self.leg.source.objects()], axis=1)
        return len(np.unique(columns, axis=0)) == self.size

    def mediating_map(self, w: Wedge) -> SetMap:
        """The unique map apex(w) → end commuting with the projections."""
        values = []
        for u, row in enumerate(wedge_to_cone(w)):
            i = self.index_of(row)
            if i is None:
                raise PreconditionError(f"element {u} of the apex does not land in the end: not a wedge", witness=(u,))
            values.append(i)
        return SetMap.of(values, self.size)

    def render_element(self, i: int) -> str:
        F, R = self.functor, self.leg.source
        parts = [F.label_element(self.leg.on_object(x), int(self.elements[i, x])) for x in R.objects()]
        return "(" + ",".join(parts) + ")"

    def to_dict(self) -> dict:
        return {
            "functor": self.functor.name,
            "size": self.size,
            "elements": [self.render_element(i) for i in range(self.size)],
            "tuples": self.tuples(),
            "generators": len(self.generators),
            "notes": list(self.notes),
        }


def compute_end(F: SetValuedMixedFunctor, span, gens=None, cap: Optional[int] = None) -> EndResult:
    """
    Equalize s and t over ∏_x F(Lx), one morphism constraint at a time, so
    ∏_f F(L(f)_t) is never materialised. With ``gens`` only the generators
    are imposed.
    """
    leg = as_leg(span)
    _require_leg(F, leg)
    R = leg.source
    rows = product_elements(value_sizes(F, leg), cap, what=f"end of {F.name or 'F'}")
    mors = tuple(selected_morphisms(R, gens))
    for f in mors:
        if R.is_identity(f):
            continue
        fac = F.variance.factor(leg.on_morphism(f))
        keep = F(fac.term_e).values[rows[:, R.dom(f)]] == F(fac.term_m).values[rows[:, R.cod(f)]]
        rows = rows[keep]
        if not rows.shape[0]:
            break
    logger.debug("end of %s: %d elements after %d constraints", F.name or "F", rows.shape[0], len(mors))
    return EndResult(F, leg, rows, mors)


def oracle_end(F: SetValuedMixedFunctor, span, cap: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Every tuple tested against every R-morphism's wedge condition directly."""
    leg = as_leg(span)
    _require_leg(F, leg)
    R = leg.source
    sizes = value_sizes(F, leg)
    ensure_within_cap("end oracle", prod(sizes), cap)
    conditions = []
    for f in R.morphisms():
        fac = F.variance.factor(leg.on_morphism(f))
        conditions.append((R.dom(f), R.cod(f), F(fac.term_e), F(fac.term_m)))
    return [
        a for a in cartesian(*(range(s) for s in sizes))
        if all(up(a[x]) == down(a[y]) for x, y, up, down in conditions)
    ]


def _require_covariant_sets(F: SetValuedMixedFunctor, G: SetValuedMixedFunctor) -> None:
    if F.source is not G.source:
        raise StructuralError("natural transformations need functors on the same category")
    for H in (F, G):
        if len(H.variance.M) != H.source.n_objects:
            raise StructuralError(f"{H.name or 'functor'} must be covariant")


def nat_set(F: SetValuedMixedFunctor, G: SetValuedMixedFunctor, cap: Optional[int] = None) -> EndResult:
    """Nat(F, G) as ∫_Δ Hom(F-, G-); elements are tuples of encoded functions F x → G x."""
    _require_covariant_sets(F, G)
    c = F.source
    H = set_hom_functor(F, G, cap=cap)
    result = compute_end(H, Span(c, diagonal(c, cap=cap), name="Δ"), cap=cap)
    result.notes.append("components are functions F x → G x numbered lexicographically")
    return result


def decode_function(code: int, n: int, base: int) -> SetMap:
    """Inverse of the lexicographic numbering of functions n → base."""
    digits = []
    for _ in range(n):
        code, d = divmod(code, base)
        digits.append(d)
    return SetMap.of(digits[::-1], base)


def decode_family(F: SetValuedMixedFunctor, G: SetValuedMixedFunctor, element: Sequence[int]) -> List[SetMap]:
    return [decode_function(int(code), F.size(x), G.size(x)) for x, code in enumerate(element)]


def oracle_nat_set(F: SetValuedMixedFunctor, G: SetValuedMixedFunctor, cap: Optional[int] = None) -> List[Tuple[int, ...]]:
    """All natural families by enumeration, as tuples of encoded components."""
    _require_covariant_sets(F, G)
    c = F.source
    counts = [G.size(x) ** F.size(x) for x in c.objects()]
    ensure_within_cap("natural family oracle", prod(counts), cap)
    found = []
    for codes in cartesian(*(range(k) for k in counts)):
        eta = decode_family(F, G, codes)
        if all(G(f).after(eta[c.dom(f)]) == eta[c.cod(f)].after(F(f)) for f in c.morphisms()):
            found.append(tuple(codes))
    return found
