#!/usr/bin/env python3
"""
Heuristic transformations between functors of index-variance seen as
dinatural transformations between functors R×R → C of index-variance (1,0).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence, Tuple

from ..base import StructuralError, logger
from ..fincat import PlainFunctor, product_category
from ..mixfun import MixedFunctor, precompose
from ..report import Report
from ..variance import VarianceStruct, index_variance
from .check import TransformationFamily, check_heuristic_naturality
from .spans import Span


def index_flags(v: VarianceStruct) -> Tuple[int, ...]:
    """0/1 per factor for an index-variance; a lone covariant or contravariant factor counts too."""
    if v.index_flags is not None:
        return v.index_flags
    c = v.owner
    if len(v.M) == c.n_objects:
        return (0,)
    if len(v.E) == c.n_objects:
        return (1,)
    raise StructuralError(f"variance {v.name or '?'} on {c.name} is not an index-variance")


def _columns(leg: PlainFunctor, n_factors: int):
    """Per-factor morphism and object columns of a leg, indexed by apex morphism/object."""
    target, R = leg.target, leg.source
    mor = [leg.mor_map[f] for f in R.morphisms()]
    obj = [leg.obj_map[x] for x in R.objects()]
    if n_factors == 1:
        return [mor], [obj]
    mcols = [[target.components(f)[i] for f in mor] for i in range(n_factors)]
    ocols = [[target.object_components(x)[i] for x in obj] for i in range(n_factors)]
    return mcols, ocols


def _routing(leg: PlainFunctor, flags: Sequence[int], rr) -> PlainFunctor:
    """Φ: R×R → ∏A, factor i read from π₁ when i is contravariant and from π₂ otherwise."""
    target = leg.target
    mcols, ocols = _columns(leg, len(flags))
    mor, obj = [], []
    for pq in rr.morphisms():
        p, q = rr.components(pq)
        parts = [mcols[i][p if flag else q] for i, flag in enumerate(flags)]
        mor.append(parts[0] if len(flags) == 1 else target.index_of(parts))
    for xy in rr.objects():
        x, y = rr.object_components(xy)
        parts = [ocols[i][x if flag else y] for i, flag in enumerate(flags)]
        obj.append(parts[0] if len(flags) == 1 else target.object_index(parts))
    return PlainFunctor(rr, target, obj, mor, name=f"Φ{leg.name}")


@dataclass(eq=False)
class DinaturalForm:
    """F̄, Ḡ on R×R together with the routing functors they were built from."""

    span: Span
    F_bar: MixedFunctor
    G_bar: MixedFunctor
    phi_left: PlainFunctor
    phi_right: PlainFunctor

    @property
    def apex(self):
        return self.span.apex

    def check(self, components: Sequence[Any]) -> Report:
        return check_dinatural(self.F_bar, self.G_bar, components)

    def agrees(self, t: TransformationFamily) -> Tuple[bool, bool]:
        """(dinatural?, L-natural?) for the same family; equal for every family."""
        return self.check(t.components).ok, check_heuristic_naturality(t, stop_at_first=True).ok


def to_dinatural(F: MixedFunctor, G: MixedFunctor, span: Span, cap: Optional[int] = None) -> DinaturalForm:
    span.require_two_sided()
    R = span.apex
    rr = product_category([R, R], cap=cap)
    v = index_variance([R, R], (1, 0), cap=cap)
    phi_l = _routing(span.left, index_flags(F.variance), rr)
    phi_r = _routing(span.right, index_flags(G.variance), rr)
    F_bar = precompose(F, phi_l, v, name=f"{F.name}‾")
    G_bar = precompose(G, phi_r, v, name=f"{G.name}‾")
    logger.debug("dinatural form over %s: %d morphisms", rr.name, rr.n_morphisms)
    return DinaturalForm(span, F_bar, G_bar, phi_l, phi_r)


def check_dinatural(F_bar: MixedFunctor, G_bar: MixedFunctor, eta: Sequence[Any]) -> Report:
    """
    The hexagon Ḡ(id_x, f)∘η_x∘F̄(f, id_x) = Ḡ(f, id_y)∘η_y∘F̄(id_y, f) for
    F̄, Ḡ: R×R → C of index-variance (1,0) and every f: x → y in R.
    """
    rr = F_bar.source
    if G_bar.source is not rr or len(getattr(rr, "factors", ())) != 2 or rr.factors[0] is not rr.factors[1]:
        raise StructuralError("dinaturality needs two functors on the same square R×R")
    R, T = rr.factors[0], F_bar.target
    report = Report(f"dinaturality of {F_bar.name or 'F'} ⇒ {G_bar.name or 'G'}")
    for f in R.morphisms():
        report.checked += 1
        x, y = R.dom(f), R.cod(f)
        idx, idy = R.identity(x), R.identity(y)
        left = T.compose(G_bar(rr.index_of([idx, f])), T.compose(eta[x], F_bar(rr.index_of([f, idx]))))
        right = T.compose(G_bar(rr.index_of([f, idy])), T.compose(eta[y], F_bar(rr.index_of([idy, f]))))
        if not T.equal(left, right):
            report.add("dinaturality", (R.morphism_label(f),), "hexagon does not commute", upper=T.render(left), lower=T.render(right))
    return report.finish()
