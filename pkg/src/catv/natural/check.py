#!/usr/bin/env python3
"""
Heuristic transformations and their naturality checks.

For f: x → y in R with g = L₁(f) and h = L₂(f), the heuristic naturality
square asks that G(hᵉ)∘η_x∘F(g_m) = G(hᵐ)∘η_y∘F(g_e) as maps F(g_s) → G(h_t).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Sequence

from ..base import PreconditionError, StructuralError, logger
from ..fincat import Subgraph, is_generating
from ..mixfun import MixedFunctor
from ..report import Report
from .spans import Span


@dataclass(eq=False)
class TransformationFamily:
    """η_x: F(L₁x) → G(L₂x) for every object x of the span's apex."""

    F: MixedFunctor
    G: MixedFunctor
    span: Span
    components: List[Any]
    name: str = ""

    def __post_init__(self) -> None:
        self.span.require_two_sided()
        if self.span.left.target is not self.F.source or self.span.right.target is not self.G.source:
            raise StructuralError(f"transformation {self.name or '?'}: span legs do not land in the functors' sources")
        if self.F.target != self.G.target:
            raise StructuralError(f"transformation {self.name or '?'}: F and G have different targets")
        self.components = list(self.components)
        if len(self.components) != self.span.apex.n_objects:
            raise StructuralError(
                f"transformation {self.name or '?'}: {len(self.components)} components for "
                f"{self.span.apex.n_objects} objects"
            )

    @property
    def apex(self):
        return self.span.apex

    @property
    def target(self):
        return self.F.target

    def __getitem__(self, x: int) -> Any:
        return self.components[x]

    def domain_of(self, x: int) -> Any:
        return self.F.on_object(self.span.left.on_object(x))

    def codomain_of(self, x: int) -> Any:
        return self.G.on_object(self.span.right.on_object(x))

    def replace(self, x: int, component: Any) -> "TransformationFamily":
        comps = list(self.components)
        comps[x] = component
        return TransformationFamily(self.F, self.G, self.span, comps, name=self.name)

    def typing_report(self) -> Report:
        report = Report(f"typing of {self.name or 'η'}")
        T = self.target
        for x in self.apex.objects():
            report.checked += 1
            if not T.typed(self.components[x], self.domain_of(x), self.codomain_of(x)):
                report.add("typing", (self.apex.object_label(x),), f"η_x = {T.render(self.components[x])} is mistyped")
        return report.finish()


def square_sides(t: TransformationFamily, f: int):
    """Both paths F(g_s) → G(h_t) of the naturality square for ``f``."""
    R, T = t.apex, t.target
    g, h = t.span.left.on_morphism(f), t.span.right.on_morphism(f)
    fg, fh = t.F.variance.factor(g), t.G.variance.factor(h)
    eta_x, eta_y = t.components[R.dom(f)], t.components[R.cod(f)]
    upper = T.compose(t.G(fh.term_e), T.compose(eta_x, t.F(fg.start_m)))
    lower = T.compose(t.G(fh.term_m), T.compose(eta_y, t.F(fg.start_e)))
    return upper, lower


def selected_morphisms(R, gens: Optional[Subgraph | Iterable[int]]) -> Sequence[int]:
    if gens is None:
        return R.morphisms()
    chosen = gens if isinstance(gens, Subgraph) else Subgraph(R, frozenset(gens))
    if chosen.owner is not R:
        raise StructuralError("generating subgraph belongs to another category")
    if not is_generating(R, chosen):
        raise PreconditionError(f"the given subgraph does not generate {R.name}", witness=len(chosen))
    return sorted(set(chosen.morphisms) | set(R.identity(x) for x in R.objects()))


def check_heuristic_naturality(
    t: TransformationFamily,
    gens: Optional[Subgraph | Iterable[int]] = None,
    stop_at_first: bool = False,
) -> Report:
    """
    Report every morphism of R (or every generator when ``gens`` is given)
    whose naturality square fails. An empty report means η is L-natural.
    """
    R, T = t.apex, t.target
    report = Report(f"heuristic naturality of {t.name or 'η'} along {t.span.name or '?'}")
    typing = t.typing_report()
    if not typing.ok:
        report.extend(typing)
        return report.finish()
    for f in selected_morphisms(R, gens):
        report.checked += 1
        upper, lower = square_sides(t, f)
        if not T.equal(upper, lower):
            report.add(
                "naturality", (R.morphism_label(f),),
                "G(hᵉ)∘η_x∘F(g_m) != G(hᵐ)∘η_y∘F(g_e)",
                upper=T.render(upper), lower=T.render(lower),
            )
            if stop_at_first:
                break
    if gens is not None:
        report.notes.append(f"checked {report.checked} generators of {R.n_morphisms} morphisms")
    logger.debug("%s: %d squares checked", report.subject, report.checked)
    return report.finish()


def is_natural(t: TransformationFamily, gens=None) -> bool:
    return check_heuristic_naturality(t, gens, stop_at_first=True).ok


def _require_covariant(F: MixedFunctor, what: str) -> None:
    if len(F.variance.M) != F.source.n_objects:
        raise StructuralError(f"{what} must be covariant")


def check_classical_naturality(F: MixedFunctor, G: MixedFunctor, eta: Sequence[Any]) -> Report:
    """The textbook square G(f)∘η_x = η_y∘F(f) for covariant F, G: C → D."""
    _require_covariant(F, "F")
    _require_covariant(G, "G")
    c, T = F.source, F.target
    report = Report(f"naturality of {F.name or 'F'} ⇒ {G.name or 'G'}")
    for f in c.morphisms():
        report.checked += 1
        x, y = c.dom(f), c.cod(f)
        left = T.compose(G(f), eta[x])
        right = T.compose(eta[y], F(f))
        if not T.equal(left, right):
            report.add("naturality", (c.morphism_label(f),), "G(f)∘η_x != η_y∘F(f)", upper=T.render(left), lower=T.render(right))
    return report.finish()


def check_twisted_naturality(F: MixedFunctor, G: MixedFunctor, eta: Sequence[Any]) -> Report:
    """η_x = G(f)∘η_y∘F(f) for F covariant and G contravariant on C."""
    _require_covariant(F, "F")
    if len(G.variance.E) != G.source.n_objects:
        raise StructuralError("G must be contravariant")
    c, T = F.source, F.target
    report = Report(f"twisted naturality of {F.name or 'F'} ⇒ {G.name or 'G'}")
    for f in c.morphisms():
        report.checked += 1
        x, y = c.dom(f), c.cod(f)
        around = T.compose(G(f), T.compose(eta[y], F(f)))
        if not T.equal(eta[x], around):
            report.add("naturality", (c.morphism_label(f),), "η_x != G(f)∘η_y∘F(f)", upper=T.render(eta[x]), lower=T.render(around))
    return report.finish()
