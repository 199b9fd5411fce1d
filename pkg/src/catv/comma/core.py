#!/usr/bin/env python3
"""
Generalized comma categories F↓_L G.

Objects are pairs (x, α: F L₁x → G L₂x), enumerated by R-object and then by
the canonical order of the hom-set. A morphism (x, α) → (y, β) is an
R-morphism f whose heuristic naturality square commutes with α and β on top
and bottom; morphisms are enumerated by f, then source, then target.
"""
from __future__ import annotations

from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..base import NotASectionError, NotNaturalError, SizeCapError, StructuralError, logger
from ..config import ensure_within_cap, resolve_cap
from ..fincat import FinCategory, PlainFunctor, product_category
from ..mixfun import MixedFunctor
from ..natural import Span, TransformationFamily


class CommaCategory(FinCategory):
    """A comma category together with the data its objects and morphisms stand for."""

    base: Any
    F: Any = None
    G: Any = None
    span: Any = None
    object_data: Tuple[Tuple[int, Any], ...]
    morphism_data: Tuple[Tuple[int, int, int], ...]

    def object_of(self, x: int, alpha: Any) -> int:
        try:
            return self._object_lookup_data[(x, alpha)]
        except KeyError:
            raise StructuralError(f"{self.name}: no object over {self.base.object_label(x)} with that morphism") from None

    def morphism_of(self, f: int, i: int, j: int) -> Optional[int]:
        """Index of f as a morphism i → j, or ``None`` when its square fails."""
        return self._morphism_lookup_data.get((f, i, j))

    def over(self, x: int) -> Tuple[int, ...]:
        """Objects lying over the R-object ``x``."""
        return self._fibres.get(x, ())


def _hom_values(T, a, b) -> List[Any]:
    return list(T.hom(a, b))


def _assemble(
    name: str,
    base,
    render: Callable[[Any], str],
    objects: Sequence[Tuple[int, Any]],
    square_ok: Callable[[int, Any, Any], Iterable[Tuple[int, int]]],
    cap: Optional[int],
) -> CommaCategory:
    """
    Shared builder: ``objects`` lists (x, α) in canonical order and
    ``square_ok(f, sources, targets)`` yields the (i, j) pairs over ``f``.
    """
    limit = resolve_cap(cap)
    fibres: Dict[int, List[int]] = {}
    for i, (x, _) in enumerate(objects):
        fibres.setdefault(x, []).append(i)
    mor_data: List[Tuple[int, int, int]] = []
    for f in base.morphisms():
        sources = fibres.get(base.dom(f), [])
        targets = fibres.get(base.cod(f), [])
        for i, j in square_ok(f, sources, targets):
            mor_data.append((f, i, j))
            if len(mor_data) > limit:
                raise SizeCapError(f"comma category {name} morphisms", len(mor_data), limit)
    lookup = {d: k for k, d in enumerate(mor_data)}
    identities = []
    for i, (x, _) in enumerate(objects):
        k = lookup.get((base.identity(x), i, i))
        if k is None:
            raise StructuralError(f"{name}: identity square fails at object {i}")
        identities.append(k)
    out_of: Dict[int, List[int]] = {}
    for k, (_, i, _) in enumerate(mor_data):
        out_of.setdefault(i, []).append(k)
    table = {}
    for p, (f, i, j) in enumerate(mor_data):
        for q in out_of.get(j, ()):
            g, _, l = mor_data[q]
            r = lookup.get((base.compose(g, f), i, l))
            if r is None:
                raise StructuralError(
                    f"{name}: composite of {base.morphism_label(g)} after {base.morphism_label(f)} leaves the comma category"
                )
            table[(q, p)] = r
    obj_labels = [f"({base.object_label(x)},{render(a)})" for x, a in objects]
    id_set = set(identities)
    mor_labels = [
        f"id_{obj_labels[i]}" if k in id_set else f"{base.morphism_label(f)}:{i}->{j}"
        for k, (f, i, j) in enumerate(mor_data)
    ]
    cc = CommaCategory(
        name, obj_labels,
        [i for _, i, _ in mor_data], [j for _, _, j in mor_data],
        identities, table, mor_labels,
    )
    cc.base = base
    cc.object_data = tuple(objects)
    cc.morphism_data = tuple(mor_data)
    cc._object_lookup_data = {(x, a): i for i, (x, a) in enumerate(objects)}
    cc._morphism_lookup_data = lookup
    cc._fibres = {x: tuple(v) for x, v in fibres.items()}
    logger.debug("%s: %d objects, %d morphisms", name, cc.n_objects, cc.n_morphisms)
    return cc


def _matching(f: int, sources, targets, upper: Callable[[int], Any], lower: Callable[[int], Any]):
    by_value: Dict[Any, List[int]] = {}
    for j in targets:
        by_value.setdefault(lower(j), []).append(j)
    for i in sources:
        for j in by_value.get(upper(i), ()):
            yield i, j


def build_comma(F: MixedFunctor, G: MixedFunctor, span: Span, cap: Optional[int] = None, name: str = "") -> CommaCategory:
    """F↓_L G; every composite square is verified while the table is built."""
    span.require_two_sided()
    if span.left.target is not F.source or span.right.target is not G.source:
        raise StructuralError("build_comma: span legs do not land in the functors' sources")
    if F.target != G.target:
        raise StructuralError("build_comma: F and G have different targets")
    R, T = span.apex, F.target
    ends = [(F.on_object(span.left.on_object(x)), G.on_object(span.right.on_object(x))) for x in R.objects()]
    if T.kind == "finset":
        total = sum(T.hom_size(a, b) for a, b in ends)
    else:
        total = sum(len(T.hom(a, b)) for a, b in ends)
    ensure_within_cap("comma category objects", total, cap)
    objects = [(x, alpha) for x in R.objects() for alpha in _hom_values(T, *ends[x])]

    def squares(f, sources, targets):
        g, h = span.left.on_morphism(f), span.right.on_morphism(f)
        fg, fh = F.variance.factor(g), G.variance.factor(h)
        up = lambda i: T.compose(G(fh.term_e), T.compose(objects[i][1], F(fg.start_m)))
        down = lambda j: T.compose(G(fh.term_m), T.compose(objects[j][1], F(fg.start_e)))
        return _matching(f, sources, targets, up, down)

    label = name or f"{F.name or 'F'}↓{G.name or 'G'}"
    cc = _assemble(label, R, T.render, objects, squares, cap)
    cc.F, cc.G, cc.span = F, G, span
    return cc


def forgetful(cc: CommaCategory) -> PlainFunctor:
    """U: (x, α) ↦ x."""
    return PlainFunctor(
        cc, cc.base,
        [x for x, _ in cc.object_data],
        [f for f, _, _ in cc.morphism_data],
        name="U",
    )


def transformation_to_section(t: TransformationFamily, cc: Optional[CommaCategory] = None, cap: Optional[int] = None) -> PlainFunctor:
    """x ↦ (x, η_x); raises ``NotNaturalError`` at the first R-morphism with no lift."""
    if cc is None:
        cc = build_comma(t.F, t.G, t.span, cap=cap)
    elif cc.span is not t.span or cc.F is not t.F or cc.G is not t.G:
        raise StructuralError("comma category was built for another transformation shape")
    R = t.apex
    obj = [cc.object_of(x, t.components[x]) for x in R.objects()]
    mor = []
    for f in R.morphisms():
        k = cc.morphism_of(f, obj[R.dom(f)], obj[R.cod(f)])
        if k is None:
            label = R.morphism_label(f)
            raise NotNaturalError(f"{t.name or 'η'} is not natural at {label}", witness=(label,))
        mor.append(k)
    return PlainFunctor(R, cc, obj, mor, name=f"S_{t.name or 'η'}")


def require_section(cc: CommaCategory, S: PlainFunctor) -> None:
    R = cc.base
    if S.source is not R or S.target is not cc:
        raise NotASectionError("functor does not go from R into the comma category")
    for x in R.objects():
        if cc.object_data[S.on_object(x)][0] != x:
            raise NotASectionError(f"U∘S moves the object {R.object_label(x)}", witness=(R.object_label(x),))
    for f in R.morphisms():
        if cc.morphism_data[S.on_morphism(f)][0] != f:
            raise NotASectionError(f"U∘S moves the morphism {R.morphism_label(f)}", witness=(R.morphism_label(f),))


def section_to_transformation(cc: CommaCategory, S: PlainFunctor, name: str = "") -> TransformationFamily:
    """The family read off a section: η_x is the second coordinate of S(x)."""
    require_section(cc, S)
    comps = [cc.object_data[S.on_object(x)][1] for x in cc.base.objects()]
    return TransformationFamily(cc.F, cc.G, cc.span, comps, name=name or S.name.removeprefix("S_"))


def classical_comma(F: PlainFunctor, G: PlainFunctor, cap: Optional[int] = None) -> CommaCategory:
    """
    The textbook F↓G for covariant F: A → C, G: B → C: objects (a, b, α: Fa → Gb),
    morphisms (f, g) with G(g)∘α = β∘F(f).
    """
    if F.target is not G.target:
        raise StructuralError("classical_comma: F and G have different targets")
    C = F.target
    p = product_category([F.source, G.source], cap=cap)
    objects = []
    for xy in p.objects():
        a, b = p.object_components(xy)
        objects.extend((xy, alpha) for alpha in C.hom(F.on_object(a), G.on_object(b)))
    ensure_within_cap("comma category objects", len(objects), cap)

    def squares(fg, sources, targets):
        f, g = p.components(fg)
        return _matching(
            fg, sources, targets,
            lambda i: C.compose(G.on_morphism(g), objects[i][1]),
            lambda j: C.compose(objects[j][1], F.on_morphism(f)),
        )

    return _assemble(f"{F.name or 'F'}↓{G.name or 'G'}", p, C.morphism_label, objects, squares, cap)


def algebra_category(F: PlainFunctor, G: PlainFunctor, cap: Optional[int] = None) -> CommaCategory:
    """F,G-algebras: (x, α: Fx → Gx) with morphisms f such that G(f)∘α = β∘F(f)."""
    if F.source is not G.source or F.target is not G.target:
        raise StructuralError("algebra_category needs parallel functors")
    c, D = F.source, F.target
    objects = [(x, alpha) for x in c.objects() for alpha in D.hom(F.on_object(x), G.on_object(x))]
    ensure_within_cap("algebra objects", len(objects), cap)

    def squares(f, sources, targets):
        return _matching(
            f, sources, targets,
            lambda i: D.compose(G.on_morphism(f), objects[i][1]),
            lambda j: D.compose(objects[j][1], F.on_morphism(f)),
        )

    return _assemble(f"Alg({F.name or 'F'},{G.name or 'G'})", c, D.morphism_label, objects, squares, cap)
