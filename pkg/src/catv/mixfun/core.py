#!/usr/bin/env python3
"""
Functors of mixed variance. A morphism f: x → y is sent to
F(f): F(f_s) → F(f_t), so covariant morphisms keep their direction and
contravariant ones are turned around.
"""
from __future__ import annotations

from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from ..base import StructuralError, logger
from ..fincat import PlainFunctor
from ..report import Report
from ..variance import VarianceStruct, covariant_variance, preserves_variance
from .targets import FINSET, CategoryTarget, SetMap, as_target

MorphismMap = Union[Sequence[Any], Callable[[int], Any]]


class MixedFunctor:
    """Object map plus morphism map; the morphism map may be computed lazily."""

    def __init__(self, variance: VarianceStruct, target, obj_map: Sequence[Any], mor_map: MorphismMap, name: str = ""):
        self.variance = variance
        self.source = variance.owner
        self.target = as_target(target)
        self.obj_map = tuple(obj_map)
        self.name = name
        if len(self.obj_map) != self.source.n_objects:
            raise StructuralError(f"{name or 'functor'}: {len(self.obj_map)} object images for {self.source.n_objects} objects")
        if callable(mor_map):
            self._compute = mor_map
            self._cache: Dict[int, Any] = {}
        else:
            images = list(mor_map)
            if len(images) != self.source.n_morphisms:
                raise StructuralError(f"{name or 'functor'}: {len(images)} morphism images for {self.source.n_morphisms} morphisms")
            self._compute = None
            self._cache = dict(enumerate(images))

    @property
    def is_lazy(self) -> bool:
        return self._compute is not None

    def on_object(self, x: int) -> Any:
        return self.obj_map[x]

    def on_morphism(self, f: int) -> Any:
        try:
            return self._cache[f]
        except KeyError:
            if self._compute is None or not 0 <= f < self.source.n_morphisms:
                raise StructuralError(f"{self.name or 'functor'}: unknown morphism index {f}") from None
            value = self._compute(f)
            self._cache[f] = value
            return value

    __call__ = on_morphism

    def images(self) -> List[Any]:
        return [self.on_morphism(f) for f in self.source.morphisms()]

    def same_as(self, other: "MixedFunctor") -> bool:
        if self.variance is not other.variance or self.target != other.target:
            return False
        if self.obj_map != other.obj_map:
            return False
        return all(self.target.equal(self(f), other(f)) for f in self.source.morphisms())

    @classmethod
    def from_plain(cls, F: PlainFunctor, variance: Optional[VarianceStruct] = None) -> "MixedFunctor":
        """A covariant functor viewed under the covariant variance of its source."""
        v = variance if variance is not None else covariant_variance(F.source)
        if v.owner is not F.source:
            raise StructuralError("variance does not live on the functor's source")
        return cls(v, F.target, F.obj_map, F.mor_map, name=F.name)

    def to_plain(self) -> PlainFunctor:
        if not isinstance(self.target, CategoryTarget):
            raise StructuralError(f"{self.name or 'functor'} is set-valued")
        return PlainFunctor(self.source, self.target.category, self.obj_map, self.images(), name=self.name)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name or '?'}: ({self.source.name}, {self.variance.name or '?'}) -> {self.target.name}>"


class SetValuedMixedFunctor(MixedFunctor):
    """Mixed functor into finite sets; ``obj_map`` holds set sizes."""

    def __init__(
        self,
        variance: VarianceStruct,
        sizes: Sequence[int],
        mor_map: MorphismMap,
        name: str = "",
        element_labels: Optional[Callable[[int], List[str]]] = None,
    ):
        super().__init__(variance, FINSET, [int(s) for s in sizes], mor_map, name=name)
        self.element_labels = element_labels

    @classmethod
    def from_arrays(cls, variance: VarianceStruct, sizes: Sequence[int], arrays: Sequence[Sequence[int]], name: str = "", **kw) -> "SetValuedMixedFunctor":
        """Build from raw index arrays; codomain sizes come from F(f_t)."""
        maps = []
        for f, values in enumerate(arrays):
            maps.append(SetMap.of(values, sizes[int(variance.term_obj[f])]))
        return cls(variance, sizes, maps, name=name, **kw)

    def size(self, x: int) -> int:
        return self.obj_map[x]

    def label_element(self, x: int, i: int) -> str:
        if self.element_labels is None:
            return str(i)
        return self.element_labels(x)[i]


def _equation_terms(F: MixedFunctor, g: int, f: int):
    """Both sides of the two functoriality equations for the pair (g, f)."""
    c, v, T = F.source, F.variance, F.target
    fg, ff = v.factor(g), v.factor(f)
    upper = v.factor(c.compose(fg.term_e, ff.term_m))
    lower = v.factor(c.compose(fg.start_m, ff.start_e))
    gf = F(c.compose(g, f))
    first = T.compose(F(upper.term_e), T.compose(F(f), F(lower.start_m)))
    second = T.compose(F(upper.term_m), T.compose(F(g), F(lower.start_e)))
    return gf, first, second


def validate_mixed_functor(F: MixedFunctor) -> Report:
    """
    Check identity preservation, the typing F(f): F(f_s) → F(f_t), and both
    functoriality equations for every composable pair.
    """
    c, v, T = F.source, F.variance, F.target
    report = Report(f"mixed functor {F.name or '?'} on ({c.name}, {v.name or '?'})")
    lbl = c.morphism_label
    for f in c.morphisms():
        fac = v.factor(f)
        image = F(f)
        if not T.typed(image, F.on_object(fac.start_obj), F.on_object(fac.term_obj)):
            report.add("typing", (lbl(f),), f"F({lbl(f)}) = {T.render(image)} does not map F(f_s) to F(f_t)")
    for x in c.objects():
        if not T.equal(F(c.identity(x)), T.identity(F.on_object(x))):
            report.add("identity", (c.object_label(x),), "identity not preserved")
    if not report.ok:
        report.notes.append("functoriality equations skipped because of typing failures")
        return report.finish()
    for g, f in c.composable_pairs():
        report.checked += 1
        gf, first, second = _equation_terms(F, g, f)
        if not T.equal(gf, first):
            report.add(
                "equation-e", (lbl(g), lbl(f)),
                "F(gf) != F((gᵉfᵐ)ᵉ)∘F(f)∘F((g_m f_e)_m)",
                lhs=T.render(gf), rhs=T.render(first),
            )
        if not T.equal(gf, second):
            report.add(
                "equation-m", (lbl(g), lbl(f)),
                "F(gf) != F((gᵉfᵐ)ᵐ)∘F(g)∘F((g_m f_e)_e)",
                lhs=T.render(gf), rhs=T.render(second),
            )
    logger.debug("validated %s over %d composable pairs", F.name or "functor", report.checked)
    return report.finish()


def precompose(F: MixedFunctor, phi: PlainFunctor, variance: VarianceStruct, name: str = "") -> MixedFunctor:
    """
    F∘Φ for a variance-preserving Φ into F's source; the result carries
    ``variance`` on Φ's source and is computed lazily.
    """
    if phi.target is not F.source or variance.owner is not phi.source:
        raise StructuralError("precompose: categories do not line up")
    report = preserves_variance(phi, variance, F.variance)
    if not report.ok:
        raise StructuralError(f"precompose: {phi.name or 'Φ'} does not preserve variance at {report.witnesses()[0]}")
    obj_map = [F.on_object(phi.on_object(x)) for x in phi.source.objects()]
    compute = lambda f: F(phi.on_morphism(f))
    label = name or f"{F.name}∘{phi.name}"
    if isinstance(F, SetValuedMixedFunctor):
        labels = None
        if F.element_labels is not None:
            labels = lambda x: F.element_labels(phi.on_object(x))
        return SetValuedMixedFunctor(variance, obj_map, compute, name=label, element_labels=labels)
    return MixedFunctor(variance, F.target, obj_map, compute, name=label)
