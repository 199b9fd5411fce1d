#!/usr/bin/env python3
"""
FinCategory composed from the storage core and its mixins, plus the
declaration-style constructor used by fixtures and the DSL.
"""
from __future__ import annotations

from typing import Dict, Mapping, Sequence, Tuple

from ..base import StructuralError
from .core import CategoryCore, CompositionMixin, HomSetMixin


class FinCategory(CompositionMixin, HomSetMixin, CategoryCore):
    """A finite category with integer-indexed objects and morphisms."""

    @classmethod
    def declare(
        cls,
        name: str,
        objects: Sequence[str],
        morphisms: Sequence[Tuple[str, str, str]],
        composites: Mapping[Tuple[str, str], str] = {},
    ) -> "FinCategory":
        """
        Build a category from labels.

        Identities come first (one per object, in object order, labelled
        ``id_<object>``), then ``morphisms`` in the given order. ``composites``
        maps ``(g, f)`` label pairs to the label of ``g∘f``; identity composites
        are implied.
        """
        obj_index = {label: i for i, label in enumerate(objects)}
        if len(obj_index) != len(objects):
            raise StructuralError(f"{name}: duplicate object labels")
        labels = [f"id_{o}" for o in objects]
        dom = list(range(len(objects)))
        cod = list(range(len(objects)))
        for label, d, c in morphisms:
            if d not in obj_index or c not in obj_index:
                raise StructuralError(f"{name}: morphism {label} refers to an unknown object")
            labels.append(label)
            dom.append(obj_index[d])
            cod.append(obj_index[c])
        mor_index = {label: i for i, label in enumerate(labels)}
        if len(mor_index) != len(labels):
            raise StructuralError(f"{name}: duplicate morphism labels")
        table: Dict[Tuple[int, int], int] = {}
        for (g, f), h in composites.items():
            for label in (g, f, h):
                if label not in mor_index:
                    raise StructuralError(f"{name}: composite mentions unknown morphism {label!r}")
            table[(mor_index[g], mor_index[f])] = mor_index[h]
        return cls(name, list(objects), dom, cod, list(range(len(objects))), table, labels)

    def missing_composites(self) -> list:
        """Composable non-identity pairs with no table entry."""
        return [(g, f) for g, f in self.composable_pairs() if self.composite_or_none(g, f) is None]

    def same_structure(self, other: "FinCategory") -> bool:
        if (self.n_objects, self.n_morphisms) != (other.n_objects, other.n_morphisms):
            return False
        if [self.object_label(x) for x in self.objects()] != [other.object_label(x) for x in other.objects()]:
            return False
        for f in self.morphisms():
            if (self.dom(f), self.cod(f), self.morphism_label(f)) != (other.dom(f), other.cod(f), other.morphism_label(f)):
                return False
        if any(self.identity(x) != other.identity(x) for x in self.objects()):
            return False
        return all(self.composite_or_none(g, f) == other.composite_or_none(g, f) for g, f in self.composable_pairs())

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}: {self.n_objects} objects, {self.n_morphisms} morphisms>"
