#!/usr/bin/env python3
"""
Core storage for finite categories: integer-indexed objects and morphisms,
dom/cod arrays, identities and a partial composition table. Also houses the
two small value types everything else builds on, ``PlainFunctor`` and
``Subgraph``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..base import StructuralError, logger


class CategoryCore:
    """Index storage shared by explicit categories and materialised products."""

    def __init__(
        self,
        name: str,
        object_labels: Optional[Sequence[str]],
        dom: Sequence[int],
        cod: Sequence[int],
        identities: Sequence[int],
        composition: Optional[Mapping[Tuple[int, int], int]] = None,
        morphism_labels: Optional[Sequence[str]] = None,
        n_objects: Optional[int] = None,
    ):
        self.name = name
        self._dom = np.asarray(dom, dtype=np.int64)
        self._cod = np.asarray(cod, dtype=np.int64)
        self._identities = np.asarray(identities, dtype=np.int64)
        if n_objects is None:
            n_objects = len(object_labels) if object_labels is not None else len(self._identities)
        self._n_objects = int(n_objects)
        self._object_labels = tuple(object_labels) if object_labels is not None else None
        self._morphism_labels = tuple(morphism_labels) if morphism_labels is not None else None
        self._table: Dict[Tuple[int, int], int] = dict(composition) if composition is not None else {}
        self._check_ranges()

    def _check_ranges(self) -> None:
        n_obj, n_mor = self._n_objects, len(self._dom)
        if len(self._cod) != n_mor:
            raise StructuralError(f"{self.name}: dom has {n_mor} entries, cod has {len(self._cod)}")
        if len(self._identities) != n_obj:
            raise StructuralError(f"{self.name}: {n_obj} objects but {len(self._identities)} identities")
        if n_mor and (self._dom.min() < 0 or self._dom.max() >= n_obj or self._cod.min() < 0 or self._cod.max() >= n_obj):
            raise StructuralError(f"{self.name}: dom/cod index out of range")
        if n_obj and (self._identities.min() < 0 or self._identities.max() >= n_mor):
            raise StructuralError(f"{self.name}: identity index out of range")
        for (g, f), h in self._table.items():
            for idx in (g, f, h):
                if not 0 <= idx < n_mor:
                    raise StructuralError(f"{self.name}: composition entry {(g, f)} -> {h} out of range")
        if self._object_labels is not None and len(self._object_labels) != n_obj:
            raise StructuralError(f"{self.name}: {len(self._object_labels)} object labels for {n_obj} objects")
        if self._morphism_labels is not None and len(self._morphism_labels) != n_mor:
            raise StructuralError(f"{self.name}: {len(self._morphism_labels)} morphism labels for {n_mor} morphisms")

    @property
    def n_objects(self) -> int:
        return self._n_objects

    @property
    def n_morphisms(self) -> int:
        return len(self._dom)

    def objects(self) -> range:
        return range(self._n_objects)

    def morphisms(self) -> range:
        return range(len(self._dom))

    def dom(self, f: int) -> int:
        return int(self._dom[f])

    def cod(self, f: int) -> int:
        return int(self._cod[f])

    def identity(self, x: int) -> int:
        return int(self._identities[x])

    @property
    def dom_array(self) -> np.ndarray:
        return self._dom

    @property
    def cod_array(self) -> np.ndarray:
        return self._cod

    def object_label(self, x: int) -> str:
        if self._object_labels is not None:
            return self._object_labels[x]
        return f"o{x}"

    def morphism_label(self, f: int) -> str:
        if self._morphism_labels is not None:
            return self._morphism_labels[f]
        if f in self._identity_set:
            return f"id_{self.object_label(self.dom(f))}"
        return f"f{f}"

    @cached_property
    def _identity_set(self) -> frozenset:
        return frozenset(int(i) for i in self._identities)

    @cached_property
    def _object_lookup(self) -> Dict[str, int]:
        return {self.object_label(x): x for x in self.objects()}

    @cached_property
    def _morphism_lookup(self) -> Dict[str, int]:
        return {self.morphism_label(f): f for f in self.morphisms()}

    def find_object(self, label: str) -> int:
        try:
            return self._object_lookup[label]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown object {label!r}") from None

    def find_morphism(self, label: str) -> int:
        try:
            return self._morphism_lookup[label]
        except KeyError:
            raise StructuralError(f"{self.name}: unknown morphism {label!r}") from None

    def composite_or_none(self, g: int, f: int) -> Optional[int]:
        """Table lookup for ``g∘f``; ``None`` when the entry is missing."""
        if f in self._identity_set and self.cod(f) == self.dom(g) and (g, f) not in self._table:
            return g
        if g in self._identity_set and self.dom(g) == self.cod(f) and (g, f) not in self._table:
            return f
        return self._table.get((g, f))

    def composition_entries(self) -> Iterator[Tuple[Tuple[int, int], int]]:
        return iter(sorted(self._table.items()))


class HomSetMixin:
    """Hom-set indexes, built once on first use."""

    @cached_property
    def _hom_index(self) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        buckets: Dict[Tuple[int, int], list] = {}
        for f in self.morphisms():
            buckets.setdefault((self.dom(f), self.cod(f)), []).append(f)
        logger.debug("%s: indexed %d hom-sets", self.name, len(buckets))
        return {k: tuple(v) for k, v in buckets.items()}

    @cached_property
    def _hom_positions(self) -> Dict[int, int]:
        return {f: i for fs in self._hom_index.values() for i, f in enumerate(fs)}

    @cached_property
    def _out_index(self) -> Dict[int, Tuple[int, ...]]:
        buckets: Dict[int, list] = {x: [] for x in self.objects()}
        for f in self.morphisms():
            buckets[self.dom(f)].append(f)
        return {k: tuple(v) for k, v in buckets.items()}

    @cached_property
    def _in_index(self) -> Dict[int, Tuple[int, ...]]:
        buckets: Dict[int, list] = {x: [] for x in self.objects()}
        for f in self.morphisms():
            buckets[self.cod(f)].append(f)
        return {k: tuple(v) for k, v in buckets.items()}

    def hom(self, x: int, y: int) -> Tuple[int, ...]:
        return self._hom_index.get((x, y), ())

    def hom_position(self, f: int) -> int:
        """Position of ``f`` inside ``hom(dom f, cod f)`` in canonical order."""
        return self._hom_positions[f]

    def out_of(self, x: int) -> Tuple[int, ...]:
        return self._out_index[x]

    def into(self, y: int) -> Tuple[int, ...]:
        return self._in_index[y]


class CompositionMixin:
    """Composition with composability checks and derived predicates."""

    def compose(self, g: int, f: int) -> int:
        if self.cod(f) != self.dom(g):
            raise StructuralError(
                f"{self.name}: cannot compose {self.morphism_label(g)} after {self.morphism_label(f)}"
            )
        h = self.composite_or_none(g, f)
        if h is None:
            raise StructuralError(
                f"{self.name}: composite {self.morphism_label(g)} . {self.morphism_label(f)} is not tabulated"
            )
        return h

    def compose_path(self, *fs: int) -> int:
        """``compose_path(h, g, f)`` is ``h∘g∘f``."""
        if not fs:
            raise StructuralError("compose_path needs at least one morphism")
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def is_identity(self, f: int) -> bool:
        return f in self._identity_set

    def composable_pairs(self) -> Iterator[Tuple[int, int]]:
        """All (g, f) with cod f = dom g, ordered by f then g."""
        for f in self.morphisms():
            for g in self.out_of(self.cod(f)):
                yield g, f

    def inverse(self, f: int) -> Optional[int]:
        x, y = self.dom(f), self.cod(f)
        for g in self.hom(y, x):
            if self.compose(g, f) == self.identity(x) and self.compose(f, g) == self.identity(y):
                return g
        return None

    @property
    def is_one_object(self) -> bool:
        return self.n_objects == 1

    def is_groupoid(self) -> bool:
        return all(self.inverse(f) is not None for f in self.morphisms())


@dataclass(frozen=True)
class Subgraph:
    """A set of morphisms of ``owner``; identities are implicitly included."""

    owner: "CategoryCore"
    morphisms: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "morphisms", frozenset(int(m) for m in self.morphisms))
        bad = [m for m in self.morphisms if not 0 <= m < self.owner.n_morphisms]
        if bad:
            raise StructuralError(f"{self.owner.name}: subgraph names unknown morphisms {sorted(bad)}")

    def __contains__(self, f: int) -> bool:
        return f in self.morphisms or self.owner.is_identity(f)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.morphisms))

    def __len__(self) -> int:
        return len(self.morphisms)

    def with_identities(self) -> frozenset:
        return self.morphisms | frozenset(self.owner.identity(x) for x in self.owner.objects())

    @classmethod
    def everything(cls, owner) -> "Subgraph":
        return cls(owner, frozenset(owner.morphisms()))


@dataclass(frozen=True, eq=False)
class PlainFunctor:
    """Covariant functor between finite categories, stored as index maps."""

    source: "CategoryCore"
    target: "CategoryCore"
    obj_map: Tuple[int, ...]
    mor_map: Tuple[int, ...]
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "obj_map", tuple(int(x) for x in self.obj_map))
        object.__setattr__(self, "mor_map", tuple(int(f) for f in self.mor_map))
        if len(self.obj_map) != self.source.n_objects or len(self.mor_map) != self.source.n_morphisms:
            raise StructuralError(
                f"functor {self.name or '?'}: maps cover {len(self.obj_map)}/{len(self.mor_map)} "
                f"of {self.source.n_objects}/{self.source.n_morphisms} objects/morphisms"
            )
        if any(not 0 <= x < self.target.n_objects for x in self.obj_map):
            raise StructuralError(f"functor {self.name or '?'}: object image out of range")
        if any(not 0 <= f < self.target.n_morphisms for f in self.mor_map):
            raise StructuralError(f"functor {self.name or '?'}: morphism image out of range")

    def on_object(self, x: int) -> int:
        return self.obj_map[x]

    def on_morphism(self, f: int) -> int:
        return self.mor_map[f]

    __call__ = on_morphism

    def then(self, other: "PlainFunctor") -> "PlainFunctor":
        """``other ∘ self``."""
        if other.source is not self.target:
            raise StructuralError(f"cannot compose {other.name or '?'} after {self.name or '?'}: categories differ")
        return PlainFunctor(
            self.source,
            other.target,
            tuple(other.obj_map[x] for x in self.obj_map),
            tuple(other.mor_map[f] for f in self.mor_map),
            name=f"{other.name}∘{self.name}" if other.name and self.name else "",
        )

    def same_as(self, other: "PlainFunctor") -> bool:
        return (
            self.source is other.source
            and self.target is other.target
            and self.obj_map == other.obj_map
            and self.mor_map == other.mor_map
        )

    @classmethod
    def identity(cls, c) -> "PlainFunctor":
        return cls(c, c, tuple(c.objects()), tuple(c.morphisms()), name=f"id_{c.name}")


def labels_for(c, morphisms: Iterable[int]) -> list:
    return [c.morphism_label(f) for f in sorted(morphisms)]
