#!/usr/bin/env python3
"""Generation by subgraphs, path components and materialised subcategories."""
from __future__ import annotations

from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

from ..base import StructuralError
from .category import FinCategory
from .core import PlainFunctor, Subgraph


def generated_morphisms(c, s: Iterable[int]) -> frozenset:
    """All composites of morphisms in ``s`` and identities (closure fixpoint)."""
    gens = sorted(set(int(f) for f in s))
    by_dom = {}
    for g in gens:
        by_dom.setdefault(c.dom(g), []).append(g)
    reached = set(c.identity(x) for x in c.objects())
    queue = deque(sorted(reached))
    while queue:
        h = queue.popleft()
        for g in by_dom.get(c.cod(h), ()):
            k = c.compose(g, h)
            if k not in reached:
                reached.add(k)
                queue.append(k)
    return frozenset(reached)


def is_generating(c, s: Subgraph | Iterable[int]) -> bool:
    morphisms = s.morphisms if isinstance(s, Subgraph) else s
    return len(generated_morphisms(c, morphisms)) == c.n_morphisms


def path_components(c) -> Tuple[frozenset, ...]:
    """Connected components of the underlying undirected graph, by least object."""
    parent = list(c.objects())

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in c.morphisms():
        a, b = find(c.dom(f)), find(c.cod(f))
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups = {}
    for x in c.objects():
        groups.setdefault(find(x), set()).add(x)
    return tuple(frozenset(groups[k]) for k in sorted(groups))


def coordinate_morphisms(p) -> Subgraph:
    """Morphisms of a product that are identities in all but at most one coordinate."""
    keep = []
    for f in p.morphisms():
        comps = p.components(f)
        moving = sum(1 for fac, m in zip(p.factors, comps) if not fac.is_identity(m))
        if moving <= 1:
            keep.append(f)
    return Subgraph(p, frozenset(keep))


class SubCategory(FinCategory):
    """A subcategory re-indexed densely, remembering its owner indices."""

    owner: FinCategory
    owner_objects: Tuple[int, ...]
    owner_morphisms: Tuple[int, ...]

    def to_local(self, f: int) -> int:
        """Local index of an owner morphism."""
        try:
            return self._local_mor[f]
        except KeyError:
            raise StructuralError(f"{self.name}: {self.owner.morphism_label(f)} is not in the subcategory") from None

    def local_object(self, x: int) -> int:
        try:
            return self._local_obj[x]
        except KeyError:
            raise StructuralError(f"{self.name}: {self.owner.object_label(x)} is not in the subcategory") from None

    @property
    def is_wide(self) -> bool:
        return len(self.owner_objects) == self.owner.n_objects

    @property
    def inclusion(self) -> PlainFunctor:
        return PlainFunctor(self, self.owner, self.owner_objects, self.owner_morphisms, name=f"incl_{self.name}")


def subcategory(
    owner: FinCategory,
    morphisms: Iterable[int],
    objects: Optional[Sequence[int]] = None,
    name: Optional[str] = None,
) -> SubCategory:
    """
    Materialise the subcategory with the given morphisms.

    Objects default to the endpoints of the listed morphisms; identities of all
    included objects are added. Raises ``StructuralError`` naming a composable
    pair whose composite leaves the set.
    """
    mors = set(int(f) for f in morphisms)
    objs = set(objects) if objects is not None else set()
    for f in mors:
        if not 0 <= f < owner.n_morphisms:
            raise StructuralError(f"{owner.name}: unknown morphism index {f}")
        objs.update((owner.dom(f), owner.cod(f)))
    mors.update(owner.identity(x) for x in objs)
    for f in mors:
        if owner.dom(f) not in objs or owner.cod(f) not in objs:
            raise StructuralError(f"{owner.name}: {owner.morphism_label(f)} leaves the object set")
    for f in sorted(mors):
        for g in owner.out_of(owner.cod(f)):
            if g in mors and owner.compose(g, f) not in mors:
                raise StructuralError(
                    f"{owner.name}: {owner.morphism_label(g)}∘{owner.morphism_label(f)} leaves the subcategory"
                )
    obj_list = sorted(objs)
    mor_list = sorted(mors)
    local_obj = {x: i for i, x in enumerate(obj_list)}
    local_mor = {f: i for i, f in enumerate(mor_list)}
    table = {}
    for f in mor_list:
        for g in owner.out_of(owner.cod(f)):
            if g in local_mor:
                table[(local_mor[g], local_mor[f])] = local_mor[owner.compose(g, f)]
    sub = SubCategory(
        name or f"sub({owner.name})",
        [owner.object_label(x) for x in obj_list],
        [local_obj[owner.dom(f)] for f in mor_list],
        [local_obj[owner.cod(f)] for f in mor_list],
        [local_mor[owner.identity(x)] for x in obj_list],
        table,
        [owner.morphism_label(f) for f in mor_list],
    )
    sub.owner = owner
    sub.owner_objects = tuple(obj_list)
    sub.owner_morphisms = tuple(mor_list)
    sub._local_obj = local_obj
    sub._local_mor = local_mor
    return sub


def restrict_functor(F: PlainFunctor, sub: SubCategory) -> PlainFunctor:
    """F precomposed with the inclusion of ``sub``."""
    return sub.inclusion.then(F)


def identities_only(c) -> List[int]:
    return [c.identity(x) for x in c.objects()]
