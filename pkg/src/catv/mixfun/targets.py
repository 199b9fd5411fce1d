#!/usr/bin/env python3
"""
Codomains for functors of mixed variance: a finite category, or finite sets
{0..n-1} with explicit functions stored as index arrays.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Any, Iterator, List, Optional, Sequence

import numpy as np

from ..base import StructuralError


@dataclass(frozen=True, eq=False)
class SetMap:
    """Function {0..n-1} → {0..size-1}; ``values[j]`` is the image of j."""

    values: np.ndarray
    size: int

    @classmethod
    def of(cls, values: Sequence[int] | np.ndarray, size: int) -> "SetMap":
        arr = np.array(values, dtype=np.int64).reshape(-1)
        if arr.size and (arr.min() < 0 or arr.max() >= size):
            raise StructuralError(f"function values {arr.tolist()} do not fit in a set of size {size}")
        arr.setflags(write=False)
        return cls(arr, int(size))

    @classmethod
    def identity(cls, n: int) -> "SetMap":
        return cls.of(np.arange(n), n)

    @property
    def domain_size(self) -> int:
        return int(self.values.shape[0])

    def after(self, other: "SetMap") -> "SetMap":
        """``self ∘ other``."""
        if other.size != self.domain_size:
            raise StructuralError(f"cannot compose {self} after {other}")
        return SetMap.of(self.values[other.values], self.size)

    def __call__(self, j: int) -> int:
        return int(self.values[j])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SetMap) and self.size == other.size and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.size, self.values.tobytes()))

    def is_bijective(self) -> bool:
        return self.domain_size == self.size and len(set(self.values.tolist())) == self.size

    def to_json(self) -> List[int]:
        return self.values.tolist()

    def __repr__(self) -> str:
        return "[" + ",".join(str(v) for v in self.values.tolist()) + f"]→{self.size}"


class CategoryTarget:
    """A FinCategory viewed as a codomain."""

    kind = "category"

    def __init__(self, category):
        self.category = category
        self.name = category.name

    def compose(self, g: int, f: int) -> int:
        return self.category.compose(g, f)

    def identity(self, obj: int) -> int:
        return self.category.identity(obj)

    def dom(self, f: int) -> int:
        return self.category.dom(f)

    def cod(self, f: int) -> int:
        return self.category.cod(f)

    def equal(self, a: int, b: int) -> bool:
        return a == b

    def inverse(self, f: int) -> Optional[int]:
        return self.category.inverse(f)

    def hom(self, a: int, b: int) -> Sequence[int]:
        return self.category.hom(a, b)

    def render(self, f: Any) -> str:
        return self.category.morphism_label(f)

    def object_label(self, a: int) -> str:
        return self.category.object_label(a)

    def typed(self, f: Any, a: int, b: int) -> bool:
        return self.dom(f) == a and self.cod(f) == b

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CategoryTarget) and other.category is self.category

    def __hash__(self) -> int:
        return id(self.category)


class FinSetTarget:
    """Finite sets {0..n-1}: objects are sizes, morphisms are ``SetMap``s."""

    kind = "finset"
    name = "FinSet"

    def compose(self, g: SetMap, f: SetMap) -> SetMap:
        return g.after(f)

    def identity(self, n: int) -> SetMap:
        return SetMap.identity(n)

    def dom(self, f: SetMap) -> int:
        return f.domain_size

    def cod(self, f: SetMap) -> int:
        return f.size

    def equal(self, a: SetMap, b: SetMap) -> bool:
        return a == b

    def inverse(self, f: SetMap) -> Optional[SetMap]:
        if not f.is_bijective():
            return None
        inv = np.empty(f.size, dtype=np.int64)
        inv[f.values] = np.arange(f.domain_size)
        return SetMap.of(inv, f.domain_size)

    def hom(self, a: int, b: int) -> Iterator[SetMap]:
        """All functions a → b in lexicographic order of their value tuples."""
        for values in cartesian(range(b), repeat=a):
            yield SetMap.of(values, b)

    def hom_size(self, a: int, b: int) -> int:
        return b ** a

    def render(self, f: Any) -> str:
        return repr(f)

    def object_label(self, a: int) -> str:
        return str(a)

    def typed(self, f: SetMap, a: int, b: int) -> bool:
        return f.domain_size == a and f.size == b

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinSetTarget)

    def __hash__(self) -> int:
        return hash(FinSetTarget)


FINSET = FinSetTarget()

_TARGETS: "weakref.WeakValueDictionary[int, CategoryTarget]" = weakref.WeakValueDictionary()


def as_target(target) -> CategoryTarget | FinSetTarget:
    if isinstance(target, (CategoryTarget, FinSetTarget)):
        return target
    cached = _TARGETS.get(id(target))
    if cached is None or cached.category is not target:
        cached = CategoryTarget(target)
        _TARGETS[id(target)] = cached
    return cached
