"""
Declarations of a .catv workspace. Source positions are carried for
diagnostics but ignored by equality, so a printed and reparsed workspace
compares equal to the original.

A reference is a plain label (``str``) or a tuple of references naming an
object or morphism of a product category.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

Ref = Union[str, Tuple["Ref", ...]]


def _loc():
    return field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class IndexArray:
    values: Tuple[int, ...]


@dataclass(frozen=True)
class CategoryDecl:
    name: str
    objects: Tuple[str, ...]
    morphisms: Tuple[Tuple[str, str, str], ...]
    composites: Tuple[Tuple[str, str, str], ...]
    line: int = _loc()
    column: int = _loc()


@dataclass(frozen=True)
class GroupDecl:
    name: str
    elements: Tuple[str, ...]
    rows: Tuple[Tuple[str, Tuple[str, ...]], ...]
    line: int = _loc()
    column: int = _loc()


@dataclass(frozen=True)
class BuiltinDecl:
    name: str
    kind: str
    args: Tuple[int, ...]
    line: int = _loc()
    column: int = _loc()


@dataclass(frozen=True)
class ProductDecl:
    name: str
    factors: Tuple[str, ...]
    line: int = _loc()
    column: int = _loc()


@dataclass(frozen=True)
class VarianceDecl:
    name: str
    category: str
    kind: str
    E: Tuple[Ref, ...] = ()
    M: Tuple[Ref, ...] = ()
    flags: Tuple[int, ...] = ()
    line: int = _loc()
    column: int = _loc()


@dataclass(frozen=True)
class FunctorDecl:
    name: str
    source: str
    target: str
    variance: Optional[str]
    objects: Tuple[Tuple[Ref, Ref], ...]
    morphisms: Tuple[Tuple[Ref, Ref], ...]
    line: int = _loc()
    column: int = _loc()


@dataclass(frozen=True)
class SetFunctorDecl:
    name: str
    source: str
    variance: Optional[str]
    objects: Tuple[Tuple[Ref, int], ...]
    morphisms: Tuple[Tuple[Ref, IndexArray], ...]
    line: int = _loc()
    column: int = _loc()


@dataclass(frozen=True)
class HomDecl:
    name: str
    category: str
    line: int = _loc()
    column: int = _loc()


@dataclass(frozen=True)
class SpanDecl:
    name: str
    apex: str
    targets: Tuple[str, ...]
    mode: str
    objects: Tuple[Tuple[Ref, Tuple[Ref, ...]], ...] = ()
    morphisms: Tuple[Tuple[Ref, Tuple[Ref, ...]], ...] = ()
    line: int = _loc()
    column: int = _loc()


@dataclass(frozen=True)
class PartitionDecl:
    name: str
    domain: Tuple[str, ...]
    codomain: Tuple[str, ...]
    classes: Tuple[Tuple[int, ...], ...] = ()
    expression: Optional[str] = None
    line: int = _loc()
    column: int = _loc()


@dataclass(frozen=True)
class TransformationDecl:
    name: str
    source: str
    target: str
    span: str
    components: Tuple[Tuple[Ref, Union[Ref, IndexArray]], ...]
    line: int = _loc()
    column: int = _loc()


Declaration = Union[
    CategoryDecl, GroupDecl, BuiltinDecl, ProductDecl, VarianceDecl, FunctorDecl,
    SetFunctorDecl, HomDecl, SpanDecl, PartitionDecl, TransformationDecl,
]


@dataclass
class Program:
    declarations: List[Declaration] = field(default_factory=list)
    source: Optional[str] = field(default=None, compare=False)


def ref_text(ref: Ref) -> str:
    """The label a reference resolves to: tuples render as ``(a,b)``."""
    if isinstance(ref, tuple):
        return "(" + ",".join(ref_text(r) for r in ref) + ")"
    return ref
