#!/usr/bin/env python3
"""
Spans. A span on A is a functor L: R → A; a span from A to B carries two
legs L₁: R → A and L₂: R → B, paired into A×B on demand.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from ..base import StructuralError
from ..fincat import PlainFunctor, diagonal, pairing, product_category, projection


@dataclass(frozen=True, eq=False)
class Span:
    apex: object
    left: PlainFunctor
    right: Optional[PlainFunctor] = None
    name: str = ""

    def __post_init__(self) -> None:
        for leg in (self.left, self.right):
            if leg is not None and leg.source is not self.apex:
                raise StructuralError(f"span {self.name or '?'}: leg {leg.name or '?'} does not start at {self.apex.name}")

    @property
    def two_sided(self) -> bool:
        return self.right is not None

    @property
    def leg(self) -> PlainFunctor:
        """The single leg L of a span on A."""
        if self.right is not None:
            raise StructuralError(f"span {self.name or '?'} has two legs; use paired")
        return self.left

    def require_two_sided(self) -> "Span":
        if self.right is None:
            raise StructuralError(f"span {self.name or '?'} has one leg, a span A → B needs two")
        return self

    @cached_property
    def paired(self) -> PlainFunctor:
        """L = ⟨L₁, L₂⟩: R → A×B."""
        self.require_two_sided()
        return pairing([self.left, self.right])

    def __repr__(self) -> str:
        targets = self.left.target.name + (f", {self.right.target.name}" if self.right is not None else "")
        return f"<Span {self.name or '?'}: {self.apex.name} => {targets}>"


def diagonal_span(c, name: str = "Δ") -> Span:
    """(C, id, id): the span along which ordinary naturality is checked."""
    ident = PlainFunctor.identity(c)
    return Span(c, ident, ident, name=name)


def identity_span(c, name: str = "id") -> Span:
    return Span(c, PlainFunctor.identity(c), name=name)


def diagonal_leg(c, cap: Optional[int] = None, name: str = "Δ") -> Span:
    """The one-legged span Δ: C → C×C used for ends of functors on C×C."""
    return Span(c, diagonal(c, cap=cap), name=name)


def product_span(a, b, cap: Optional[int] = None, name: str = "") -> Span:
    """(A×B, π₁, π₂): the span whose comma category is the ordinary F↓G."""
    p = product_category([a, b], cap=cap)
    return Span(p, projection(p, 0), projection(p, 1), name=name or f"{a.name}×{b.name}")


def split(span: Span) -> Span:
    """Two-sided span from a one-legged span into a binary product."""
    if span.two_sided:
        return span
    target = span.left.target
    if len(getattr(target, "factors", ())) != 2:
        raise StructuralError(f"span {span.name or '?'} does not land in a binary product")
    return Span(span.apex, span.left.then(projection(target, 0)), span.left.then(projection(target, 1)), name=span.name)
