#!/usr/bin/env python3
"""
Partitions of arguments and the spans they induce.

Positions are numbered 1..|I|+|J|: the domain argument list first, then the
codomain argument list, left to right. The R-category of a partition is the
product of the factors at the class representatives (least position of each
class), which is isomorphic to the subcategory of R-morphisms of ∏(AB).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from lark import Lark, Transformer, UnexpectedInput

from ..base import DSLSyntaxError, StructuralError, logger
from ..fincat import PlainFunctor, Subgraph, coordinate_morphisms, product_category
from .spans import Span

EXPRESSION_GRAMMAR = r"""
    start: call "->" call
    call: IDENT "(" IDENT ("," IDENT)* ")"

    IDENT: /[A-Za-z_][A-Za-z0-9_']*/

    %import common.WS
    %ignore WS
"""


@dataclass(frozen=True)
class PartitionOfArguments:
    """An equivalence relation on argument positions, optionally bound to factor categories."""

    n_domain: int
    n_codomain: int
    classes: Tuple[frozenset, ...]
    factors: Optional[Tuple[object, ...]] = field(default=None, compare=False)
    domain_name: str = field(default="", compare=False)
    codomain_name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        classes = tuple(sorted((frozenset(int(i) for i in c) for c in self.classes), key=min))
        object.__setattr__(self, "classes", classes)
        positions = sorted(i for c in classes for i in c)
        if positions != list(range(1, self.size + 1)):
            raise StructuralError(f"classes {self.render()} do not partition positions 1..{self.size}")
        if self.factors is not None:
            self._check_factors(tuple(self.factors))

    @property
    def size(self) -> int:
        return self.n_domain + self.n_codomain

    @property
    def domain_positions(self) -> range:
        return range(1, self.n_domain + 1)

    @property
    def codomain_positions(self) -> range:
        return range(self.n_domain + 1, self.size + 1)

    @property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(min(c) for c in self.classes)

    def class_index(self, position: int) -> int:
        for k, c in enumerate(self.classes):
            if position in c:
                return k
        raise StructuralError(f"no argument position {position}")

    def _check_factors(self, factors: Tuple[object, ...]) -> None:
        if len(factors) != self.size:
            raise StructuralError(f"partition has {self.size} positions but {len(factors)} factor categories were given")
        for c in self.classes:
            first = factors[min(c) - 1]
            for i in sorted(c):
                if factors[i - 1] is not first:
                    raise StructuralError(
                        f"positions {min(c)} and {i} are equated but carry {first.name} and {factors[i - 1].name}"
                    )

    def bind(self, domain_factors: Sequence[object], codomain_factors: Sequence[object]) -> "PartitionOfArguments":
        """Attach factor categories; equated positions must carry the same category."""
        if len(domain_factors) != self.n_domain or len(codomain_factors) != self.n_codomain:
            raise StructuralError(
                f"{self.domain_name or 'F'} / {self.codomain_name or 'G'} take "
                f"{len(domain_factors)} / {len(codomain_factors)} arguments, the expression has "
                f"{self.n_domain} / {self.n_codomain}"
            )
        return PartitionOfArguments(
            self.n_domain, self.n_codomain, self.classes,
            tuple(domain_factors) + tuple(codomain_factors), self.domain_name, self.codomain_name,
        )

    def render(self) -> str:
        return " ".join("{" + ",".join(str(i) for i in sorted(c)) + "}" for c in self.classes)

    def __str__(self) -> str:
        return self.render()


class _ExpressionTransformer(Transformer):
    def call(self, items):
        return str(items[0]), [str(t) for t in items[1:]]

    def start(self, items):
        return items[0], items[1]


@lru_cache(maxsize=1)
def _expression_parser() -> Lark:
    return Lark(EXPRESSION_GRAMMAR, parser="lalr", propagate_positions=True)


def derive_partition(expr: str) -> PartitionOfArguments:
    """
    Read a partition from ``F(x,y,y) -> G(x,x,y)``: positions sharing a
    variable are equated.
    """
    try:
        tree = _expression_parser().parse(expr)
    except UnexpectedInput as e:
        raise DSLSyntaxError(f"cannot read expression {expr!r}", max(e.line, 0), max(e.column, 0)) from e
    (dom_name, dom_vars), (cod_name, cod_vars) = _ExpressionTransformer().transform(tree)
    by_var: Dict[str, List[int]] = {}
    for pos, var in enumerate(dom_vars + cod_vars, start=1):
        by_var.setdefault(var, []).append(pos)
    p = PartitionOfArguments(
        len(dom_vars), len(cod_vars), tuple(frozenset(v) for v in by_var.values()),
        domain_name=dom_name, codomain_name=cod_name,
    )
    logger.debug("partition of %s: %s", expr, p.render())
    return p


def partition_from_classes(n_domain: int, n_codomain: int, classes: Sequence[Sequence[int]], factors=None) -> PartitionOfArguments:
    """Explicit classes; positions left out become singletons."""
    seen = {i for c in classes for i in c}
    rest = [frozenset({i}) for i in range(1, n_domain + n_codomain + 1) if i not in seen]
    return PartitionOfArguments(n_domain, n_codomain, tuple(frozenset(c) for c in classes) + tuple(rest), factors)


class PartitionSpan(Span):
    """Span induced by a partition, remembering how R sits inside ∏(AB)."""

    partition: PartitionOfArguments

    def embed(self, r: int) -> Tuple[int, ...]:
        """Components of the R-morphism ``r`` at every position 1..|I|+|J|."""
        comps = _class_columns(self.apex, len(self.partition.classes))
        return tuple(int(comps[self.partition.class_index(i)][r]) for i in range(1, self.partition.size + 1))

    def embed_object(self, x: int) -> Tuple[int, ...]:
        p = self.partition
        if len(p.classes) == 1:
            comps = (x,)
        else:
            comps = self.apex.object_components(x)
        return tuple(comps[p.class_index(i)] for i in range(1, p.size + 1))


def _class_columns(r, n_classes: int) -> List[np.ndarray]:
    if n_classes == 1:
        return [np.arange(r.n_morphisms, dtype=np.int64)]
    return list(r.component_matrix)


def _leg(r, p: PartitionOfArguments, positions: range, target, name: str) -> PlainFunctor:
    """R → ∏_{i ∈ positions} (AB)_i, each component read from its class representative."""
    cols = _class_columns(r, len(p.classes))
    picks = [p.class_index(i) for i in positions]
    if len(picks) == 1:
        mor = cols[picks[0]]
        obj = [(_object_components(r, p, x))[picks[0]] for x in r.objects()]
    else:
        mor = target.encode_columns([cols[k] for k in picks])
        obj = [target.object_index([_object_components(r, p, x)[k] for k in picks]) for x in r.objects()]
    return PlainFunctor(r, target, obj, mor.tolist(), name=name)


def _object_components(r, p: PartitionOfArguments, x: int) -> Tuple[int, ...]:
    return (x,) if len(p.classes) == 1 else r.object_components(x)


def build_span_from_partition(p: PartitionOfArguments, cap: Optional[int] = None, name: str = "") -> PartitionSpan:
    """
    Span ∏_K(AB)_k ⇒ ∏A, ∏B for a bound partition. Legs land in exactly the
    products a functor of index-variance over A (resp. B) is defined on; a
    single argument means the factor itself.
    """
    if p.factors is None:
        raise StructuralError("partition is not bound to factor categories")
    factors = p.factors
    reps = p.representatives
    rep_cats = [factors[i - 1] for i in reps]
    r = rep_cats[0] if len(rep_cats) == 1 else product_category(rep_cats, cap=cap)
    dom_factors = [factors[i - 1] for i in p.domain_positions]
    cod_factors = [factors[i - 1] for i in p.codomain_positions]
    a = dom_factors[0] if len(dom_factors) == 1 else product_category(dom_factors, cap=cap)
    b = cod_factors[0] if len(cod_factors) == 1 else product_category(cod_factors, cap=cap)
    left = _leg(r, p, p.domain_positions, a, "L1")
    right = _leg(r, p, p.codomain_positions, b, "L2")
    span = PartitionSpan(r, left, right, name=name or p.render())
    object.__setattr__(span, "partition", p)
    logger.debug("partition span %s: R has %d morphisms", span.name, r.n_morphisms)
    return span


def single_class_generators(span: PartitionSpan) -> Subgraph:
    """R-morphisms that are identities in every class but at most one."""
    r = span.apex
    if len(span.partition.classes) == 1:
        return Subgraph.everything(r)
    return coordinate_morphisms(r)


def is_generalized_extranatural(p: PartitionOfArguments, variances: Sequence[int]) -> bool:
    """
    Every class has two positions, and two equated positions differ in
    variance exactly when they sit on the same side.
    """
    if len(variances) != p.size:
        raise StructuralError(f"{len(variances)} variance flags for {p.size} positions")
    for c in p.classes:
        if len(c) != 2:
            return False
        i, j = sorted(c)
        same_side = (i <= p.n_domain) == (j <= p.n_domain)
        if (variances[i - 1] != variances[j - 1]) != same_side:
            return False
    return True
