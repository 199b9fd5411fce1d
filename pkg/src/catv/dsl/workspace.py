"""
Resolve parsed declarations into live catv objects.

Declarations are resolved in file order and may only refer to names declared
above them. Anything that does not resolve is reported as a
``DSLSemanticError`` at the offending declaration; laws (functoriality,
associativity, naturality) are left to ``check_workspace``.
"""
from __future__ import annotations

import dataclasses
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from ..base import CatvError, DSLError, DSLSemanticError, logger
from ..fincat import (
    FinCategory,
    PlainFunctor,
    ProductCategory,
    chain,
    cyclic_group,
    diagonal,
    finset_skeleton,
    generated_morphisms,
    group_from_table,
    klein_four,
    product_category,
    semidirect_product,
    symmetric_group,
    validate_category,
    validate_functor,
    walking_arrow,
)
from ..mixfun import (
    CategoryTarget,
    MixedFunctor,
    SetMap,
    SetValuedMixedFunctor,
    hom_functor,
    validate_mixed_functor,
)
from ..natural import (
    PartitionOfArguments,
    Span,
    TransformationFamily,
    build_span_from_partition,
    check_heuristic_naturality,
    derive_partition,
    diagonal_span,
    identity_span,
    partition_from_classes,
)
from ..report import Report
from ..variance import (
    VarianceStruct,
    build_variance,
    contravariant_variance,
    covariant_variance,
    index_variance,
)
from .ast import (
    BuiltinDecl,
    CategoryDecl,
    Declaration,
    FunctorDecl,
    GroupDecl,
    HomDecl,
    IndexArray,
    PartitionDecl,
    ProductDecl,
    Program,
    Ref,
    SetFunctorDecl,
    SpanDecl,
    TransformationDecl,
    VarianceDecl,
    ref_text,
)
from .parse import parse_program

BUILTINS: Dict[str, Tuple[int, Callable[..., FinCategory]]] = {
    "arrow": (0, walking_arrow),
    "chain": (1, chain),
    "cyclic": (1, cyclic_group),
    "symmetric": (1, symmetric_group),
    "klein": (0, klein_four),
    "finset": (1, finset_skeleton),
    "semidirect": (3, semidirect_product),
}


class Workspace:
    """Named categories, variances, functors, spans and transformations of one .catv file."""

    def __init__(self, program: Program, cap: Optional[int] = None):
        self.program = program
        self.source = program.source
        self.cap = cap
        self.categories: Dict[str, FinCategory] = {}
        self.variances: Dict[str, VarianceStruct] = {}
        self.functors: Dict[str, MixedFunctor] = {}
        self.spans: Dict[str, Span] = {}
        self.partitions: Dict[str, PartitionOfArguments] = {}
        self.transformations: Dict[str, TransformationFamily] = {}
        self._current: Optional[Declaration] = None

    # diagnostics

    def _error(self, message: str, decl: Optional[Declaration] = None) -> DSLSemanticError:
        decl = decl if decl is not None else self._current
        line = getattr(decl, "line", 0)
        column = getattr(decl, "column", 0)
        return DSLSemanticError(message, line, column, self.source)

    def _table(self, kind: str) -> Dict[str, Any]:
        return {
            "category": self.categories,
            "variance": self.variances,
            "functor": self.functors,
            "span": self.spans,
            "transformation": self.transformations,
        }[kind]

    def lookup(self, kind: str, name: str) -> Any:
        table = self._table(kind)
        try:
            return table[name]
        except KeyError:
            known = ", ".join(sorted(table)) or "none"
            raise self._error(f"unknown {kind} {name!r} (declared: {known})") from None

    def category(self, name: str) -> FinCategory:
        return self.lookup("category", name)

    def variance(self, name: str) -> VarianceStruct:
        return self.lookup("variance", name)

    def functor(self, name: str) -> MixedFunctor:
        return self.lookup("functor", name)

    def span(self, name: str) -> Span:
        return self.lookup("span", name)

    def transformation(self, name: str) -> TransformationFamily:
        return self.lookup("transformation", name)

    def _register(self, kind: str, name: str, value: Any) -> None:
        table = self._table(kind)
        if name in table:
            raise self._error(f"{kind} {name!r} is declared twice")
        table[name] = value

    # references

    def _object(self, c, ref: Ref) -> int:
        return c.find_object(ref_text(ref))

    def _morphism(self, c, ref: Ref) -> int:
        return c.find_morphism(ref_text(ref))

    # resolution

    def resolve(self) -> "Workspace":
        handlers = {
            CategoryDecl: self._category,
            GroupDecl: self._group,
            BuiltinDecl: self._builtin,
            ProductDecl: self._product,
            VarianceDecl: self._variance,
            FunctorDecl: self._functor,
            SetFunctorDecl: self._setfunctor,
            HomDecl: self._hom,
            SpanDecl: self._span,
            PartitionDecl: self._partition,
            TransformationDecl: self._transformation,
        }
        for decl in self.program.declarations:
            self._current = decl
            try:
                handlers[type(decl)](decl)
            except DSLError as e:
                if isinstance(e, DSLSemanticError) and e.line:
                    raise
                raise self._error(e.message, decl) from e
            except CatvError as e:
                raise self._error(str(e), decl) from e
        self._current = None
        logger.debug(
            "workspace %s: %d categories, %d variances, %d functors, %d spans, %d transformations",
            self.source or "<text>", len(self.categories), len(self.variances),
            len(self.functors), len(self.spans), len(self.transformations),
        )
        return self

    def _category(self, d: CategoryDecl) -> None:
        composites = {}
        for g, f, h in d.composites:
            if (g, f) in composites:
                raise self._error(f"composite {g} . {f} is declared twice")
            composites[(g, f)] = h
        c = FinCategory.declare(d.name, d.objects, d.morphisms, composites)
        missing = c.missing_composites()
        if missing:
            g, f = missing[0]
            raise self._error(
                f"{d.name}: composite {c.morphism_label(g)} . {c.morphism_label(f)} is not declared"
                + (f" ({len(missing) - 1} more)" if len(missing) > 1 else "")
            )
        self._register("category", d.name, c)

    def _group(self, d: GroupDecl) -> None:
        index = {label: i for i, label in enumerate(d.elements)}
        if len(index) != len(d.elements):
            raise self._error(f"{d.name}: duplicate group elements")
        rows: Dict[int, List[int]] = {}
        for label, entries in d.rows:
            if label not in index:
                raise self._error(f"{d.name}: row for unknown element {label!r}")
            unknown = [e for e in entries if e not in index]
            if unknown:
                raise self._error(f"{d.name}: unknown element {unknown[0]!r} in row {label}")
            if len(entries) != len(d.elements):
                raise self._error(f"{d.name}: row {label} has {len(entries)} entries, expected {len(d.elements)}")
            rows[index[label]] = [index[e] for e in entries]
        if len(rows) != len(d.elements):
            absent = [e for e in d.elements if index[e] not in rows]
            raise self._error(f"{d.name}: no row for {absent[0]!r}")
        table = [rows[i] for i in range(len(d.elements))]
        self._register("category", d.name, group_from_table(d.name, d.elements, table))

    def _builtin(self, d: BuiltinDecl) -> None:
        try:
            arity, make = BUILTINS[d.kind]
        except KeyError:
            raise self._error(f"unknown builtin {d.kind!r} (known: {', '.join(sorted(BUILTINS))})") from None
        if len(d.args) != arity:
            raise self._error(f"builtin {d.kind} takes {arity} argument(s), got {len(d.args)}")
        c = make(*d.args)
        c.name = d.name
        self._register("category", d.name, c)

    def _product(self, d: ProductDecl) -> None:
        factors = [self.category(n) for n in d.factors]
        # shared by factor identity; never renamed
        self._register("category", d.name, product_category(factors, cap=self.cap))

    def _variance(self, d: VarianceDecl) -> None:
        c = self.category(d.category)
        if d.kind == "covariant":
            v = dataclasses.replace(covariant_variance(c), name=d.name)
        elif d.kind == "contravariant":
            v = dataclasses.replace(contravariant_variance(c), name=d.name)
        elif d.kind == "index":
            if not isinstance(c, ProductCategory):
                raise self._error(f"index variance needs a product category, {c.name} is not one")
            v = index_variance(c.factors, d.flags, cap=self.cap)
            if v.owner is not c:
                raise self._error(f"index variance on {c.name} was built over a different product")
            v = dataclasses.replace(v, name=d.name)
        else:
            E = generated_morphisms(c, [self._morphism(c, r) for r in d.E])
            M = generated_morphisms(c, [self._morphism(c, r) for r in d.M])
            v = build_variance(c, E, M, name=d.name)
        self._register("variance", d.name, v)

    def _variance_for(self, c, name: Optional[str]) -> VarianceStruct:
        if name is None:
            return covariant_variance(c)
        v = self.variance(name)
        if v.owner is not c:
            raise self._error(f"variance {name} lives on {v.owner.name}, not {c.name}")
        return v

    def _covering(self, c, entries, what: str, objects: bool) -> Dict[int, Any]:
        """Map every object (or non-identity morphism) of ``c`` to its declared image."""
        find = self._object if objects else self._morphism
        out: Dict[int, Any] = {}
        for ref, image in entries:
            key = find(c, ref)
            if key in out:
                raise self._error(f"{what}: {ref_text(ref)} is mapped twice")
            if not objects and c.is_identity(key):
                raise self._error(f"{what}: identity {ref_text(ref)} is mapped implicitly")
            out[key] = image
        needed = c.objects() if objects else [f for f in c.morphisms() if not c.is_identity(f)]
        absent = [x for x in needed if x not in out]
        if absent:
            label = c.object_label(absent[0]) if objects else c.morphism_label(absent[0])
            kind = "object" if objects else "morphism"
            raise self._error(f"{what}: no image for {kind} {label}")
        return out

    def _functor(self, d: FunctorDecl) -> None:
        c, target = self.category(d.source), self.category(d.target)
        v = self._variance_for(c, d.variance)
        obj = self._covering(c, d.objects, d.name, objects=True)
        mor = self._covering(c, d.morphisms, d.name, objects=False)
        obj_map = [self._object(target, obj[x]) for x in c.objects()]
        mor_map = []
        for f in c.morphisms():
            if c.is_identity(f):
                mor_map.append(target.identity(obj_map[c.dom(f)]))
            else:
                mor_map.append(self._morphism(target, mor[f]))
        self._register("functor", d.name, MixedFunctor(v, target, obj_map, mor_map, name=d.name))

    def _setfunctor(self, d: SetFunctorDecl) -> None:
        c = self.category(d.source)
        v = self._variance_for(c, d.variance)
        sizes = self._covering(c, d.objects, d.name, objects=True)
        arrays = self._covering(c, d.morphisms, d.name, objects=False)
        size_list = [sizes[x] for x in c.objects()]
        maps = []
        for f in c.morphisms():
            src, tgt = size_list[int(v.start_obj[f])], size_list[int(v.term_obj[f])]
            if c.is_identity(f):
                maps.append(SetMap.identity(src))
                continue
            values = arrays[f].values
            if len(values) != src:
                raise self._error(
                    f"{d.name}: image of {c.morphism_label(f)} has {len(values)} entries, "
                    f"its domain F(f_s) has {src}"
                )
            maps.append(SetMap.of(values, tgt))
        self._register("functor", d.name, SetValuedMixedFunctor(v, size_list, maps, name=d.name))

    def _hom(self, d: HomDecl) -> None:
        F = hom_functor(self.category(d.category), cap=self.cap)
        F.name = d.name
        self._register("functor", d.name, F)

    def _span(self, d: SpanDecl) -> None:
        r = self.category(d.apex)
        targets = [self.category(t) for t in d.targets]
        if d.mode != "explicit":
            if d.objects or d.morphisms:
                raise self._error(f"span {d.name}: {d.mode} spans take no obj/mor lines")
            self._register("span", d.name, self._canned_span(d, r, targets))
            return
        obj = self._covering(r, d.objects, d.name, objects=True)
        mor = self._covering(r, d.morphisms, d.name, objects=False)
        for images in list(obj.values()) + list(mor.values()):
            if len(images) != len(targets):
                raise self._error(f"span {d.name}: expected {len(targets)} image(s) per line, got {len(images)}")
        legs = []
        for i, t in enumerate(targets):
            obj_map = [self._object(t, obj[x][i]) for x in r.objects()]
            mor_map = [
                t.identity(obj_map[r.dom(f)]) if r.is_identity(f) else self._morphism(t, mor[f][i])
                for f in r.morphisms()
            ]
            legs.append(PlainFunctor(r, t, obj_map, mor_map, name=f"{d.name}{i + 1}"))
        self._register("span", d.name, Span(r, *legs, name=d.name))

    def _canned_span(self, d: SpanDecl, r, targets) -> Span:
        if d.mode == "identity" and len(targets) == 1:
            if targets[0] is not r:
                raise self._error(f"span {d.name}: identity span must land in {r.name}")
            return identity_span(r, name=d.name)
        if len(targets) == 2 or d.mode == "identity":
            if any(t is not r for t in targets):
                raise self._error(f"span {d.name}: {d.mode} span needs both targets equal to {r.name}")
            return diagonal_span(r, name=d.name)
        t = targets[0]
        if not isinstance(t, ProductCategory) or any(f is not r for f in t.factors):
            raise self._error(f"span {d.name}: diagonal span needs a power of {r.name}, got {t.name}")
        leg = diagonal(r, n=len(t.factors), cap=self.cap)
        if leg.target is not t:
            raise self._error(f"span {d.name}: {t.name} is not the canonical power of {r.name}")
        return Span(r, leg, name=d.name)

    def _partition(self, d: PartitionDecl) -> None:
        dom = [self.category(n) for n in d.domain]
        cod = [self.category(n) for n in d.codomain]
        if d.expression is not None:
            if d.classes:
                raise self._error(f"partition {d.name}: give either an expression or explicit classes")
            p = derive_partition(d.expression)
            if (p.n_domain, p.n_codomain) != (len(dom), len(cod)):
                raise self._error(
                    f"partition {d.name}: expression has {p.n_domain};{p.n_codomain} arguments, "
                    f"over(...) lists {len(dom)};{len(cod)}"
                )
        else:
            p = partition_from_classes(len(dom), len(cod), d.classes)
        p = p.bind(dom, cod)
        self._register("span", d.name, build_span_from_partition(p, cap=self.cap, name=d.name))
        self.partitions[d.name] = p

    def _transformation(self, d: TransformationDecl) -> None:
        F, G, span = self.functor(d.source), self.functor(d.target), self.span(d.span)
        span.require_two_sided()
        r = span.apex
        given = self._covering(r, d.components, d.name, objects=True)
        comps = []
        for x in r.objects():
            value = given[x]
            if isinstance(G.target, CategoryTarget):
                if isinstance(value, IndexArray):
                    raise self._error(f"{d.name}: component at {r.object_label(x)} must name a morphism")
                comps.append(self._morphism(G.target.category, value))
            else:
                if not isinstance(value, IndexArray):
                    raise self._error(f"{d.name}: component at {r.object_label(x)} must be an index array")
                comps.append(SetMap.of(value.values, G.on_object(span.right.on_object(x))))
        self._register("transformation", d.name, TransformationFamily(F, G, span, comps, name=d.name))


def parse_workspace(text: str, source: Optional[str] = None, cap: Optional[int] = None) -> Workspace:
    """Parse and resolve a workspace; raises ``DSLError`` with line and column."""
    return Workspace(parse_program(text, source), cap=cap).resolve()


def load_workspace(path: Union[str, Path], cap: Optional[int] = None) -> Workspace:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DSLSemanticError(f"cannot read {path}: {e.strerror or e}", source=str(path)) from e
    return parse_workspace(text, source=str(path), cap=cap)


def same_declarations(a: Workspace | Program, b: Workspace | Program) -> bool:
    """Declaration-level equality, ignoring source positions."""
    pa = a.program if isinstance(a, Workspace) else a
    pb = b.program if isinstance(b, Workspace) else b
    return pa.declarations == pb.declarations


def check_workspace(ws: Workspace) -> Report:
    """Category axioms, functoriality of every functor and span leg, naturality of every transformation."""
    report = Report(f"check {ws.source or 'workspace'}")
    for name, c in ws.categories.items():
        report.extend(validate_category(c), prefix=f"category {name}: ")
    for name, F in ws.functors.items():
        report.extend(validate_mixed_functor(F), prefix=f"functor {name}: ")
    for name, span in ws.spans.items():
        for leg in (span.left, span.right):
            if leg is not None:
                report.extend(validate_functor(leg), prefix=f"span {name}: ")
    for name, t in ws.transformations.items():
        report.extend(check_heuristic_naturality(t), prefix=f"transformation {name}: ")
    return report.finish()
