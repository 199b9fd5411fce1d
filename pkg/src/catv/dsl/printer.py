"""Render declarations back to .catv text that reparses to the same declarations."""
from __future__ import annotations

import re
from typing import Iterable, List

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
)

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")
_INT = re.compile(r"[0-9]+\Z")

KEYWORDS = frozenset({
    "category", "objects", "mor", "compose", "group", "table", "elements", "row",
    "builtin", "product", "variance", "on", "E", "M", "covariant", "contravariant",
    "index", "functor", "obj", "setfunctor", "hom", "span", "diagonal", "identity",
    "partition", "from", "over", "transformation", "along", "at",
})


def label(text: str) -> str:
    if (_NAME.match(text) and text not in KEYWORDS) or _INT.match(text):
        return text
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def ref(r: Ref) -> str:
    if isinstance(r, tuple):
        return "(" + ", ".join(ref(x) for x in r) + ")"
    return label(r)


def _refs(items: Iterable[Ref]) -> str:
    return ", ".join(ref(r) for r in items)


def _array(a: IndexArray) -> str:
    return "[" + ", ".join(str(v) for v in a.values) + "]"


def _block(head: str, lines: List[str]) -> List[str]:
    if not lines:
        return [head + " { }"]
    return [head + " {"] + ["    " + line for line in lines] + ["}"]


def print_declaration(d: Declaration) -> str:
    if isinstance(d, CategoryDecl):
        body = []
        if d.objects:
            body.append("objects: " + _refs(d.objects))
        body += [f"mor {label(u)}: {label(a)} -> {label(b)}" for u, a, b in d.morphisms]
        body += [f"compose {label(g)} . {label(f)} = {label(h)}" for g, f, h in d.composites]
        return "\n".join(_block(f"category {d.name}", body))
    if isinstance(d, GroupDecl):
        body = ["elements: " + _refs(d.elements)]
        body += [f"row {label(g)}: " + " ".join(label(h) for h in row) for g, row in d.rows]
        return "\n".join(_block(f"group {d.name} table", body))
    if isinstance(d, BuiltinDecl):
        return f"builtin {d.name} = {d.kind}(" + ", ".join(str(a) for a in d.args) + ")"
    if isinstance(d, ProductDecl):
        return f"product {d.name} = " + " * ".join(d.factors)
    if isinstance(d, VarianceDecl):
        head = f"variance {d.name} on {d.category}"
        if d.kind in ("covariant", "contravariant"):
            return f"{head} {d.kind}"
        if d.kind == "index":
            return f"{head} index(" + ", ".join(str(v) for v in d.flags) + ")"
        return "\n".join(_block(head, [f"E: {_refs(d.E)}", f"M: {_refs(d.M)}"]))
    if isinstance(d, FunctorDecl):
        head = f"functor {d.name} : {d.source} -> {d.target}"
        if d.variance is not None:
            head += f" variance {d.variance}"
        body = [f"obj {ref(a)} => {ref(b)}" for a, b in d.objects]
        body += [f"mor {ref(a)} => {ref(b)}" for a, b in d.morphisms]
        return "\n".join(_block(head, body))
    if isinstance(d, SetFunctorDecl):
        head = f"setfunctor {d.name} : {d.source}"
        if d.variance is not None:
            head += f" variance {d.variance}"
        body = [f"obj {ref(a)} => {n}" for a, n in d.objects]
        body += [f"mor {ref(a)} => {_array(arr)}" for a, arr in d.morphisms]
        return "\n".join(_block(head, body))
    if isinstance(d, HomDecl):
        return f"hom {d.name} on {d.category}"
    if isinstance(d, SpanDecl):
        head = f"span {d.name} : {d.apex} => " + " * ".join(d.targets)
        body = [f"obj {ref(a)} => {_refs(imgs)}" for a, imgs in d.objects]
        body += [f"mor {ref(a)} => {_refs(imgs)}" for a, imgs in d.morphisms]
        if d.mode != "explicit":
            body.append(d.mode)
        return "\n".join(_block(head, body))
    if isinstance(d, PartitionDecl):
        head = f"partition {d.name}"
        if d.expression is not None:
            head += ' from "' + d.expression.replace("\\", "\\\\").replace('"', '\\"') + '"'
        head += f" over ({', '.join(d.domain)} ; {', '.join(d.codomain)})"
        if d.classes:
            head += " { " + " ".join("{" + ",".join(str(i) for i in c) + "}" for c in d.classes) + " }"
        return head
    if isinstance(d, TransformationDecl):
        head = f"transformation {d.name} : {d.source} => {d.target} along {d.span}"
        body = [
            f"at {ref(x)} => " + (_array(v) if isinstance(v, IndexArray) else ref(v))
            for x, v in d.components
        ]
        return "\n".join(_block(head, body))
    raise TypeError(f"not a declaration: {d!r}")


def print_program(program: Program) -> str:
    return "\n\n".join(print_declaration(d) for d in program.declarations) + "\n"


def print_workspace(ws) -> str:
    """Text for a ``Workspace`` (or bare ``Program``); parsing it gives equal declarations."""
    program = ws if isinstance(ws, Program) else ws.program
    return print_program(program)
