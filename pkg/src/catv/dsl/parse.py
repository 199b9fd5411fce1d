"""Parse .catv text into declarations with lark."""
from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import List, Optional, Union

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import LarkError, UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from ..base import DSLError, DSLSyntaxError, logger
from .ast import (
    BuiltinDecl,
    CategoryDecl,
    FunctorDecl,
    GroupDecl,
    HomDecl,
    IndexArray,
    PartitionDecl,
    ProductDecl,
    Program,
    SetFunctorDecl,
    SpanDecl,
    TransformationDecl,
    VarianceDecl,
)
from .grammar import GRAMMAR


def _present(items) -> list:
    return [i for i in items if i is not None]


class _Expression(str):
    """Marks the quoted source of a derived partition."""


def _unquote(token: Token) -> str:
    text = str(token)
    return text[1:-1].replace('\\"', '"').replace("\\\\", "\\")


class CatvTransformer(Transformer):
    """Lark tree → declaration dataclasses, keeping line/column."""

    # references

    def label(self, items):
        tok = items[0]
        if tok.type == "ESCAPED_STRING":
            return _unquote(tok)
        return str(tok)

    def tuple_ref(self, items):
        return tuple(items)

    def index_array(self, items):
        return IndexArray(tuple(int(t) for t in _present(items)))

    # categories

    def objects_stmt(self, items):
        return ("objects", tuple(items))

    def mor_stmt(self, items):
        return ("mor", tuple(items))

    def compose_stmt(self, items):
        g, f, h = items
        return ("compose", (g, f, h))

    @v_args(meta=True)
    def category(self, meta, items):
        name, *stmts = items
        objects: List[str] = []
        morphisms, composites = [], []
        for kind, payload in stmts:
            if kind == "objects":
                objects.extend(payload)
            elif kind == "mor":
                morphisms.append(payload)
            else:
                composites.append(payload)
        return CategoryDecl(str(name), tuple(objects), tuple(morphisms), tuple(composites), meta.line, meta.column)

    def elements_stmt(self, items):
        return tuple(items)

    def row_stmt(self, items):
        return (items[0], tuple(items[1:]))

    @v_args(meta=True)
    def group(self, meta, items):
        name, elements, *rows = items
        return GroupDecl(str(name), elements, tuple(rows), meta.line, meta.column)

    @v_args(meta=True)
    def builtin(self, meta, items):
        name, kind, *args = items
        return BuiltinDecl(str(name), str(kind), tuple(int(a) for a in _present(args)), meta.line, meta.column)

    @v_args(meta=True)
    def product(self, meta, items):
        name, *factors = items
        return ProductDecl(str(name), tuple(str(f) for f in factors), meta.line, meta.column)

    # variances

    def e_stmt(self, items):
        return ("E", tuple(_present(items)))

    def m_stmt(self, items):
        return ("M", tuple(_present(items)))

    def variance_body(self, items):
        E, M = [], []
        for kind, refs in items:
            (E if kind == "E" else M).extend(refs)
        return ("explicit", tuple(E), tuple(M), ())

    def variance_kind(self, items):
        if len(items) == 1 and isinstance(items[0], Token) and items[0].type in ("COVARIANT", "CONTRAVARIANT"):
            return (str(items[0]), (), (), ())
        return ("index", (), (), tuple(int(t) for t in items))

    @v_args(meta=True)
    def variance(self, meta, items):
        name, category, (kind, E, M, flags) = items
        return VarianceDecl(str(name), str(category), kind, E, M, flags, meta.line, meta.column)

    # functors

    def obj_map(self, items):
        return ("obj", (items[0], items[1]))

    def mor_map(self, items):
        return ("mor", (items[0], items[1]))

    def obj_size(self, items):
        return ("obj", (items[0], int(items[1])))

    def mor_array(self, items):
        return ("mor", (items[0], items[1]))

    @staticmethod
    def _split(stmts):
        objects = tuple(p for k, p in stmts if k == "obj")
        morphisms = tuple(p for k, p in stmts if k == "mor")
        return objects, morphisms

    @v_args(meta=True)
    def functor(self, meta, items):
        name, source, target, variance, *stmts = items
        objects, morphisms = self._split(stmts)
        return FunctorDecl(
            str(name), str(source), str(target), str(variance) if variance is not None else None,
            objects, morphisms, meta.line, meta.column,
        )

    @v_args(meta=True)
    def setfunctor(self, meta, items):
        name, source, variance, *stmts = items
        objects, morphisms = self._split(stmts)
        return SetFunctorDecl(
            str(name), str(source), str(variance) if variance is not None else None,
            objects, morphisms, meta.line, meta.column,
        )

    @v_args(meta=True)
    def hom(self, meta, items):
        return HomDecl(str(items[0]), str(items[1]), meta.line, meta.column)

    # spans

    def span_obj(self, items):
        return ("obj", (items[0], tuple(_present(items[1:]))))

    def span_mor(self, items):
        return ("mor", (items[0], tuple(_present(items[1:]))))

    @v_args(meta=True)
    def span(self, meta, items):
        name, apex, first, second, *stmts = items
        targets = tuple(str(t) for t in (first, second) if t is not None)
        modes = [str(s) for s in stmts if isinstance(s, Token)]
        body = [s for s in stmts if not isinstance(s, Token)]
        objects, morphisms = self._split(body)
        mode = modes[-1] if modes else "explicit"
        return SpanDecl(str(name), str(apex), targets, mode, objects, morphisms, meta.line, meta.column)

    def expression_source(self, items):
        return _Expression(_unquote(items[0]))

    def name_list(self, items):
        return tuple(str(t) for t in items)

    def position_class(self, items):
        return tuple(int(t) for t in items)

    def class_list(self, items):
        return tuple(items)

    @v_args(meta=True)
    def partition(self, meta, items):
        name = str(items[0])
        rest = list(items[1:])
        expression = None
        if rest and isinstance(rest[0], _Expression):
            expression = str(rest.pop(0))
        domain, codomain, classes = rest[0], rest[1], rest[2] if len(rest) > 2 else None
        return PartitionDecl(name, domain, codomain, classes or (), expression, meta.line, meta.column)

    # transformations

    def component(self, items):
        return (items[0], items[1])

    @v_args(meta=True)
    def transformation(self, meta, items):
        name, source, target, span, *components = items
        return TransformationDecl(str(name), str(source), str(target), str(span), tuple(components), meta.line, meta.column)

    def start(self, items):
        return Program(list(items))


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(GRAMMAR, parser="lalr", propagate_positions=True)


def parse_program(text: str, source: Optional[str] = None) -> Program:
    """Syntax only; raises ``DSLSyntaxError`` with the offending line and column."""
    try:
        tree = _parser().parse(text)
    except UnexpectedEOF as e:
        lines = text.splitlines() or [""]
        raise DSLSyntaxError("unexpected end of input", len(lines), len(lines[-1]) + 1, source) from e
    except UnexpectedCharacters as e:
        raise DSLSyntaxError(f"unexpected character {e.char!r}", e.line, e.column, source) from e
    except UnexpectedInput as e:
        token = getattr(e, "token", None)
        expected = sorted(getattr(e, "expected", ()) or ())
        hint = f", expected one of {', '.join(expected[:6])}" if expected else ""
        raise DSLSyntaxError(f"unexpected {str(token)!r}{hint}", max(e.line, 0), max(e.column, 0), source) from e
    except LarkError as e:
        raise DSLSyntaxError(str(e), 0, 0, source) from e
    try:
        program = CatvTransformer().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, DSLError):
            raise e.orig_exc from None
        raise DSLSyntaxError(str(e.orig_exc), 0, 0, source) from e
    program.source = source
    logger.debug("parsed %d declarations from %s", len(program.declarations), source or "<text>")
    return program


def parse_program_file(path: Union[str, Path]) -> Program:
    path = Path(path)
    return parse_program(path.read_text(encoding="utf-8"), source=str(path))
