"""
Graphviz DOT emission. Every emitter yields lines; join them or hand them to
``write_dot``. Nodes are named by object labels; edges carry a ``role``
attribute (e, m, mixed) when a variance is known.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence, Union

from ..base import logger

ROLE_STYLE = {
    "e": 'color="black"',
    "m": 'color="blue" style="dashed"',
    "mixed": 'color="purple" style="dotted"',
}


def _gvquote(s: str) -> str:
    return '"{}"'.format(str(s).replace("\\", "\\\\").replace('"', r"\""))


def category_dot(c, variance=None, name: Optional[str] = None, show_identities: bool = False) -> Iterator[str]:
    """Objects as nodes and morphisms as labelled edges."""
    yield f"digraph {_gvquote(name or c.name)} {{"
    yield "  rankdir=LR;"
    for x in c.objects():
        yield f"  {_gvquote(c.object_label(x))};"
    for f in c.morphisms():
        if c.is_identity(f) and not show_identities:
            continue
        attrs = [f"label={_gvquote(c.morphism_label(f))}"]
        if variance is not None:
            role = variance.role(f)
            attrs.append(f"role={_gvquote(role)}")
            if role in ROLE_STYLE:
                attrs.append(ROLE_STYLE[role])
        yield "  {} -> {} [{}];".format(
            _gvquote(c.object_label(c.dom(f))), _gvquote(c.object_label(c.cod(f))), " ".join(attrs)
        )
    yield "}"


def comma_dot(cc) -> Iterator[str]:
    """The comma category, objects (x,α) grouped by the R-object they lie over."""
    base = cc.base
    yield f"digraph {_gvquote(cc.name)} {{"
    yield "  rankdir=LR;"
    for x in base.objects():
        members = cc.over(x)
        if not members:
            continue
        yield f"  subgraph {_gvquote('cluster_' + base.object_label(x))} {{"
        yield f"    label={_gvquote(base.object_label(x))};"
        for i in members:
            yield f"    {_gvquote(cc.object_label(i))};"
        yield "  }"
    for k in cc.morphisms():
        if cc.is_identity(k):
            continue
        f, i, j = cc.morphism_data[k]
        yield "  {} -> {} [label={}];".format(
            _gvquote(cc.object_label(i)), _gvquote(cc.object_label(j)), _gvquote(base.morphism_label(f))
        )
    yield "}"


def _square_lines(t, f: int, prefix: str, failed: bool) -> Iterator[str]:
    R, T = t.apex, t.target
    g, h = t.span.left.on_morphism(f), t.span.right.on_morphism(f)
    A, B = t.F.source, t.G.source
    fg, fh = t.F.variance.factor(g), t.G.variance.factor(h)
    x, y = R.dom(f), R.cod(f)
    lx, ly = t.span.left.on_object(x), t.span.left.on_object(y)
    rx, ry = t.span.right.on_object(x), t.span.right.on_object(y)
    nodes = {
        "s": f"{t.F.name or 'F'}({A.object_label(fg.start_obj)})",
        "fx": f"{t.F.name or 'F'}({A.object_label(lx)})",
        "fy": f"{t.F.name or 'F'}({A.object_label(ly)})",
        "gx": f"{t.G.name or 'G'}({B.object_label(rx)})",
        "gy": f"{t.G.name or 'G'}({B.object_label(ry)})",
        "t": f"{t.G.name or 'G'}({B.object_label(fh.term_obj)})",
    }
    colour = "red" if failed else "black"
    yield f"  subgraph {_gvquote('cluster_' + prefix)} {{"
    yield f"    label={_gvquote(R.morphism_label(f))}; color={colour};"
    for key, text in nodes.items():
        yield f"    {prefix}_{key} [label={_gvquote(text)}];"
    edges = [
        ("s", "fx", f"F({A.morphism_label(fg.start_m)})", "m"),
        ("fx", "gx", f"η_{R.object_label(x)} = {T.render(t[x])}", None),
        ("gx", "t", f"G({B.morphism_label(fh.term_e)})", "e"),
        ("s", "fy", f"F({A.morphism_label(fg.start_e)})", "e"),
        ("fy", "gy", f"η_{R.object_label(y)} = {T.render(t[y])}", None),
        ("gy", "t", f"G({B.morphism_label(fh.term_m)})", "m"),
    ]
    for a, b, text, role in edges:
        attrs = [f"label={_gvquote(text)}"]
        if role is not None:
            attrs += [f"role={_gvquote(role)}", ROLE_STYLE[role]]
        yield f"    {prefix}_{a} -> {prefix}_{b} [{' '.join(attrs)}];"
    yield "  }"


def naturality_dot(t, morphisms: Sequence[int], failed: Iterable[int] = ()) -> Iterator[str]:
    """One hexagon per R-morphism; failing squares are drawn in red."""
    bad = set(failed)
    yield f"digraph {_gvquote(t.name or 'eta')} {{"
    for n, f in enumerate(morphisms):
        yield from _square_lines(t, f, f"sq{n}", f in bad)
    yield "}"


def write_dot(lines: Iterable[str], path: Union[str, Path]) -> Path:
    path = Path(path)
    text = "\n".join(lines) + "\n"
    path.write_text(text, encoding="utf-8")
    logger.debug("wrote %s (%d bytes)", path, len(text))
    return path
