"""Plain-text tree files and Graphviz export.

A tree file looks like::

    # comment lines start with '#'
    tree chain2
    vertex w1 color=W f=3
    vertex b1 color=B f=-2
    edge b1 w1 eps=+1

Matching and orientation are derived on load and never stored.
"""
from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .form import FramedPlumbing
from .tree import build, edge

_KEYVAL = re.compile(r"^([A-Za-z]+)=(.*)$")
_INT = re.compile(r"^[+-]?\d+$")


def _tokens(line):
    """``(column, token)`` pairs, columns 1-based."""
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def _fields(lineno, toks, expected):
    out = {}
    for col, tok in toks:
        m = _KEYVAL.match(tok)
        if not m:
            raise ParseError(lineno, col, f"expected key=value, got {tok!r}")
        key, val = m.groups()
        if key not in expected:
            raise ParseError(lineno, col, f"unknown field {key!r}")
        if key in out:
            raise ParseError(lineno, col, f"repeated field {key!r}")
        out[key] = (col, val)
    return out


def parse(source) -> FramedPlumbing:
    """Parse a tree document.  ``source`` is the text itself or a ``Path``."""
    if isinstance(source, Path):
        source = source.read_text()
    name = None
    vertices, framing, edges, eps = [], {}, [], {}
    seen = set()
    for lineno, line in enumerate(source.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(line)
        col, word = toks[0]
        if word == "tree":
            if name is not None:
                raise ParseError(lineno, col, "second 'tree' header")
            if len(toks) != 2:
                raise ParseError(lineno, col, "expected 'tree <name>'")
            name = toks[1][1]
            continue
        if name is None:
            raise ParseError(lineno, col, "document must start with 'tree <name>'")
        if word == "vertex":
            if len(toks) < 2:
                raise ParseError(lineno, col, "vertex needs a label")
            lcol, label = toks[1]
            if _KEYVAL.match(label):
                raise ParseError(lineno, lcol, "vertex needs a label")
            if label in seen:
                raise ParseError(lineno, lcol, f"duplicate vertex label {label!r}")
            fields = _fields(lineno, toks[2:], ("color", "f"))
            for key in ("color", "f"):
                if key not in fields:
                    raise ParseError(lineno, len(line.rstrip()) + 1,
                                     f"vertex {label!r} is missing {key}=")
            ccol, color = fields["color"]
            if color not in ("B", "W"):
                raise ParseError(lineno, ccol, f"color must be B or W, got {color!r}")
            fcol, f = fields["f"]
            if not _INT.match(f):
                raise ParseError(lineno, fcol, f"f must be an integer, got {f!r}")
            seen.add(label)
            vertices.append((label, color))
            framing[label] = int(f)
        elif word == "edge":
            if len(toks) < 3 or _KEYVAL.match(toks[1][1]) or _KEYVAL.match(toks[2][1]):
                raise ParseError(lineno, col, "expected 'edge <label> <label> eps=<+1|-1>'")
            u, v = toks[1][1], toks[2][1]
            fields = _fields(lineno, toks[3:], ("eps",))
            if "eps" not in fields:
                raise ParseError(lineno, len(line.rstrip()) + 1,
                                 f"edge {u} {v} is missing eps=")
            ecol, s = fields["eps"]
            if s not in ("+1", "-1", "1"):
                raise ParseError(lineno, ecol, f"eps must be +1 or -1, got {s!r}")
            if edge(u, v) in eps:
                raise ParseError(lineno, col, f"duplicate edge {u} {v}")
            edges.append((u, v))
            eps[edge(u, v)] = int(s)
        else:
            raise ParseError(lineno, col, f"unknown directive {word!r}")
    if name is None:
        raise ParseError(1, 1, "empty document")
    if not vertices:
        raise ParseError(1, 1, "document has no vertices")
    tree = build(vertices, edges)
    return FramedPlumbing(tree, framing, eps, name)


def load(path) -> FramedPlumbing:
    return parse(Path(path))


def serialize(fp: FramedPlumbing) -> str:
    tree = fp.tree
    lines = [f"tree {fp.name}",
             "# vertices in canonical order; edges written tail head"]
    for v in tree.canonical_order:
        lines.append(f"vertex {v} color={tree.colors[v]} f={fp.framing[v]}")
    for e in tree.edges:
        t, h = tree.oriented(e)
        lines.append(f"edge {t} {h} eps={fp.plumbing[e]:+d}")
    return "\n".join(lines) + "\n"


def export_dot(fp: FramedPlumbing) -> str:
    """Graphviz digraph: B filled, W hollow, matched edges double-stroked."""
    tree = fp.tree
    out = [f'digraph "{fp.name}" {{', "  node [shape=circle];"]
    for v in tree.canonical_order:
        if tree.colors[v] == "B":
            style = 'style=filled, fillcolor=black, fontcolor=white'
        else:
            style = 'style=solid, fillcolor=white'
        out.append(f'  "{v}" [{style}, xlabel="f={fp.framing[v]}"];')
    for e in tree.edges:
        t, h = tree.oriented(e)
        stroke = 'color="black:invis:black"' if tree.is_matched(e) else "color=black"
        out.append(f'  "{t}" -> "{h}" [{stroke}, label="{fp.plumbing[e]:+d}"];')
    out.append("}")
    return "\n".join(out) + "\n"
