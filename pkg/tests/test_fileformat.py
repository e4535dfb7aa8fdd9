from pathlib import Path

import pytest
from hypothesis import given, settings

from conftest import plumbings
from plumbtree import (NotBipartite, NoPerfectMatching, ParseError, build,
                       export_dot, framed, load, parse, serialize)

T1_TEXT = """\
# the two-vertex tree
tree T1
vertex b color=B f=-2
vertex w color=W f=3
edge b w eps=+1
"""


def test_parse_t1(fp_t1):
    fp = parse(T1_TEXT)
    assert fp == fp_t1
    assert fp.name == "T1"


def test_load_from_path(tmp_path, fp_t1):
    path = tmp_path / "t1.tree"
    path.write_text(T1_TEXT)
    assert load(path) == fp_t1
    assert parse(Path(path)) == fp_t1


def test_missing_eps_names_the_edge_line():
    text = T1_TEXT.replace(" eps=+1", "")
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line == 5
    assert "eps" in info.value.message


@pytest.mark.parametrize("text, line, column", [
    ("", 1, 1),
    ("vertex b color=B f=1\n", 1, 1),
    ("tree x\nvertex b color=Q f=1\n", 2, 10),
    ("tree x\nvertex b color=B f=one\n", 2, 18),
    ("tree x\nvertex b colour=B f=1\n", 2, 10),
    ("tree x\nvertex b color=B\n", 2, 17),
    ("tree x\nvertex b color=B f=1\nvertex b color=W f=2\n", 3, 8),
    ("tree x\nvertex b color=B f=1\nvertex w color=W f=2\nedge b w eps=2\n", 4, 10),
    ("tree x\nnode b\n", 2, 1),
    ("tree x\ntree y\n", 2, 1),
    ("tree x\n", 1, 1),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_semantic_errors_come_from_tree_validation():
    clash = "tree x\nvertex b color=B f=-2\nvertex w color=B f=3\nedge b w eps=+1\n"
    with pytest.raises(NotBipartite):
        parse(clash)
    star = ("tree s\nvertex c color=B f=-2\nvertex x color=W f=3\n"
            "vertex y color=W f=4\nvertex z color=W f=5\n"
            "edge c x eps=+1\nedge c y eps=+1\nedge c z eps=+1\n")
    with pytest.raises(NoPerfectMatching):
        parse(star)


def test_serialize_round_trip(fp_chain2):
    text = serialize(fp_chain2)
    again = parse(text)
    assert again == fp_chain2
    assert serialize(again) == text
    assert text.splitlines()[2:6] == [
        "vertex w1 color=W f=3", "vertex b1 color=B f=-2",
        "vertex w2 color=W f=5", "vertex b2 color=B f=-4"]


@settings(max_examples=80, deadline=None)
@given(plumbings(max_pairs=6))
def test_round_trip_random(fp):
    # labels become strings on the way through text
    t = build([(str(v), c) for v, c in fp.tree.colors.items()],
              [tuple(map(str, e)) for e in fp.tree.edges])
    fp = framed(t, {str(v): f for v, f in fp.framing.items()},
                {frozenset(map(str, e)): s for e, s in fp.plumbing.items()})
    text = serialize(fp)
    assert parse(text) == fp
    assert serialize(parse(text)) == text


def test_dot_t1(fp_t1):
    dot = export_dot(fp_t1)
    assert dot.count("style=filled") == 1
    assert dot.count("style=solid") == 1
    edges = [l for l in dot.splitlines() if "->" in l]
    assert len(edges) == 1
    assert edges[0].lstrip().startswith('"b" -> "w"')
    assert "black:invis:black" in edges[0]


def test_dot_chain2(fp_chain2):
    edges = [l for l in export_dot(fp_chain2).splitlines() if "->" in l]
    assert len(edges) == 3
    assert sum("black:invis:black" in l for l in edges) == 2
    assert export_dot(fp_chain2) == export_dot(parse(serialize(fp_chain2)))
