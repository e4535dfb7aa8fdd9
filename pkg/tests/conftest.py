import random

import pytest
from hypothesis import strategies as st

from plumbtree import B, W, build, chain_tree, framed, t1


def grow(attach_points, colors_first=B):
    """Matched tree grown by hanging pairs at the given (clamped) attachment indices."""
    vertices = [(0, colors_first), (1, W if colors_first == B else B)]
    colors = dict(vertices)
    edges = [(0, 1)]
    for k, a in enumerate(attach_points):
        x = a % len(colors)
        v, leaf = len(colors), len(colors) + 1
        colors[v] = B if colors[x] == W else W
        colors[leaf] = colors[x]
        vertices += [(v, colors[v]), (leaf, colors[leaf])]
        edges += [(x, v), (v, leaf)]
    return build(vertices, edges)


def theorem_framing(tree, rng=None):
    """Distinct |f| in 2..|V|+1, negative on B, positive on W."""
    mags = list(range(2, len(tree) + 2))
    if rng is not None:
        rng.shuffle(mags)
    return {v: (-m if tree.colors[v] == B else m)
            for v, m in zip(tree.canonical_order, mags)}


def random_instance(rng, max_vertices=12, distinct=False):
    n_pairs = rng.randint(1, max_vertices // 2)
    tree = grow([rng.randrange(1000) for _ in range(n_pairs - 1)],
                rng.choice((B, W)))
    if distinct:
        framing = theorem_framing(tree, rng)
    else:
        framing = {v: rng.choice([-1, 1]) * rng.randint(1, 9) for v in tree.labels}
    signs = [rng.choice((1, -1)) for _ in tree.edges]
    return framed(tree, framing, signs)


@st.composite
def matched_trees(draw, max_pairs=6):
    n_pairs = draw(st.integers(1, max_pairs))
    attach = draw(st.lists(st.integers(0, 1000), min_size=n_pairs - 1, max_size=n_pairs - 1))
    return grow(attach, draw(st.sampled_from((B, W))))


@st.composite
def plumbings(draw, max_pairs=6, nonzero=True):
    tree = draw(matched_trees(max_pairs))
    lo = st.integers(-9, 9).filter(lambda x: x != 0) if nonzero else st.integers(-9, 9)
    framing = {v: draw(lo) for v in tree.labels}
    signs = [draw(st.sampled_from((1, -1))) for _ in tree.edges]
    return framed(tree, framing, signs)


@pytest.fixture
def rng():
    return random.Random(20261018)


@pytest.fixture
def T1():
    return t1()


@pytest.fixture
def fp_t1(T1):
    return framed(T1, {"b": -2, "w": 3})


@pytest.fixture
def chain2():
    return chain_tree(2)


CHAIN2_F = {"w1": 3, "b1": -2, "w2": 5, "b2": -4}


@pytest.fixture
def fp_chain2(chain2):
    return framed(chain2, CHAIN2_F)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
