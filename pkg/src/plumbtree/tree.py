"""
Matched trees
=============

A matched tree is a bipartite tree (colour classes ``B`` and ``W``) that
carries a perfect matching.  A tree has at most one perfect matching, so
the matching is derived rather than supplied.  Edges are oriented by the
matching: matched edges point from their ``B`` end to their ``W`` end,
unmatched edges point from ``W`` to ``B``.

The orientation induces a partial order: ``u <= v`` when there is a
(possibly empty) directed path from ``v`` down to ``u``.
"""
from __future__ import annotations

import heapq
from collections import deque
from typing import Hashable, Iterable, Iterator

from .errors import (NoPerfectMatching, NotATree, NotBipartite, UnknownVertex,
                     WrongColor)

B, W = "B", "W"

Edge = frozenset


def edge(u, v) -> frozenset:
    return frozenset((u, v))


def _adjacency(labels, edges):
    adj = {v: [] for v in labels}
    for e in edges:
        u, v = tuple(e)
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _check_tree(labels, edges):
    if not labels:
        raise NotATree("a tree needs at least one vertex")
    if len(set(labels)) != len(labels):
        raise NotATree("duplicate vertex labels")
    for e in edges:
        if len(e) != 2:
            raise NotATree(f"edge {sorted(map(str, e))} is a loop")
        for x in e:
            if x not in labels:
                raise UnknownVertex(f"edge endpoint {x!r} is not a vertex")
    if len(set(edges)) != len(edges):
        raise NotATree("repeated edge")
    if len(edges) != len(labels) - 1:
        raise NotATree(f"{len(labels)} vertices but {len(edges)} edges")
    adj = _adjacency(labels, edges)
    seen = {labels[0]}
    stack = [labels[0]]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(labels):
        raise NotATree("graph is disconnected")
    return adj


def _normalize_edges(edges) -> list:
    return [e if isinstance(e, frozenset) else frozenset(e) for e in edges]


def find_matching(vertices: Iterable[Hashable], edges) -> frozenset | None:
    """Return the unique perfect matching of a tree, or ``None``.

    Repeatedly matches a leaf to its only surviving neighbour and deletes
    both; a leaf with no surviving neighbour means no perfect matching.
    """
    labels = list(vertices)
    edges = _normalize_edges(edges)
    adj = _check_tree(labels, edges)
    if len(labels) % 2:
        return None
    alive = set(labels)
    deg = {v: len(adj[v]) for v in labels}
    stack = [v for v in labels if deg[v] <= 1]
    matching = set()
    while alive:
        while stack and stack[-1] not in alive:
            stack.pop()
        if not stack:  # pragma: no cover - a forest always has a leaf
            return None
        leaf = stack.pop()
        partners = [u for u in adj[leaf] if u in alive]
        if not partners:
            return None
        mate = partners[0]
        matching.add(edge(leaf, mate))
        alive -= {leaf, mate}
        for x in adj[mate]:
            if x in alive:
                deg[x] -= 1
                if deg[x] <= 1:
                    stack.append(x)
    return frozenset(matching)


def _two_coloring(labels, adj, given):
    """Propagate a proper 2-colouring from ``given``; first vertex is W if none."""
    colors = dict(given)
    if not colors:
        colors[labels[0]] = W
    queue = deque(colors)
    while queue:
        x = queue.popleft()
        other = B if colors[x] == W else W
        for y in adj[x]:
            if y not in colors:
                colors[y] = other
                queue.append(y)
            elif colors[y] == colors[x]:
                raise NotBipartite(f"edge {x!r}-{y!r} joins two {colors[x]} vertices")
    return colors


def _rooted_code(root, children_of, tag) -> str:
    """AHU-style code of the rooted tree below ``root`` (iterative)."""
    order = []
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        stack.extend(children_of(x))
    code = {}
    for x in reversed(order):
        kids = sorted(code[c] for c in children_of(x))
        code[x] = "(" + tag(x) + "".join(kids) + ")"
    return code[root]


class MatchedTree:
    """Immutable matched tree.

    Use :func:`build` rather than calling the constructor directly.

    Attributes
    ----------
    labels : tuple
        Vertex labels in input order.
    colors : dict
        Label -> ``"B"`` or ``"W"``.
    edges : tuple of frozenset
        Edges in canonical edge order.
    matching : frozenset of frozenset
    canonical_order : tuple
        Topological order of the orientation, minimal vertices first.
    """

    __slots__ = ("labels", "colors", "edges", "matching", "_adj", "_down",
                 "_up", "_tail", "canonical_order", "_pos", "_mate")

    def __init__(self, labels, colors, edges, matching):
        self.labels = tuple(labels)
        self.colors = dict(colors)
        self.matching = frozenset(matching)
        self._adj = _adjacency(self.labels, edges)
        self._tail = {}
        self._mate = {}
        for e in edges:
            u, v = tuple(e)
            b, w = (u, v) if self.colors[u] == B else (v, u)
            self._tail[e] = b if e in self.matching else w
            if e in self.matching:
                self._mate[b], self._mate[w] = w, b
        self._down = {v: self._reach(v, self.lower_covers) for v in self.labels}
        self._up = {v: self._reach(v, self.upper_covers) for v in self.labels}
        self.canonical_order = self._topological_order()
        self._pos = {v: i for i, v in enumerate(self.canonical_order)}
        self.edges = tuple(sorted(edges, key=lambda e: sorted(self._pos[x] for x in e)))

    def __repr__(self):
        return f"MatchedTree({len(self)} vertices, code={self.code()!r})"

    def __len__(self):
        return len(self.labels)

    def __iter__(self) -> Iterator:
        return iter(self.canonical_order)

    def __contains__(self, v):
        return v in self._adj

    def __eq__(self, other):
        if not isinstance(other, MatchedTree):
            return NotImplemented
        return (self.colors == other.colors
                and set(self.edges) == set(other.edges))

    def __hash__(self):
        return hash((frozenset(self.colors.items()), frozenset(self.edges)))

    # -- local structure -------------------------------------------------
    def _check(self, *vs):
        for v in vs:
            if v not in self._adj:
                raise UnknownVertex(f"{v!r} is not a vertex of this tree")

    def neighbors(self, v) -> list:
        self._check(v)
        return list(self._adj[v])

    def tail(self, e):
        """Start vertex of ``e`` under the orientation convention."""
        return self._tail[edge(*e)]

    def head(self, e):
        e = edge(*e)
        (h,) = e - {self._tail[e]}
        return h

    def oriented(self, e) -> tuple:
        return self.tail(e), self.head(e)

    def is_matched(self, e) -> bool:
        return edge(*e) in self.matching

    def has_edge(self, u, v) -> bool:
        return u in self._adj and v in self._adj[u]

    def mate(self, v):
        """Matching partner of ``v``."""
        self._check(v)
        return self._mate[v]

    def lower_covers(self, v) -> list:
        """Vertices ``u`` with ``u <_1 v`` (heads of edges leaving ``v``)."""
        return [u for u in self._adj[v] if self._tail[edge(u, v)] == v]

    def upper_covers(self, v) -> list:
        return [u for u in self._adj[v] if self._tail[edge(u, v)] == u]

    @staticmethod
    def _reach(v, step):
        seen = {v}
        stack = [v]
        while stack:
            for y in step(stack.pop()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return frozenset(seen)

    def down_set(self, v) -> frozenset:
        self._check(v)
        return self._down[v]

    def up_set(self, v) -> frozenset:
        self._check(v)
        return self._up[v]

    def position(self, v) -> int:
        self._check(v)
        return self._pos[v]

    @property
    def blacks(self) -> list:
        return [v for v in self.canonical_order if self.colors[v] == B]

    @property
    def whites(self) -> list:
        return [v for v in self.canonical_order if self.colors[v] == W]

    def minimal(self) -> list:
        return [v for v in self.canonical_order if not self.lower_covers(v)]

    def maximal(self) -> list:
        return [v for v in self.canonical_order if not self.upper_covers(v)]

    # -- canonical forms -------------------------------------------------
    def _tag(self, parent_of):
        def tag(x):
            p = parent_of.get(x)
            flag = "=" if p is not None and edge(x, p) in self.matching else "-"
            return self.colors[x] + flag
        return tag

    def _rooted_at(self, root, within=None) -> str:
        parent = {root: None}
        order = [root]
        for x in order:
            for y in self._adj[x]:
                if y not in parent and (within is None or y in within):
                    parent[y] = x
                    order.append(y)
        children = {x: [] for x in order}
        for x in order[1:]:
            children[parent[x]].append(x)
        return _rooted_code(root, children.__getitem__, self._tag(parent))

    def centroids(self) -> list:
        n = len(self.labels)
        root = self.labels[0]
        parent = {root: None}
        order = [root]
        for x in order:
            for y in self._adj[x]:
                if y not in parent:
                    parent[y] = x
                    order.append(y)
        size = {x: 1 for x in order}
        for x in reversed(order[1:]):
            size[parent[x]] += size[x]
        best, out = n + 1, []
        for x in order:
            heaviest = n - size[x]
            for y in self._adj[x]:
                if parent.get(y) == x:
                    heaviest = max(heaviest, size[y])
            if heaviest < best:
                best, out = heaviest, [x]
            elif heaviest == best:
                out.append(x)
        return out

    def code(self) -> str:
        return min(self._rooted_at(c) for c in self.centroids())

    def _topological_order(self) -> tuple:
        # minimal-first Kahn order; ties by down-set code then label
        def key(v):
            return (self._rooted_at(v, within=self._down[v]), str(v))
        pending = {v: len(self.lower_covers(v)) for v in self.labels}
        heap = [(key(v), v) for v, k in pending.items() if k == 0]
        heapq.heapify(heap)
        out = []
        while heap:
            _, v = heapq.heappop(heap)
            out.append(v)
            for u in self.upper_covers(v):
                pending[u] -= 1
                if pending[u] == 0:
                    heapq.heappush(heap, (key(u), u))
        return tuple(out)


def build(vertices, edges) -> MatchedTree:
    """Validate and assemble a matched tree.

    ``vertices`` holds labels or ``(label, color)`` pairs; a color of
    ``None`` is inferred.  If no vertex has a color, the first listed
    vertex is taken to be ``W``.
    """
    labels, given = [], {}
    for item in vertices:
        if isinstance(item, tuple) and len(item) == 2:
            label, color = item
        else:
            label, color = item, None
        if color is not None:
            color = str(color).upper()
            if color not in (B, W):
                raise WrongColor(f"color of {label!r} must be B or W, got {color!r}")
            given[label] = color
        labels.append(label)
    edges = _normalize_edges(edges)
    adj = _check_tree(labels, edges)
    colors = _two_coloring(labels, adj, given)
    matching = find_matching(labels, edges)
    if matching is None:
        raise NoPerfectMatching("tree has no perfect matching")
    return MatchedTree(labels, colors, edges, matching)


def leq(tree: MatchedTree, u, v) -> bool:
    """``u <= v``: a possibly empty directed path runs from ``v`` to ``u``."""
    tree._check(u, v)
    return u in tree._down[v]


def covers_one(tree: MatchedTree, u, v) -> bool:
    """``u <_1 v``: the directed path from ``v`` to ``u`` is a single edge."""
    tree._check(u, v)
    return tree.has_edge(u, v) and tree.tail((u, v)) == v


def below_set(tree: MatchedTree, b) -> frozenset:
    """White vertices below the black vertex ``b``."""
    tree._check(b)
    if tree.colors[b] != B:
        raise WrongColor(f"{b!r} is not a B vertex")
    return frozenset(x for x in tree._down[b] if tree.colors[x] == W)


def above_set(tree: MatchedTree, w) -> frozenset:
    """Black vertices above the white vertex ``w``."""
    tree._check(w)
    if tree.colors[w] != W:
        raise WrongColor(f"{w!r} is not a W vertex")
    return frozenset(x for x in tree._up[w] if tree.colors[x] == B)


def directed_path(tree: MatchedTree, v_hi, v_lo) -> list:
    """Oriented edges ``(tail, head)`` from ``v_hi`` down to ``v_lo``.

    Empty when ``v_lo`` is not below ``v_hi`` (or when they coincide).
    """
    tree._check(v_hi, v_lo)
    if v_lo not in tree._down[v_hi]:
        return []
    path, x = [], v_hi
    while x != v_lo:
        (nxt,) = [y for y in tree.lower_covers(x) if v_lo in tree._down[y]]
        path.append((x, nxt))
        x = nxt
    return path


def canonical_code(tree: MatchedTree) -> str:
    """Colour-aware canonical string; equal iff colour-preserving isomorphic."""
    return tree.code()


def t1() -> MatchedTree:
    return build([("b", B), ("w", W)], [("b", "w")])


def chain_tree(n_pairs: int) -> MatchedTree:
    """The path ``w1 <= b1 <- w2 <= b2 <- ... <= b_n`` (``<=`` matched)."""
    if n_pairs < 1:
        raise ValueError("n_pairs must be >= 1")
    vertices, edges = [], []
    for i in range(1, n_pairs + 1):
        vertices += [(f"w{i}", W), (f"b{i}", B)]
        edges.append((f"b{i}", f"w{i}"))
        if i > 1:
            edges.append((f"w{i}", f"b{i - 1}"))
    return build(vertices, edges)


def extensions(tree: MatchedTree) -> Iterator[MatchedTree]:
    """Trees obtained by hanging a new matched pair off each vertex."""
    n = len(tree)
    v, leaf = n, n + 1
    base = [(x, tree.colors[x]) for x in tree.labels]
    for x in tree.labels:
        cv = B if tree.colors[x] == W else W
        cl = tree.colors[x]
        yield build(base + [(v, cv), (leaf, cl)],
                    [tuple(e) for e in tree.edges] + [(x, v), (v, leaf)])


def enumerate_matched_trees(n_pairs: int) -> list:
    """All matched trees with ``2 * n_pairs`` vertices up to colour-preserving isomorphism.

    Vertices are relabelled by integers.  Returned in canonical-code order.
    """
    if n_pairs < 1:
        raise ValueError("n_pairs must be >= 1")
    level = {}
    t = build([(0, B), (1, W)], [(0, 1)])
    level[t.code()] = t
    for _ in range(n_pairs - 1):
        nxt = {}
        for t in level.values():
            for s in extensions(t):
                nxt.setdefault(s.code(), s)
        level = nxt
    return [level[c] for c in sorted(level)]
