"""
Framed plumbings and their Seifert forms
========================================

A :class:`FramedPlumbing` decorates a matched tree with an integer framing
on vertices (full right-handed twists of each annulus) and a sign on each
edge choosing a positive or negative plumbing.  The Seifert matrix of the
plumbed surface is read off directly from that data, and the classical
knot invariants below are computed from it exactly.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import PlumbingError, UnknownVertex, ZeroFraming
from .linalg import IntMatrix, IntPolynomial, pencil_det, signature
from .tree import B, W, MatchedTree, edge

LEVELS = ("basic", "theorem", "alternating")


@dataclass(frozen=True, eq=False)
class FramedPlumbing:
    tree: MatchedTree
    framing: Mapping
    plumbing: Mapping
    name: str = field(default="T", compare=False)

    def __post_init__(self):
        framing = {}
        for v, f in dict(self.framing).items():
            if v not in self.tree:
                raise UnknownVertex(f"framing given for unknown vertex {v!r}")
            framing[v] = int(f)
        missing = [v for v in self.tree.labels if v not in framing]
        if missing:
            raise PlumbingError(f"framing missing on {missing!r}")
        plumbing = {}
        for e, s in dict(self.plumbing).items():
            e = edge(*e)
            if e not in self.tree.edges:
                raise PlumbingError(f"plumbing sign given for non-edge {sorted(map(str, e))}")
            if s not in (1, -1):
                raise PlumbingError(f"plumbing sign must be +1 or -1, got {s!r}")
            plumbing[e] = int(s)
        if len(plumbing) != len(self.tree.edges):
            raise PlumbingError("plumbing sign missing on some edge")
        object.__setattr__(self, "framing", framing)
        object.__setattr__(self, "plumbing", plumbing)

    def __eq__(self, other):
        if not isinstance(other, FramedPlumbing):
            return NotImplemented
        return ((self.tree, self.framing, self.plumbing)
                == (other.tree, other.framing, other.plumbing))

    def __hash__(self):
        return hash((self.tree, frozenset(self.framing.items()),
                     frozenset(self.plumbing.items())))

    def eps(self, u, v) -> int:
        return self.plumbing[edge(u, v)]

    def signs(self) -> tuple:
        """Plumbing signs listed in the tree's edge order."""
        return tuple(self.plumbing[e] for e in self.tree.edges)

    def with_signs(self, signs) -> "FramedPlumbing":
        signs = list(signs)
        if len(signs) != len(self.tree.edges):
            raise PlumbingError(f"need {len(self.tree.edges)} signs, got {len(signs)}")
        return FramedPlumbing(self.tree, self.framing,
                              dict(zip(self.tree.edges, signs)), self.name)


def framed(tree: MatchedTree, framing: Mapping, signs=None, name="T") -> FramedPlumbing:
    """Convenience constructor; ``signs`` is a sequence in edge order or a
    mapping keyed by edges, defaulting to all ``+1``."""
    if signs is None:
        signs = [1] * len(tree.edges)
    if isinstance(signs, Mapping):
        return FramedPlumbing(tree, framing, signs, name)
    return FramedPlumbing(tree, framing, dict(zip(tree.edges, signs)), name)


def all_labelings(tree: MatchedTree, framing: Mapping) -> Iterator[FramedPlumbing]:
    """Every plumbing-sign labelling of ``(tree, framing)``, in lexicographic
    order of sign vectors (``+1`` before ``-1``)."""
    for signs in itertools.product((1, -1), repeat=len(tree.edges)):
        yield framed(tree, framing, signs)


def seifert_matrix(fp: FramedPlumbing) -> IntMatrix:
    tree = fp.tree

    def theta(u, v):
        if u == v:
            return fp.framing[u]
        if not tree.has_edge(u, v):
            return 0
        # the tail of an oriented edge is its upper end
        upper_first = tree.tail((u, v)) == u
        if fp.eps(u, v) == 1:
            return 1 if upper_first else 0
        return 0 if upper_first else -1

    return IntMatrix.from_function(tree.canonical_order, theta)


def intersection_matrix(fp: FramedPlumbing) -> IntMatrix:
    """``theta^T - theta``: +1 at ``(v, v')`` when ``v <_1 v'``."""
    th = seifert_matrix(fp)
    return th.T - th


def _require_nonzero(fp):
    zeros = [v for v, f in fp.framing.items() if f == 0]
    if zeros:
        raise ZeroFraming(f"zero framing on {zeros!r}")


def alexander_polynomial(fp: FramedPlumbing) -> IntPolynomial:
    """``det(theta - t theta^T)``, sign-normalised so its value at ``t = 1`` is 1."""
    _require_nonzero(fp)
    th = seifert_matrix(fp)
    poly = pencil_det(th.rows, th.T.rows)
    if poly(1) not in (1, -1):  # pragma: no cover - unimodular for a knot
        raise ArithmeticError(f"Alexander polynomial has value {poly(1)} at t = 1")
    return poly if poly(1) == 1 else -poly


def knot_determinant(fp: FramedPlumbing) -> int:
    th = seifert_matrix(fp)
    return abs((th + th.T).det())


def knot_signature(fp: FramedPlumbing) -> int:
    th = seifert_matrix(fp)
    return signature((th + th.T).rows)


def surface_genus(fp: FramedPlumbing) -> int:
    return len(fp.tree) // 2


@dataclass
class AdmissibilityReport:
    level: str
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        head = f"{self.level}: {'ok' if self.ok else 'FAILED'}"
        return "\n".join([head] + [f"  - {v}" for v in self.violations])


def check_admissible(fp: FramedPlumbing, level: str = "theorem") -> AdmissibilityReport:
    """Check the framing against increasingly strict hypotheses.

    ``basic``: every framing nonzero.  ``theorem``: also ``|f| >= 2``
    everywhere and ``v -> |f(v)|`` injective.  ``alternating``: also
    ``f < 0`` on ``B`` and ``f > 0`` on ``W``.
    """
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    tree, f = fp.tree, fp.framing
    out = []
    for v in tree.canonical_order:
        if f[v] == 0:
            out.append(f"f({v}) = 0")
    if level in ("theorem", "alternating"):
        for v in tree.canonical_order:
            if abs(f[v]) == 1:
                out.append(f"|f({v})| = 1")
        seen = {}
        for v in tree.canonical_order:
            seen.setdefault(abs(f[v]), []).append(v)
        for mag, vs in seen.items():
            if len(vs) > 1 and mag != 0:
                out.append(f"|f| = {mag} repeated on {', '.join(map(str, vs))}")
    if level == "alternating":
        for v in tree.canonical_order:
            if tree.colors[v] == B and f[v] >= 0:
                out.append(f"f({v}) = {f[v]} is not negative on B vertex")
            if tree.colors[v] == W and f[v] <= 0:
                out.append(f"f({v}) = {f[v]} is not positive on W vertex")
    return AdmissibilityReport(level, out)


def seifert_det_product(fp: FramedPlumbing) -> int:
    """Product of the framings, which equals ``det theta``."""
    return math.prod(fp.framing.values())
