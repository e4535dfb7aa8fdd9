"""
The pairing on the complement
=============================

``H_1`` of a plumbed surface has the core basis ``h_v``; ``H_1`` of its
complement has the meridian basis ``c_v``.  The push-off map
``Phi(a) = a+ - a-`` relates them, and transporting the Seifert form
through ``Phi^{-1}`` gives a pairing on the complement.  That pairing is
computed here twice: by matrix conjugation and by the entrywise closed
forms in terms of down-sets, up-sets and edge counts along directed paths.

Matrices use the tree's canonical order for both bases (``h_v`` and
``c_v`` share the index of ``v``).  For a basis-change matrix ``M`` the
entry ``M[x, y]`` is the coefficient of the target basis vector at ``x``
in the image of the source basis vector at ``y``.
"""
from __future__ import annotations

from typing import NamedTuple

from .errors import EdgesNotOnDirectedPath
from .form import FramedPlumbing, seifert_matrix
from .linalg import IntMatrix
from .tree import B, MatchedTree, above_set, below_set, directed_path

# the pairing is an IntMatrix whose basis labels name the meridians c_v
PairingMatrix = IntMatrix


def phi_matrix(tree: MatchedTree) -> IntMatrix:
    """``h_v -> sum_{v <_1 v'} c_v' - sum_{v' <_1 v} c_v'``."""
    def coeff(x, v):
        if x in tree.upper_covers(v):
            return 1
        if x in tree.lower_covers(v):
            return -1
        return 0
    return IntMatrix.from_function(tree.canonical_order, coeff)


def phi_inverse_matrix(tree: MatchedTree) -> IntMatrix:
    """``c_b -> sum_{w in W_b} h_w`` and ``c_w -> -sum_{b in B_w} h_b``."""
    image = {}
    for v in tree.canonical_order:
        if tree.colors[v] == B:
            image[v] = {w: 1 for w in below_set(tree, v)}
        else:
            image[v] = {b: -1 for b in above_set(tree, v)}
    return IntMatrix.from_function(tree.canonical_order,
                                   lambda x, v: image[v].get(x, 0))


def pairing_by_conjugation(fp: FramedPlumbing) -> PairingMatrix:
    """``(Phi^{-1})^T theta Phi^{-1}``, exactly."""
    p = phi_inverse_matrix(fp.tree)
    return p.T @ seifert_matrix(fp) @ p


class EdgeCounts(NamedTuple):
    plus_matched: int
    minus_matched: int
    plus_unmatched: int
    minus_unmatched: int


def path_edge_counts(fp: FramedPlumbing, gamma) -> EdgeCounts:
    """Count ``+1``/``-1`` edges on a directed path, split by matched/unmatched.

    ``gamma`` is a sequence of oriented edges ``(tail, head)``, consecutive
    and following the orientation.
    """
    tree = fp.tree
    counts = [0, 0, 0, 0]
    prev = None
    for step in gamma:
        u, v = step
        if not tree.has_edge(u, v) or tree.tail((u, v)) != u:
            raise EdgesNotOnDirectedPath(f"{u!r} -> {v!r} is not an oriented edge")
        if prev is not None and prev != u:
            raise EdgesNotOnDirectedPath(f"edge {u!r} -> {v!r} does not continue the path at {prev!r}")
        prev = v
        slot = (0 if tree.is_matched((u, v)) else 2) + (0 if fp.eps(u, v) == 1 else 1)
        counts[slot] += 1
    return EdgeCounts(*counts)


def pairing_closed_form(fp: FramedPlumbing) -> PairingMatrix:
    tree, f = fp.tree, fp.framing

    def entry(u, v):
        cu, cv = tree.colors[u], tree.colors[v]
        if cu == cv == B:
            return sum(f[w] for w in below_set(tree, u) & below_set(tree, v))
        if cu == cv:
            return sum(f[b] for b in above_set(tree, u) & above_set(tree, v))
        if cu == B:
            n = path_edge_counts(fp, directed_path(tree, u, v))
            return n.minus_matched - n.plus_unmatched
        n = path_edge_counts(fp, directed_path(tree, v, u))
        return n.minus_unmatched - n.plus_matched

    return IntMatrix.from_function(tree.canonical_order, entry)

