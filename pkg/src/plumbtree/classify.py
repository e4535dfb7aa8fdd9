"""
Telling plumbed surfaces apart
==============================

For a framing with pairwise distinct ``|f(v)| >= 2`` the Spin^c support
box of the complement has distinct side lengths, so any identification of
two complements sends each meridian ``c_v`` to ``+-c'_v``.  Two labelings
are therefore equivalent only if some sign vector ``sigma`` satisfies::

    sigma(u) * sigma(v) * pairing'(u, v) == pairing(u, v)   for all u, v

Deciding that is a parity problem on the graph of nonzero entries, solved
here by propagation from a pinned vertex.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Mapping

from scipy.cluster.hierarchy import DisjointSet

from .errors import InadmissibleFraming, MismatchedUnderlying
from .form import (FramedPlumbing, _require_nonzero, all_labelings,
                   check_admissible, framed)
from .linalg import IntMatrix
from .pairing import pairing_by_conjugation
from .tree import MatchedTree

SignVector = dict

CASES = ("matched-edge", "unmatched-edge", "other")


@dataclass(frozen=True)
class SpinCBox:
    """Lattice box ``prod_v [0, |f(v)| - 1]`` with one axis per vertex."""

    basis: tuple
    sides: tuple

    @property
    def volume(self) -> int:
        return math.prod(self.sides)

    @property
    def dimension(self) -> int:
        """Number of axes along which the box is not a single point."""
        return sum(1 for s in self.sides if s > 1)

    def degenerate_axes(self) -> list:
        return [v for v, s in zip(self.basis, self.sides) if s <= 1]

    def __contains__(self, point) -> bool:
        return len(point) == len(self.sides) and all(
            0 <= x < s for x, s in zip(point, self.sides))

    def points(self):
        return itertools.product(*(range(s) for s in self.sides))

    def image_under_signs(self, signs: Mapping) -> "SpinCBox":
        """Box swept out by ``c_v -> signs[v] c_v``, translated back to the origin."""
        pts = [tuple(signs[v] * x for v, x in zip(self.basis, p)) for p in self.points()]
        lo = [min(p[i] for p in pts) for i in range(len(self.basis))]
        hi = [max(p[i] for p in pts) for i in range(len(self.basis))]
        return SpinCBox(self.basis, tuple(h - l + 1 for l, h in zip(lo, hi)))


def spin_c_support(fp: FramedPlumbing) -> SpinCBox:
    _require_nonzero(fp)
    basis = fp.tree.canonical_order
    return SpinCBox(basis, tuple(abs(fp.framing[v]) for v in basis))


def sfh_torus_rank(p: int, i: int) -> int:
    """Rank of SFH of the solid torus with two ``(p, 1)`` sutures at Spin^c index ``i``."""
    if p <= 0:
        raise ValueError("p must be positive")
    return 1 if 0 <= i < p else 0


@dataclass(frozen=True)
class Obstruction:
    u: object
    v: object
    value: int
    value_prime: int
    case: str

    def __str__(self):
        return (f"({self.u}, {self.v}): {self.value} vs {self.value_prime} "
                f"[{self.case}]")


@dataclass
class EquivalenceReport:
    equivalent: bool
    witness: SignVector | None = None
    obstruction: Obstruction | None = None
    permutation: dict | None = field(default=None)

    def __str__(self):
        if self.equivalent:
            sig = " ".join(f"{v}:{'+' if s > 0 else '-'}" for v, s in self.witness.items())
            out = f"equivalent\nwitness: {sig}"
            if self.permutation and any(k != v for k, v in self.permutation.items()):
                out += "\npermutation: " + " ".join(f"{k}->{v}" for k, v in self.permutation.items())
            return out
        return f"inequivalent\nobstruction: {self.obstruction}"


def sign_witness(a: IntMatrix, b: IntMatrix):
    """Find ``sigma`` with ``sigma(u) sigma(v) b[u, v] == a[u, v]`` for all entries.

    Returns ``(sigma, None)`` or ``(None, (u, v))`` naming an entry that
    cannot be satisfied.  The first basis vertex of each constraint
    component is pinned to ``+1``.
    """
    basis = a.basis
    links = {v: [] for v in basis}
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            x, y = a.rows[i][j], b.rows[i][j]
            if i == j:
                if x != y:
                    return None, (u, u)
                continue
            if x == y == 0:
                continue
            if abs(x) != abs(y):
                return None, (u, v)
            s = 1 if x == y else -1
            links[u].append((v, s, (u, v)))
            links[v].append((u, s, (u, v)))
    sigma = {}
    for root in basis:
        if root in sigma:
            continue
        sigma[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, s, pair in links[x]:
                want = sigma[x] * s
                if y not in sigma:
                    sigma[y] = want
                    queue.append(y)
                elif sigma[y] != want:
                    return None, pair
    return {v: sigma[v] for v in basis}, None


def apply_signs(m: IntMatrix, sigma: Mapping) -> IntMatrix:
    """Diagonal conjugation ``D m D`` with ``D = diag(sigma)``."""
    return IntMatrix.from_function(m.basis, lambda u, v: sigma[u] * sigma[v] * m[u, v])


def _same_underlying(fp1: FramedPlumbing, fp2: FramedPlumbing):
    if fp1.tree != fp2.tree:
        raise MismatchedUnderlying("labelings live on different matched trees")
    if fp1.framing != fp2.framing:
        raise MismatchedUnderlying("labelings have different framings")


def _proof_obstruction(fp1, fp2, a, b) -> Obstruction | None:
    # Entry singled out by the edge where the labelings first differ:
    # a matched edge b => w gives (c_b, c_w); otherwise an unmatched
    # w2 -> b1 gives (c_b2, c_w1) on the path b2 => w2 -> b1 => w1.
    tree = fp1.tree
    diff = [e for e in tree.edges if fp1.plumbing[e] != fp2.plumbing[e]]
    if not diff:
        return None
    matched = [e for e in diff if e in tree.matching]
    if matched:
        u, v = tree.oriented(matched[0])
        case = "matched-edge"
    else:
        w2, b1 = tree.oriented(diff[0])
        u, v = tree.mate(w2), tree.mate(b1)
        case = "unmatched-edge"
    x, y = a[u, v], b[u, v]
    if abs(x) != abs(y):
        return Obstruction(u, v, x, y, case)
    return None


def _permutations(fp: FramedPlumbing):
    groups = {}
    for v in fp.tree.canonical_order:
        groups.setdefault(abs(fp.framing[v]), []).append(v)
    groups = list(groups.values())
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        perm = {}
        for g, img in zip(groups, choice):
            perm.update(zip(g, img))
        yield perm


def _decide(a, b, perms=None):
    if perms is None:
        sigma, conflict = sign_witness(a, b)
        return sigma, None, conflict
    conflict = None
    for perm in perms:
        moved = IntMatrix.from_function(a.basis, lambda u, v: b[perm[u], perm[v]])
        sigma, c = sign_witness(a, moved)
        if sigma is not None:
            return sigma, perm, None
        conflict = conflict or c
    return None, None, conflict


def surfaces_equivalent(fp1: FramedPlumbing, fp2: FramedPlumbing, *,
                        permissive: bool = False) -> EquivalenceReport:
    """Decide whether a meridian map ``c_v -> +-c'_v`` matches the two pairings.

    Both labelings must share tree and framing, and the framing must pass
    the ``theorem`` admissibility level.  With ``permissive=True`` a
    framing with repeated ``|f|`` is accepted and signed permutations
    within equal-``|f|`` groups are searched as well; that verdict is a
    heuristic, not a certificate.
    """
    _same_underlying(fp1, fp2)
    report = check_admissible(fp1, "theorem")
    if not report.ok:
        if not permissive:
            raise InadmissibleFraming(str(report))
        if not check_admissible(fp1, "basic").ok:
            raise InadmissibleFraming(str(check_admissible(fp1, "basic")))
    a, b = pairing_by_conjugation(fp1), pairing_by_conjugation(fp2)
    perms = list(_permutations(fp1)) if permissive and not report.ok else None
    sigma, perm, conflict = _decide(a, b, perms)
    if sigma is not None:
        if perm is None:
            assert apply_signs(b, sigma) == a
        return EquivalenceReport(True, witness=sigma, permutation=perm)
    obstruction = _proof_obstruction(fp1, fp2, a, b)
    if obstruction is None:
        u, v = conflict
        obstruction = Obstruction(u, v, a[u, v], b[u, v], "other")
    return EquivalenceReport(False, obstruction=obstruction)


@dataclass
class ClassCount:
    count: int
    representatives: list
    classes: list
    heuristic: bool = False

    @property
    def labelings(self) -> int:
        return sum(len(c) for c in self.classes)


def _fingerprint(m: IntMatrix, positional: bool):
    # invariant under c_v -> +-c_v (and under permutations when not positional)
    if positional:
        return tuple(abs(x) for r in m.rows for x in r)
    n = m.dim
    diag = sorted(m.rows[i][i] for i in range(n))
    pairs = sorted(tuple(sorted((abs(m.rows[i][j]), abs(m.rows[j][i]))))
                   for i in range(n) for j in range(i + 1, n))
    return tuple(diag), tuple(pairs)


def count_classes(tree: MatchedTree, framing: Mapping, *,
                  permissive: bool = False) -> ClassCount:
    """Partition all ``2^|E|`` plumbing labelings of ``(tree, framing)`` into
    equivalence classes.

    Raises :class:`InadmissibleFraming` unless the framing passes the
    ``theorem`` level; ``permissive=True`` instead searches signed
    permutations and marks the result ``heuristic``.
    """
    fp0 = framed(tree, framing)
    report = check_admissible(fp0, "theorem")
    heuristic = not report.ok
    if heuristic and not permissive:
        raise InadmissibleFraming(str(report))
    if heuristic and not check_admissible(fp0, "basic").ok:
        raise InadmissibleFraming(str(check_admissible(fp0, "basic")))
    perms = list(_permutations(fp0)) if heuristic else None

    labelings = list(all_labelings(tree, framing))
    mats = [pairing_by_conjugation(fp) for fp in labelings]
    buckets = {}
    for i, m in enumerate(mats):
        buckets.setdefault(_fingerprint(m, positional=not heuristic), []).append(i)
    ds = DisjointSet(range(len(labelings)))
    for members in buckets.values():
        for i, j in itertools.combinations(members, 2):
            if not ds.connected(i, j) and _decide(mats[i], mats[j], perms)[0] is not None:
                ds.merge(i, j)
    classes = sorted((sorted(s) for s in ds.subsets()), key=lambda c: c[0])
    return ClassCount(
        count=len(classes),
        representatives=[labelings[c[0]] for c in classes],
        classes=[[labelings[i].signs() for i in c] for c in classes],
        heuristic=heuristic,
    )


def obstruction_summary(representatives) -> Counter:
    """Case tags of the obstructions between every pair of representatives."""
    tally = Counter()
    for fp1, fp2 in itertools.combinations(representatives, 2):
        rep = surfaces_equivalent(fp1, fp2, permissive=True)
        tally["equivalent" if rep.equivalent else rep.obstruction.case] += 1
    return tally
