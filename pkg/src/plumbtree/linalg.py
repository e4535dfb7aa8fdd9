"""Exact integer matrices and polynomials.

Everything here works over Python integers (and ``Fraction`` where an
intermediate quotient is unavoidable); nothing touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def signature(rows: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric matrix via exact congruence diagonalisation."""
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    live = list(range(n))
    pos = neg = 0
    while live:
        p = next((i for i in live if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in live for j in live
                         if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j makes a[i][i] = 2 a[i][j] != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        d = a[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        live.remove(p)
        for i in live:
            c = a[i][p] / d
            if c:
                for k in live:
                    a[i][k] -= c * a[p][k]
        for i in live:
            a[i][p] = a[p][i] = Fraction(0)
    return pos - neg


@dataclass(frozen=True)
class IntMatrix:
    """Square integer matrix whose rows and columns are indexed by ``basis``."""

    basis: tuple
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))
        n = len(self.basis)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("IntMatrix must be square with one row per basis label")

    @classmethod
    def from_function(cls, basis, fn) -> "IntMatrix":
        return cls(basis, [[fn(u, v) for v in basis] for u in basis])

    @classmethod
    def identity(cls, basis) -> "IntMatrix":
        return cls.from_function(basis, lambda u, v: int(u == v))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: Hashable) -> int:
        return self.basis.index(label)

    def __getitem__(self, key) -> int:
        u, v = key
        return self.rows[self.index(u)][self.index(v)]

    def to_lists(self) -> list:
        return [list(r) for r in self.rows]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.basis, list(zip(*self.rows)))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same(other)
        return IntMatrix(self.basis, [[x + y for x, y in zip(r, s)]
                                      for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same(other)
        return IntMatrix(self.basis, [[x - y for x, y in zip(r, s)]
                                      for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.basis, [[-x for x in r] for r in self.rows])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        self._same(other)
        cols = list(zip(*other.rows))
        return IntMatrix(self.basis, [[sum(x * y for x, y in zip(r, c)) for c in cols]
                                      for r in self.rows])

    def _same(self, other):
        if self.basis != other.basis:
            raise ValueError("matrices are indexed by different bases")

    def reindex(self, basis) -> "IntMatrix":
        """Same matrix with rows and columns permuted into ``basis`` order."""
        idx = [self.index(b) for b in basis]
        return IntMatrix(basis, [[self.rows[i][j] for j in idx] for i in idx])

    def det(self) -> int:
        return bareiss_det(self.rows)

    def is_antisymmetric(self) -> bool:
        return all(self.rows[i][j] == -self.rows[j][i]
                   for i in range(self.dim) for j in range(self.dim))

    def __str__(self):
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial ``coeffs[0] + coeffs[1] t + ...`` with trailing zeros stripped."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = (str(mag) if (mag != 1 or k == 0) else "") + mono
            terms.append(("-" if c < 0 else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for s, body in terms[1:]:
            out += f" {s} {body}"
        return out


def _interpolate(xs, ys) -> list:
    """Exact Newton interpolation; returns integer coefficients, low degree first."""
    n = len(xs)
    table = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # coeffs = coeffs * (t - xs[k]) + table[k]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[k] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += table[k]
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated polynomial is not integral")
    return [int(c) for c in coeffs]


def pencil_det(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(a - t b)`` as an exact integer polynomial in ``t``.

    Evaluates at ``n + 1`` integer points with Bareiss and interpolates.
    """
    n = len(a)
    xs = list(range(n + 1))
    ys = [bareiss_det([[a[i][j] - x * b[i][j] for j in range(n)] for i in range(n)])
          for x in xs]
    return IntPolynomial(tuple(_interpolate(xs, ys)))
