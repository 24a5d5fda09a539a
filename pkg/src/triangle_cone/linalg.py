"""Small exact linear algebra over the rationals.

Everything here works on sequences of ``Fraction`` (or ``int``) and never
touches floating point.  Sizes in this package are tiny (at most a few
hundred rows of width <= 84) so plain Gauss-Jordan elimination is enough.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def as_fractions(v: Iterable) -> Vector:
    return tuple(Fraction(c) for c in v)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Returns the nonzero rows and pivot columns."""
    m = [[Fraction(c) for c in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def solve(a: Sequence[Sequence], b: Sequence) -> Vector | None:
    """Some solution ``x`` of ``a x = b`` (free variables set to 0), or None."""
    ncols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, piv = rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, piv):
        x[c] = row[-1]
    return tuple(x)


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of ``{x : rows x = 0}``."""
    if ncols is None:
        ncols = len(rows[0])
    red, piv = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, c in zip(red, piv):
            x[c] = -row[f]
        basis.append(tuple(x))
    return basis


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the coprime integer vector on the same ray."""
    fr = [Fraction(c) for c in v]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        return tuple(ints)
    return tuple(c // g for c in ints)


class EchelonSpan:
    """Incrementally maintained row space, for repeated membership tests."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, list[Fraction]] = {}  # pivot column -> normalized row

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        w = [Fraction(c) for c in v]
        for c in sorted(self._rows):
            if w[c] != 0:
                f = w[c]
                w = [a - f * b for a, b in zip(w, self._rows[c])]
        return w

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; returns False if it was already in the span."""
        w = self.reduce(v)
        c = next((i for i, a in enumerate(w) if a != 0), None)
        if c is None:
            return False
        inv = 1 / w[c]
        w = [a * inv for a in w]
        for k, row in self._rows.items():
            if row[c] != 0:
                f = row[c]
                self._rows[k] = [a - f * b for a, b in zip(row, w)]
        self._rows[c] = w
        return True

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))
