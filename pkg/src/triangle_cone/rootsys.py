"""Rank-3 root systems A3, B3, C3 in orthonormal (Bourbaki) ambient coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Sequence

from .linalg import Vector, as_fractions, dot

GENERATOR_NAMES = ("r", "s", "t")


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystem:
    """Cartan data of a rank-3 root system.

    ``simple_roots[i]`` is the root whose reflection is the generator
    ``GENERATOR_NAMES[i]``.  ``fundamental_weights`` are the true weights
    (so ``<w_i, a_j^v> = delta_ij``), while ``weight_representatives`` are the
    positive integral multiples used to write the inequality functionals.
    """

    family: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    fundamental_weights: tuple[Vector, ...]
    weight_representatives: tuple[tuple[int, ...], ...]
    trace_constraint: tuple[int, ...] | None = None

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def variables(self) -> tuple[str, ...]:
        return ("x", "y", "z", "w")[: self.ambient_dim]

    def coroot(self, root: Sequence) -> Vector:
        n = dot(root, root)
        return tuple(2 * Fraction(c) / n for c in root)

    def pairing(self, v: Sequence, root: Sequence) -> Fraction:
        """``<v, root^v>``."""
        return dot(v, self.coroot(root))

    def cartan_matrix(self) -> list[list[Fraction]]:
        return [[self.pairing(a, b) for b in self.simple_roots] for a in self.simple_roots]

    def is_positive(self, root: Sequence) -> bool:
        return tuple(root) in self._positive_set

    @cached_property
    def _positive_set(self) -> frozenset:
        return frozenset(self.positive_roots)


def _e(n: int, *entries: tuple[int, int]) -> Vector:
    v = [Fraction(0)] * n
    for i, c in entries:
        v[i] = Fraction(c)
    return tuple(v)


def _simple_roots(family: str) -> tuple[int, tuple[Vector, ...]]:
    if family == "A":
        n = 4
        return n, tuple(_e(n, (i, 1), (i + 1, -1)) for i in range(3))
    n = 3
    last = {"B": _e(n, (2, 1)), "C": _e(n, (2, 2))}[family]
    return n, (_e(n, (0, 1), (1, -1)), _e(n, (1, 1), (2, -1)), last)


def reflect_in(root: Sequence, v: Sequence) -> Vector:
    """``s_root(v) = v - <v, root^v> root``, exactly."""
    n = dot(root, root)
    c = 2 * dot(v, root) / n
    return tuple(Fraction(a) - c * b for a, b in zip(v, root))


def _close_roots(simple: Sequence[Vector]) -> list[Vector]:
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            for alpha in simple:
                gamma = reflect_in(alpha, beta)
                if gamma not in roots:
                    roots.add(gamma)
                    new.append(gamma)
        frontier = new
    # positive = nonnegative combination of simple roots; simple roots are
    # triangular in these coordinates so the leading nonzero entry decides
    return sorted((r for r in roots if next(c for c in r if c != 0) > 0), reverse=True)


def build_root_system(family: str, rank: int = 3) -> RootSystem:
    family = str(family).upper()
    if len(family) > 1 and family[1:].isdigit():
        family, rank = family[0], int(family[1:])
    if family not in ("A", "B", "C") or rank != 3:
        raise ConfigurationError(f"unsupported root system {family}{rank}")
    n, simple = _simple_roots(family)
    positive = tuple(_close_roots(simple))

    if family == "A":
        reps = ((1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0))
        weights = tuple(as_fractions(r) for r in reps)
        trace = (1, 1, 1, 1)
    else:
        reps = ((1, 0, 0), (1, 1, 0), (1, 1, 1))
        weights = tuple(as_fractions(r) for r in reps)
        if family == "B":
            weights = weights[:2] + (tuple(c / 2 for c in weights[2]),)
        trace = None

    return RootSystem(
        family=family,
        rank=rank,
        ambient_dim=n,
        simple_roots=simple,
        positive_roots=positive,
        fundamental_weights=weights,
        weight_representatives=reps,
        trace_constraint=trace,
    )


def reflect(rs: RootSystem, i: int, v: Sequence) -> Vector:
    """Apply the simple reflection with 0-based generator index ``i``."""
    if len(v) != rs.ambient_dim:
        raise ValueError(f"expected {rs.ambient_dim} coordinates, got {len(v)}")
    if not 0 <= i < rs.rank:
        raise ValueError(f"generator index {i} out of range")
    return reflect_in(rs.simple_roots[i], v)


def chamber_functionals(rs: RootSystem) -> list[Vector]:
    """Covectors ``v -> <a_i, v>``; the closed chamber is where all are >= 0.

    For A3 the trace equality is ``rs.trace_constraint``.
    """
    return list(rs.simple_roots)
