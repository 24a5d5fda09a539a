"""Triangle inequalities on triples (v1, v2, v3) of chamber vectors.

Covectors on the 3n-dimensional space are stored variable-major: the
coefficient of coordinate ``c`` of side ``i`` sits at index ``3*c + i``, so
for n = 3 the order is x1 x2 x3 y1 y2 y3 z1 z2 z3 (w1 w2 w3 appended for A3).
A row ``a`` means ``a . (v1, v2, v3) <= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from . import notation
from .linalg import dot, primitive, solve
from .rootsys import RootSystem
from .schubert import PointTriple, top_point_triples
from .weyl import ParabolicData, WeylElement, WeylGroup, maximal_parabolic, weyl_group

SIDES = 3
PERMUTATIONS = tuple(permutations(range(SIDES)))


def index(c: int, side: int) -> int:
    return SIDES * c + side


def from_blocks(blocks: Sequence[Sequence]) -> tuple[Fraction, ...]:
    n = len(blocks[0])
    out = [Fraction(0)] * (SIDES * n)
    for i, b in enumerate(blocks):
        for c, a in enumerate(b):
            out[index(c, i)] = Fraction(a)
    return tuple(out)


def block(coeffs: Sequence, side: int) -> tuple:
    return tuple(coeffs[side::SIDES])


def coordinate_names(rs: RootSystem) -> list[str]:
    return [f"{v}{i + 1}" for v in rs.variables for i in range(SIDES)]


@dataclass(frozen=True)
class Inequality:
    coeffs: tuple[Fraction, ...]
    label: str
    parabolic: int | None = None
    partition: str = ""
    permutation: tuple[int, ...] = (0, 1, 2)
    source_triple: tuple[WeylElement, ...] | None = field(default=None, compare=False)

    def format(self, rs: RootSystem) -> str:
        return format_inequality(rs, self.coeffs)

    def __call__(self, point: Sequence) -> Fraction:
        return dot(self.coeffs, point)


def format_inequality(rs: RootSystem, coeffs: Sequence) -> str:
    """Pretty form ``lhs <= rhs`` with positive coefficients on both sides."""
    names = coordinate_names(rs)

    def side(items):
        if not items:
            return "0"
        return " + ".join(n if c == 1 else f"{c}{n}" for n, c in items)

    pos = [(n, c) for n, c in zip(names, coeffs) if c > 0]
    neg = [(n, -c) for n, c in zip(names, coeffs) if c < 0]
    return f"{side(pos)} <= {side(neg)}"


def canonical_key(rs: RootSystem, coeffs: Sequence) -> tuple[int, ...]:
    """Primitive integer form, taken modulo the trace equalities for A3."""
    if rs.trace_constraint is None:
        return primitive(coeffs)
    n = rs.ambient_dim
    proj = list(Fraction(a) for a in coeffs)
    for i in range(SIDES):
        mean = sum(proj[index(c, i)] for c in range(n)) / n
        for c in range(n):
            proj[index(c, i)] -= mean
    return primitive(proj)


def singular_weight(rs: RootSystem, W: WeylGroup, P: ParabolicData, w: WeylElement) -> tuple:
    """``w . omega_P`` using the integral weight representative."""
    if w not in P:
        raise ValueError(f"{w.name} is not in W^P")
    return W.act(w, rs.weight_representatives[P.index - 1])


def inequality_from_triple(
    rs: RootSystem, W: WeylGroup, P: ParabolicData, t: PointTriple
) -> Inequality:
    if t.coefficient != 1:
        raise ValueError(f"triple {t.label} has structure constant {t.coefficient}, not 1")
    blocks = [singular_weight(rs, W, P, h) for h in t.homology_triple]
    return Inequality(
        coeffs=from_blocks(blocks),
        label=f"P{P.index} {t.label}",
        parabolic=P.index,
        partition=t.label,
        source_triple=t.cohomology_triple,
    )


def permute_sides(coeffs: Sequence, perm: Sequence[int]) -> tuple:
    """Move side ``i`` to side ``perm[i]``."""
    n = len(coeffs) // SIDES
    out = [Fraction(0)] * len(coeffs)
    for i in range(SIDES):
        for c in range(n):
            out[index(c, perm[i])] = coeffs[index(c, i)]
    return tuple(out)


def _compose_perm(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(q)))


def symmetrize(system: Sequence[Inequality], rs: RootSystem | None = None) -> list[Inequality]:
    """Close under the six permutations of the sides, dropping duplicate covectors."""
    seen = set()
    out = []
    for ineq in system:
        for perm in PERMUTATIONS:
            coeffs = permute_sides(ineq.coeffs, perm)
            key = canonical_key(rs, coeffs) if rs is not None else primitive(coeffs)
            if key in seen:
                continue
            seen.add(key)
            total = _compose_perm(perm, ineq.permutation)
            label = ineq.label if perm == (0, 1, 2) else f"{ineq.label} perm{''.join(str(k + 1) for k in perm)}"
            out.append(
                Inequality(coeffs, label, ineq.parabolic, ineq.partition, total, ineq.source_triple)
            )
    return out


def chamber_system(rs: RootSystem) -> tuple[list[Inequality], list[tuple[Fraction, ...]]]:
    """The 9 rows ``-<alpha_j, v_i> <= 0`` (primitive), plus trace equalities for A3."""
    n = rs.ambient_dim
    rows = []
    for i in range(SIDES):
        for j, alpha in enumerate(rs.simple_roots):
            blocks = [[0] * n for _ in range(SIDES)]
            blocks[i] = [-a for a in alpha]
            coeffs = tuple(Fraction(c) for c in primitive(from_blocks(blocks)))
            rows.append(Inequality(coeffs, f"chamber a{j + 1}(v{i + 1})", None, f"a{j + 1}", (i,)))
    eqs = []
    if rs.trace_constraint is not None:
        for i in range(SIDES):
            blocks = [[0] * n for _ in range(SIDES)]
            blocks[i] = list(rs.trace_constraint)
            eqs.append(from_blocks(blocks))
    return rows, eqs


@dataclass(frozen=True)
class TrivialRedundancy:
    redundant: bool
    multipliers: tuple[Fraction, ...]  # one per chamber row
    equality_multipliers: tuple[Fraction, ...]


def trivially_redundant(
    ineq: Inequality | Sequence,
    chamber: Sequence[Inequality],
    equalities: Sequence[Sequence] = (),
) -> TrivialRedundancy:
    """Is the row a nonnegative combination of chamber rows (plus any equality combination)?

    The chamber rows together with the equalities form a basis, so the
    multipliers are unique; the certificate is that solution.
    """
    a = ineq.coeffs if isinstance(ineq, Inequality) else tuple(ineq)
    gens = [c.coeffs for c in chamber] + [tuple(e) for e in equalities]
    cols = [[g[k] for g in gens] for k in range(len(a))]
    sol = solve(cols, a)
    if sol is None:
        raise ValueError("chamber rows do not span the ambient space")
    mu = sol[: len(chamber)]
    nu = sol[len(chamber):]
    return TrivialRedundancy(all(m >= 0 for m in mu), mu, nu)


@dataclass
class InequalitySystem:
    root_system: RootSystem
    dimension: int
    equalities: list[tuple[Fraction, ...]]
    inequalities: list[Inequality]

    def subsystem(self, parabolic: int | None) -> list[Inequality]:
        return [q for q in self.inequalities if q.parabolic == parabolic]

    def rows(self) -> list[tuple[Fraction, ...]]:
        return [q.coeffs for q in self.inequalities]


def representative(rs: RootSystem, W: WeylGroup, P: ParabolicData, triple) -> tuple:
    """Orientation of a triple used as its orbit label: decreasing degree, then more primes first."""
    labels = notation.class_labels(rs, W, P)
    return tuple(sorted(triple, key=lambda w: (-w.length, -labels[w].count("'"), w.word)))


def schubert_subsystem(rs: RootSystem, W: WeylGroup, P: ParabolicData) -> list[Inequality]:
    """One representative per side-permutation orbit of point triples, then symmetrized."""
    triples = top_point_triples(rs, W, P)
    by_triple = {t.cohomology_triple: t for t in triples}
    reps = []
    done = set()
    for t in triples:
        orbit = frozenset(tuple(t.cohomology_triple[k] for k in p) for p in PERMUTATIONS)
        if orbit in done:
            continue
        done.add(orbit)
        rep = representative(rs, W, P, t.cohomology_triple)
        reps.append(inequality_from_triple(rs, W, P, by_triple[rep]))
    reps.sort(key=lambda q: _partition_sort_key(q.partition))
    return symmetrize(reps, rs)


def _partition_sort_key(label: str) -> tuple:
    parts = label.strip("()").split(",")
    return tuple((-int(p.rstrip("'")), -p.count("'")) for p in parts)


def assemble_full_system(rs: RootSystem) -> InequalitySystem:
    W = weyl_group(rs)
    chamber, eqs = chamber_system(rs)
    rows = list(chamber)
    seen = {canonical_key(rs, q.coeffs) for q in rows}
    for k in range(1, rs.rank + 1):
        P = maximal_parabolic(W, k)
        for q in schubert_subsystem(rs, W, P):
            key = canonical_key(rs, q.coeffs)
            if key not in seen:
                seen.add(key)
                rows.append(q)
    return InequalitySystem(rs, SIDES * rs.ambient_dim, eqs, rows)


def opposition_transform(rs: RootSystem, coeffs: Sequence) -> tuple:
    """Row transported along (v1, v2, v3) -> (-w0 v2, -w0 v1, -w0 v3)."""
    W = weyl_group(rs)
    blocks = [block(coeffs, i) for i in range(SIDES)]
    # a . T(v) = sum_i b_i . (-w0 v_{sigma i}); -w0 is an orthogonal involution
    moved = [tuple(-c for c in W.act(W.longest, b)) for b in blocks]
    return from_blocks([moved[1], moved[0], moved[2]])
