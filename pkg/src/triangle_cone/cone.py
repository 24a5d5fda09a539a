"""Exact polyhedral cones: redundancy removal, extreme rays, facets, equality.

A cone is ``{x : E x = 0, A x <= 0}``.  Redundancy is decided by the exact
simplex in :mod:`triangle_cone.lp`; extreme rays come from the double
description method run in a coordinate chart of the equality subspace, so the
cone is pointed there whenever it is pointed at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import dot, nullspace, primitive, rank, rref
from .lp import conic_combination

_PRIME = (1 << 61) - 1


class NotPointedError(ValueError):
    """The cone contains a line; ``lineality`` is a basis of its lineality space."""

    def __init__(self, lineality: Sequence[tuple[int, ...]]):
        self.lineality = tuple(lineality)
        super().__init__(f"cone is not pointed: lineality space of dimension {len(self.lineality)}")


def _project_out(v: Sequence, basis: Sequence[Sequence]) -> list[Fraction]:
    """Component of ``v`` orthogonal to the span of ``basis`` (Gram-Schmidt)."""
    w = [Fraction(c) for c in v]
    ortho: list[list[Fraction]] = []
    for b in basis:
        u = [Fraction(c) for c in b]
        for o in ortho:
            f = dot(u, o) / dot(o, o)
            u = [a - f * c for a, c in zip(u, o)]
        if any(u):
            ortho.append(u)
    for o in ortho:
        f = dot(w, o) / dot(o, o)
        w = [a - f * c for a, c in zip(w, o)]
    return w


def row_key(row: Sequence, equalities: Sequence[Sequence] = ()) -> tuple[int, ...]:
    """Primitive form of a covector modulo the equality span."""
    if not equalities:
        return primitive(row)
    return primitive(_project_out(row, equalities))


@dataclass(frozen=True)
class HRep:
    """``{x : equalities . x = 0, inequalities . x <= 0}`` with primitive integer rows."""

    dimension: int
    equalities: tuple[tuple[int, ...], ...]
    inequalities: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_rows(
        cls,
        dimension: int,
        inequalities: Iterable[Sequence],
        equalities: Iterable[Sequence] = (),
        labels: Sequence[str] | None = None,
    ) -> "HRep":
        """Normalize rows to primitive integers, dropping duplicates and rows in the equality span."""
        eqs_in = [tuple(e) for e in equalities]
        red, _ = rref(eqs_in) if eqs_in else ([], [])
        eqs = tuple(primitive(r) for r in red)
        rows, labs, seen = [], [], set()
        lab_iter = list(labels) if labels is not None else None
        for k, r in enumerate(inequalities):
            if len(r) != dimension:
                raise ValueError(f"row of length {len(r)} in dimension {dimension}")
            key = row_key(r, eqs)
            if not any(key) or key in seen:
                continue
            seen.add(key)
            rows.append(primitive(r))
            if lab_iter is not None:
                labs.append(lab_iter[k])
        return cls(dimension, eqs, tuple(rows), tuple(labs) if lab_iter is not None else None)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"row{i}"

    def keys(self) -> set[tuple[int, ...]]:
        return {row_key(r, self.equalities) for r in self.inequalities}

    def contains(self, x: Sequence) -> bool:
        return all(dot(e, x) == 0 for e in self.equalities) and all(
            dot(a, x) <= 0 for a in self.inequalities
        )

    def subset(self, indices: Sequence[int]) -> "HRep":
        labs = tuple(self.labels[i] for i in indices) if self.labels else None
        return HRep(self.dimension, self.equalities, tuple(self.inequalities[i] for i in indices), labs)


@dataclass(frozen=True)
class VRep:
    dimension: int
    rays: tuple[tuple[int, ...], ...]
    lineality: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class RedundancyVerdict:
    """Outcome of one redundancy test.

    For a redundant row, ``multipliers`` maps the indices of the other rows to
    nonnegative weights and ``equality_multipliers`` gives the free weights,
    with ``row = sum mu_j a_j + sum nu_k e_k``.  For an irredundant row,
    ``witness`` satisfies every other constraint and violates this one.
    """

    index: int
    redundant: bool
    multipliers: dict[int, Fraction] | None = None
    equality_multipliers: tuple[Fraction, ...] | None = None
    witness: tuple[Fraction, ...] | None = None

    def verify(self, H: HRep, others: Sequence[int] | None = None) -> bool:
        """Re-check the certificate by exact multiplication."""
        a = H.inequalities[self.index]
        if others is None:
            others = [j for j in range(len(H.inequalities)) if j != self.index]
        if self.redundant:
            if any(m < 0 for m in self.multipliers.values()) or set(self.multipliers) - set(others):
                return False
            total = [Fraction(0)] * H.dimension
            for j, m in self.multipliers.items():
                total = [t + m * c for t, c in zip(total, H.inequalities[j])]
            for nu, e in zip(self.equality_multipliers, H.equalities):
                total = [t + nu * c for t, c in zip(total, e)]
            return total == [Fraction(c) for c in a]
        y = self.witness
        return (
            dot(a, y) > 0
            and all(dot(e, y) == 0 for e in H.equalities)
            and all(dot(H.inequalities[j], y) <= 0 for j in others)
        )


def farkas_redundant(H: HRep, index: int, among: Sequence[int] | None = None) -> RedundancyVerdict:
    """Is row ``index`` implied by the other rows (or by the rows listed in ``among``)?

    Redundant exactly when the row is a nonnegative combination of the others
    plus an equality combination.  Otherwise the Farkas witness is a point
    satisfying the others and violating this one.
    """
    if not 0 <= index < len(H.inequalities):
        raise IndexError(index)
    others = [j for j in (among if among is not None else range(len(H.inequalities))) if j != index]
    res = conic_combination(H.inequalities[index], [H.inequalities[j] for j in others], H.equalities)
    if res.feasible:
        mult = {j: m for j, m in zip(others, res.multipliers) if m}
        verdict = RedundancyVerdict(index, True, mult, res.free_multipliers)
    else:
        verdict = RedundancyVerdict(index, False, witness=res.witness)
    if not verdict.verify(H, others):
        raise ArithmeticError(f"certificate for row {index} failed exact re-verification")
    return verdict


@dataclass(frozen=True)
class ReductionReport:
    facets: HRep
    kept: tuple[int, ...]
    removed: tuple[RedundancyVerdict, ...]
    witnesses: tuple[RedundancyVerdict, ...]


def reduce_system(H: HRep) -> ReductionReport:
    """Single pass in row order: each row is tested against the rows still present.

    One pass suffices: a row irredundant with respect to a set of rows stays
    irredundant after further rows are dropped.
    """
    alive = list(range(len(H.inequalities)))
    removed, kept_verdicts = [], []
    for i in range(len(H.inequalities)):
        v = farkas_redundant(H, i, alive)
        if v.redundant:
            alive.remove(i)
            removed.append(v)
        else:
            kept_verdicts.append(v)
    return ReductionReport(H.subset(alive), tuple(alive), tuple(removed), tuple(kept_verdicts))


def minimal_facet_system(H: HRep) -> HRep:
    return reduce_system(H).facets


# ---------------------------------------------------------------- double description


def _chart(H: HRep) -> list[tuple[Fraction, ...]]:
    """Columns of a basis of the equality subspace (identity when there are no equalities)."""
    if not H.equalities:
        return [tuple(Fraction(int(i == j)) for j in range(H.dimension)) for i in range(H.dimension)]
    return nullspace(H.equalities, H.dimension)


def _to_chart(row: Sequence, basis: Sequence[Sequence]) -> tuple[int, ...]:
    return primitive([dot(row, b) for b in basis])


def _from_chart(z: Sequence, basis: Sequence[Sequence], dim: int) -> tuple[int, ...]:
    x = [Fraction(0)] * dim
    for c, b in zip(z, basis):
        if c:
            x = [a + c * bb for a, bb in zip(x, b)]
    return primitive(x)


def _idot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _rank_mod_p(rows: list[list[int]]) -> int:
    m = [[c % _PRIME for c in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = pow(m[r][c], _PRIME - 2, _PRIME)
        m[r] = [a * inv % _PRIME for a in m[r]]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % _PRIME for a, b in zip(m[i], m[r])]
        r += 1
    return r


def _adjacent(rows: list[tuple[int, ...]], common: int, target: int) -> bool:
    """Algebraic adjacency: the common active rows have rank ``target``.

    The rank over Q is at most ``target`` (both rays lie in the kernel) and at
    least the rank mod p, so a mod-p rank equal to the target is conclusive.
    """
    active = [list(rows[k]) for k in range(len(rows)) if common >> k & 1]
    if _rank_mod_p(active) == target:
        return True
    return rank(active) == target


def _dd(rows: list[tuple[int, ...]], k: int, order: str) -> list[tuple[int, ...]]:
    """Extreme rays of ``{z in Q^k : rows z <= 0}``; the rows must have rank k."""
    # initial simplicial cone from the first k independent rows
    basis_idx: list[int] = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in basis_idx] + [r]) > len(basis_idx):
            basis_idx.append(i)
            if len(basis_idx) == k:
                break
    A0 = [[Fraction(c) for c in rows[i]] for i in basis_idx]
    rays = []
    for j in range(k):
        # solve A0 r = -e_j via the augmented rref
        aug = [A0[i] + [Fraction(-int(i == j))] for i in range(k)]
        red, _ = rref(aug)
        rays.append(primitive([red[i][-1] for i in range(k)]))
    all_idx = list(range(len(rows)))
    inserted = list(basis_idx)
    rest = [i for i in all_idx if i not in set(basis_idx)]
    if order == "min-violations":
        rest.sort(key=lambda i: (sum(1 for r in rays if _idot(rows[i], r) > 0), i))
    elif order != "input":
        raise ValueError(f"unknown insertion order {order!r}")

    def zero_mask(r: tuple[int, ...]) -> int:
        m = 0
        for i in inserted:
            if _idot(rows[i], r) == 0:
                m |= 1 << i
        return m

    masks = [zero_mask(r) for r in rays]
    for i in rest:
        a = rows[i]
        vals = [_idot(a, r) for r in rays]
        pos = [q for q, v in enumerate(vals) if v > 0]
        if not pos:
            inserted.append(i)
            masks = [m | (1 << i) if v == 0 else m for m, v in zip(masks, vals)]
            continue
        neg = [q for q, v in enumerate(vals) if v < 0]
        new_rays, new_masks = [], []
        for p in pos:
            for n in neg:
                common = masks[p] & masks[n]
                if common.bit_count() < k - 2:
                    continue
                if not _adjacent(rows, common, k - 2):
                    continue
                vp, vn = vals[p], vals[n]
                r = tuple(vp * c1 - vn * c2 for c1, c2 in zip(rays[n], rays[p]))
                new_rays.append(primitive(r))
                new_masks.append(common | (1 << i))
        keep = [q for q, v in enumerate(vals) if v <= 0]
        rays = [rays[q] for q in keep] + new_rays
        masks = [masks[q] | (1 << i) if vals[q] == 0 else masks[q] for q in keep] + new_masks
        inserted.append(i)
    return rays


def extreme_rays_dd(H: HRep, order: str = "min-violations") -> VRep:
    """Extreme rays by double description, as primitive integer vectors in lexicographic order.

    ``order`` is ``"min-violations"`` (insert the rows cutting off the fewest
    current rays first) or ``"input"``.  Raises :class:`NotPointedError`
    carrying a lineality basis when the cone contains a line.
    """
    basis = _chart(H)
    k = len(basis)
    rows = [_to_chart(a, basis) for a in H.inequalities]
    rows = [r for r in rows if any(r)]
    if k > 0 and (not rows or rank(rows) < k):
        lin = nullspace(rows, k) if rows else [tuple(Fraction(int(i == j)) for j in range(k)) for i in range(k)]
        raise NotPointedError([_from_chart(z, basis, H.dimension) for z in lin])
    if k == 0:
        return VRep(H.dimension, ())
    if k == 1:
        chart_rays = [r for r in ((1,), (-1,)) if all(_idot(a, r) <= 0 for a in rows)]
    else:
        chart_rays = _dd(rows, k, order)
    rays = sorted({_from_chart(z, basis, H.dimension) for z in chart_rays})
    return VRep(H.dimension, tuple(rays))


def facets_from_rays(V: VRep, equalities: Sequence[Sequence] = ()) -> HRep:
    """Facets of the cone generated by ``V.rays`` inside the subspace cut out by ``equalities``.

    Dual double description: facet normals are the extreme rays of
    ``{a : a . r <= 0 for all rays r}`` taken in the chart of the subspace.
    Each facet is returned as the covector orthogonal to the equality span.
    """
    probe = HRep.from_rows(V.dimension, (), equalities)
    basis = _chart(probe)
    k = len(basis)
    # chart coordinates z of each ray: x = sum z_j basis_j; solve via least squares on the basis
    gram = [[dot(b1, b2) for b2 in basis] for b1 in basis]
    chart_rays = []
    for r in V.rays:
        rhs = [dot(b, r) for b in basis]
        aug = [gram[i] + [rhs[i]] for i in range(k)]
        red, _ = rref(aug)
        chart_rays.append(primitive([red[i][-1] for i in range(k)]))
    # covector b on the chart pairs with z as b . z; in ambient terms the
    # covector orthogonal to the equalities is a = sum_j c_j basis_j with gram c = b
    dual = HRep.from_rows(k, chart_rays)
    normals = extreme_rays_dd(dual).rays
    out = []
    for b in normals:
        aug = [gram[i] + [Fraction(b[i])] for i in range(k)]
        red, _ = rref(aug)
        c = [red[i][-1] for i in range(k)]
        out.append(_from_chart(c, basis, V.dimension))
    return HRep.from_rows(V.dimension, sorted(out), probe.equalities)


def cones_equal(H1: HRep, H2: HRep) -> bool:
    """Same equality span and the same minimal facet covectors (modulo that span)."""
    if H1.dimension != H2.dimension:
        raise ValueError(f"dimension mismatch: {H1.dimension} vs {H2.dimension}")
    e1, e2 = list(H1.equalities), list(H2.equalities)
    r = rank(e1 + e2) if e1 or e2 else 0
    if r != (rank(e1) if e1 else 0) or r != (rank(e2) if e2 else 0):
        return False
    return minimal_facet_system(H1).keys() == minimal_facet_system(H2).keys()
