"""Schubert polynomials, structure constants of H*(G/P) and point-class triples."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping

from . import notation
from .polyalg import Polynomial, bgg_operator, divided_difference, top_polynomial
from .rootsys import RootSystem
from .weyl import ParabolicData, WeylElement, WeylGroup, theta_dual, weyl_group


class ConsistencyError(RuntimeError):
    """A computed quantity violated a structural invariant that must always hold."""


@dataclass(frozen=True)
class CohomologyClass:
    """Finite combination of Schubert classes, all of the same grade (length)."""

    coeffs: Mapping[WeylElement, Fraction]
    grade: int

    def __post_init__(self):
        for w in self.coeffs:
            if w.length != self.grade:
                raise ConsistencyError(f"{w.name} has length {w.length}, class grade {self.grade}")

    def __getitem__(self, w: WeylElement) -> Fraction:
        return self.coeffs.get(w, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return dict(self.coeffs) == dict(other.coeffs) and (
            self.grade == other.grade or not self.coeffs
        )

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def support(self) -> set[WeylElement]:
        return set(self.coeffs)

    def format(self, labels: Mapping[WeylElement, str] | None = None, prefix: str = "a") -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda kv: (kv[0].length, kv[0].word))
        if labels is not None:
            items.sort(key=lambda kv: labels.get(kv[0], kv[0].name))
        parts = []
        for w, c in items:
            name = f"{prefix}{labels[w]}" if labels and w in labels else f"e[{w.name}]"
            parts.append(name if c == 1 else f"{c}{name}")
        return " + ".join(parts)


def _clean(coeffs: Mapping[WeylElement, Fraction]) -> dict[WeylElement, Fraction]:
    return {w: Fraction(c) for w, c in coeffs.items() if c}


@lru_cache(maxsize=None)
def _schubert_polynomial(rs: RootSystem, w: WeylElement) -> Polynomial:
    W = weyl_group(rs)
    v = W.mul(W.inverse(w), W.longest)
    if v.length + w.length != W.longest.length:
        raise ConsistencyError("w^{-1} w0 is not length-complementary")
    return bgg_operator(rs, W, v, top_polynomial(rs))


def schubert_polynomial(rs: RootSystem, W: WeylGroup, w: WeylElement) -> Polynomial:
    """``A_{w^{-1} w0}`` applied to the top polynomial; represents the class dual to X_w."""
    return _schubert_polynomial(rs, W.from_perm(w.perm))


def all_bgg_images(rs: RootSystem, W: WeylGroup, q: Polynomial, max_length: int) -> dict:
    """``{w: A_w q}`` for every w with length <= max_length.

    Uses ``A_w = A_{s} o A_{s w}`` for the first letter ``s`` of the stored word,
    so each image costs one divided difference.
    """
    out = {W.identity: q}
    for w in W.elements:  # BFS order: shorter elements come first
        if w.length == 0 or w.length > max_length:
            continue
        s = w.word[0]
        rest = W.mul(W.generators[s], w)
        prev = out[rest]
        out[w] = divided_difference(rs, s, prev) if prev else prev
    return out


def expand_in_basis(rs: RootSystem, W: WeylGroup, q: Polynomial) -> CohomologyClass:
    """Schubert expansion of homogeneous ``q``: the coefficient at w is the constant A_w(q)."""
    if not q:
        return CohomologyClass({}, 0)
    if not q.is_homogeneous():
        raise ValueError("expand_in_basis needs a homogeneous polynomial")
    d = q.degree()
    if d > W.longest.length:
        return CohomologyClass({}, d)
    images = all_bgg_images(rs, W, q, d)
    coeffs = {w: images[w].constant_value() for w in W.of_length(d)}
    return CohomologyClass(_clean(coeffs), d)


def multiply_classes(
    rs: RootSystem, W: WeylGroup, P: ParabolicData | None, u: WeylElement, v: WeylElement
) -> CohomologyClass:
    """Product of Schubert classes; with ``P`` given, the result must live in H*(G/P)."""
    prod = schubert_polynomial(rs, W, u) * schubert_polynomial(rs, W, v)
    if not prod:
        return CohomologyClass({}, u.length + v.length)
    cls = expand_in_basis(rs, W, prod)
    if P is not None:
        stray = [w.name for w in cls.support if w not in P]
        if stray:
            raise ConsistencyError(f"product {u.name}*{v.name} escapes W^P: {stray}")
    return cls


def chevalley_multiply(rs: RootSystem, W: WeylGroup, i: int, w: WeylElement) -> CohomologyClass:
    """Degree-one product by the Chevalley rule: sum of <w omega_i, beta^v> over covers s_beta w."""
    wl = W.act(w, rs.fundamental_weights[i])
    coeffs: dict[WeylElement, Fraction] = {}
    for beta in rs.positive_roots:
        v = W.mul(W.reflection(beta), w)
        if v.length == w.length + 1:
            c = rs.pairing(wl, beta)
            if c:
                coeffs[v] = coeffs.get(v, 0) + c
    return CohomologyClass(_clean(coeffs), w.length + 1)


@dataclass(frozen=True)
class PointTriple:
    cohomology_triple: tuple[WeylElement, WeylElement, WeylElement]
    homology_triple: tuple[WeylElement, WeylElement, WeylElement]
    coefficient: Fraction
    label: str = field(compare=False)


def triple_coefficient(
    rs: RootSystem, W: WeylGroup, P: ParabolicData, triple: tuple[WeylElement, ...]
) -> Fraction:
    """Coefficient of the top class of G/P in the product of three Schubert classes."""
    prod = Polynomial.constant(rs.ambient_dim, 1)
    for v in triple:
        prod = prod * schubert_polynomial(rs, W, v)
    return bgg_operator(rs, W, P.longest_rep, prod).constant_value()


def top_point_triples(
    rs: RootSystem, W: WeylGroup, P: ParabolicData, *, nonzero: bool = False
) -> list[PointTriple]:
    """Ordered triples in W^P whose Schubert product is the point class.

    Only length-compatible triples are multiplied.  With ``nonzero=True`` every
    triple with a nonzero structure constant is returned instead of only those
    with coefficient exactly one.
    """
    labels = notation.class_labels(rs, W, P)
    reps = P.coset_reps
    n = P.codim_total
    pair_cache: dict = {}
    out = []
    for v1, v2 in product(reps, repeat=2):
        for v3 in reps:
            if v1.length + v2.length + v3.length != n:
                continue
            key = (v1, v2) if (v1.length, v1.word) <= (v2.length, v2.word) else (v2, v1)
            if key not in pair_cache:
                pair_cache[key] = schubert_polynomial(rs, W, v1) * schubert_polynomial(rs, W, v2)
            prod = pair_cache[key] * schubert_polynomial(rs, W, v3)
            c = bgg_operator(rs, W, P.longest_rep, prod).constant_value()
            if c == 1 or (nonzero and c != 0):
                hom = tuple(theta_dual(W, P, v) for v in (v1, v2, v3))
                label = "(" + ",".join(labels[v] for v in (v1, v2, v3)) + ")"
                out.append(PointTriple((v1, v2, v3), hom, c, label))
    return out


def multiplication_table(
    rs: RootSystem, W: WeylGroup, P: ParabolicData
) -> dict[tuple[WeylElement, WeylElement], CohomologyClass]:
    """All products of pairs of non-unit basis classes of H*(G/P), keyed (u, v) with u before v."""
    reps = [w for w in P.coset_reps if w.length > 0]
    table = {}
    for a, u in enumerate(reps):
        for v in reps[a:]:
            table[(u, v)] = multiply_classes(rs, W, P, u, v)
    return table
