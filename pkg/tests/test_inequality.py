from fractions import Fraction
from itertools import product

import pytest

from triangle_cone import notation
from triangle_cone.inequality import (
    PERMUTATIONS,
    Inequality,
    assemble_full_system,
    canonical_key,
    chamber_system,
    coordinate_names,
    format_inequality,
    inequality_from_triple,
    opposition_transform,
    permute_sides,
    schubert_subsystem,
    singular_weight,
    symmetrize,
    trivially_redundant,
)
from triangle_cone.linalg import dot
from triangle_cone.rootsys import build_root_system
from triangle_cone.schubert import PointTriple
from triangle_cone.weyl import maximal_parabolic, theta_dual, weyl_group

from .helpers import covector, from_label

C3 = build_root_system("C3")
B3 = build_root_system("B3")
A3 = build_root_system("A3")


def test_coordinate_order():
    assert coordinate_names(C3) == ["x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"]
    assert coordinate_names(A3)[-3:] == ["w1", "w2", "w3"]


def test_singular_weights():
    W = weyl_group(C3)
    P1, P2 = maximal_parabolic(W, 1), maximal_parabolic(W, 2)
    assert singular_weight(C3, W, P1, W.element("sr")) == (0, 0, 1)
    assert singular_weight(C3, W, P2, W.element("tsrts")) == (0, -1, -1)
    for k in (1, 2, 3):
        P = maximal_parabolic(W, k)
        assert singular_weight(C3, W, P, W.identity) == C3.weight_representatives[k - 1]
    with pytest.raises(ValueError):
        singular_weight(C3, W, P1, W.element("s"))


def test_worked_examples():
    q = from_label(C3, 1, "(3,2,0)")
    assert q.coeffs == covector(C3, z1=1, z2=-1, x3=-1)
    assert format_inequality(C3, q.coeffs) == "z1 <= x3 + z2"
    q = from_label(C3, 2, "(4',2'',1)")
    assert q.coeffs == covector(C3, y1=1, z1=-1, x2=-1, z2=1, x3=-1, z3=-1)
    q = from_label(C3, 2, "(7,0,0)")
    assert q.coeffs == covector(C3, x1=1, y1=1, x2=-1, y2=-1, x3=-1, y3=-1)


def test_coefficient_must_be_one():
    W = weyl_group(B3)
    P = maximal_parabolic(W, 1)
    L = notation.class_by_label(B3, W, P)
    triple = (L["2"], L["2"], L["1"])
    hom = tuple(theta_dual(W, P, v) for v in triple)
    with pytest.raises(ValueError):
        inequality_from_triple(B3, W, P, PointTriple(triple, hom, Fraction(2), "(2,2,1)"))


@pytest.mark.parametrize("k,size", [(2, 78), (3, 27)])
def test_symmetrized_sizes_c3(k, size):
    W = weyl_group(C3)
    rows = schubert_subsystem(C3, W, maximal_parabolic(W, k))
    assert len(rows) == size
    assert len({canonical_key(C3, q.coeffs) for q in rows}) == size


def test_orbit_of_size_three():
    q = Inequality(covector(C3, x1=1, x2=-1, x3=-1), "test")
    assert len(symmetrize([q])) == 3


def test_symmetrize_idempotent_and_closed(rs):
    W = weyl_group(rs)
    for k in (1, 2, 3):
        rows = schubert_subsystem(rs, W, maximal_parabolic(W, k))
        keys = {canonical_key(rs, q.coeffs) for q in rows}
        again = symmetrize(rows, rs)
        assert {canonical_key(rs, q.coeffs) for q in again} == keys
        for q, perm in product(rows, PERMUTATIONS):
            assert canonical_key(rs, permute_sides(q.coeffs, perm)) in keys


def test_permutation_labels_recorded():
    q = Inequality(covector(C3, x1=1, x2=-1, x3=-1), "base")
    perms = {r.permutation for r in symmetrize([q])}
    assert len(perms) == 3 and (0, 1, 2) in perms


def test_chamber_rows():
    rows, eqs = chamber_system(C3)
    assert len(rows) == 9 and eqs == []
    expected = set()
    for i in (1, 2, 3):
        expected.add(covector(C3, **{f"x{i}": -1, f"y{i}": 1}))
        expected.add(covector(C3, **{f"y{i}": -1, f"z{i}": 1}))
        expected.add(covector(C3, **{f"z{i}": -1}))
    assert {q.coeffs for q in rows} == expected
    assert {q.coeffs for q in chamber_system(B3)[0]} == expected
    rows, eqs = chamber_system(A3)
    assert len(rows) == 9 and len(eqs) == 3


def test_trivial_redundancy_examples():
    chamber, eqs = chamber_system(C3)
    q = from_label(C3, 1, "(2,2,1)")
    assert q.coeffs == covector(C3, z1=-1, z2=-1, y3=-1)
    verdict = trivially_redundant(q, chamber, eqs)
    assert verdict.redundant
    combo = [sum(m * c.coeffs[j] for m, c in zip(verdict.multipliers, chamber)) for j in range(9)]
    assert tuple(combo) == q.coeffs
    used = {c.label for m, c in zip(verdict.multipliers, chamber) if m}
    assert used == {"chamber a3(v1)", "chamber a3(v2)", "chamber a2(v3)", "chamber a3(v3)"}

    q = from_label(C3, 1, "(5,0,0)")
    assert q.coeffs == covector(C3, x1=1, x2=-1, x3=-1)
    assert not trivially_redundant(q, chamber, eqs).redundant
    # a point of the chamber cube that violates it
    v = covector(C3, x1=1)
    assert all(dot(c.coeffs, v) <= 0 for c in chamber) and dot(q.coeffs, v) > 0

    assert trivially_redundant(from_label(C3, 2, "(3'',3',1)"), chamber, eqs).redundant


EXPECTED_SIZES = {"A3": (10, 21, 10), "C3": (21, 78, 27), "B3": (18, 72, 36)}
EXPECTED_TRIVIAL = {"A3": (0, 0, 0), "C3": (3, 21, 0), "B3": (0, 24, 0)}


def test_subsystem_sizes_and_trivial_counts(rs):
    system = assemble_full_system(rs)
    chamber, eqs = chamber_system(rs)
    sizes = tuple(len(system.subsystem(k)) for k in (1, 2, 3))
    assert sizes == EXPECTED_SIZES[rs.name]
    assert len(system.inequalities) == sum(sizes) + 9
    trivial = tuple(
        sum(trivially_redundant(q, chamber, eqs).redundant for q in system.subsystem(k)) for k in (1, 2, 3)
    )
    assert trivial == EXPECTED_TRIVIAL[rs.name]


def test_system_rows_distinct_and_homogeneous(rs):
    system = assemble_full_system(rs)
    keys = [canonical_key(rs, q.coeffs) for q in system.inequalities]
    assert len(set(keys)) == len(keys)
    zero = (0,) * system.dimension
    assert all(q(zero) == 0 for q in system.inequalities)


def test_c3_p3_is_half_perimeter_system():
    W = weyl_group(C3)
    rows = schubert_subsystem(C3, W, maximal_parabolic(W, 3))
    expected = set()
    for i, j, k in product((1, 2, 3), repeat=3):
        # x_i + y_j + z_k <= S/2, doubled
        c = {n: -1 for n in coordinate_names(C3)}
        for n in (f"x{i}", f"y{j}", f"z{k}"):
            c[n] += 2
        expected.add(canonical_key(C3, covector(C3, **c)))
    assert {canonical_key(C3, q.coeffs) for q in rows} == expected


def test_opposition_invariance(rs):
    system = assemble_full_system(rs)
    keys = {canonical_key(rs, q.coeffs) for q in system.inequalities}
    moved = {canonical_key(rs, opposition_transform(rs, q.coeffs)) for q in system.inequalities}
    assert moved == keys


def test_canonical_key_a3_ignores_trace():
    q = covector(A3, x1=1, w2=1, w3=1)
    shifted = tuple(c + (1 if n.endswith("2") else 0) for c, n in zip(q, coordinate_names(A3)))
    assert canonical_key(A3, q) == canonical_key(A3, shifted)
