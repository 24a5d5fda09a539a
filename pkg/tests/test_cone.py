import random
from fractions import Fraction

import pytest

from triangle_cone.analysis import analyze
from triangle_cone.cone import (
    HRep,
    NotPointedError,
    VRep,
    cones_equal,
    extreme_rays_dd,
    facets_from_rays,
    farkas_redundant,
    minimal_facet_system,
    reduce_system,
    row_key,
)
from triangle_cone.inequality import canonical_key, chamber_system, permute_sides, PERMUTATIONS
from triangle_cone.linalg import dot, primitive, rank
from triangle_cone.rootsys import build_root_system

from .helpers import covector, from_label

C3 = build_root_system("C3")
B3 = build_root_system("B3")


def row_index(H, coeffs):
    key = row_key(coeffs, H.equalities)
    keys = [row_key(r, H.equalities) for r in H.inequalities]
    return keys.index(key)


def chamber_hrep(rs):
    rows, eqs = chamber_system(rs)
    return HRep.from_rows(3 * rs.ambient_dim, [q.coeffs for q in rows], eqs)


# ---------------------------------------------------------------- HRep basics


def test_from_rows_normalizes():
    H = HRep.from_rows(2, [(2, -4), (1, -2), (0, 0), (Fraction(1, 3), 0)])
    assert H.inequalities == ((1, -2), (1, 0))
    with pytest.raises(ValueError):
        HRep.from_rows(2, [(1, 2, 3)])


def test_from_rows_modulo_equalities():
    H = HRep.from_rows(3, [(1, 0, 0), (2, 1, 1), (1, 1, 1)], [(1, 1, 1)])
    assert len(H.inequalities) == 1


def test_contains():
    H = chamber_hrep(C3)
    assert H.contains(covector(C3, x1=3, y1=2, z1=1))
    assert not H.contains(covector(C3, z1=-1))


# ---------------------------------------------------------------- Farkas


def test_c3_redundant_row_with_published_combination():
    an = analyze("C3")
    H = an.hrep
    target = covector(C3, x1=1, x2=-1, x3=-1, z1=-1, z2=-1, z3=-1)
    i = row_index(H, target)
    verdict = farkas_redundant(H, i)
    assert verdict.redundant and verdict.verify(H)
    # the hand combination: x1 <= x2 + x3 plus z1, z2, z3 >= 0
    parts = [covector(C3, x1=1, x2=-1, x3=-1)] + [covector(C3, **{f"z{k}": -1}) for k in (1, 2, 3)]
    for p in parts:
        row_index(H, p)  # each piece is a row of the system
    assert tuple(sum(col) for col in zip(*parts)) == target
    assert from_label(C3, 2, "(5'',1,1)").coeffs == target


def test_b3_redundant_row():
    H = analyze("B3").hrep
    target = covector(B3, x1=1, z1=1, z2=1, z3=1, x2=-1, x3=-1, y1=-1, y2=-1, y3=-1)
    verdict = farkas_redundant(H, row_index(H, target))
    assert verdict.redundant and verdict.verify(H)


def test_chamber_row_is_irredundant():
    H = analyze("C3").hrep
    i = row_index(H, covector(C3, z1=-1))
    verdict = farkas_redundant(H, i)
    assert not verdict.redundant
    y = verdict.witness
    assert dot(H.inequalities[i], y) > 0
    assert all(dot(a, y) <= 0 for j, a in enumerate(H.inequalities) if j != i)


def test_farkas_index_check():
    with pytest.raises(IndexError):
        farkas_redundant(chamber_hrep(C3), 9)


def test_reduction_certificates_reverify(rs):
    an = analyze(rs.name)
    H = an.hrep
    for v in an.reduction.removed:
        assert v.redundant and v.verify(H)
    for v in an.reduction.witnesses:
        assert not v.redundant and v.verify(H, [j for j in an.reduction.kept if j != v.index])


# ---------------------------------------------------------------- facet counts


EXPECTED = {"A3": (50, 50, 0, 0), "C3": (135, 102, 24, 9), "B3": (135, 102, 24, 9)}


def test_counts(rs):
    an = analyze(rs.name)
    total, facets, trivial, further = EXPECTED[rs.name]
    assert len(an.system.inequalities) == total
    assert len(an.facets.inequalities) == facets
    assert len(an.trivially_redundant) == trivial
    assert an.trivially_redundant <= an.removed
    assert len(an.further_redundant) == further


def orbit(rs, q):
    return {canonical_key(rs, permute_sides(q.coeffs, p)) for p in PERMUTATIONS}


@pytest.mark.parametrize(
    "family,labels",
    [("C3", [(2, "(5'',1,1)"), (2, "(4',2',1)")]), ("B3", [(3, "(4,1,1)"), (3, "(3'',2,1)")])],
)
def test_further_redundant_orbits(family, labels):
    rs = build_root_system(family)
    an = analyze(family)
    expected = set()
    for k, label in labels:
        expected |= orbit(rs, from_label(rs, k, label))
    assert {an.key(i) for i in an.further_redundant} == expected


def test_reduction_is_order_independent():
    an = analyze("C3")
    H = an.hrep
    order = list(range(len(H.inequalities)))
    random.Random(4).shuffle(order)
    shuffled = H.subset(order)
    assert minimal_facet_system(shuffled).keys() == an.facets.keys()


def test_chamber_system_alone():
    H = chamber_hrep(C3)
    assert len(reduce_system(H).facets.inequalities) == 9
    assert len(extreme_rays_dd(H).rays) == 9


# ---------------------------------------------------------------- rays


def test_c3_sample_rays():
    rays = set(analyze("C3").rays.rays)
    assert len(rays) == 51
    assert (1, 0, 1, 0, 0, 0, 0, 0, 0) in rays
    assert (1, 2, 3, 1, 2, 1, 1, 0, 1) in rays
    assert all(c >= 0 for r in rays for c in r)


def test_rays_sorted_primitive_distinct(rs):
    rays = analyze(rs.name).rays.rays
    assert list(rays) == sorted(rays)
    assert all(primitive(r) == r for r in rays)
    assert len(set(rays)) == len(rays)


def test_insertion_orders_agree(rs):
    H = analyze(rs.name).facets
    assert extreme_rays_dd(H, order="input") == extreme_rays_dd(H, order="min-violations")
    with pytest.raises(ValueError):
        extreme_rays_dd(H, order="random")


def test_soundness(rs):
    an = analyze(rs.name)
    H, rays = an.hrep, an.rays.rays
    for r in rays:
        assert H.contains(r)
    dim = H.dimension - len(H.equalities)
    for a in an.facets.inequalities:
        tight = [r for r in rays if dot(a, r) == 0]
        assert rank(tight) >= dim - 1


def test_round_trip(rs):
    an = analyze(rs.name)
    back = facets_from_rays(an.rays, an.facets.equalities)
    assert back.keys() == an.facets.keys()
    assert cones_equal(back, an.facets)


def test_not_pointed():
    H = HRep.from_rows(3, [(1, 0, 0), (0, 1, 0)])
    with pytest.raises(NotPointedError) as exc:
        extreme_rays_dd(H)
    assert len(exc.value.lineality) == 1


# ---------------------------------------------------------------- equality of cones


def test_b3_equals_c3():
    assert cones_equal(analyze("B3").hrep, analyze("C3").hrep)


def test_c3_differs_from_chamber_cone():
    assert not cones_equal(analyze("C3").hrep, chamber_hrep(C3))


def test_permuted_and_rescaled_rows():
    H = analyze("C3").facets
    rng = random.Random(9)
    rows = []
    for r in H.inequalities:
        f = rng.randint(1, 5)
        rows.append(tuple(f * c for c in r))
    rng.shuffle(rows)
    assert cones_equal(H, HRep.from_rows(H.dimension, rows))


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        cones_equal(analyze("A3").hrep, analyze("C3").hrep)


def test_facets_from_rays_of_simplex():
    V = VRep(3, ((1, 0, 0), (1, 1, 0), (1, 1, 1)))
    H = facets_from_rays(V)
    assert len(H.inequalities) == 3
    assert all(H.contains(r) for r in V.rays)
