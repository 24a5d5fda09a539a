"""Small constructors shared by several test modules."""

from fractions import Fraction

from triangle_cone import notation
from triangle_cone.inequality import coordinate_names, inequality_from_triple
from triangle_cone.schubert import PointTriple, triple_coefficient
from triangle_cone.weyl import maximal_parabolic, theta_dual, weyl_group


def covector(rs, **coeffs):
    names = coordinate_names(rs)
    unknown = set(coeffs) - set(names)
    if unknown:
        raise KeyError(unknown)
    return tuple(Fraction(coeffs.get(n, 0)) for n in names)


def from_label(rs, k, label):
    """Inequality of the ordered triple with the given class labels in G/P_k."""
    W = weyl_group(rs)
    P = maximal_parabolic(W, k)
    by_label = notation.class_by_label(rs, W, P)
    triple = tuple(by_label[p] for p in label.strip("()").split(","))
    hom = tuple(theta_dual(W, P, v) for v in triple)
    c = triple_coefficient(rs, W, P, triple)
    return inequality_from_triple(rs, W, P, PointTriple(triple, hom, c, label))
