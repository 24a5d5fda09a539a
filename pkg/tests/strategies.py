"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from triangle_cone.polyalg import Polynomial


def polynomials(nvars: int, max_degree: int = 5, max_terms: int = 5):
    exps = st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars).filter(
        lambda e: sum(e) <= max_degree
    )
    return st.dictionaries(exps.map(tuple), st.integers(-6, 6), max_size=max_terms).map(
        lambda terms: Polynomial(nvars, terms)
    )
