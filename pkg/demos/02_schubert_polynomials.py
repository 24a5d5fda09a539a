"""
Schubert polynomials from divided differences
=============================================

The top polynomial is the product of the positive roots over |W|; applying
divided differences along reduced words gives every Schubert polynomial.
Classes are compared modulo the ideal of invariants.
"""

# %%
from triangle_cone import build_root_system, weyl_group, maximal_parabolic
from triangle_cone.notation import class_labels
from triangle_cone.polyalg import quotient_basis, top_polynomial, ring_variables, congruent_mod_ideal
from triangle_cone.schubert import schubert_polynomial

C3, B3 = build_root_system("C3"), build_root_system("B3")
W = weyl_group(C3)
print("p_w0 for C3 =", top_polynomial(C3).format())

# %%
# the top class is a monomial modulo the invariant ideal
x, y, z = ring_variables(C3)
print("p_w0 = x^4 y^2 (xyz) mod I:", congruent_mod_ideal(C3, top_polynomial(C3), x**4 * y**2 * (x * y * z)))
print("B3 top class equals one eighth of it:", congruent_mod_ideal(B3, top_polynomial(B3), x**4 * y**2 * (x * y * z) / 8))

# %%
# normal forms of the Schubert polynomials of G/P2
Q = quotient_basis(C3)
P = maximal_parabolic(W, 2)
labels = class_labels(C3, W, P)
for w in P.coset_reps:
    print(f"  a{labels[w]:<4} {w.name:<9} {Q.reduce(schubert_polynomial(C3, W, w)).format()}")

# %%
# Spin(7) and Sp(6) polynomials differ by a power of two
WB = weyl_group(B3)
w = W.element("tsrts")
pc, pb = schubert_polynomial(C3, W, w), schubert_polynomial(B3, WB, WB.element(w.word))
print(f"p_w(Sp6) / p_w(Spin7) for w = {w.name}:", pc == pb * 4)
