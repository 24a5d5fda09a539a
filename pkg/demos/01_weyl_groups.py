"""
Weyl groups and parabolic quotients
===================================

Signed permutations, shortest words, minimal coset representatives and the
duality involution, for the rank-3 groups of types B and C.
"""

# %%
from triangle_cone import build_root_system, weyl_group, maximal_parabolic
from triangle_cone.notation import class_labels
from triangle_cone.weyl import theta_dual, generator_multiplicity

rs = build_root_system("C3")
W = weyl_group(rs)
print(rs.name, "simple roots:", [tuple(map(int, a)) for a in rs.simple_roots])
print("order", len(W), "longest element", W.longest.name, "acts as", W.act(W.longest, (1, 2, 3)))

# %%
# the three sign changes, and the cube of a Coxeter element
for word in ("rstsr", "sts", "t"):
    print(f"{word:>6} sends (1,2,3) to {W.act(W.element(word), (1, 2, 3))}")
print("(rst)^3 == w0:", W.element("rst" * 3) == W.longest)

# %%
# W^P for each maximal parabolic, with labels and duals
for k in (1, 2, 3):
    P = maximal_parabolic(W, k)
    labels = class_labels(rs, W, P)
    print(f"\nG/P{k}: dimension {P.codim_total}, {len(P.coset_reps)} Schubert classes")
    for w in P.coset_reps:
        d = theta_dual(W, P, w)
        print(f"  {w.name:<9} a{labels[w]:<4} dual a{labels[d]:<4} ({d.name})")

# %%
# the number of t's does not depend on the reduced word
w = W.longest
counts = {word.count(2) for word in W.reduced_words(w)}
print(f"{len(W.reduced_words(w))} reduced words of w0, t-counts {counts}, n(w0,t) = {generator_multiplicity(w, 't')}")
