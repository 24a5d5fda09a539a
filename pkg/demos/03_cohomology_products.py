"""
Multiplying Schubert classes
============================

Products are expanded in the Schubert basis by reading off constants
A_w(p_u p_v).  Degree-one products can be cross-checked with the Chevalley rule.
"""

# %%
from triangle_cone import build_root_system, weyl_group, maximal_parabolic
from triangle_cone.notation import class_labels, class_prefix, label_order
from triangle_cone.schubert import multiplication_table, chevalley_multiply, multiply_classes, top_point_triples

rs = build_root_system("B3")
W = weyl_group(rs)

# %%
for k in (1, 2, 3):
    P = maximal_parabolic(W, k)
    labels = class_labels(rs, W, P)
    pre = class_prefix(rs, k)
    print(f"\nH*(G/P{k}) for {rs.name}")
    for (u, v), cls in sorted(multiplication_table(rs, W, P).items(),
                              key=lambda kv: (label_order(labels[kv[0][0]]), label_order(labels[kv[0][1]]))):
        print(f"  {pre}{labels[u]} * {pre}{labels[v]} = {cls.format(labels, pre)}")

# %%
# Chevalley rule against the polynomial route in G/P2
P = maximal_parabolic(W, 2)
s = W.generators[1]
print("Chevalley agrees:", all(chevalley_multiply(rs, W, 1, w) == multiply_classes(rs, W, P, s, w) for w in P.coset_reps))

# %%
# triples whose product is the class of a point
P1 = maximal_parabolic(W, 1)
print("point triples in G/P1:", sorted({t.label for t in top_point_triples(rs, W, P1)}))
wide = top_point_triples(rs, W, P1, nonzero=True)
print("with nonzero coefficients:", sorted({(t.label, int(t.coefficient)) for t in wide if t.coefficient != 1}))
