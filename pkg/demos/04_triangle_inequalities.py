"""
From point triples to triangle inequalities
===========================================

Each triple gives a linear inequality on three chamber vectors.  After
closing under permutations of the sides, some rows already follow from the
chamber inequalities.
"""

# %%
from triangle_cone import build_root_system, weyl_group, maximal_parabolic
from triangle_cone.inequality import schubert_subsystem, chamber_system, trivially_redundant, assemble_full_system

rs = build_root_system("C3")
W = weyl_group(rs)
chamber, eqs = chamber_system(rs)

# %%
for k in (1, 2, 3):
    rows = schubert_subsystem(rs, W, maximal_parabolic(W, k))
    print(f"\nG/P{k}: {len(rows)} inequalities after symmetrization")
    for q in rows:
        if q.permutation != (0, 1, 2):
            continue
        mark = "(*)" if trivially_redundant(q, chamber, eqs).redundant else ""
        print(f"  {mark:<4}{q.partition:<14}{q.format(rs)}")

# %%
for fam in ("A3", "B3", "C3"):
    system = assemble_full_system(build_root_system(fam))
    sizes = [len(system.subsystem(k)) for k in (1, 2, 3)]
    print(f"{fam}: subsystems {sizes} + 9 chamber rows = {len(system.inequalities)}")
