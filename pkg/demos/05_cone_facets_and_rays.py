"""
Facets and generators of the cone
=================================

Exact redundancy removal by linear programming, then double description for
the extreme rays.  The B3 and C3 cones come out identical.
"""

# %%
from triangle_cone import analyze, cones_equal, farkas_redundant
from triangle_cone.inequality import format_inequality

for fam in ("A3", "B3", "C3"):
    an = analyze(fam)
    print(f"{fam}: {len(an.system.inequalities)} rows, {len(an.trivially_redundant)} follow from the chamber, "
          f"{len(an.further_redundant)} more are redundant, {len(an.facets.inequalities)} facets, "
          f"{len(an.rays.rays)} extreme rays")

# %%
# the non-trivially redundant rows, with their certificates
an = analyze("C3")
for v in an.reduction.removed:
    if v.index in an.trivially_redundant:
        continue
    q = an.system.inequalities[v.index]
    combo = " + ".join(f"{m}*[{an.system.inequalities[j].label}]" for j, m in sorted(v.multipliers.items()))
    print(f"{q.label:<28}{format_inequality(an.root_system, q.coeffs):<40} = {combo}")

# %%
# an irredundant row comes with a witness point
i = an.reduction.kept[0]
verdict = farkas_redundant(an.hrep, i)
print(an.system.inequalities[i].label, "witness:", [str(c) for c in verdict.witness])

# %%
print("B3 cone == C3 cone:", cones_equal(analyze("B3").hrep, an.hrep))
for r in an.rays.rays[:10]:
    print(" ".join(f"{c:2d}" for c in r))
print("...")
