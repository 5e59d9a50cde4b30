"""The Ricci-flat chamber of su(3,2).

Builds the chamber of the cycle (2 4 5 3), prints its compact and
noncompact positive roots and the Koszul form, then lists every chamber of
su(3,2) on which the Chern-Ricci form vanishes.
"""

from chernkahler import RealForm, SignedPerm, chamber, chamber_to_z, classify, j_split, solve_ce, split_for
from chernkahler.rootsys import bits

form = RealForm("su", (3, 2))
sp = split_for(form)

w = SignedPerm.from_cycles("A", 5, (2, 4, 5, 3))
ps = chamber(w, sp.rs)
z = chamber_to_z(ps)
print(f"{form.name}: w = [{w.perm_text}], z = {z}")


def label(a):
    i, j = a.index(1) + 1, a.index(-1) + 1
    return f"e{i}-e{j}"


print("R_c^+  :", ", ".join(label(sp.rs.roots[i]) for i in bits(ps.members & sp.compact)))
print("R_nc^+ :", ", ".join(label(sp.rs.roots[i]) for i in bits(ps.members & sp.noncompact)))

res = solve_ce(j_split(z, sp))
print("delta  :", res.delta, "->", res.lambda_sign.value)

# every flat chamber puts the first block on the odd positions
report = classify(form)
print(f"\n{report.count(res.lambda_sign)} Ricci-flat chambers out of {report.chambers_total}:")
for wit in report.witnesses:
    print(f"  [{wit.perm}]")
