"""Einstein constants for isotropy with a one-dimensional center.

At the canonical z (indicator of the block carrying the u(k) factor) the
Koszul form is proportional to z, so lambda is a number once the
Killing-to-Euclidean constant c is fixed. Its sign does not depend on c.
"""

from fractions import Fraction

from chernkahler import compute_lambda, j_split, solve_ce, split_for, table2_catalog

c = Fraction(1)
for e in table2_catalog(6):
    js = j_split(e.z, split_for(e.form))
    lam = compute_lambda(e.z, js, c)
    print(f"{e.form.name:<10} {e.isotropy:<20} z={e.z.z}  lambda={lam}  ({solve_ce(js).lambda_sign.value})")

# so(2p,2q) with u(p) in the isotropy: lambda = 2(p - 1 - 2q) at c = 1
print("\nso(2p,2q), u(p) variant:")
for e in table2_catalog(6):
    if e.form.kind == "so_even" and e.u_block == "P":
        p, q = e.form.params
        js = j_split(e.z, split_for(e.form))
        print(f"  p={p} q={q}: lambda={compute_lambda(e.z, js)}, 2(p-1-2q)={2 * (p - 1 - 2 * q)}")
