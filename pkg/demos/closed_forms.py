"""Closed-form Koszul coefficients against direct summation.

For a few random Weyl elements of each case, the coefficient profile from
the closed formula is compared with half of the summed Koszul form.
"""

import numpy as np

from chernkahler import profile_for
from chernkahler.closedform import check_identities, random_elements, sample_forms
from chernkahler.search import koszul_batch
from chernkahler.weyl import SignedPerm

rng = np.random.default_rng(7)
for form in sample_forms(6):
    m = form.rank + 1 if form.family == "A" else form.rank
    sigma, phi = random_elements(form.family, m, 3, rng)
    deltas = koszul_batch(form, sigma, phi)
    print(form.name)
    for s, f, d in zip(sigma.tolist(), phi.tolist(), deltas.tolist()):
        w = SignedPerm(form.family, tuple(s), tuple(f))
        prof = profile_for(form, w)
        print(f"  {str(w):<24} c={prof.coeffs}  half-delta={prof.half_delta()}  summed/2={tuple(x // 2 for x in d)}")

rep = check_identities(max_rank=4, sample_rank=10, samples=2000)
print(f"\n{sum(rep.checked.values())} elements checked, ok={rep.ok}")
