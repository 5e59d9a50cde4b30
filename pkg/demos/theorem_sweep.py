"""Exhaustive sweep over every classical real form up to a given rank.

For each form, every Weyl chamber is visited and the sign of lambda in
delta(z) = lambda B z is tallied. The last column compares the tally with
the classification: only sl(2,R) (in its three guises) and su(q+1,q) admit
solutions.
"""

import sys
import time

from chernkahler import catalog, classify, verify_theorem

max_rank = int(sys.argv[1]) if len(sys.argv) > 1 else 5

t0 = time.perf_counter()
print(f"{'form':<10} {'|W|':>8} {'pos':>5} {'zero':>6} {'neg':>5}  theorem")
for form in catalog(max_rank):
    rep = classify(form)
    ok, _ = verify_theorem(form, rep)
    c = rep.to_dict()["counts"]
    print(f"{form.name:<10} {rep.chambers_total:>8} {c['pos']:>5} {c['zero']:>6} {c['neg']:>5}  {'ok' if ok else 'MISMATCH'}")
print(f"\nswept {len(catalog(max_rank))} forms in {time.perf_counter() - t0:.2f} s")
