"""Acceptance criteria, each checked at its stated tolerance and time budget.

Every criterion prints one PASS/FAIL line in the terminal summary. The file
can also be run directly: ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import time

import numpy as np
import pytest

from chernkahler.chern import (
    LambdaSign,
    compute_lambda,
    j_split,
    j_split_for_chamber,
    koszul_delta,
    metric_check,
    ricci_coefficient,
    solve_ce,
)
from chernkahler.cli import SU32_COMPACT, SU32_NONCOMPACT, su32_chamber
from chernkahler.closedform import check_identities
from chernkahler.realform import RealForm, catalog, grading_holds, split_for, table2_catalog
from chernkahler.rootsys import bits, build_root_system, inner
from chernkahler.search import classify, integrability_census, verify_theorem
from chernkahler.weyl import chamber, enumerate_weyl, random_element

RESULTS: list[str] = []

NEG, ZERO = LambdaSign.NEGATIVE, LambdaSign.ZERO


def record(label: str, ok: bool, detail: str, elapsed: float, budget: float) -> None:
    in_time = elapsed < budget
    verdict = "PASS" if ok and in_time else "FAIL"
    timing = f"{elapsed:.2f}s / {budget:g}s"
    RESULTS.append(f"{verdict}  {label:<38} [{timing}] {detail}")
    print(RESULTS[-1])
    assert ok, detail
    assert in_time, f"over budget: {timing}"


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _literal_expectation(form: RealForm) -> dict[LambdaSign, int]:
    exp = {s: 0 for s in LambdaSign if s is not LambdaSign.NO_SOLUTION}
    if form == RealForm("su", (1, 1)):
        exp[NEG] = 2
    elif form.kind == "su" and form.params[0] == form.params[1] + 1:
        q = form.params[1]
        exp[ZERO] = math.factorial(q + 1) * math.factorial(q)
    return exp


def test_criterion_1_sweep_rank5():
    def run():
        bad = []
        for form in catalog(5):
            rep = classify(form)
            for s, want in _literal_expectation(form).items():
                if rep.count(s) != want:
                    bad.append(f"{form.name} {s.value}={rep.count(s)} (want {want})")
        return bad

    bad, dt = _timed(run)
    record("1 sweep rank<=5 (literal)", not bad, "; ".join(bad) or "all counts exact", dt, 60)


def test_criterion_1_companion_isomorphic_rows():
    # so(1,2) and sp(1,R) are isomorphic to su(1,1) = sl(2,R)
    def run():
        issues = []
        for form in catalog(5):
            ok, msgs = verify_theorem(form)
            issues += msgs
        return issues

    issues, dt = _timed(run)
    record("1' sweep rank<=5 (sl(2,R) isomorphs)", not issues, "; ".join(issues) or "theorem prediction exact", dt, 60)


def test_criterion_2_su32_example():
    def run():
        ex = su32_chamber((2, 4, 5, 3))
        lists = ex["compact"] == SU32_COMPACT and ex["noncompact"] == SU32_NONCOMPACT
        flat = all(x == 0 for x in ex["delta"])
        rep = classify(RealForm("su", (3, 2)))
        odd = {0, 2, 4}
        witnesses_ok = all(
            {i for i, t in enumerate(w.perm.split()) if int(t) <= 3} == odd for w in rep.witnesses
        ) and rep.count(ZERO) == 12
        return lists, flat, witnesses_ok

    (lists, flat, wit), dt = _timed(run)
    detail = f"lists={'ok' if lists else 'MISMATCH'} delta0={flat} P_sigma={{1,3,5}} for all 12: {wit}"
    record("2 su(3,2) example", lists and flat and wit, detail, dt, 1)


def test_criterion_3_closed_forms():
    rep, dt = _timed(lambda: check_identities(max_rank=4, sample_rank=10, samples=10_000, seed=0))
    n = sum(rep.checked.values())
    record("3 closed-form identities", rep.ok, rep.failures[0] if rep.failures else f"{n} elements agree", dt, 30)


def test_criterion_4_structural_invariants():
    def run():
        issues = []
        splits = [split_for(f) for f in catalog(8)]
        issues += [f"grading {sp.form.name}" for sp in splits if not grading_holds(sp)]
        rng = np.random.default_rng(4)
        fams = ["A", "B", "C", "D"]
        for k in range(10_000):
            fam = fams[k % 4]
            rank = int(rng.integers(3, 11))
            w = random_element(fam, rank, rng)
            if not chamber(w, build_root_system(fam, rank)).is_valid():
                issues.append(f"closure {fam}{rank} {w}")
        for form in catalog(4):
            sp = split_for(form)
            for w in enumerate_weyl(form.family, form.rank):
                js = j_split_for_chamber(chamber(w, sp.rs), sp)
                d = koszul_delta(js).delta
                for i in bits(js.r_m):
                    a = sp.rs.roots[i]
                    if 2 * ricci_coefficient(a, js) != inner(a, d):
                        issues.append(f"ricci {form.name} {w} {a}")
        return issues, len(splits)

    (issues, n), dt = _timed(run)
    record("4 structural invariants", not issues, "; ".join(issues[:3]) or f"{n} splits graded, 10^4 chambers closed", dt, 60)


def test_criterion_5_uniqueness():
    def run():
        rng = np.random.default_rng(5)
        forms = catalog(6)
        failures = []
        for _ in range(100):
            form = forms[int(rng.integers(len(forms)))]
            sp = split_for(form)
            w = random_element(form.family, form.rank, rng)
            js = j_split_for_chamber(chamber(w, sp.rs), sp)
            if not metric_check(js.z, js):
                failures.append(f"{form.name} {w}: j_split rejected")
            for a in sp.rs.members(js.r10):
                if metric_check(js.z, js.flip(a)):
                    failures.append(f"{form.name} {w}: flip of {a} accepted")
        return failures

    failures, dt = _timed(run)
    record("5 uniqueness of J", not failures, "; ".join(failures[:3]) or "100 pairs, every flip rejected", dt, 10)


def _census_literal(form: RealForm) -> str | None:
    """Literal rule: 'zero', 'some', or None when the form is not listed."""
    k, ps = form.kind, form.params
    if k == "so_odd" and ps[0] >= 1:
        return "zero"
    if k == "sp":
        return "zero"
    if k == "so_even" and ps[0] >= 2 and ps[1] >= 2:
        return "zero"
    if k in ("su", "sp_real", "so_star") or (k == "so_even" and ps[0] == 1):
        return "some"
    return None


def test_criterion_6_integrability_census():
    def run():
        bad = []
        for form in catalog(4):
            rule = _census_literal(form)
            if rule is None:
                continue
            n = integrability_census(form)["integrable"]
            if (rule == "zero") != (n == 0):
                bad.append(f"{form.name} integrable={n} (want {rule})")
        return bad

    bad, dt = _timed(run)
    record("6 integrability census (literal)", not bad, "; ".join(bad) or "all rows as stated", dt, 30)


def test_criterion_6_companion_hermitian():
    def run():
        return [
            f"{f.name} hermitian={f.is_hermitian} integrable={c['integrable']}"
            for f in catalog(4)
            for c in [integrability_census(f)]
            if f.is_hermitian != (c["integrable"] > 0)
        ]

    bad, dt = _timed(run)
    record("6' integrable chamber iff Hermitian", not bad, "; ".join(bad) or "holds for every row rank<=4", dt, 30)


def test_criterion_7_table2_signs():
    def run():
        bad = []
        found = {}
        for e in table2_catalog(6):
            if e.form.kind != "so_even" or e.u_block != "P":
                continue
            p, q = e.form.params
            if p > 4 or q > 2:
                continue
            sp = split_for(e.form)
            js = j_split(e.z, sp)
            lam = compute_lambda(e.z, js)
            res = solve_ce(js)
            want = np.sign(p - 2 * q - 1)
            got = None if lam is None else np.sign(lam)
            found[e.form.name] = lam
            sign_of_verdict = {LambdaSign.POSITIVE: 1, ZERO: 0, NEG: -1}.get(res.lambda_sign)
            if got != want or sign_of_verdict != want:
                bad.append(f"{e.form.name} lambda={lam} verdict={res.lambda_sign.value} (want sign {want})")
        if found.get("so(4,2)") != -2:
            bad.append(f"so(4,2) lambda={found.get('so(4,2)')}")
        if found.get("so(6,2)") != 0:
            bad.append(f"so(6,2) lambda={found.get('so(6,2)')}")
        return bad, len(found)

    (bad, n), dt = _timed(run)
    record("7 lambda signs, u(p) isotropy", not bad, "; ".join(bad) or f"{n} entries, so(4,2)=-2, so(6,2)=0", dt, 5)


def test_criterion_8a_b6_single_thread():
    form = RealForm("so_odd", (3, 3))
    rep, dt = _timed(lambda: classify(form))
    ok = rep.visited == rep.chambers_total == 46_080
    record("8a B6 classification", ok, f"{form.name}: {rep.visited} chambers", dt, 5)


@pytest.mark.slow
def test_criterion_8b_b8_sharded():
    form = RealForm("so_odd", (4, 4))
    rep4, dt = _timed(lambda: classify(form, shards=4))
    rep5 = classify(form, shards=5, block_size=50_000)
    same = rep4.content_key() == rep5.content_key()
    ok = rep4.visited == rep4.chambers_total == 10_321_920 and same
    record("8b B8 with 4 shards + invariance", ok, f"{form.name}: {rep4.visited} chambers, 4 vs 5 shards identical={same}", dt, 600)


def test_criterion_8c_shard_invariance_b6():
    form = RealForm("so_odd", (3, 3))
    reps, dt = _timed(lambda: [classify(form, shards=s, block_size=b) for s, b in [(1, 65536), (2, 4096), (4, 1000)]])
    same = len({r.content_key() for r in reps}) == 1
    record("8c shard-count invariance (B6)", same, "1/2/4 shards give identical reports", dt, 60)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
