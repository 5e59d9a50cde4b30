from fractions import Fraction

import pytest

from chernkahler.chern import (
    LambdaSign,
    compute_lambda,
    delta_tilde_regularity,
    is_integrable,
    j_split,
    j_split_for_chamber,
    koszul_delta,
    metric_check,
    ricci_coefficient,
    solve_ce,
)
from chernkahler.realform import NotAdmissible, RealForm, admissibility, catalog, split_for
from chernkahler.rootsys import bits, inner
from chernkahler.weyl import SignedPerm, chamber, enumerate_weyl


def members(js):
    return set(js.rs.members(js.r10))


def test_j_split_examples():
    sp = split_for(RealForm("su", (1, 1)))
    assert members(j_split((1, -1), sp)) == {(-1, 1)}

    sp = split_for(RealForm("su", (2, 1)))
    assert members(j_split((2, 1, 0), sp)) == {(1, -1, 0), (-1, 0, 1), (0, -1, 1)}

    sp = split_for(RealForm("so_even", (2, 1)))
    js = j_split((1, 1, 0), sp)
    assert members(js) == {(1, 1, 0), (-1, 0, 1), (-1, 0, -1), (0, -1, 1), (0, -1, -1)}


def test_j_split_rejects_non_admissible():
    sp = split_for(RealForm("su", (2, 1)))
    with pytest.raises(NotAdmissible):
        j_split((1, 0, 0), sp)


@pytest.mark.parametrize("form", catalog(3))
def test_r10_is_half_of_r_m(form):
    sp = split_for(form)
    for w in enumerate_weyl(form.family, form.rank):
        js = j_split_for_chamber(chamber(w, sp.rs), sp)
        assert js.r10 & js.rs.neg_mask(js.r10) == 0
        assert js.r10 | js.rs.neg_mask(js.r10) == js.r_m


def test_koszul_examples():
    js = j_split((1, -1), split_for(RealForm("su", (1, 1))))
    kd = koszul_delta(js)
    assert kd.delta == (-2, 2)
    assert kd.delta_tilde == (2, -2)
    js = j_split((1, 1, 0), split_for(RealForm("so_even", (2, 1))))
    assert koszul_delta(js).delta == (-2, -2, 0)


@pytest.mark.parametrize("form", catalog(4))
def test_koszul_invariants_and_ricci_identity(form):
    sp = split_for(form)
    for w in enumerate_weyl(form.family, form.rank):
        js = j_split_for_chamber(chamber(w, sp.rs), sp)
        kd = koszul_delta(js)
        assert kd.delta == tuple(c - n for c, n in zip(kd.delta_c, kd.delta_nc))
        assert all(x % 2 == 0 for x in kd.delta)
        for i in bits(js.r_m):
            a = js.rs.roots[i]
            assert 2 * ricci_coefficient(a, js) == inner(a, kd.delta)


def test_ricci_examples(su32):
    _, sp = su32
    js = j_split((1, -1), split_for(RealForm("su", (1, 1))))
    assert ricci_coefficient((1, -1), js) == -2
    assert ricci_coefficient((-1, 1), js) == 2
    flat = j_split_for_chamber(chamber(SignedPerm.from_cycles("A", 5, (2, 4, 5, 3)), sp.rs), sp)
    assert all(ricci_coefficient(a, flat) == 0 for a in sp.rs.roots)
    with pytest.raises(ValueError):
        ricci_coefficient((1, 1), js)
    singular = j_split((1, 1, 0), split_for(RealForm("so_even", (2, 1))))
    with pytest.raises(ValueError):
        ricci_coefficient((1, -1, 0), singular)


def test_solve_ce_examples(su32):
    sp = split_for(RealForm("su", (1, 1)))
    for z in [(1, -1), (-1, 1)]:
        assert solve_ce(j_split(z, sp)).lambda_sign is LambdaSign.NEGATIVE
    _, sp = su32
    w = SignedPerm.from_cycles("A", 5, (2, 4, 5, 3))
    assert solve_ce(j_split_for_chamber(chamber(w, sp.rs), sp)).lambda_sign is LambdaSign.ZERO
    sp = split_for(RealForm("so_odd", (1, 1)))
    for w in enumerate_weyl("B", 2):
        assert solve_ce(j_split_for_chamber(chamber(w, sp.rs), sp)).lambda_sign is LambdaSign.NO_SOLUTION


def test_zero_verdict_invariant_under_all_ones_shift(su32):
    _, sp = su32
    w = SignedPerm.from_cycles("A", 5, (2, 4, 5, 3))
    js = j_split_for_chamber(chamber(w, sp.rs), sp)
    res = solve_ce(js)
    assert res.lambda_sign is LambdaSign.ZERO
    shifted = j_split(tuple(x + 7 for x in js.z.z), sp)
    assert shifted.r10 == js.r10
    assert solve_ce(shifted).lambda_sign is LambdaSign.ZERO


@pytest.mark.parametrize("form", catalog(3))
def test_negative_verdict_rescan(form):
    sp = split_for(form)
    for w in enumerate_weyl(form.family, form.rank):
        ps = chamber(w, sp.rs)
        res = solve_ce(j_split_for_chamber(ps, sp))
        if res.lambda_sign is LambdaSign.NEGATIVE:
            assert all(inner(a, res.delta) < 0 for a in ps.roots())
        if res.lambda_sign is LambdaSign.POSITIVE:
            assert all(inner(a, res.delta) > 0 for a in ps.roots())


def test_compute_lambda():
    sp = split_for(RealForm("su", (1, 1)))
    z = admissibility((1, -1), sp)
    js = j_split(z, sp)
    assert compute_lambda(z, js) == -2
    assert compute_lambda(z, js, Fraction(1, 2)) == -4
    with pytest.raises(ValueError):
        compute_lambda(z, js, 0)
    sp = split_for(RealForm("so_even", (2, 1)))
    z = admissibility((1, 1, 0), sp)
    assert compute_lambda(z, j_split(z, sp)) == -2
    # regular z off the ray of delta: not proportional
    z = admissibility((3, 1, 0), sp)
    assert compute_lambda(z, j_split(z, sp)) is None


def test_lambda_zero_for_flat(su32):
    _, sp = su32
    js = j_split_for_chamber(chamber(SignedPerm.from_cycles("A", 5, (2, 4, 5, 3)), sp.rs), sp)
    assert compute_lambda(js.z, js, 3) == 0


def test_integrability_examples():
    sp = split_for(RealForm("su", (2, 1)))
    assert is_integrable(j_split((2, 1, 0), sp))
    assert not is_integrable(j_split((2, 0, 1), sp))


def test_so32_integrability_matches_hermitian_structure():
    # so(3,2) = sp(2,R) is Hermitian, so half of its chambers carry an integrable J
    sp = split_for(RealForm("so_odd", (1, 1)))
    n = sum(is_integrable(j_split_for_chamber(chamber(w, sp.rs), sp)) for w in enumerate_weyl("B", 2))
    assert n == 4


@pytest.mark.parametrize("form", catalog(4))
def test_fiber_integrability(form):
    sp = split_for(form)
    for w in enumerate_weyl(form.family, form.rank):
        js = j_split_for_chamber(chamber(w, sp.rs), sp)
        rc = js.r10_c
        for i in bits(rc):
            for j in bits(rc):
                k = js.rs.find(tuple(x + y for x, y in zip(js.rs.roots[i], js.rs.roots[j])))
                if k is not None and (sp.compact >> k) & 1:
                    assert (rc >> k) & 1


def test_metric_check_examples():
    sp = split_for(RealForm("su", (2, 1)))
    js = j_split((2, 1, 0), sp)
    assert metric_check(js.z, js)
    bad = type(js)(sp, js.z, sp.rs.base_positive)
    assert not metric_check(js.z, bad)
    for a in sp.rs.members(js.r10):
        assert not metric_check(js.z, js.flip(a))


@pytest.mark.parametrize("form", catalog(4))
def test_delta_tilde_regular_on_chambers(form):
    sp = split_for(form)
    for w in enumerate_weyl(form.family, form.rank):
        assert delta_tilde_regularity(j_split_for_chamber(chamber(w, sp.rs), sp))


def test_delta_tilde_examples():
    js = j_split((1, -1), split_for(RealForm("su", (1, 1))))
    assert abs(inner((1, -1), koszul_delta(js).delta_tilde)) == 4
    js = j_split((1, 1, 0), split_for(RealForm("so_even", (2, 1))))
    # (1,-1,0) lies in the centralizer, so its zero pairing is not counted
    assert inner((1, -1, 0), koszul_delta(js).delta_tilde) == 0
    assert delta_tilde_regularity(js)
