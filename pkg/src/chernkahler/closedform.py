"""Closed-form coefficients of half the Koszul form, case by case.

Each ``coeffs_*`` returns a :class:`CoeffProfile`: one integer coefficient
c(i) per index i together with the target ``sign * e_{sigma(i)}`` it
multiplies, so that

    delta / 2 = sum_i c(i) * sign_i * e_{sigma(i)}.

Indices i are 1-based inside the formulas (``i1`` below) and 0-based in
storage. The formulas are transcribed as stated, not re-derived; they are
checked against direct summation in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .chern import half, j_split_for_chamber, koszul_delta
from .realform import RealForm, catalog, split_for
from .rootsys import RootVec
from .search import koszul_batch
from .weyl import SignedPerm, chamber, enumerate_weyl


@dataclass(frozen=True)
class CoeffProfile:
    case: str
    coeffs: tuple[int, ...]
    sigma: tuple[int, ...]
    signs: tuple[int, ...]

    def half_delta(self) -> RootVec:
        out = [0] * len(self.sigma)
        for c, s, f in zip(self.coeffs, self.sigma, self.signs):
            out[s] += f * c
        return tuple(out)


def _above(S: set[int], i: int) -> int:
    return sum(1 for k in S if k > i)


def _below(S: set[int], i: int) -> int:
    return sum(1 for k in S if k < i)


def _check_perm(sigma: Sequence[int], m: int) -> None:
    if sorted(sigma) != list(range(m)):
        raise ValueError(f"sigma={tuple(sigma)} is not a permutation of {m} letters")


def _check_phi(phi: Sequence[int], m: int, even: bool = False) -> None:
    if len(phi) != m or any(f not in (1, -1) for f in phi):
        raise ValueError(f"phi={tuple(phi)} must be a +-1 vector of length {m}")
    if even and math.prod(phi) != 1:
        raise ValueError(f"phi={tuple(phi)} violates the D-type constraint prod(phi) = 1")


def _blocks(sigma: Sequence[int], p: int) -> tuple[set[int], set[int]]:
    P = {i for i, s in enumerate(sigma) if s < p}
    return P, set(range(len(sigma))) - P


def coeffs_A_raw(sigma: Sequence[int], p: int, q: int) -> CoeffProfile:
    """Coefficients k_P - kbar_P - k_Q + kbar_Q (and the mirrored form on
    Q_sigma), i.e. the counting expression before simplification."""
    m = p + q
    _check_perm(sigma, m)
    P, Q = _blocks(sigma, p)
    cs = []
    for i in range(m):
        d = _above(P, i) - _below(P, i) - _above(Q, i) + _below(Q, i)
        cs.append(d if i in P else -d)
    return CoeffProfile("A-raw", tuple(cs), tuple(sigma), (1,) * m)


def coeffs_A(sigma: Sequence[int], p: int, q: int) -> CoeffProfile:
    """su(p,q): 4k_P(i)+2i-n-2p on P_sigma, -4k_P(i)-2i+n+2p+2 on Q_sigma."""
    if p < 1 or q < 1:
        raise ValueError("su(p,q) needs p, q >= 1")
    m = p + q
    n = m - 1
    _check_perm(sigma, m)
    P, _ = _blocks(sigma, p)
    cs = []
    for i in range(m):
        i1, kp = i + 1, _above(P, i)
        cs.append(4 * kp + 2 * i1 - n - 2 * p if i in P else -4 * kp - 2 * i1 + n + 2 * p + 2)
    return CoeffProfile("A", tuple(cs), tuple(sigma), (1,) * m)


def coeffs_B(sigma: Sequence[int], phi: Sequence[int], p: int, q: int) -> CoeffProfile:
    """so(2p+1,2q): 4k_P+2i-2n+1 on P_sigma, 4k_Q+2i-2n-1 on Q_sigma."""
    if p < 0 or q < 1:
        raise ValueError("so(2p+1,2q) needs p >= 0, q >= 1")
    n = p + q
    _check_perm(sigma, n)
    _check_phi(phi, n)
    P, Q = _blocks(sigma, p)
    cs = []
    for i in range(n):
        i1 = i + 1
        if i in P:
            cs.append(4 * _above(P, i) + 2 * i1 - 2 * n + 1)
        else:
            cs.append(4 * _above(Q, i) + 2 * i1 - 2 * n - 1)
    return CoeffProfile("B", tuple(cs), tuple(sigma), tuple(phi))


def coeffs_so1(sigma: Sequence[int], phi: Sequence[int], n: int) -> CoeffProfile:
    """so(1,2n): 2n-2i-1."""
    if n < 1:
        raise ValueError("so(1,2n) needs n >= 1")
    _check_perm(sigma, n)
    _check_phi(phi, n)
    cs = tuple(2 * n - 2 * (i + 1) - 1 for i in range(n))
    return CoeffProfile("so1", cs, tuple(sigma), tuple(phi))


def _ab(phi: Sequence[int]) -> tuple[set[int], set[int]]:
    A = {i for i, f in enumerate(phi) if f == 1}
    return A, set(range(len(phi))) - A


def coeffs_C_u(sigma: Sequence[int], phi: Sequence[int], n: int) -> CoeffProfile:
    """sp(n,R): -4kbar_A+2i-4 on A = {phi=+1}, 4kbar_B-2i+4 on B = {phi=-1};
    the targets are e_{sigma(i)} with no phi factor."""
    if n < 1:
        raise ValueError("sp(n,R) needs n >= 1")
    _check_perm(sigma, n)
    _check_phi(phi, n)
    A, B = _ab(phi)
    cs = []
    for i in range(n):
        i1 = i + 1
        cs.append(-4 * _below(A, i) + 2 * i1 - 4 if i in A else 4 * _below(B, i) - 2 * i1 + 4)
    return CoeffProfile("C-u", tuple(cs), tuple(sigma), (1,) * n)


def coeffs_C_pq(sigma: Sequence[int], phi: Sequence[int], p: int, q: int) -> CoeffProfile:
    """sp(p,q): 4k_{P/Q}(i)+2i-2n+2 on each block."""
    if p < 1 or q < 1:
        raise ValueError("sp(p,q) needs p, q >= 1")
    n = p + q
    _check_perm(sigma, n)
    _check_phi(phi, n)
    P, Q = _blocks(sigma, p)
    cs = []
    for i in range(n):
        k = _above(P if i in P else Q, i)
        cs.append(4 * k + 2 * (i + 1) - 2 * n + 2)
    return CoeffProfile("C-pq", tuple(cs), tuple(sigma), tuple(phi))


def coeffs_D_u(sigma: Sequence[int], phi: Sequence[int], n: int) -> CoeffProfile:
    """so*(2n): -4kbar_A+2i-2 on A, 4kbar_B-2i+2 on B; no phi factor."""
    if n < 3:
        raise ValueError("so*(2n) needs n >= 3")
    _check_perm(sigma, n)
    _check_phi(phi, n, even=True)
    A, B = _ab(phi)
    cs = []
    for i in range(n):
        i1 = i + 1
        cs.append(-4 * _below(A, i) + 2 * i1 - 2 if i in A else 4 * _below(B, i) - 2 * i1 + 2)
    return CoeffProfile("D-u", tuple(cs), tuple(sigma), (1,) * n)


def coeffs_D_pq(sigma: Sequence[int], phi: Sequence[int], p: int, q: int) -> CoeffProfile:
    """so(2p,2q): 4k_{P/Q}(i)+2i-2n on each block."""
    if p < 1 or q < 1 or p + q < 3:
        raise ValueError("so(2p,2q) needs p, q >= 1 and p + q >= 3")
    n = p + q
    _check_perm(sigma, n)
    _check_phi(phi, n, even=True)
    P, Q = _blocks(sigma, p)
    cs = []
    for i in range(n):
        k = _above(P if i in P else Q, i)
        cs.append(4 * k + 2 * (i + 1) - 2 * n)
    return CoeffProfile("D-pq", tuple(cs), tuple(sigma), tuple(phi))


def profile_for(form: RealForm, w: SignedPerm) -> CoeffProfile:
    """Dispatch to the closed form matching ``form``."""
    k, ps = form.kind, form.params
    if k == "su":
        return coeffs_A(w.sigma, *ps)
    if k == "so_odd":
        if ps[0] == 0:
            return coeffs_so1(w.sigma, w.phi, ps[1])
        return coeffs_B(w.sigma, w.phi, *ps)
    if k == "sp_real":
        return coeffs_C_u(w.sigma, w.phi, ps[0])
    if k == "sp":
        return coeffs_C_pq(w.sigma, w.phi, *ps)
    if k == "so_star":
        return coeffs_D_u(w.sigma, w.phi, ps[0])
    return coeffs_D_pq(w.sigma, w.phi, *ps)


def flat_blocks(p: int, q: int) -> tuple[frozenset[int], frozenset[int]]:
    """The unique (P_sigma, Q_sigma) with vanishing Koszul form when p = q+1:
    odd and even positions (1-based)."""
    m = p + q
    return frozenset(range(0, m, 2)), frozenset(range(1, m, 2))


def standard_flat_sigma(q: int) -> tuple[int, ...]:
    """sigma(2k) = p+k, sigma(2k+1) = k+1 (1-based), p = q+1, returned 0-based."""
    p = q + 1
    img = [0] * (p + q)
    for k in range(0, q + 1):
        img[2 * k] = k  # position 2k+1 -> k+1
    for k in range(1, q + 1):
        img[2 * k - 1] = p + k - 1  # position 2k -> p+k
    return tuple(img)


@dataclass
class IdentityReport:
    checked: dict[str, int]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def sample_forms(rank: int) -> list[RealForm]:
    """One representative per closed-form case at the given rank."""
    p = (rank + 1) // 2
    forms = [
        RealForm("su", ((rank + 2) // 2, (rank + 1) // 2)),
        RealForm("so_odd", (rank - p, p)) if rank >= 2 else RealForm("so_odd", (0, 1)),
        RealForm("so_odd", (0, rank)),
        RealForm("sp_real", (rank,)),
    ]
    if rank >= 2:
        forms.append(RealForm("sp", (rank - p, p)))
    if rank >= 3:
        forms += [RealForm("so_star", (rank,)), RealForm("so_even", (rank - p, p))]
    return forms


def random_elements(family: str, m: int, count: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    sigma = np.argsort(rng.random((count, m)), axis=1).astype(np.int64)
    if family == "A":
        phi = np.ones((count, m), dtype=np.int64)
    else:
        phi = rng.choice(np.array([1, -1], dtype=np.int64), size=(count, m))
        if family == "D":
            phi[:, -1] *= np.prod(phi, axis=1)
    return sigma, phi


def check_identities(
    max_rank: int = 4, sample_rank: int = 10, samples: int = 10_000, seed: int = 0, stop_at_first: bool = True
) -> IdentityReport:
    """Closed forms against direct summation: every Weyl element of every
    form up to ``max_rank``, then ``samples`` seeded random elements per
    case at ``sample_rank``."""
    checked: dict[str, int] = {}
    failures: list[str] = []
    for form in catalog(max_rank) if max_rank >= 1 else []:
        sp = split_for(form)
        n = 0
        for w in enumerate_weyl(form.family, form.rank):
            want = half(koszul_delta(j_split_for_chamber(chamber(w, sp.rs), sp)).delta)
            got = profile_for(form, w).half_delta()
            n += 1
            if got != want:
                failures.append(f"{form.name} {w}: closed form {got} != summation {want}")
                if stop_at_first:
                    return IdentityReport(checked, failures)
        checked[form.name] = n
    if samples > 0:
        rng = np.random.default_rng(seed)
        for form in sample_forms(sample_rank):
            m = form.rank + 1 if form.family == "A" else form.rank
            sigma, phi = random_elements(form.family, m, samples, rng)
            oracle = koszul_batch(form, sigma, phi)
            for s, f, want in zip(sigma.tolist(), phi.tolist(), oracle.tolist()):
                w = SignedPerm(form.family, tuple(s), tuple(f))
                got = profile_for(form, w).half_delta()
                if any(2 * g != d for g, d in zip(got, want)):
                    failures.append(f"{form.name} {w}: closed form {got} != summation/2 {half(want)}")
                    if stop_at_first:
                        return IdentityReport(checked, failures)
            checked[f"{form.name} (sampled)"] = samples
    return IdentityReport(checked, failures)
