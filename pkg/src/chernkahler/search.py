"""Exhaustive chamber sweep for the abelian-isotropy Chern-Einstein problem.

The sweep is vectorized over blocks of consecutive enumeration indices.
For an element w the Koszul form is pulled back to the standard chamber:

    delta = w(d),   d = 2 * sum_{a in R_o^+} s_w(a) * a,

with s_w(a) = +1 if w(a) is compact and -1 otherwise. Pairings with the
chamber roots become <w a, delta> = <a, d>, so the sign test runs against
the fixed root list R_o^+ (its simple roots suffice: every positive root
is a non-negative combination of them).
"""

from __future__ import annotations

import json
import logging
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .chern import LambdaSign, is_integrable, j_split, solve_ce
from .realform import RealForm, split_for
from .rootsys import positive_roots, simple_roots
from .weyl import SignedPerm, chamber, chamber_to_z, enumerate_weyl, unrank_block, weyl_order

log = logging.getLogger(__name__)

DEFAULT_RANK_CAP = 8
DEFAULT_BLOCK = 1 << 16
# measured single-core throughput, used only for the refusal message
_CHAMBERS_PER_SECOND = 250_000

_CODE = {1: LambdaSign.POSITIVE, 0: LambdaSign.ZERO, -1: LambdaSign.NEGATIVE, 2: LambdaSign.NO_SOLUTION}


class RankCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    index: int
    perm: str
    signs: str
    lambda_sign: LambdaSign
    delta: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "perm": self.perm,
            "signs": self.signs,
            "lambda_sign": self.lambda_sign.value,
            "delta": list(self.delta),
        }


@dataclass
class ClassificationReport:
    form: RealForm
    rank: int
    chambers_total: int
    counts: dict[LambdaSign, int]
    witnesses: list[Witness]
    visited: int
    shards: int = 1
    elapsed_ms: int = 0

    def count(self, sign: LambdaSign) -> int:
        return self.counts.get(sign, 0)

    @property
    def solutions(self) -> int:
        return self.chambers_total - self.count(LambdaSign.NO_SOLUTION)

    def to_dict(self) -> dict:
        return {
            "form": self.form.name,
            "rank": self.rank,
            "weyl_order": self.chambers_total,
            "counts": {s.value: self.count(s) for s in LambdaSign},
            "witnesses": [w.to_dict() for w in self.witnesses],
            "shards": self.shards,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def content_key(self) -> tuple:
        """Everything except timing and shard count."""
        return (
            self.form,
            self.rank,
            self.chambers_total,
            tuple(sorted((s.value, c) for s, c in self.counts.items())),
            tuple(self.witnesses),
            self.visited,
        )


@dataclass(frozen=True)
class _Kernel:
    """Index tables for one real form; cheap to rebuild in each worker."""

    form: RealForm
    m: int
    i1: np.ndarray
    c1: np.ndarray
    i2: np.ndarray
    c2: np.ndarray
    compact_table: np.ndarray
    test_roots: np.ndarray = field(repr=False)

    @classmethod
    def build(cls, form: RealForm, full_scan: bool = False) -> "_Kernel":
        sp = split_for(form)
        rs = sp.rs
        m = rs.ambient_dim

        def support(roots):
            i1, c1, i2, c2 = [], [], [], []
            for a in roots:
                nz = [(i, c) for i, c in enumerate(a) if c]
                i1.append(nz[0][0])
                c1.append(nz[0][1])
                if len(nz) > 1:
                    i2.append(nz[1][0])
                    c2.append(nz[1][1])
                else:
                    i2.append(m)
                    c2.append(0)
            return [np.array(x, dtype=np.int64) for x in (i1, c1, i2, c2)]

        pos = positive_roots(rs.family, rs.rank)
        i1, c1, i2, c2 = support(pos)
        # compact_table[pos1, coef1+2, pos2, coef2+2]; pos2 = m means a one-term root
        table = np.zeros((m + 1, 5, m + 1, 5), dtype=bool)
        for idx, a in enumerate(rs.roots):
            if not (sp.compact >> idx) & 1:
                continue
            nz = [(i, c) for i, c in enumerate(a) if c]
            if len(nz) == 1:
                (i, c), = nz
                table[i, c + 2, m, 2] = True
            else:
                (i, ci), (j, cj) = nz
                table[i, ci + 2, j, cj + 2] = True
                table[j, cj + 2, i, ci + 2] = True
        tests = np.array(pos if full_scan else simple_roots(rs.family, rs.rank), dtype=np.int64)
        return cls(form, m, i1, c1, i2, c2, table.reshape(-1), tests)

    def evaluate(self, sigma: np.ndarray, phi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Verdict codes (1, 0, -1, 2 = none) and pulled-back forms ``d``."""
        n = sigma.shape[0]
        m = self.m
        sig_x = np.concatenate([sigma, np.full((n, 1), m, dtype=np.int64)], axis=1)
        phi_x = np.concatenate([phi, np.zeros((n, 1), dtype=np.int64)], axis=1)
        p1 = sig_x[:, self.i1]
        k1 = phi_x[:, self.i1] * self.c1 + 2
        p2 = sig_x[:, self.i2]
        k2 = phi_x[:, self.i2] * self.c2 + 2
        flat = ((p1 * 5 + k1) * (m + 1) + p2) * 5 + k2
        s = np.where(self.compact_table[flat], 1, -1).astype(np.int64)

        d = np.zeros((n, m + 1), dtype=np.int64)
        for r in range(len(self.i1)):
            d[:, self.i1[r]] += s[:, r] * self.c1[r]
            d[:, self.i2[r]] += s[:, r] * self.c2[r]
        d = 2 * d[:, :m]

        pair = d @ self.test_roots.T
        zero = ~d.any(axis=1)
        pos = (pair > 0).all(axis=1)
        neg = (pair < 0).all(axis=1)
        code = np.full(n, 2, dtype=np.int8)
        code[pos] = 1
        code[neg] = -1
        code[zero] = 0
        return code, d


def _sweep_block(form: RealForm, start: int, stop: int, full_scan: bool = False) -> tuple[dict, list]:
    kern = _KERNELS.get((form, full_scan))
    if kern is None:
        kern = _KERNELS.setdefault((form, full_scan), _Kernel.build(form, full_scan))
    sigma, phi = unrank_block(form.family, form.rank, start, stop)
    code, d = kern.evaluate(sigma, phi)
    values, counts = np.unique(code, return_counts=True)
    tally = {int(v): int(c) for v, c in zip(values, counts)}
    hits = np.nonzero(code != 2)[0]
    found = []
    for h in hits.tolist():
        sg, ph, dd = sigma[h], phi[h], d[h]
        delta = [0] * kern.m
        for i in range(kern.m):
            delta[int(sg[i])] = int(ph[i]) * int(dd[i])
        found.append((start + h, sg.tolist(), ph.tolist(), int(code[h]), tuple(delta)))
    return tally, found


_KERNELS: dict[tuple[RealForm, bool], _Kernel] = {}


def koszul_batch(form: RealForm, sigma: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Koszul forms (in epsilon-coordinates) for a batch of group elements."""
    kern = _KERNELS.get((form, False))
    if kern is None:
        kern = _KERNELS.setdefault((form, False), _Kernel.build(form))
    _, d = kern.evaluate(np.asarray(sigma, dtype=np.int64), np.asarray(phi, dtype=np.int64))
    delta = np.zeros_like(d)
    rows = np.arange(d.shape[0])[:, None]
    delta[rows, sigma] = phi * d
    return delta


def estimated_seconds(form: RealForm) -> float:
    return weyl_order(form.family, form.rank) / _CHAMBERS_PER_SECOND


def classify(
    form: RealForm,
    *,
    shards: int = 1,
    block_size: int = DEFAULT_BLOCK,
    rank_cap: int = DEFAULT_RANK_CAP,
    full_scan: bool = False,
) -> ClassificationReport:
    """Visit every chamber of ``form`` once and tally the lambda signs.

    ``shards > 1`` distributes contiguous index blocks over worker
    processes; the merged report does not depend on the shard count.
    """
    if form.rank > rank_cap:
        order = weyl_order(form.family, form.rank)
        raise RankCapExceeded(
            f"{form.name} has rank {form.rank} > cap {rank_cap}: {order} chambers, "
            f"roughly {estimated_seconds(form):.0f} s single-threaded; raise the cap to run it"
        )
    if shards < 1 or block_size < 1:
        raise ValueError("shards and block_size must be positive")
    t0 = time.perf_counter()
    order = weyl_order(form.family, form.rank)
    blocks = [(lo, min(lo + block_size, order)) for lo in range(0, order, block_size)]
    if shards == 1:
        results = [_sweep_block(form, lo, hi, full_scan) for lo, hi in blocks]
    else:
        with ProcessPoolExecutor(max_workers=shards) as pool:
            futures = [pool.submit(_sweep_block, form, lo, hi, full_scan) for lo, hi in blocks]
            results = [f.result() for f in futures]

    tally: Counter[int] = Counter()
    found = []
    for t, f in results:
        tally.update(t)
        found.extend(f)
    found.sort(key=lambda x: x[0])
    w_fam = form.family
    witnesses = [
        Witness(
            index=idx,
            perm=" ".join(str(s + 1) for s in sg),
            signs="" if w_fam == "A" else "".join("+" if f > 0 else "-" for f in ph),
            lambda_sign=_CODE[code],
            delta=delta,
        )
        for idx, sg, ph, code, delta in found
    ]
    counts = {_CODE[c]: tally.get(c, 0) for c in (1, 0, -1, 2)}
    visited = sum(tally.values())
    report = ClassificationReport(
        form=form,
        rank=form.rank,
        chambers_total=order,
        counts=counts,
        witnesses=witnesses,
        visited=visited,
        shards=shards,
        elapsed_ms=int(round((time.perf_counter() - t0) * 1000)),
    )
    if visited != order:
        raise RuntimeError(f"visited {visited} chambers, expected {order}")
    log.debug("classified %s: %s in %d ms", form.name, report.to_dict()["counts"], report.elapsed_ms)
    return report


def classify_scalar(form: RealForm) -> ClassificationReport:
    """Reference sweep through the per-chamber API (slow; small ranks only)."""
    sp = split_for(form)
    counts: Counter[LambdaSign] = Counter()
    witnesses = []
    for idx, w in enumerate(enumerate_weyl(form.family, form.rank)):
        res = solve_ce(j_split(chamber_to_z(chamber(w, sp.rs)), sp))
        counts[res.lambda_sign] += 1
        if res.lambda_sign is not LambdaSign.NO_SOLUTION:
            witnesses.append(Witness(idx, w.perm_text, w.sign_text, res.lambda_sign, res.delta))
    order = weyl_order(form.family, form.rank)
    return ClassificationReport(
        form, form.rank, order, {s: counts.get(s, 0) for s in LambdaSign}, witnesses, sum(counts.values())
    )


def predicted_counts(form: RealForm) -> dict[LambdaSign, int]:
    """Solution counts predicted by the classification theorem."""
    order = weyl_order(form.family, form.rank)
    pred = {s: 0 for s in LambdaSign}
    if form.is_sl2r:
        pred[LambdaSign.NEGATIVE] = order
    elif form.kind == "su" and form.params[0] == form.params[1] + 1:
        p, q = form.params
        pred[LambdaSign.ZERO] = math.factorial(p) * math.factorial(q)
    pred[LambdaSign.NO_SOLUTION] = order - sum(v for s, v in pred.items() if s is not LambdaSign.NO_SOLUTION)
    return pred


def verify_theorem(
    form: RealForm, report: Optional[ClassificationReport] = None, **options
) -> tuple[bool, list[str]]:
    """Compare a classification report with the theorem's prediction.

    Returns ``(ok, discrepancies)``; nothing is suppressed.
    """
    if report is None:
        report = classify(form, **options)
    issues = []
    pred = predicted_counts(form)
    for s in LambdaSign:
        if report.count(s) != pred[s]:
            issues.append(f"{form.name}: {s.value} count {report.count(s)}, predicted {pred[s]}")
    if report.count(LambdaSign.ZERO) and form.kind == "su":
        p = form.params[0]
        odd = frozenset(range(0, form.rank + 1, 2))
        for wit in report.witnesses:
            sigma = [int(t) - 1 for t in wit.perm.split()]
            blocks = frozenset(i for i, s in enumerate(sigma) if s < p)
            if wit.lambda_sign is LambdaSign.ZERO and blocks != odd:
                issues.append(f"{form.name}: flat witness [{wit.perm}] has P_sigma != odd positions")
    if report.visited != report.chambers_total:
        issues.append(f"{form.name}: visited {report.visited} of {report.chambers_total} chambers")
    return not issues, issues


def integrability_census(form: RealForm) -> dict[str, int]:
    """Number of chambers whose R^10 is closed under root addition."""
    sp = split_for(form)
    total = integrable = 0
    for w in enumerate_weyl(form.family, form.rank):
        total += 1
        integrable += is_integrable(j_split(chamber_to_z(chamber(w, sp.rs)), sp))
    return {"total": total, "integrable": integrable}


def witness_perm(w: Witness, family: str) -> SignedPerm:
    return SignedPerm.from_text(family, w.perm, w.signs)
