"""Compatible almost complex structure, Koszul forms and the Chern-Einstein
equation, all computed by direct summation over roots."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .realform import AdmissibleElement, RealFormSplit, admissibility
from .rootsys import RootVec, bits, inner, is_closed, is_zero_weight
from .weyl import PositiveSystem, chamber_to_z


class LambdaSign(enum.Enum):
    POSITIVE = "pos"
    ZERO = "zero"
    NEGATIVE = "neg"
    NO_SOLUTION = "none"

    def flipped(self) -> "LambdaSign":
        return {
            LambdaSign.POSITIVE: LambdaSign.NEGATIVE,
            LambdaSign.NEGATIVE: LambdaSign.POSITIVE,
        }.get(self, self)


@dataclass(frozen=True)
class JSplit:
    """Holomorphic root set R^10 for a split and an admissible z.

    ``r10`` is usually produced by :func:`j_split`; other sign assignments
    (see :meth:`flip`) are allowed so that :func:`metric_check` can be
    exercised on them.
    """

    split: RealFormSplit
    z: AdmissibleElement
    r10: int

    @property
    def rs(self):
        return self.split.rs

    @property
    def r_m(self) -> int:
        return self.rs.full_mask & ~self.z.vanishing

    @property
    def positive(self) -> int:
        """R^+(z): roots of R_m positive on z."""
        rs, z = self.rs, self.z.z
        out = 0
        for i in bits(self.r_m):
            if inner(rs.roots[i], z) > 0:
                out |= 1 << i
        return out

    @property
    def r10_c(self) -> int:
        return self.r10 & self.split.compact

    @property
    def r10_nc(self) -> int:
        return self.r10 & self.split.noncompact

    def epsilon(self, a: Sequence[int]) -> int:
        """+1 if ``a`` is holomorphic, -1 otherwise."""
        return 1 if (self.r10 >> self.rs.index(a)) & 1 else -1

    def flip(self, a: Sequence[int]) -> "JSplit":
        """Swap the membership of the pair +-a in R^10."""
        i = self.rs.index(a)
        j = self.rs.neg_index(i)
        return JSplit(self.split, self.z, self.r10 ^ (1 << i) ^ (1 << j))


def _element(z: Union[AdmissibleElement, Sequence[int]], sp: RealFormSplit) -> AdmissibleElement:
    if isinstance(z, AdmissibleElement):
        return z
    return admissibility(z, sp)


def j_split(z: Union[AdmissibleElement, Sequence[int]], sp: RealFormSplit) -> JSplit:
    """R^10 = {compact, positive on z} u {noncompact, negative on z}.

    A raw vector is run through the admissibility check first, so a
    non-admissible z raises :class:`~chernkahler.realform.NotAdmissible`.
    """
    elem = _element(z, sp)
    rs = sp.rs
    r10 = 0
    for i in bits(rs.full_mask & ~elem.vanishing):
        v = inner(rs.roots[i], elem.z)
        compact = (sp.compact >> i) & 1
        if (compact and v > 0) or (not compact and v < 0):
            r10 |= 1 << i
    return JSplit(sp, elem, r10)


def j_split_for_chamber(ps: PositiveSystem, sp: RealFormSplit) -> JSplit:
    return j_split(chamber_to_z(ps), sp)


@dataclass(frozen=True)
class KoszulData:
    delta: tuple[int, ...]
    delta_c: tuple[int, ...]
    delta_nc: tuple[int, ...]
    delta_tilde: tuple[int, ...]


def _twice_sum(rs, mask: int) -> tuple[int, ...]:
    acc = [0] * rs.ambient_dim
    for i in bits(mask):
        for k, x in enumerate(rs.roots[i]):
            acc[k] += x
    return tuple(2 * x for x in acc)


def koszul_delta(js: JSplit) -> KoszulData:
    rs, sp = js.rs, js.split
    plus = js.positive
    delta_c = _twice_sum(rs, plus & sp.compact)
    delta_nc = _twice_sum(rs, plus & sp.noncompact)
    return KoszulData(
        delta=_twice_sum(rs, js.r10),
        delta_c=delta_c,
        delta_nc=delta_nc,
        delta_tilde=_twice_sum(rs, plus),
    )


def ricci_coefficient(a: Sequence[int], js: JSplit) -> int:
    """r(a) = sum over beta in R^10 of <a, beta>; rho(E_a, E_-a) = -2i r(a)."""
    i = js.rs.find(a)
    if i is None or not (js.r_m >> i) & 1:
        raise ValueError(f"{tuple(a)} is not a root of R_m")
    return sum(inner(a, js.rs.roots[j]) for j in bits(js.r10))


@dataclass(frozen=True)
class CEResult:
    lambda_sign: LambdaSign
    koszul: KoszulData
    z: tuple[int, ...]

    @property
    def delta(self) -> tuple[int, ...]:
        return self.koszul.delta


def _proportional(delta: Sequence[int], z: Sequence[int], family: str) -> bool:
    return proportionality_factor(delta, z, family) is not None


def proportionality_factor(delta: Sequence[int], z: Sequence[int], family: str) -> Optional[Fraction]:
    """t with delta = t*z (modulo the all-ones vector for family A), or None."""
    if family == "A":
        delta = [x - delta[-1] for x in delta]
        z = [x - z[-1] for x in z]
    t: Optional[Fraction] = None
    for d, x in zip(delta, z):
        if x == 0:
            if d != 0:
                return None
            continue
        r = Fraction(d, x)
        if t is None:
            t = r
        elif r != t:
            return None
    if t is None:
        # z is zero (mod all-ones); only delta = 0 is proportional
        return Fraction(0) if all(d == 0 for d in delta) else None
    return t


def solve_ce(js: JSplit) -> CEResult:
    """Sign of lambda in delta(z) = lambda B z.

    The sign scan over R^+(z) stops at the first root that disagrees with
    the sign of the first pairing.
    """
    kd = koszul_delta(js)
    rs = js.rs
    z = js.z.z
    delta = kd.delta
    if is_zero_weight(delta, rs.family):
        return CEResult(LambdaSign.ZERO, kd, z)
    sign = 0
    for i in bits(js.positive):
        v = inner(rs.roots[i], delta)
        s = (v > 0) - (v < 0)
        if s == 0 or (sign and s != sign):
            return CEResult(LambdaSign.NO_SOLUTION, kd, z)
        sign = s
    if not js.z.is_regular and not _proportional(delta, z, rs.family):
        return CEResult(LambdaSign.NO_SOLUTION, kd, z)
    return CEResult(LambdaSign.POSITIVE if sign > 0 else LambdaSign.NEGATIVE, kd, z)


def compute_lambda(
    z: AdmissibleElement, js: JSplit, c: Union[int, Fraction] = 1
) -> Optional[Fraction]:
    """lambda with delta = lambda * c * z, or None if delta is not
    proportional to z. ``c`` is the Killing-to-Euclidean factor."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError("normalization constant must be positive")
    t = proportionality_factor(koszul_delta(js).delta, z.z, js.rs.family)
    return None if t is None else t / c


def is_integrable(js: JSplit) -> bool:
    """(R^10 + R^10) n R is contained in R^10."""
    return is_closed(js.r10, js.rs)


def metric_check(z: AdmissibleElement, js: JSplit) -> bool:
    """g(v_a, v_a) > 0 for every a in R^10: compact members must be positive
    on z, noncompact members negative."""
    rs = js.rs
    for i in bits(js.r10):
        v = inner(rs.roots[i], z.z)
        if (js.split.compact >> i) & 1:
            if v <= 0:
                return False
        elif v >= 0:
            return False
    return True


def delta_tilde_regularity(js: JSplit) -> bool:
    dt = koszul_delta(js).delta_tilde
    rs = js.rs
    return all(inner(rs.roots[i], dt) != 0 for i in bits(js.r_m))


def half(v: Sequence[int]) -> RootVec:
    if any(x % 2 for x in v):
        raise ValueError(f"{tuple(v)} has odd coordinates")
    return tuple(x // 2 for x in v)
