"""Classical inner real forms, their compact/noncompact root split,
admissible elements and the one-dimensional-center isotropy catalog."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .rootsys import RootSystem, RootVec, bits, build_root_system, inner

# kind -> Cartan family
KINDS = {
    "su": "A",  # su(p,q), p >= q >= 1
    "so_odd": "B",  # so(2p+1,2q), p >= 0, q >= 1
    "sp_real": "C",  # sp(n,R), n >= 1
    "sp": "C",  # sp(p,q), p,q >= 1
    "so_star": "D",  # so*(2n), n >= 3
    "so_even": "D",  # so(2p,2q), p,q >= 1, p+q >= 3
}


@dataclass(frozen=True, order=True)
class RealForm:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown real form kind {self.kind!r}")
        k, ps = self.kind, self.params
        if k in ("sp_real", "so_star"):
            if len(ps) != 1:
                raise ValueError(f"{k} takes one parameter n, got {ps}")
            (n,) = ps
            if n < (3 if k == "so_star" else 1):
                raise ValueError(f"{self.name}: parameter out of range")
            return
        if len(ps) != 2:
            raise ValueError(f"{k} takes two parameters (p, q), got {ps}")
        p, q = ps
        ok = {
            "su": p >= q >= 1,
            "so_odd": p >= 0 and q >= 1,
            "sp": p >= 1 and q >= 1,
            "so_even": p >= 1 and q >= 1 and p + q >= 3,
        }[k]
        if not ok:
            raise ValueError(f"{self.name}: parameters are out of range for this series")

    @property
    def family(self) -> str:
        return KINDS[self.kind]

    @property
    def rank(self) -> int:
        if self.kind == "su":
            return sum(self.params) - 1
        return sum(self.params)

    @property
    def name(self) -> str:
        k, ps = self.kind, self.params
        if k == "su":
            return f"su({ps[0]},{ps[1]})"
        if k == "so_odd":
            return f"so({2 * ps[0] + 1},{2 * ps[1]})"
        if k == "sp_real":
            return f"sp({ps[0]},R)"
        if k == "sp":
            return f"sp({ps[0]},{ps[1]})"
        if k == "so_star":
            return f"so*({2 * ps[0]})"
        return f"so({2 * ps[0]},{2 * ps[1]})"

    @property
    def is_hermitian(self) -> bool:
        """Whether G/K is Hermitian symmetric (k has a one-dimensional center)."""
        k, ps = self.kind, self.params
        if k in ("su", "sp_real", "so_star"):
            return True
        if k == "so_odd":
            # so(2q) contributes a center only for q = 1; so(1,2) is sl(2,R)
            return ps[1] == 1
        if k == "so_even":
            return ps[0] == 1 or ps[1] == 1
        return False

    @property
    def is_sl2r(self) -> bool:
        """Rank-one rows isomorphic to sl(2,R)."""
        return self in (RealForm("su", (1, 1)), RealForm("so_odd", (0, 1)), RealForm("sp_real", (1,)))

    def __str__(self) -> str:
        return self.name


def parse_form(text: str) -> RealForm:
    """Parse a form selector.

    Accepted spellings: ``su:3,2`` / ``su(3,2)``; ``so:5,2`` / ``so(5,2)``
    (odd first entry gives so(2p+1,2q), both even gives so(2p,2q));
    ``sp:2,1`` / ``sp(2,1)``; ``spR:3`` / ``sp(3,R)``; ``sostar:3`` / ``so*(6)``.
    """
    s = text.strip().replace(" ", "")
    m = re.fullmatch(r"(su|so|sp|spR|sostar|so\*)[:(]([0-9,R]+)\)?", s)
    if not m:
        raise ValueError(f"cannot parse form selector {text!r}")
    head, body = m.group(1), m.group(2)
    parts = body.split(",")
    try:
        if head == "spR" or (head == "sp" and len(parts) == 2 and parts[1] == "R"):
            return RealForm("sp_real", (int(parts[0]),))
        if head == "sostar":
            return RealForm("so_star", (int(parts[0]),))
        if head == "so*":
            (two_n,) = parts
            if int(two_n) % 2:
                raise ValueError("so*(2n) needs an even argument")
            return RealForm("so_star", (int(two_n) // 2,))
        a, b = (int(x) for x in parts)
    except ValueError as exc:
        raise ValueError(f"cannot parse form selector {text!r}: {exc}") from None
    if head == "su":
        return RealForm("su", (a, b))
    if head == "sp":
        return RealForm("sp", (a, b))
    if b % 2:
        raise ValueError(f"so({a},{b}): second signature entry must be even")
    if a % 2:
        return RealForm("so_odd", ((a - 1) // 2, b // 2))
    return RealForm("so_even", (a // 2, b // 2))


def catalog(max_rank: int, family: Optional[str] = None) -> list[RealForm]:
    """Every classical inner real form of rank <= ``max_rank``, in a fixed order."""
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    out: list[RealForm] = []
    for r in range(1, max_rank + 1):
        for q in range(1, r + 2):
            p = r + 1 - q
            if p >= q:
                out.append(RealForm("su", (p, q)))
        for q in range(1, r + 1):
            out.append(RealForm("so_odd", (r - q, q)))
        out.append(RealForm("sp_real", (r,)))
        for q in range(1, r):
            out.append(RealForm("sp", (r - q, q)))
        if r >= 3:
            out.append(RealForm("so_star", (r,)))
            for q in range(1, r):
                out.append(RealForm("so_even", (r - q, q)))
    if family is not None:
        out = [f for f in out if f.family == family]
    return out


@dataclass(frozen=True)
class RealFormSplit:
    form: RealForm
    rs: RootSystem
    compact: int

    @property
    def noncompact(self) -> int:
        return self.rs.full_mask & ~self.compact

    def is_compact(self, a: Sequence[int]) -> bool:
        return bool((self.compact >> self.rs.index(a)) & 1)


def _block(i: int, p: int) -> int:
    return 0 if i < p else 1


def is_compact_root(form: RealForm, a: Sequence[int]) -> bool:
    """Compactness of root ``a`` for ``form``, read off its support."""
    supp = [(i, c) for i, c in enumerate(a) if c]
    k, ps = form.kind, form.params
    if k == "su":
        (i, _), (j, _) = supp
        return _block(i, ps[0]) == _block(j, ps[0])
    if k in ("so_odd", "sp", "so_even"):
        p = ps[0]
        if len(supp) == 1:
            (i, c) = supp[0]
            if k == "so_odd":
                return i < p  # short roots +-e_i
            return True  # long roots +-2e_i of sp(p,q)
        (i, _), (j, _) = supp
        return _block(i, p) == _block(j, p)
    # sp(n,R) and so*(2n): compact roots are exactly the +-(e_i - e_j)
    if len(supp) == 1:
        return False
    (i, ci), (j, cj) = supp
    return ci == -cj


@lru_cache(maxsize=None)
def split(rs: RootSystem, form: RealForm) -> RealFormSplit:
    """Compact/noncompact split R = R_c u R_nc of ``rs`` for ``form``."""
    if rs.family != form.family or rs.rank != form.rank:
        raise ValueError(f"{form.name} needs {form.family}{form.rank}, got {rs.name}")
    compact = 0
    for idx, a in enumerate(rs.roots):
        if is_compact_root(form, a):
            compact |= 1 << idx
    return RealFormSplit(form, rs, compact)


def split_for(form: RealForm) -> RealFormSplit:
    return split(_rs(form.family, form.rank), form)


@lru_cache(maxsize=None)
def _rs(family: str, rank: int) -> RootSystem:
    return build_root_system(family, rank)


class NotAdmissible(ValueError):
    """Raised when a noncompact root vanishes on z."""

    def __init__(self, z: Sequence[int], root: RootVec):
        super().__init__(f"z={tuple(z)} is not admissible: noncompact root {root} vanishes on it")
        self.z = tuple(z)
        self.root = root


@dataclass(frozen=True)
class AdmissibleElement:
    z: tuple[int, ...]
    vanishing: int

    @property
    def is_regular(self) -> bool:
        return self.vanishing == 0


def admissibility(z: Sequence[int], sp: RealFormSplit) -> AdmissibleElement:
    """Check that every root vanishing on ``z`` is compact."""
    rs = sp.rs
    if len(z) != rs.ambient_dim:
        raise ValueError(f"z has dimension {len(z)}, expected {rs.ambient_dim}")
    vanishing = 0
    for idx, a in enumerate(rs.roots):
        if inner(a, z) == 0:
            if not (sp.compact >> idx) & 1:
                raise NotAdmissible(z, a)
            vanishing |= 1 << idx
    return AdmissibleElement(tuple(z), vanishing)


@dataclass(frozen=True)
class Table2Entry:
    form: RealForm
    isotropy: str
    u_block: str  # "P" or "Q": which block carries the u(k) factor
    z: AdmissibleElement

    @property
    def name(self) -> str:
        return f"{self.form.name} / {self.isotropy}"


def _table2_variants(form: RealForm) -> list[tuple[str, str]]:
    if len(form.params) != 2 or form.kind == "su":
        return []
    p, q = form.params
    if form.kind == "so_odd":
        return [("Q", f"R+so({2 * p + 1})+su({q})")]
    if form.kind == "sp":
        return [("P", f"R+su({p})+sp({q})"), ("Q", f"R+sp({p})+su({q})")]
    if form.kind == "so_even":
        return [("P", f"R+su({p})+so({2 * q})"), ("Q", f"R+so({2 * p})+su({q})")]
    return []  # pragma: no cover


def table2_z(form: RealForm, u_block: str) -> tuple[int, ...]:
    """0/1 indicator of the block carrying the u(k) factor."""
    p = form.params[0]
    m = form.rank
    if u_block == "P":
        return tuple(1 if i < p else 0 for i in range(m))
    return tuple(0 if i < p else 1 for i in range(m))


def table2_catalog(max_rank: int = 6) -> list[Table2Entry]:
    """Isotropy rows with one-dimensional center (so(2p+1,2q), both sp(p,q) and both so(2p,2q) variants)
    up to ``max_rank``. Raises ``NotAdmissible`` if a canonical z fails."""
    out = []
    for form in catalog(max_rank):
        for block, iso in _table2_variants(form):
            sp = split_for(form)
            out.append(Table2Entry(form, iso, block, admissibility(table2_z(form, block), sp)))
    return out


def centralizer_roots(elem: AdmissibleElement, sp: RealFormSplit) -> list[RootVec]:
    return sp.rs.members(elem.vanishing)


def vanishing_is_compact(elem: AdmissibleElement, sp: RealFormSplit) -> bool:
    return elem.vanishing & ~sp.compact == 0


def grading_holds(sp: RealFormSplit) -> bool:
    """Z2-grading of a symmetric pair: c+c -> c, c+nc -> nc, nc+nc -> c."""
    rs = sp.rs
    n = len(rs.roots)
    for i in range(n):
        ci = (sp.compact >> i) & 1
        a = rs.roots[i]
        for j in range(i, n):
            k = rs.find(tuple(x + y for x, y in zip(a, rs.roots[j])))
            if k is None:
                continue
            cj = (sp.compact >> j) & 1
            ck = (sp.compact >> k) & 1
            if ck != (1 if ci == cj else 0):
                return False
    return True


__all__ = [
    "AdmissibleElement",
    "NotAdmissible",
    "RealForm",
    "RealFormSplit",
    "Table2Entry",
    "admissibility",
    "catalog",
    "centralizer_roots",
    "grading_holds",
    "is_compact_root",
    "parse_form",
    "split",
    "split_for",
    "table2_catalog",
    "table2_z",
]
