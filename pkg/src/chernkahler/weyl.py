"""Weyl groups of classical type as signed permutations, and their chambers.

An element acts by ``w(e_i) = phi_i * e_{sigma(i)}``. ``sigma`` is stored
0-based in one-line notation; the textual encoding is 1-based.

Enumeration order (also the sharding index): lexicographic in ``sigma``,
then lexicographic in ``phi`` with ``+`` before ``-``. For family D only
sign vectors with an even number of ``-`` occur.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .rootsys import (
    RootSystem,
    RootVec,
    ambient_dim,
    bits,
    check_family_rank,
    is_closed,
)


@dataclass(frozen=True)
class SignedPerm:
    family: str
    sigma: tuple[int, ...]
    phi: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.sigma)
        if sorted(self.sigma) != list(range(m)):
            raise ValueError(f"sigma={self.sigma} is not a permutation of 0..{m - 1}")
        if len(self.phi) != m or any(s not in (1, -1) for s in self.phi):
            raise ValueError(f"phi={self.phi} must be a +-1 vector of length {m}")
        if self.family == "A" and any(s != 1 for s in self.phi):
            raise ValueError("family A admits no sign changes")
        if self.family == "D" and math.prod(self.phi) != 1:
            raise ValueError(f"family D requires an even number of sign changes, got phi={self.phi}")

    @classmethod
    def identity(cls, family: str, rank: int) -> "SignedPerm":
        m = ambient_dim(family, rank)
        return cls(family, tuple(range(m)), (1,) * m)

    @classmethod
    def from_text(cls, family: str, perm: str, signs: str = "") -> "SignedPerm":
        """Parse ``"1 4 2 5 3"`` plus an optional sign string such as ``"++-+"``."""
        sigma = tuple(int(t) - 1 for t in perm.split())
        phi = tuple(1 if ch == "+" else -1 for ch in signs) if signs else (1,) * len(sigma)
        return cls(family, sigma, phi)

    @classmethod
    def from_cycles(cls, family: str, m: int, *cycles: Sequence[int]) -> "SignedPerm":
        """Build from 1-based cycles, e.g. ``from_cycles("A", 5, (2, 4, 5, 3))``."""
        img = list(range(m))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b - 1
        return cls(family, tuple(img), (1,) * m)

    @property
    def perm_text(self) -> str:
        return " ".join(str(s + 1) for s in self.sigma)

    @property
    def sign_text(self) -> str:
        return "" if self.family == "A" else "".join("+" if s > 0 else "-" for s in self.phi)

    def __str__(self) -> str:
        st = self.sign_text
        return f"[{self.perm_text}]" + (f" {st}" if st else "")

    def inverse(self) -> "SignedPerm":
        m = len(self.sigma)
        inv = [0] * m
        phi = [1] * m
        for i, s in enumerate(self.sigma):
            inv[s] = i
            phi[s] = self.phi[i]
        return SignedPerm(self.family, tuple(inv), tuple(phi))

    def compose(self, other: "SignedPerm") -> "SignedPerm":
        """``self . other``."""
        sigma = tuple(self.sigma[other.sigma[i]] for i in range(len(self.sigma)))
        phi = tuple(other.phi[i] * self.phi[other.sigma[i]] for i in range(len(self.sigma)))
        return SignedPerm(self.family, sigma, phi)


def act(w: SignedPerm, a: Sequence[int]) -> RootVec:
    m = len(w.sigma)
    if len(a) != m:
        raise ValueError(f"dimension mismatch: element acts on {m} coordinates, vector has {len(a)}")
    out = [0] * m
    for i, c in enumerate(a):
        if c:
            out[w.sigma[i]] = w.phi[i] * c
    return tuple(out)


def sign_count(family: str, m: int) -> int:
    return {"A": 1, "B": 2**m, "C": 2**m, "D": 2 ** (m - 1)}[family]


def weyl_order(family: str, rank: int) -> int:
    check_family_rank(family, rank)
    m = ambient_dim(family, rank)
    return math.factorial(m) * sign_count(family, m)


def _unrank_perm(r: int, m: int) -> tuple[int, ...]:
    avail = list(range(m))
    out = []
    for t in range(m):
        f = math.factorial(m - 1 - t)
        d, r = divmod(r, f)
        out.append(avail.pop(d))
    return tuple(out)


def _unrank_signs(r: int, family: str, m: int) -> tuple[int, ...]:
    if family == "A":
        return (1,) * m
    width = m - 1 if family == "D" else m
    signs = [-1 if (r >> (width - 1 - t)) & 1 else 1 for t in range(width)]
    if family == "D":
        signs.append(math.prod(signs))
    return tuple(signs)


def unrank(family: str, rank: int, index: int) -> SignedPerm:
    """The element at position ``index`` of the enumeration order."""
    order = weyl_order(family, rank)
    if not 0 <= index < order:
        raise IndexError(f"index {index} outside 0..{order - 1}")
    m = ambient_dim(family, rank)
    ps, ss = divmod(index, sign_count(family, m))
    return SignedPerm(family, _unrank_perm(ps, m), _unrank_signs(ss, family, m))


def rank_of(w: SignedPerm) -> int:
    """Inverse of :func:`unrank`."""
    m = len(w.sigma)
    avail = list(range(m))
    pr = 0
    for t, s in enumerate(w.sigma):
        d = avail.index(s)
        avail.pop(d)
        pr += d * math.factorial(m - 1 - t)
    sr = 0
    if w.family != "A":
        width = m - 1 if w.family == "D" else m
        for t in range(width):
            sr = (sr << 1) | (1 if w.phi[t] < 0 else 0)
    return pr * sign_count(w.family, m) + sr


def enumerate_weyl(
    family: str, rank: int, start: int = 0, stop: Optional[int] = None, block: int = 4096
) -> Iterator[SignedPerm]:
    """Stream group elements with indices in ``[start, stop)``."""
    order = weyl_order(family, rank)
    stop = order if stop is None else min(stop, order)
    for lo in range(start, stop, block):
        sig, phi = unrank_block(family, rank, lo, min(lo + block, stop))
        for s, f in zip(sig.tolist(), phi.tolist()):
            yield SignedPerm(family, tuple(s), tuple(f))


def unrank_block(family: str, rank: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized unranking of indices ``start..stop-1``.

    Returns ``(sigma, phi)`` as ``(N, m)`` int64 arrays.
    """
    m = ambient_dim(family, rank)
    nphi = sign_count(family, m)
    idx = np.arange(start, stop, dtype=np.int64)
    prank, srank = np.divmod(idx, nphi)

    uniq, inverse = np.unique(prank, return_inverse=True)
    k = len(uniq)
    avail = np.tile(np.arange(m, dtype=np.int64), (k, 1))
    rem = uniq.copy()
    cols = []
    rows = np.arange(k)
    for t in range(m):
        f = math.factorial(m - 1 - t)
        d, rem = np.divmod(rem, f)
        cols.append(avail[rows, d])
        keep = np.ones(avail.shape, dtype=bool)
        keep[rows, d] = False
        avail = avail[keep].reshape(k, m - 1 - t)
    sigma = np.stack(cols, axis=1)[inverse]

    if family == "A":
        phi = np.ones((len(idx), m), dtype=np.int64)
    else:
        width = m - 1 if family == "D" else m
        shifts = np.arange(width - 1, -1, -1, dtype=np.int64)
        bitsarr = (srank[:, None] >> shifts[None, :]) & 1
        phi = 1 - 2 * bitsarr
        if family == "D":
            phi = np.concatenate([phi, np.prod(phi, axis=1, keepdims=True)], axis=1)
    return sigma, phi


def random_element(family: str, rank: int, rng: np.random.Generator) -> SignedPerm:
    m = ambient_dim(family, rank)
    sigma = tuple(int(x) for x in rng.permutation(m))
    if family == "A":
        phi = (1,) * m
    else:
        phi = [int(x) for x in rng.choice((1, -1), size=m)]
        if family == "D" and math.prod(phi) != 1:
            phi[-1] = -phi[-1]
        phi = tuple(phi)
    return SignedPerm(family, sigma, phi)


@dataclass(frozen=True)
class PositiveSystem:
    rs: RootSystem
    members: int

    def roots(self) -> list[RootVec]:
        return self.rs.members(self.members)

    def __contains__(self, a: object) -> bool:
        i = self.rs.find(a)  # type: ignore[arg-type]
        return i is not None and bool((self.members >> i) & 1)

    def is_valid(self) -> bool:
        """Exactly one of each pair +-alpha, and closed under addition."""
        rs = self.rs
        for i in bits(self.members):
            if (self.members >> rs.neg_index(i)) & 1:
                return False
        if bin(self.members).count("1") * 2 != len(rs.roots):
            return False
        return is_closed(self.members, rs)


def chamber(w: SignedPerm, rs: RootSystem) -> PositiveSystem:
    """The positive system w(R_o^+)."""
    if w.family != rs.family or len(w.sigma) != rs.ambient_dim:
        raise ValueError(f"element of {w.family} on {len(w.sigma)} letters does not act on {rs.name}")
    mask = 0
    for i in bits(rs.base_positive):
        mask |= 1 << rs.index(act(w, rs.roots[i]))
    return PositiveSystem(rs, mask)


def chamber_to_z(ps: PositiveSystem) -> tuple[int, ...]:
    """Regular representative of the chamber: the sum of its roots."""
    acc = [0] * ps.rs.ambient_dim
    for a in ps.roots():
        for i, x in enumerate(a):
            acc[i] += x
    return tuple(acc)


def negation(w: SignedPerm) -> SignedPerm:
    """Element whose chamber is the negative of w's chamber: w composed with
    the longest element (-1 for B/C and even-rank D, order reversal for A).
    For odd-rank D, -1 is not in W; the longest element is then
    -1 followed by the sign flip of the last coordinate."""
    m = len(w.sigma)
    fam = w.family
    if fam == "A":
        w0 = SignedPerm(fam, tuple(range(m - 1, -1, -1)), (1,) * m)
    elif fam == "D" and m % 2:
        w0 = SignedPerm(fam, tuple(range(m)), (-1,) * (m - 1) + (1,))
    else:
        w0 = SignedPerm(fam, tuple(range(m)), (-1,) * m)
    return w.compose(w0)
