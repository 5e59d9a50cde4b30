"""Classical root systems A_n, B_n, C_n, D_n in epsilon-coordinates.

Roots are plain tuples of ints. Every membership set over a root system is
a Python ``int`` used as a bit-vector over the canonical (lexicographic)
root order, so intersections and unions are single ``&`` / ``|`` operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

RootVec = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D")


def _unit(m: int, entries: dict[int, int]) -> RootVec:
    v = [0] * m
    for i, c in entries.items():
        v[i] += c
    return tuple(v)


def ambient_dim(family: str, rank: int) -> int:
    return rank + 1 if family == "A" else rank


def check_family_rank(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")
    if family == "D" and rank < 3:
        raise ValueError(f"D_n requires rank >= 3, got {rank}")


def positive_roots(family: str, rank: int) -> list[RootVec]:
    """Standard positive system R_o^+ (unsorted, generation order)."""
    check_family_rank(family, rank)
    m = ambient_dim(family, rank)
    out: list[RootVec] = []
    if family == "A":
        for i, j in combinations(range(m), 2):
            out.append(_unit(m, {i: 1, j: -1}))
        return out
    for i, j in combinations(range(m), 2):
        out.append(_unit(m, {i: 1, j: -1}))
        out.append(_unit(m, {i: 1, j: 1}))
    if family == "B":
        out.extend(_unit(m, {i: 1}) for i in range(m))
    elif family == "C":
        out.extend(_unit(m, {i: 2}) for i in range(m))
    return out


def simple_roots(family: str, rank: int) -> list[RootVec]:
    """Simple roots of R_o^+ (a basis; every positive root is a
    non-negative integer combination of these)."""
    check_family_rank(family, rank)
    m = ambient_dim(family, rank)
    out = [_unit(m, {i: 1, i + 1: -1}) for i in range(m - 1)]
    if family == "B":
        out.append(_unit(m, {m - 1: 1}))
    elif family == "C":
        out.append(_unit(m, {m - 1: 2}))
    elif family == "D":
        out.append(_unit(m, {m - 2: 1, m - 1: 1}))
    return out


def inner(a: Sequence[int], b: Sequence[int]) -> int:
    """Euclidean pairing of two epsilon-coordinate vectors."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def neg(a: Sequence[int]) -> RootVec:
    return tuple(-x for x in a)


def vsum(vectors: Iterable[Sequence[int]], m: int) -> RootVec:
    acc = [0] * m
    for v in vectors:
        for i, x in enumerate(v):
            acc[i] += x
    return tuple(acc)


def is_zero_weight(v: Sequence[int], family: str) -> bool:
    """Zero test for a weight; for family A it is taken modulo the
    all-ones vector (the only relation among the epsilon_i there)."""
    if family == "A":
        return all(x == v[0] for x in v)
    return all(x == 0 for x in v)


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    roots: tuple[RootVec, ...]
    base_positive: int
    _index: dict[RootVec, int] = field(repr=False, compare=False, hash=False)
    _neg: tuple[int, ...] = field(repr=False, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.roots)) - 1

    def index(self, a: Sequence[int]) -> int:
        """Position of root ``a`` in the canonical order (KeyError if not a root)."""
        return self._index[tuple(a)]

    def find(self, a: Sequence[int]) -> Optional[int]:
        return self._index.get(tuple(a))

    def __contains__(self, a: object) -> bool:
        try:
            return tuple(a) in self._index  # type: ignore[arg-type]
        except TypeError:
            return False

    def neg_index(self, i: int) -> int:
        return self._neg[i]

    def neg_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << self._neg[i]
        return out

    def mask_of(self, roots: Iterable[Sequence[int]]) -> int:
        mask = 0
        for a in roots:
            mask |= 1 << self.index(a)
        return mask

    def members(self, mask: int) -> list[RootVec]:
        return [self.roots[i] for i in bits(mask)]

    def positive(self) -> list[RootVec]:
        return self.members(self.base_positive)

    def simple(self) -> list[RootVec]:
        return simple_roots(self.family, self.rank)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


def build_root_system(family: str, rank: int) -> RootSystem:
    """Full root system of type ``family``/``rank`` with R_o^+ marked.

    >>> rs = build_root_system("A", 2)
    >>> len(rs), bin(rs.base_positive).count("1")
    (6, 3)
    """
    check_family_rank(family, rank)
    pos = positive_roots(family, rank)
    roots = tuple(sorted(pos + [neg(a) for a in pos]))
    index = {a: i for i, a in enumerate(roots)}
    negs = tuple(index[neg(a)] for a in roots)
    base = 0
    for a in pos:
        base |= 1 << index[a]
    return RootSystem(
        family=family,
        rank=rank,
        ambient_dim=ambient_dim(family, rank),
        roots=roots,
        base_positive=base,
        _index=index,
        _neg=negs,
    )


def add_root(a: Sequence[int], b: Sequence[int], rs: RootSystem) -> Optional[RootVec]:
    """``a + b`` if it is a root of ``rs``, else ``None``."""
    if a not in rs or b not in rs:
        raise ValueError("add_root expects two roots of the given system")
    s = tuple(x + y for x, y in zip(a, b))
    return s if s in rs else None


def root_count(family: str, rank: int) -> int:
    n = rank
    return {"A": n * (n + 1), "B": 2 * n * n, "C": 2 * n * n, "D": 2 * n * (n - 1)}[family]


def addition_triples(rs: RootSystem) -> list[tuple[int, int, int]]:
    """All (i, j, k) with roots[i] + roots[j] = roots[k], i < j."""
    out = []
    n = len(rs.roots)
    for i in range(n):
        a = rs.roots[i]
        for j in range(i + 1, n):
            k = rs.find(tuple(x + y for x, y in zip(a, rs.roots[j])))
            if k is not None:
                out.append((i, j, k))
    return out


@lru_cache(maxsize=64)
def triple_arrays(rs: RootSystem) -> np.ndarray:
    """:func:`addition_triples` as a ``(T, 3)`` array, cached per system."""
    t = addition_triples(rs)
    return np.array(t, dtype=np.int64).reshape(len(t), 3)


def mask_to_bool(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8 or 1, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def is_closed(mask: int, rs: RootSystem) -> bool:
    """Closedness of a root subset under addition within R."""
    t = triple_arrays(rs)
    if not len(t):
        return True
    m = mask_to_bool(mask, len(rs.roots))
    return not np.any(m[t[:, 0]] & m[t[:, 1]] & ~m[t[:, 2]])
