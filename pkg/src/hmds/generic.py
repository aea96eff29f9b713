"""
Generic collections of subsets of [n].

A collection (A_1, ..., A_l) with every |A_i| <= k is *(n, k, l)-generic*
when, for every set partition P_1 | ... | P_s of the l positions,

    sum_i |intersection_{j in P_i} A_j| <= (s - 1) k.

Index sets are 0-based internally and 1-based in JSON.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

__all__ = [
    "SubsetCollection",
    "partitions",
    "is_generic",
    "enumerate_generic",
    "enumerate_km1_generic",
    "size_signatures",
]


def _canonical(sets) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(s)) for s in sets), key=lambda s: (-len(s), s)))


@dataclass(frozen=True)
class SubsetCollection:
    """Unordered multiset of subsets of ``range(n)``, kept in canonical order
    (size descending, then lexicographic)."""

    n: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        sets = _canonical(self.sets)
        for s in sets:
            if len(set(s)) != len(s):
                raise ValueError(f"repeated element in {s}")
            if s and (s[0] < 0 or s[-1] >= self.n):
                raise ValueError(f"set {s} not contained in [0, {self.n})")
        object.__setattr__(self, "sets", sets)

    @property
    def ell(self) -> int:
        return len(self.sets)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    def masks(self) -> list[int]:
        return [sum(1 << i for i in s) for s in self.sets]

    def to_json(self) -> dict:
        return {"n": self.n, "sets": [[i + 1 for i in s] for s in self.sets]}

    @classmethod
    def from_json(cls, d: dict) -> "SubsetCollection":
        return cls(d["n"], tuple(tuple(i - 1 for i in s) for s in d["sets"]))

    def __str__(self):
        inner = ", ".join("{" + ",".join(str(i + 1) for i in s) + "}" for s in self.sets)
        return f"[{inner}]"


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------

def partitions(ell: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every set partition of ``range(ell)``, once, in restricted-growth order."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    a = [0] * ell
    while True:
        blocks: list[list[int]] = [[] for _ in range(max(a) + 1)]
        for i, b in enumerate(a):
            blocks[b].append(i)
        yield tuple(tuple(b) for b in blocks)
        # next restricted growth string: a[0] = 0, a[i] <= 1 + max(a[:i])
        i = ell - 1
        while i > 0 and a[i] > max(a[:i]):
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, ell):
            a[j] = 0


@lru_cache(maxsize=None)
def _partition_table(ell: int) -> tuple:
    # (block index tuples, s - 1); the all-in-one block first, then pairs merged
    parts = [(p, len(p) - 1) for p in partitions(ell)]
    parts.sort(key=lambda t: -t[1])
    return tuple(parts)


def _generic_masks(masks, k: int) -> bool:
    for blocks, s1 in _partition_table(len(masks)):
        budget = s1 * k
        total = 0
        for block in blocks:
            m = masks[block[0]]
            for j in block[1:]:
                m &= masks[j]
            total += m.bit_count()
            if total > budget:
                return False
    return True


def is_generic(collection, k: int) -> bool:
    """Whether ``collection`` is (n, k, l)-generic.

    Raises ValueError if some set has more than ``k`` elements.
    """
    sets = getattr(collection, "sets", collection)
    masks = []
    for s in sets:
        if len(s) > k:
            raise ValueError(f"set {tuple(s)} has more than k={k} elements")
        masks.append(sum(1 << i for i in s))
    if not masks:
        raise ValueError("empty collection")
    return _generic_masks(masks, k)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def size_signatures(k: int, ell: int, total: int, lo: int = 1) -> list[tuple[int, ...]]:
    """Non-increasing size tuples in [lo, k]^ell summing to ``total``,
    in lexicographic order."""
    out = []

    def rec(prefix, remaining, cap):
        slots = ell - len(prefix)
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for s in range(lo, min(cap, remaining) + 1):
            rest = remaining - s
            if rest < lo * (slots - 1) or rest > s * (slots - 1):
                continue
            rec(prefix + [s], rest, s)

    rec([], total, k)
    return sorted(out)


def enumerate_generic(n: int, k: int, ell: int) -> Iterator[SubsetCollection]:
    """All canonical (n, k, ell)-generic collections of nonempty sets with
    sizes summing to (ell - 1) k.

    Order: size signatures lexicographically, then the sets of each size
    class in lexicographic order.  Collections containing an empty set are
    never emitted; their intersection is trivially zero.
    """
    if ell < 2:
        raise ValueError("generic collections are only enumerated for ell >= 2")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    subsets = {s: [(c, sum(1 << i for i in c)) for c in itertools.combinations(range(n), s)]
               for s in range(1, k + 1)}
    for sig in size_signatures(k, ell, (ell - 1) * k):
        for picked in _dfs_signature(sig, subsets, k):
            # already canonical: sizes descend, lex order within a size class
            yield _trusted(n, picked)


@lru_cache(maxsize=None)
def _prefix_checks(ell: int) -> tuple:
    # partitions of range(d) in which d - 1 shares a block, for d = 2..ell,
    # blocks as bitmasks over positions; partitions where d - 1 is alone add
    # nothing beyond depth d - 1
    table = [()] * (ell + 1)
    for d in range(2, ell + 1):
        rows = []
        for p in partitions(d):
            if any(d - 1 in b and len(b) > 1 for b in p):
                rows.append((tuple(sum(1 << j for j in b) for b in p), len(p)))
        table[d] = tuple(rows)
    return tuple(table)


def _dfs_signature(sig, subsets, k):
    ell = len(sig)
    checks = _prefix_checks(ell)
    # residual[d]: total size of the sets still to be placed after the first d
    residual = [sum(sig[d:]) for d in range(ell + 1)]
    # meet[S] / cnt[S]: intersection of the placed sets at positions S
    meet = [-1] * (1 << ell)
    cnt = [0] * (1 << ell)
    chosen: list = [None] * ell

    def place(d, m):
        bit = 1 << d
        for S in range(bit):
            x = meet[S] & m
            meet[S | bit] = x
            cnt[S | bit] = x.bit_count()

    def ok(d):
        # unplaced sets sit in singleton blocks: each adds |A_i| and k
        r = ell - d
        slack = (r - 1) * k - residual[d]
        for blocks, s in checks[d]:
            budget = s * k + slack
            total = 0
            for b in blocks:
                total += cnt[b]
            if total > budget:
                return False
        return True

    def rec(d, start):
        if d == ell:
            yield tuple(chosen)
            return
        pool = subsets[sig[d]]
        first = start if d > 0 and sig[d] == sig[d - 1] else 0
        for idx in range(first, len(pool)):
            c, m = pool[idx]
            place(d, m)
            chosen[d] = c
            if d == 0 or ok(d + 1):
                next_start = idx if d + 1 < ell and sig[d + 1] == sig[d] else 0
                yield from rec(d + 1, next_start)

    yield from rec(0, 0)


def enumerate_km1_generic(n: int, k: int) -> Iterator[SubsetCollection]:
    """(n, k, k)_{k-1}-generic collections: k distinct (k-1)-subsets."""
    if k < 2:
        raise ValueError("k must be >= 2")
    subs = [(c, sum(1 << i for i in c)) for c in itertools.combinations(range(n), k - 1)]
    for combo in itertools.combinations(subs, k):
        if _generic_masks([m for _, m in combo], k):
            yield _trusted(n, tuple(c for c, _ in combo))


def _trusted(n: int, sets) -> SubsetCollection:
    # skip validation for sets produced by the enumerators
    obj = object.__new__(SubsetCollection)
    object.__setattr__(obj, "n", n)
    object.__setattr__(obj, "sets", sets)
    return obj
