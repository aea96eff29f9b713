"""
Deciding whether a generator matrix is (n, k)-MDS(l).

The main route enumerates the generic collections with sizes summing to
(l - 1) k and checks that the column spans of each collection meet only in
zero, either through subspace intersection or through the block determinant
of :func:`hmds.linalg.block_matrix`.  :func:`is_mds_ell_reduced` adds the
structural shortcuts (order above k collapses to k; the last step up to k
only needs collections of k distinct (k-1)-sets).  :func:`check_definition3`
is an independent oracle that compares every intersection dimension against
randomly sampled matrices over a large prime field.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .generic import SubsetCollection, enumerate_generic, enumerate_km1_generic, is_generic
from .gf import field_new, next_prime
from .linalg import MatrixGF, Subspace, _det, _rref, block_matrix, span

__all__ = [
    "VerificationReport",
    "GenericDimQuery",
    "DEFAULT_PRIME",
    "is_mds",
    "is_mds_ell",
    "is_mds_ell_reduced",
    "generic_dim_oracle",
    "check_definition3",
    "zero_intersection_test",
    "recheck_witness",
    "record_verdicts",
    "monotonicity_violations",
]

DEFAULT_PRIME = next_prime(1 << 20)
METHODS = ("subspace", "block-det")


@dataclass
class VerificationReport:
    property: str
    holds: bool
    witness: SubsetCollection | None = None
    collections_checked: int = 0
    method: str = ""
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        d = {
            "property": self.property,
            "holds": self.holds,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "collections_checked": self.collections_checked,
            "method": self.method,
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }
        if self.notes:
            d["notes"] = self.notes
        return d


# ---------------------------------------------------------------------------
# verdict recording (monotonicity audit)
# ---------------------------------------------------------------------------

_recorders: list[list] = []


@contextmanager
def record_verdicts():
    """Collect ``(code_key, ell, holds)`` for every MDS(l) verdict issued
    inside the block."""
    log: list = []
    _recorders.append(log)
    try:
        yield log
    finally:
        _recorders.remove(log)


def code_key(V: MatrixGF):
    """Generator-independent identity of the row space of ``V``."""
    red, _ = _rref([list(r) for r in V.entries], V.field, V.cols)
    return (V.field, V.cols, tuple(tuple(r) for r in red))


def _record(V: MatrixGF, ell: int, holds: bool) -> None:
    if _recorders:
        key = code_key(V)
        for log in _recorders:
            log.append((key, ell, holds))


def monotonicity_violations(log) -> list[tuple]:
    """Entries of a verdict log where a code holds MDS(l) but fails some
    lower order l' < l (l >= 3)."""
    by_code: dict = {}
    for key, ell, holds in log:
        by_code.setdefault(key, {}).setdefault(ell, set()).add(holds)
    bad = []
    for key, verdicts in by_code.items():
        for ell, hs in verdicts.items():
            if ell >= 3 and True in hs:
                for lower, ls in verdicts.items():
                    if lower < ell and False in ls:
                        bad.append((key, ell, lower))
    return bad


# ---------------------------------------------------------------------------
# zero-intersection tests
# ---------------------------------------------------------------------------

class _SubspaceTest:
    """intersect_dim == 0, with the spans of single index sets cached."""

    def __init__(self, V: MatrixGF):
        self.V = V
        self.k = V.rows
        self.cache: dict = {}

    def span(self, A) -> Subspace:
        s = self.cache.get(A)
        if s is None:
            s = self.cache[A] = span(self.V, A)
        return s

    def __call__(self, C) -> bool:
        sets = sorted(getattr(C, "sets", C), key=len)
        if not sets[0]:
            return True
        cur = self.span(sets[0])
        for A in sets[1:]:
            other = self.span(A)
            if other.dim == self.k:
                continue
            cur = cur.intersect(other)
            if cur.dim == 0:
                return True
        return cur.dim == 0


class _BlockDetTest:
    def __init__(self, V: MatrixGF):
        self.V = V

    def __call__(self, C) -> bool:
        M = block_matrix(self.V, C)
        return _det([list(r) for r in M.entries], M.field) != 0


def zero_intersection_test(V: MatrixGF, method: str) -> Callable:
    """Callable ``C -> bool`` deciding whether the spans in ``C`` meet only in 0."""
    if method == "subspace":
        return _SubspaceTest(V)
    if method == "block-det":
        return _BlockDetTest(V)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def recheck_witness(V: MatrixGF, witness: SubsetCollection) -> bool:
    """True when ``witness`` is a genuine violation for ``V``, checked from
    scratch: a rank-deficient column set, or a generic collection whose
    spans meet nontrivially."""
    k = V.rows
    if witness.ell == 1:
        A = witness.sets[0]
        return len(A) == k and span(V, A).dim < k
    if not is_generic(witness, k):
        return False
    if sum(witness.sizes) != (witness.ell - 1) * k:
        return False
    return not _SubspaceTest(V)(witness)


# ---------------------------------------------------------------------------
# scanning a collection stream
# ---------------------------------------------------------------------------

def _scan(collections: Iterable, test: Callable, progress=None, every: int = 10000):
    """First failing collection (or None) and the number examined."""
    count = 0
    for C in collections:
        count += 1
        if not test(C):
            return C, count
        if progress is not None and count % every == 0:
            progress(count)
    return None, count


def _scan_chunk(args):
    V, method, chunk = args
    test = zero_intersection_test(V, method)
    for i, C in enumerate(chunk):
        if not test(C):
            return i
    return None


def _scan_parallel(collections, V, method, workers):
    items = list(collections)
    if not items:
        return None, 0
    size = max(1, -(-len(items) // (4 * workers)))
    chunks = [items[i:i + size] for i in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_scan_chunk, [(V, method, c) for c in chunks]))
    # smallest enumeration index among failures, independent of worker count
    for ci, r in enumerate(results):
        if r is not None:
            idx = ci * size + r
            return items[idx], idx + 1
    return None, len(items)


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def is_mds(V: MatrixGF) -> VerificationReport:
    """Every k columns independent."""
    t0 = time.perf_counter()
    k, n = V.shape
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    F = V.field
    count = 0
    for A in itertools.combinations(range(n), k):
        count += 1
        sub = [[row[j] for j in A] for row in V.entries]
        if _det(sub, F) == 0:
            rep = VerificationReport("MDS(1)", False, SubsetCollection(n, (A,)), count, "rank",
                                     time.perf_counter() - t0)
            _record(V, 1, False)
            return rep
    _record(V, 1, True)
    return VerificationReport("MDS(1)", True, None, count, "rank", time.perf_counter() - t0)


def _not_mds_report(ell, mds_rep, t0):
    return VerificationReport(f"MDS({ell})", False, mds_rep.witness, mds_rep.collections_checked,
                              "rank", time.perf_counter() - t0, {"failed_order": 1})


def is_mds_ell(V: MatrixGF, ell: int, method: str = "block-det", *, workers: int = 1,
               progress=None, test: Callable | None = None) -> VerificationReport:
    """Decide (n, k)-MDS(ell) by checking every generic collection.

    ``method`` selects the zero-intersection test (``"subspace"`` or
    ``"block-det"``); a custom ``test`` callable overrides it.  Orders 1 and
    2 reduce to the MDS rank check.  A matrix that is not MDS is reported as
    failing with the singular column set as witness.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    if test is None and method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    t0 = time.perf_counter()
    k, n = V.shape
    mds = is_mds(V)
    if not mds.holds:
        _record(V, ell, False)
        return _not_mds_report(ell, mds, t0)
    if ell <= 2:
        _record(V, ell, True)
        return VerificationReport(f"MDS({ell})", True, None, mds.collections_checked, "rank",
                                  time.perf_counter() - t0)
    stream = enumerate_generic(n, k, ell)
    if workers > 1 and test is None:
        bad, count = _scan_parallel(stream, V, method, workers)
    else:
        bad, count = _scan(stream, test or zero_intersection_test(V, method), progress)
    holds = bad is None
    _record(V, ell, holds)
    return VerificationReport(f"MDS({ell})", holds, bad, count, method,
                              time.perf_counter() - t0)


def is_mds_ell_reduced(V: MatrixGF, ell: int, method: str = "block-det", *,
                       test: Callable | None = None, progress=None) -> VerificationReport:
    """Same verdict as :func:`is_mds_ell`, computed with the shortcuts:

    * orders l >= k are decided at order k;
    * orders 3 .. k-1 are checked in turn, stopping at the first failure;
    * the final step to order k only visits collections of k distinct
      (k-1)-subsets.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    t0 = time.perf_counter()
    k, n = V.shape
    mds = is_mds(V)
    if not mds.holds:
        _record(V, ell, False)
        return _not_mds_report(ell, mds, t0)
    target = min(ell, k)
    label = f"reduced/{method if test is None else 'custom'}"
    notes = {"effective_order": max(target, 1)}
    if target <= 2:
        _record(V, ell, True)
        return VerificationReport(f"MDS({ell})", True, None, mds.collections_checked, label,
                                  time.perf_counter() - t0, notes)
    check = test or zero_intersection_test(V, method)
    total = 0
    for level in range(3, target + 1):
        if level == k:
            stream = enumerate_km1_generic(n, k)
        else:
            stream = enumerate_generic(n, k, level)
        bad, count = _scan(stream, check, progress)
        total += count
        if bad is not None:
            notes["failed_order"] = level
            _record(V, ell, False)
            return VerificationReport(f"MDS({ell})", False, bad, total, label,
                                      time.perf_counter() - t0, notes)
    _record(V, ell, True)
    return VerificationReport(f"MDS({ell})", True, None, total, label,
                              time.perf_counter() - t0, notes)


# ---------------------------------------------------------------------------
# sampling oracle for the generic intersection dimension
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenericDimQuery:
    n: int
    k: int
    collection: SubsetCollection
    trials: int = 5
    prime: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        budget = self.collection.ell * self.k ** 2
        if self.prime <= 2 * budget:
            raise ValueError(f"prime {self.prime} too small for degree budget {budget}")


def _random_matrix(F, k, n, rng: random.Random) -> MatrixGF:
    q = F.q
    return MatrixGF(F, [[rng.randrange(q) for _ in range(n)] for _ in range(k)], n)


def _dim_with(test: _SubspaceTest, C) -> int:
    sets = sorted(C.sets, key=len)
    if not sets[0]:
        return 0
    cur = test.span(sets[0])
    for A in sets[1:]:
        if cur.dim == 0:
            return 0
        cur = cur.intersect(test.span(A))
    return cur.dim


def generic_dim_oracle(query: GenericDimQuery, rng: random.Random | None = None) -> int:
    """Intersection dimension for a generic k x n matrix, estimated as the
    minimum over ``trials`` uniformly random matrices over GF(prime).

    Degenerate samples can only raise the dimension, so the minimum is the
    generic value as soon as one sample is generic.
    """
    rng = rng or random.Random(0)
    F = field_new(query.prime)
    best = None
    for _ in range(query.trials):
        W = _random_matrix(F, query.k, query.n, rng)
        d = _dim_with(_SubspaceTest(W), query.collection)
        best = d if best is None else min(best, d)
        if best == 0:
            break
    return best


def _all_tuples(n: int, k: int, ell: int):
    subs = [c for s in range(1, k + 1) for c in itertools.combinations(range(n), s)]
    for combo in itertools.combinations_with_replacement(subs, ell):
        yield SubsetCollection(n, combo)


def check_definition3(V: MatrixGF, ell: int, trials: int = 5, *, seed: int = 0,
                      prime: int = DEFAULT_PRIME, generic_cache: dict | None = None
                      ) -> VerificationReport:
    """Compare dim(V_A1 ^ ... ^ V_Al) with the sampled generic dimension for
    every multiset of ``ell`` nonempty subsets of size at most k.

    Desk scale only.  ``generic_cache`` may be shared between calls with the
    same (n, k, ell, trials, seed, prime) to avoid resampling.
    """
    t0 = time.perf_counter()
    k, n = V.shape
    rng = random.Random(seed)
    F = field_new(prime)
    samples = [_SubspaceTest(_random_matrix(F, k, n, rng)) for _ in range(trials)]
    mine = _SubspaceTest(V)
    cache = generic_cache if generic_cache is not None else {}
    count = 0
    notes = {"oracle_prime": prime, "code_characteristic": V.field.p}
    for C in _all_tuples(n, k, ell):
        count += 1
        g = cache.get(C.sets)
        if g is None:
            g = min(_dim_with(s, C) for s in samples)
            cache[C.sets] = g
        if _dim_with(mine, C) != g:
            return VerificationReport(f"MDS({ell})", False, C, count, "definition",
                                      time.perf_counter() - t0, notes)
    return VerificationReport(f"MDS({ell})", True, None, count, "definition",
                              time.perf_counter() - t0, notes)
