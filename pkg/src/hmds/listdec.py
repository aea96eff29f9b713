"""
Brute-force average-radius list decodability of small linear codes.

A code is LD-MDS(L) when no L+1 distinct codewords c_0..c_L and centre y
satisfy sum_i wt(c_i - y) <= L (n - k).  For a fixed tuple of codewords the
best centre is the coordinate-wise plurality, whose total weight is
sum_j (L + 1 - largest multiplicity in column j); that removes the search over
y.  Linearity lets us take c_0 = 0.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gf import FieldSpec
from .linalg import MatrixGF, dual, rank
from .verifier import VerificationReport, is_mds_ell

__all__ = [
    "CodeTooLarge",
    "LDWitness",
    "codewords",
    "optimal_center",
    "total_weight",
    "average_radius_search",
    "is_ld_mds",
    "duality_check",
    "max_ball_count",
    "singleton_list_bound",
    "MAX_CODEWORDS",
]

MAX_CODEWORDS = 1 << 16
MAX_TUPLES = 5 * 10**8


class CodeTooLarge(Exception):
    """The brute-force search would exceed the desk-scale budget."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


@dataclass
class LDWitness:
    y: tuple[int, ...]
    codewords: list[tuple[int, ...]]
    total_weight: int

    def to_json(self) -> dict:
        return {"y": list(self.y), "codewords": [list(c) for c in self.codewords],
                "total_weight": self.total_weight}


def _field_tables(F: FieldSpec):
    q = F.q
    add = np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    mul = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    return add, mul


def codewords(G: MatrixGF) -> np.ndarray:
    """All q^k codewords as rows of an int array; row 0 is the zero word."""
    F = G.field
    q, (k, n) = F.q, G.shape
    if q ** k > MAX_CODEWORDS:
        raise CodeTooLarge(f"code has {q}^{k} = {q ** k} codewords", q ** k)
    add, mul = _field_tables(F)
    words = np.zeros((1, n), dtype=np.int64)
    for row in G.entries:
        r = np.asarray(row, dtype=np.int64)
        scaled = mul[np.arange(q)[:, None], r[None, :]]          # (q, n): a * row
        words = add[words[None, :, :], scaled[:, None, :]].reshape(-1, n)
    return words


def optimal_center(words) -> tuple[int, ...]:
    """Coordinate-wise plurality; ties go to the smallest element value."""
    W = np.asarray(words, dtype=np.int64)
    if W.ndim != 2 or W.shape[0] == 0:
        raise ValueError("need a nonempty list of equal-length words")
    out = []
    for col in W.T:
        vals, counts = np.unique(col, return_counts=True)
        out.append(int(vals[np.argmax(counts)]))
    return tuple(out)


def total_weight(words, y=None) -> int:
    """sum_i wt(c_i - y), at the optimal centre when ``y`` is omitted."""
    W = np.asarray(words, dtype=np.int64)
    if y is None:
        y = optimal_center(W)
    return int((W != np.asarray(y, dtype=np.int64)[None, :]).sum())


def _search(C: np.ndarray, L: int, budget, reduce: bool):
    """First tuple of L+1 distinct rows of ``C`` (c_0 = row 0 when reduced)
    whose total weight at the plurality centre is <= budget."""
    N, n = C.shape
    m = L + 1
    if reduce:
        # with c_0 = 0, each nonzero coordinate of any c_i costs at least 1
        wt = (C != 0).sum(axis=1)
        cand = np.flatnonzero((wt <= budget) & (np.arange(N) != 0))
        prefix = [0]
    else:
        cand = np.arange(N)
        prefix = []
    need = m - len(prefix)
    if len(cand) < need:
        return None
    est = math.comb(len(cand), need - 1) if need > 1 else 1
    if est > MAX_TUPLES:
        raise CodeTooLarge(f"about {est} codeword tuples to examine", est)
    X = C[cand]

    def partial_cost(rows):
        W = C[rows]
        best = np.zeros(n, dtype=np.int64)
        for w in W:
            best = np.maximum(best, (W == w[None, :]).sum(axis=0))
        return len(rows) * n - int(best.sum()), best

    def rec(rows, start):
        depth = len(rows)
        if depth == m - 1:
            # vectorised last level over the remaining candidates
            tail = X[start:]
            if len(tail) == 0:
                return None
            P = C[rows]
            _, best = partial_cost(rows)
            eq = np.zeros(tail.shape, dtype=np.int64)
            for w in P:
                eq += tail == w[None, :]
            mult = np.maximum(best[None, :], eq + 1)
            cost = m * n - mult.sum(axis=1)
            hit = np.flatnonzero(cost <= budget)
            if len(hit):
                return rows + [int(cand[start + hit[0]])]
            return None
        for t in range(start, len(cand)):
            nxt = rows + [int(cand[t])]
            # cost never decreases as codewords are added
            if len(nxt) > 1 and partial_cost(nxt)[0] > budget:
                continue
            found = rec(nxt, t + 1)
            if found is not None:
                return found
        return None

    return rec(prefix, 0)


def average_radius_search(G: MatrixGF, L: int, budget, *, reduce: bool = True):
    """Witness of L+1 codewords with total weight <= ``budget`` (any real,
    e.g. a Fraction for (L+1) rho n), or None."""
    if L < 1:
        raise ValueError("L must be >= 1")
    C = codewords(G)
    rows = _search(C, L, budget, reduce)
    if rows is None:
        return None
    words = [tuple(int(v) for v in C[r]) for r in rows]
    y = optimal_center(words)
    return LDWitness(y, words, total_weight(words, y))


def is_ld_mds(G: MatrixGF, L: int, *, reduce: bool = True):
    """(report, witness-or-None) for LD-MDS(L) of the code generated by ``G``.

    The budget is the integer L (n - k), i.e. (L+1) rho n with
    rho = L/(L+1) (1 - k/n).
    """
    t0 = time.perf_counter()
    q = G.field.q
    if L >= q:
        raise ValueError(f"LD-MDS(L) needs L < q; got L={L}, q={q}")
    k, n = G.shape
    if G.rows and rank(G) != k:
        raise ValueError("generator matrix is rank deficient")
    budget = L * (n - k)
    wit = average_radius_search(G, L, budget, reduce=reduce)
    rho = Fraction(L, L + 1) * (1 - Fraction(k, n))
    rep = VerificationReport(f"LD-MDS({L})", wit is None, None, 0, "brute-force",
                             time.perf_counter() - t0,
                             {"budget": budget, "rho": str(rho)})
    return rep, wit


def duality_check(G: MatrixGF, ell: int) -> VerificationReport:
    """Compare MDS(ell+1) of the code with LD-MDS(L), L = 1..ell, of its dual.

    Orders L >= q are outside the LD-MDS definition and are skipped; the
    report lists the orders actually tested.
    """
    t0 = time.perf_counter()
    q = G.field.q
    mds = is_mds_ell(G, ell + 1)
    H = dual(G)
    Ls = [L for L in range(1, ell + 1) if L < q]
    ld = {}
    for L in Ls:
        rep, _ = is_ld_mds(H, L)
        ld[L] = rep.holds
        if not rep.holds:
            break
    dual_side = all(ld.values())
    notes = {"mds": mds.holds, "dual_ld_mds": {str(L): v for L, v in ld.items()},
             "orders_tested": Ls}
    return VerificationReport(f"MDS({ell + 1}) <=> dual LD-MDS(<={ell})", mds.holds == dual_side,
                              mds.witness, mds.collections_checked, "duality",
                              time.perf_counter() - t0, notes)


def max_ball_count(G: MatrixGF, radius: int, centers) -> int:
    """Largest number of codewords within Hamming distance ``radius`` of any
    of the given centres."""
    C = codewords(G)
    best = 0
    for y in centers:
        d = (C != np.asarray(y, dtype=np.int64)[None, :]).sum(axis=1)
        best = max(best, int((d <= radius).sum()))
    return best


def singleton_list_bound(n: int, k: int, q: int, L: int, rho) -> int:
    """Generalized Singleton bound on |C| for a (rho, L)-list-decodable code:
    L q^(n - floor((L+1) rho n / L)).  Reporting only."""
    rho = Fraction(rho)
    return L * q ** (n - math.floor((L + 1) * rho * n / L))
