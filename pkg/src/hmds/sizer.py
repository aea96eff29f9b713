"""
Field-size thresholds for the existence of (n, k)-MDS(l) RS codes, and a
randomized search for evaluation points.

All bounds are evaluated exactly: Euler's number is replaced by the rational
upper bound 271829/100000 and the result is rounded up, so every reported
integer is still a sufficient field size.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .gf import field_of_order, is_prime_power, prime_powers
from .rs import RSCode, vandermonde
from .verifier import VerificationReport, is_mds_ell_reduced

__all__ = [
    "E_UPPER",
    "BoundParams",
    "BoundValue",
    "degree_bound",
    "dependency_bound",
    "bound_new",
    "bound_prior",
    "compare_bounds",
    "random_search",
    "exhaustive_min_q",
    "SearchResult",
]

E_UPPER = Fraction(271829, 100000)


@dataclass(frozen=True)
class BoundParams:
    n: int
    k: int
    ell: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.ell < 2:
            raise ValueError(f"need ell >= 2, got {self.ell}")

    @property
    def Delta(self) -> int:
        return (self.ell - 1) * self.k


@dataclass(frozen=True)
class BoundValue:
    exact: int
    formula: str
    notes: dict = field(default_factory=dict)

    @property
    def log2(self) -> float:
        # exact for huge integers, unlike math.log2(float(x))
        b = self.exact.bit_length()
        if b <= 53:
            return math.log2(self.exact)
        return b - 53 + math.log2(self.exact >> (b - 53))

    def to_json(self) -> dict:
        d = {"formula": self.formula, "exact": str(self.exact), "log2": round(self.log2, 6)}
        if self.notes:
            d["notes"] = self.notes
        return d


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def degree_bound(k: int, ell: int) -> int:
    """Total-degree budget l k^2 of the block determinant in the points."""
    if k < 1 or ell < 1:
        raise ValueError("k and ell must be >= 1")
    return ell * k * k


def _dependency_exact(p: BoundParams, proof_form: bool) -> tuple[Fraction, dict]:
    n, k, ell, D = p.n, p.k, p.ell, p.Delta
    width = Fraction(D, ell)
    if proof_form:
        width = Fraction(-(-D // ell))
    first_alt = D * (E_UPPER * n / width) ** D
    first = min(Fraction(2 ** n), first_alt)
    md = min(D, n)
    second = min(2 ** (ell * md), k ** ell * md ** (k * ell))
    notes = {
        "first_factor": "2^n" if first == 2 ** n else "Delta (e n / (Delta/l))^Delta",
        "second_factor": "2^(l min(Delta,n))" if second == 2 ** (ell * md) else "k^l min(Delta,n)^(kl)",
        "e_upper": "271829/100000",
    }
    if proof_form:
        notes["width"] = "ceil(Delta/l)"
    return first * second, notes


def dependency_bound(p: BoundParams, *, proof_form: bool = False) -> BoundValue:
    """Upper bound on the number of collections sharing a coordinate with a
    given one:

        min(2^n, D (e n / (D/l))^D) * min(2^(l min(D,n)), k^l min(D,n)^(k l)),
        D = (l - 1) k.

    ``proof_form`` uses ceil(D/l) in place of D/l.
    """
    val, notes = _dependency_exact(p, proof_form)
    return BoundValue(max(1, _ceil(val)), "dependency", notes)


def bound_new(p: BoundParams, *, proof_form: bool = False) -> BoundValue:
    """Sufficient field size e l k^2 times the dependency count."""
    val, notes = _dependency_exact(p, proof_form)
    val *= E_UPPER * degree_bound(p.k, p.ell)
    return BoundValue(max(1, _ceil(val)), "new", notes)


def bound_prior(p: BoundParams) -> BoundValue:
    """Earlier sufficient field size l n^2 (sum_{j=0..k} C(n, j))^l."""
    n, k, ell = p.n, p.k, p.ell
    ball = sum(math.comb(n, j) for j in range(k + 1))
    return BoundValue(ell * n * n * ball ** ell, "prior", {"binomial_sum_from": 0})


def compare_bounds(params) -> list[dict]:
    """One row per parameter triple with both bounds and which is smaller."""
    rows = []
    for p in params:
        if not isinstance(p, BoundParams):
            p = BoundParams(*p)
        new, prior = bound_new(p), bound_prior(p)
        rows.append({
            "n": p.n, "k": p.k, "ell": p.ell, "Delta": p.Delta,
            "delta_lt_n": p.Delta < p.n,
            "log2_new": round(new.log2, 6),
            "log2_prior": round(prior.log2, 6),
            "smaller": "new" if new.exact < prior.exact else ("prior" if prior.exact < new.exact else "tie"),
            "new_wins_with_delta_lt_n": p.Delta < p.n and new.exact < prior.exact,
            "first_factor": new.notes["first_factor"],
            "second_factor": new.notes["second_factor"],
        })
    return rows


# ---------------------------------------------------------------------------
# searching for evaluation points
# ---------------------------------------------------------------------------

@dataclass
class SearchResult:
    code: RSCode | None
    trials: int
    report: VerificationReport | None = None

    @property
    def found(self) -> bool:
        return self.code is not None

    def to_json(self) -> dict:
        d = {"found": self.found, "trials": self.trials}
        if self.code is not None:
            d["code"] = self.code.to_json()
        if self.report is not None:
            d["report"] = self.report.to_json()
        return d


def random_search(n: int, k: int, ell: int, q: int, seed: int = 0,
                  max_trials: int = 10000) -> SearchResult:
    """Sample n distinct points of GF(q) until the RS code is MDS(ell).

    Trial ``t`` draws from a generator seeded by ``(seed, t)``, so the
    returned code depends only on the arguments.
    """
    if not is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    if q < n:
        raise ValueError(f"GF({q}) has fewer than n={n} distinct points")
    F = field_of_order(q)
    for t in range(max_trials):
        rng = np.random.default_rng([seed, t])
        pts = tuple(int(x) for x in rng.choice(q, size=n, replace=False))
        code = RSCode(F, pts, k)
        rep = is_mds_ell_reduced(vandermonde(code), ell)
        if rep.holds:
            return SearchResult(code, t + 1, rep)
    return SearchResult(None, max_trials)


def exhaustive_min_q(n: int, k: int, ell: int, q_max: int):
    """Smallest prime power q <= q_max with an (n, k)-MDS(ell) RS code.

    Returns ``(q, code)`` or ``None``.  Point sets are taken up to affine
    maps x -> a x + b: such a map multiplies the Vandermonde matrix on the
    left by an invertible triangular matrix, so the code is unchanged, and
    every set of n >= 2 points has an affine image containing 0 and 1.
    """
    for q in prime_powers(n, q_max):
        F = field_of_order(q)
        if n >= 2:
            candidates = (((0, 1) + rest) for rest in itertools.combinations(range(2, q), n - 2))
        else:
            candidates = ((0,),)
        for pts in candidates:
            code = RSCode(F, pts, k)
            if is_mds_ell_reduced(vandermonde(code), ell).holds:
                return q, code
    return None
