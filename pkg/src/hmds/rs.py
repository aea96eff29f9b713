"""
Reed-Solomon codes: Vandermonde generators, the pi-polynomial determinant
test, the pair-determinant test for k = 3, and the dimension-lowering
transforms (expurgation, puncturing, pseudo-shortening).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .generic import SubsetCollection
from .gf import FieldSpec
from .linalg import MatrixGF, _det, block_matrix
from .verifier import VerificationReport, is_mds_ell, is_mds_ell_reduced

__all__ = [
    "RSCode",
    "vandermonde",
    "pi_eval",
    "pi_vector",
    "poly_det_matrix",
    "poly_det_criterion",
    "is_mds_ell_rs",
    "mds3_criterion",
    "expurgate",
    "puncture",
    "pseudo_shorten",
    "block_det_with_point",
    "interpolate",
    "poly_eval",
    "degree_budget_check",
]


@dataclass(frozen=True)
class RSCode:
    """RS code with evaluation points ``points`` and dimension ``k``."""

    field: FieldSpec
    points: tuple[int, ...]
    k: int

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        for b in pts:
            self.field.check(b)
        if len(set(pts)) != len(pts):
            raise ValueError("evaluation points must be distinct")
        if not 1 <= self.k <= len(pts):
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={len(pts)}")

    @property
    def n(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "kind": "rs", "k": self.k,
                "points": list(self.points)}


def vandermonde(code: RSCode) -> MatrixGF:
    F = code.field
    return MatrixGF(F, [[F.pow(b, r) for b in code.points] for r in range(code.k)], code.n)


def pi_eval(A, x: int, code: RSCode) -> int:
    """prod_{i in A} (x - beta_i)."""
    F = code.field
    out = 1
    for i in A:
        out = F.mul(out, F.sub(x, code.points[i]))
    return out


def pi_vector(A, d: int, x: int, code: RSCode) -> list[int]:
    """(pi_A(x), x pi_A(x), ..., x^(d-1) pi_A(x))."""
    F = code.field
    v = pi_eval(A, x, code)
    out = []
    for _ in range(d):
        out.append(v)
        v = F.mul(v, x)
    return out


def poly_det_matrix(code: RSCode, collection) -> MatrixGF:
    """Square matrix whose rows are indexed by the first (largest) set A_1 and
    whose column blocks are pi_{A_j}^{k - |A_j|} for j >= 2.

    The first set plays the role of the rows, so passing a canonical
    :class:`SubsetCollection` puts a largest set there.
    """
    sets = [tuple(s) for s in getattr(collection, "sets", collection)]
    k = code.k
    if any(len(s) > k for s in sets):
        raise ValueError("every set must have at most k elements")
    if sum(len(s) for s in sets) != (len(sets) - 1) * k:
        raise ValueError("set sizes must sum to (l-1)k")
    first, rest = sets[0], sets[1:]
    width = sum(k - len(s) for s in rest)
    assert width == len(first), "block widths do not match the row count"
    rows = []
    for i in first:
        x = code.points[i]
        row = []
        for A in rest:
            row.extend(pi_vector(A, k - len(A), x, code))
        rows.append(row)
    return MatrixGF(code.field, rows, width)


def poly_det_criterion(code: RSCode, collection) -> bool:
    """True iff the spans of the collection meet only in zero, via the
    pi-polynomial determinant."""
    M = poly_det_matrix(code, collection)
    if M.rows == 0:
        return True
    return _det([list(r) for r in M.entries], M.field) != 0


class _PolyDetTest:
    def __init__(self, code: RSCode):
        self.code = code

    def __call__(self, C) -> bool:
        return poly_det_criterion(self.code, C)


def is_mds_ell_rs(code: RSCode, ell: int, method: str = "poly-det", *,
                  reduced: bool = False, progress=None) -> VerificationReport:
    """MDS(ell) verdict for an RS code; ``method`` may also be ``"poly-det"``."""
    V = vandermonde(code)
    run = is_mds_ell_reduced if reduced else is_mds_ell
    if method == "poly-det":
        rep = run(V, ell, test=_PolyDetTest(code), progress=progress)
        rep.method = "reduced/poly-det" if reduced else "poly-det"
        return rep
    return run(V, ell, method, progress=progress)


def _pair_triples(n: int):
    # unordered triples of pairwise disjoint unordered pairs
    for six in itertools.combinations(range(n), 6):
        a = six[0]
        for b in six[1:]:
            rest = [x for x in six[1:] if x != b]
            c = rest[0]
            for d in rest[1:]:
                e, f = [x for x in rest[1:] if x != d]
                yield (a, b), (c, d), (e, f)


def mds3_criterion(code: RSCode) -> VerificationReport:
    """MDS(3) test for k = 3: no three disjoint pairs {a,b} give a singular
    matrix with rows (1, beta_a + beta_b, beta_a beta_b)."""
    if code.k != 3:
        raise ValueError(f"the pair-determinant test needs k = 3, got k = {code.k}")
    t0 = time.perf_counter()
    F = code.field
    b = code.points
    count = 0
    for pairs in _pair_triples(code.n):
        count += 1
        rows = [[1, F.add(b[x], b[y]), F.mul(b[x], b[y])] for x, y in pairs]
        if _det(rows, F) == 0:
            return VerificationReport("MDS(3)", False, SubsetCollection(code.n, pairs), count,
                                      "pair-det", time.perf_counter() - t0)
    return VerificationReport("MDS(3)", True, None, count, "pair-det", time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

def expurgate(code: RSCode) -> RSCode:
    """Drop the last Vandermonde row: same points, dimension k - 1."""
    if code.k < 2:
        raise ValueError("cannot expurgate a code of dimension 1")
    return RSCode(code.field, code.points, code.k - 1)


def puncture(code: RSCode, j: int) -> RSCode:
    """Delete evaluation point ``j`` (0-based), keeping the dimension."""
    if not 0 <= j < code.n:
        raise IndexError(f"point index {j} out of range for n={code.n}")
    if code.n == code.k:
        raise ValueError("cannot puncture a code with n = k")
    return RSCode(code.field, code.points[:j] + code.points[j + 1:], code.k)


def pseudo_shorten(code: RSCode, j: int) -> RSCode:
    """Expurgate and delete point ``j``: an (n-1, k-1) code."""
    if not 0 <= j < code.n:
        raise IndexError(f"point index {j} out of range for n={code.n}")
    return puncture(expurgate(code), j)


# ---------------------------------------------------------------------------
# degree of the block determinant in one evaluation point
# ---------------------------------------------------------------------------

def block_det_with_point(field: FieldSpec, points, k: int, collection, index: int, x: int) -> int:
    """Block determinant of Vand_k(points) for ``collection`` with
    ``points[index]`` replaced by ``x``.  Points need not be distinct."""
    pts = list(points)
    pts[index] = x
    V = MatrixGF(field, [[field.pow(b, r) for b in pts] for r in range(k)], len(pts))
    M = block_matrix(V, collection)
    return _det([list(r) for r in M.entries], field)


def interpolate(xs, ys, F: FieldSpec) -> list[int]:
    """Coefficients (low degree first) of the unique polynomial of degree
    < len(xs) through the points; Newton divided differences."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = F.div(F.sub(coef[i], coef[i - 1]), F.sub(xs[i], xs[i - j]))
    # expand the Newton form
    poly = [0] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [0] + poly[:-1]
        poly = [F.sub(s, F.mul(xs[i], p)) for s, p in zip(shifted, poly)]
        poly[0] = F.add(poly[0], coef[i])
    return poly


def poly_eval(poly, x: int, F: FieldSpec) -> int:
    acc = 0
    for c in reversed(poly):
        acc = F.add(F.mul(acc, x), c)
    return acc


def degree_budget_check(field: FieldSpec, points, k: int, collection, index: int,
                        budget: int, rng) -> tuple[bool, int]:
    """Interpolate the block determinant as a function of one point from
    ``budget + 1`` samples and test it on ``budget + 2`` fresh ones.

    Returns (all held-out values reproduced, degree of the interpolant).
    """
    q = field.q
    xs = rng.sample(range(q), 2 * budget + 3)
    fit, held = xs[:budget + 1], xs[budget + 1:]
    ys = [block_det_with_point(field, points, k, collection, index, x) for x in fit]
    poly = interpolate(fit, ys, field)
    deg = max((i for i, c in enumerate(poly) if c), default=-1)
    ok = all(poly_eval(poly, x, field) == block_det_with_point(field, points, k, collection, index, x)
             for x in held)
    return ok, deg
