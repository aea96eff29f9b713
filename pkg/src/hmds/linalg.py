"""
Dense matrices over a :class:`~hmds.gf.FieldSpec`.

Everything here is exact Gaussian elimination with first-nonzero pivoting.
Matrices are immutable; the elimination helpers copy their input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf import FieldSpec

__all__ = [
    "MatrixGF",
    "Subspace",
    "det",
    "rank",
    "span",
    "intersect_dim",
    "block_matrix",
    "dual",
    "nullspace",
    "matmul",
    "identity",
]


@dataclass(frozen=True)
class MatrixGF:
    field: FieldSpec
    entries: tuple[tuple[int, ...], ...]
    ncols: int = -1

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if self.ncols < 0:
            object.__setattr__(self, "ncols", len(rows[0]) if rows else 0)
        q = self.field.q
        for r in rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix rows")
            for v in r:
                if not isinstance(v, int) or not 0 <= v < q:
                    raise ValueError(f"entry {v!r} not in GF({q})")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return self.ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self, idx: Iterable[int]) -> "MatrixGF":
        idx = list(idx)
        return MatrixGF(self.field, [[r[j] for j in idx] for r in self.entries], len(idx))

    def row_slice(self, stop: int) -> "MatrixGF":
        return MatrixGF(self.field, self.entries[:stop], self.ncols)

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, list(zip(*self.entries)) if self.rows else [], self.rows)

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        return matmul(self, other)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, field: FieldSpec, d: dict) -> "MatrixGF":
        m = cls(field, d["entries"], d.get("cols", -1))
        if "rows" in d and d["rows"] != m.rows or "cols" in d and d["cols"] != m.cols:
            raise ValueError("matrix JSON shape does not match its entries")
        return m


def identity(field: FieldSpec, k: int) -> MatrixGF:
    return MatrixGF(field, [[int(i == j) for j in range(k)] for i in range(k)], k)


def matmul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    if a.field != b.field:
        raise ValueError("matrices over different fields")
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    F = a.field
    add, mul = F.add, F.mul
    bt = list(zip(*b.entries)) if b.rows else [()] * b.cols
    out = []
    for r in a.entries:
        row = []
        for c in bt:
            s = 0
            for x, y in zip(r, c):
                if x and y:
                    s = add(s, mul(x, y))
            row.append(s)
        out.append(row)
    return MatrixGF(F, out, b.cols)


# ---------------------------------------------------------------------------
# elimination kernels on lists of rows
# ---------------------------------------------------------------------------

def _rref(rows: list[list[int]], F: FieldSpec, ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form (in place) and pivot columns."""
    sub, mul, inv = F.sub, F.mul, F.inv
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        if prow[c] != 1:
            s = inv(prow[c])
            prow = rows[r] = [mul(s, x) for x in prow]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    rows[i] = [sub(x, mul(f, y)) if y else x for x, y in zip(ri, prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _det(rows: list[list[int]], F: FieldSpec) -> int:
    n = len(rows)
    sub, mul, inv = F.sub, F.mul, F.inv
    d = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = F.neg(d)
        prow = rows[c]
        pv = prow[c]
        d = mul(d, pv)
        s = inv(pv)
        for i in range(c + 1, n):
            ri = rows[i]
            f = ri[c]
            if f:
                f = mul(f, s)
                rows[i] = [sub(x, mul(f, y)) if y else x for x, y in zip(ri, prow)]
    return d


def _nullspace(rows: list[list[int]], F: FieldSpec, ncols: int) -> list[list[int]]:
    """Basis of {x : A x = 0} for A given by ``rows``."""
    red, pivots = _rref([list(r) for r in rows], F, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(red[i][free])
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def det(M: MatrixGF) -> int:
    if M.rows != M.cols:
        raise ValueError(f"determinant of non-square {M.shape} matrix")
    if M.rows == 0:
        return 1
    return _det([list(r) for r in M.entries], M.field)


def rank(M: MatrixGF) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(_rref([list(r) for r in M.entries], M.field, M.cols)[1])


def nullspace(M: MatrixGF) -> list[tuple[int, ...]]:
    """Basis vectors of the right kernel of ``M``."""
    return [tuple(v) for v in _nullspace(M.entries, M.field, M.cols)]


@dataclass(frozen=True)
class Subspace:
    """Subspace of GF(q)^ambient_dim held as RREF basis rows."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_vectors(cls, field: FieldSpec, ambient_dim: int, vectors) -> "Subspace":
        vecs = [list(v) for v in vectors]
        if not vecs:
            return cls(field, ambient_dim, ())
        red, _ = _rref(vecs, field, ambient_dim)
        return cls(field, ambient_dim, tuple(tuple(r) for r in red))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise ValueError("subspaces live in different spaces")
        a, b = self.dim, other.dim
        if a == 0 or b == 0:
            return Subspace(self.field, self.ambient_dim, ())
        F = self.field
        # kernel of [U | W]: x-parts give the intersection as U x
        system = [[u[i] for u in self.basis] + [w[i] for w in other.basis]
                  for i in range(self.ambient_dim)]
        kernel = _nullspace(system, F, a + b)
        add, mul = F.add, F.mul
        vecs = []
        for z in kernel:
            v = [0] * self.ambient_dim
            for coef, u in zip(z[:a], self.basis):
                if coef:
                    v = [add(x, mul(coef, y)) for x, y in zip(v, u)]
            vecs.append(v)
        return Subspace.from_vectors(F, self.ambient_dim, vecs)

    def __contains__(self, v) -> bool:
        return len(_rref([list(b) for b in self.basis] + [list(v)], self.field,
                         self.ambient_dim)[1]) == self.dim


def _check_index_set(M: MatrixGF, A) -> list[int]:
    A = sorted(A)
    if A and (A[0] < 0 or A[-1] >= M.cols):
        raise IndexError(f"column index set {A} out of range for {M.cols} columns")
    return A


def span(M: MatrixGF, A) -> Subspace:
    """Span of the columns of ``M`` indexed by ``A`` (0-based)."""
    A = _check_index_set(M, A)
    return Subspace.from_vectors(M.field, M.rows, (M.column(j) for j in A))


def intersect_dim(M: MatrixGF, collection) -> int:
    """dim of the intersection of the column spans named by ``collection``.

    ``collection`` is a :class:`~hmds.generic.SubsetCollection` or any
    iterable of 0-based index sets.
    """
    sets = getattr(collection, "sets", collection)
    sets = sorted((tuple(s) for s in sets), key=len)
    if not sets:
        raise ValueError("empty collection")
    if not sets[0]:
        return 0
    cur = span(M, sets[0])
    for A in sets[1:]:
        if cur.dim == 0:
            return 0
        cur = cur.intersect(span(M, A))
    return cur.dim


def block_matrix(M: MatrixGF, collection: Sequence) -> MatrixGF:
    """The square matrix

        [ I_k  V_{A_1}                ]
        [ I_k          V_{A_2}        ]
        [ ...                 ...     ]
        [ I_k                 V_{A_l} ]

    whose determinant vanishes iff the spans of the ``A_i`` meet nontrivially
    (for ``sum |A_i| = (l - 1) k``).  Sets are used in the given order.
    """
    sets = [list(s) for s in getattr(collection, "sets", collection)]
    k = M.rows
    ell = len(sets)
    width = k + sum(len(s) for s in sets)
    if width != ell * k:
        raise ValueError(
            f"set sizes sum to {width - k}, need (l-1)k = {(ell - 1) * k} for a square block matrix")
    rows = []
    offset = k
    for A in sets:
        for j in A:
            if not 0 <= j < M.cols:
                raise IndexError(f"column {j} out of range")
        for i in range(k):
            row = [0] * width
            row[i] = 1
            src = M.entries[i]
            for t, j in enumerate(A):
                row[offset + t] = src[j]
            rows.append(row)
        offset += len(A)
    return MatrixGF(M.field, rows, width)


def dual(G: MatrixGF) -> MatrixGF:
    """Generator of the dual code: (n-k) x n matrix H with G H^T = 0."""
    k, n = G.shape
    if rank(G) != k:
        raise ValueError("generator matrix is rank deficient")
    H = _nullspace(G.entries, G.field, n)
    return MatrixGF(G.field, H, n)
