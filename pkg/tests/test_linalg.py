import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hmds.gf import field_new, field_of_order
from hmds.linalg import (MatrixGF, Subspace, block_matrix, det, dual, identity, intersect_dim,
                         nullspace, rank, span)


def random_matrix(F, r, c, rng):
    return MatrixGF(F, [[rng.randrange(F.q) for _ in range(c)] for _ in range(r)], c)


def leibniz_det(M):
    """Permutation expansion, independent of elimination."""
    F = M.field
    n = M.rows
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i, j in enumerate(perm):
            term = F.mul(term, M.entries[i][j])
        total = F.sub(total, term) if inversions % 2 else F.add(total, term)
    return total


def span_set(M, A):
    """Every vector in the span of columns A, by enumeration."""
    F = M.field
    cols = [M.column(j) for j in A]
    out = set()
    for coeffs in itertools.product(range(F.q), repeat=len(cols)):
        v = [0] * M.rows
        for c, col in zip(coeffs, cols):
            v = [F.add(x, F.mul(c, y)) for x, y in zip(v, col)]
        out.add(tuple(v))
    return out


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_det_matches_leibniz(q):
    F = field_of_order(q)
    rng = random.Random(q)
    for size in range(1, 5):
        for _ in range(15):
            M = random_matrix(F, size, size, rng)
            assert det(M) == leibniz_det(M)


def test_det_rejects_non_square():
    F = field_new(5)
    with pytest.raises(ValueError):
        det(MatrixGF(F, [[1, 2, 3], [4, 0, 1]]))


@pytest.mark.parametrize("q", [2, 4, 7])
def test_rank_nullity(q):
    F = field_of_order(q)
    rng = random.Random(100 + q)
    for _ in range(30):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        M = random_matrix(F, r, c, rng)
        ker = nullspace(M)
        assert rank(M) + len(ker) == c
        for v in ker:
            out = M @ MatrixGF(F, [[x] for x in v], 1)
            assert all(e == (0,) for e in out.entries)


def test_matmul_identity_and_transpose():
    F = field_new(3, 2)
    rng = random.Random(1)
    A = random_matrix(F, 3, 4, rng)
    assert identity(F, 3) @ A == A
    assert A @ identity(F, 4) == A
    B = random_matrix(F, 4, 2, rng)
    assert (A @ B).transpose() == B.transpose() @ A.transpose()
    with pytest.raises(ValueError):
        A @ A


def test_matrix_validation_and_json():
    F = field_new(7)
    with pytest.raises(ValueError):
        MatrixGF(F, [[1, 2], [3]])
    with pytest.raises(ValueError):
        MatrixGF(F, [[7]])
    M = MatrixGF(F, [[1, 2, 3], [4, 5, 6]])
    assert MatrixGF.from_json(F, M.to_json()) == M
    assert M.to_json() == {"rows": 2, "cols": 3, "entries": [[1, 2, 3], [4, 5, 6]]}
    with pytest.raises(ValueError):
        MatrixGF.from_json(F, {"rows": 3, "cols": 3, "entries": [[1, 2, 3]]})


@pytest.mark.parametrize("q", [2, 3, 4])
def test_intersect_dim_matches_enumeration(q):
    F = field_of_order(q)
    rng = random.Random(7 * q)
    for _ in range(25):
        k, n = 3, 5
        M = random_matrix(F, k, n, rng)
        sets = [tuple(rng.sample(range(n), rng.randint(1, 3))) for _ in range(rng.randint(2, 3))]
        common = set.intersection(*(span_set(M, A) for A in sets))
        expected = {1: 0, q: 1, q * q: 2, q ** 3: 3}[len(common)]
        assert intersect_dim(M, sets) == expected


def test_subspace_membership_and_intersection():
    F = field_new(5)
    U = Subspace.from_vectors(F, 3, [[1, 0, 0], [0, 1, 0]])
    W = Subspace.from_vectors(F, 3, [[0, 1, 0], [0, 0, 1]])
    X = U.intersect(W)
    assert X.dim == 1
    assert (0, 3, 0) in X and (1, 0, 0) not in X
    assert Subspace.from_vectors(F, 3, []).dim == 0


def test_span_index_errors():
    F = field_new(3)
    M = MatrixGF(F, [[1, 0, 1], [0, 1, 1]])
    assert span(M, [0, 1]).dim == 2
    with pytest.raises(IndexError):
        span(M, [3])


def test_block_matrix_shape_and_errors():
    F = field_new(7)
    M = MatrixGF(F, [[1, 1, 1, 1], [0, 1, 2, 3]])
    B = block_matrix(M, [(0,), (1,)])
    assert B.shape == (4, 4)
    with pytest.raises(ValueError):
        block_matrix(M, [(0, 1), (2,)])


@pytest.mark.parametrize("q", [3, 4, 5])
def test_block_det_agrees_with_intersection(q):
    # det of the block matrix vanishes iff the spans meet or some V_A drops rank
    F = field_of_order(q)
    rng = random.Random(q)
    for _ in range(40):
        M = random_matrix(F, 3, 6, rng)
        sets = [tuple(rng.sample(range(6), 2)) for _ in range(3)]
        degenerate = any(rank(M.columns(A)) < len(A) for A in sets)
        singular = det(block_matrix(M, sets)) == 0
        assert singular == (degenerate or intersect_dim(M, sets) > 0)


def test_dual_is_orthogonal():
    F = field_new(2, 3)
    rng = random.Random(3)
    G = random_matrix(F, 3, 6, rng)
    while rank(G) < 3:
        G = random_matrix(F, 3, 6, rng)
    H = dual(G)
    assert H.shape == (3, 6) and rank(H) == 3
    assert all(v == 0 for r in (G @ H.transpose()).entries for v in r)
    with pytest.raises(ValueError):
        dual(MatrixGF(F, [[1, 1], [1, 1]]))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_rank_invariant_under_row_ops(seed):
    F = field_of_order(9)
    rng = random.Random(seed)
    M = random_matrix(F, 3, 5, rng)
    T = random_matrix(F, 3, 3, rng)
    if det(T):
        assert rank(T @ M) == rank(M)


def test_block_matrix_layout_for_three_pairs():
    F = field_new(11)
    V = MatrixGF(F, [[1] * 6, list(range(6)), [b * b % 11 for b in range(6)]])
    B = block_matrix(V, [(0, 1), (2, 3), (4, 5)])
    assert B.shape == (9, 9)
    # identity blocks in the first k columns of every block row
    for r in range(9):
        assert B.entries[r][:3] == tuple(int(r % 3 == c) for c in range(3))
    # second block row carries V_{(2,3)} in columns 5, 6
    assert [B.entries[3 + i][5:7] for i in range(3)] == [(V.entries[i][2], V.entries[i][3])
                                                         for i in range(3)]
