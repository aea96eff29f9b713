import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hmds.generic import SubsetCollection
from hmds.gf import field_new, field_of_order
from hmds.linalg import MatrixGF, intersect_dim, rank
from hmds.rs import RSCode, vandermonde
from hmds.verifier import (DEFAULT_PRIME, GenericDimQuery, check_definition3, code_key,
                           generic_dim_oracle, is_mds, is_mds_ell, is_mds_ell_reduced,
                           monotonicity_violations, recheck_witness, record_verdicts,
                           zero_intersection_test)

GOOD_633 = RSCode(field_new(11), (0, 1, 2, 3, 4, 6), 3)
BAD_633 = RSCode(field_new(13), (0, 1, 2, 3, 4, 5), 3)


def random_generator(F, k, n, rng):
    while True:
        G = MatrixGF(F, [[rng.randrange(F.q) for _ in range(n)] for _ in range(k)], n)
        if rank(G) == k:
            return G


def test_default_prime():
    assert DEFAULT_PRIME == 1048583


def test_is_mds_vandermonde_and_failure():
    assert is_mds(vandermonde(GOOD_633)).holds
    F = field_new(5)
    G = MatrixGF(F, [[1, 0, 1, 2], [0, 1, 1, 2]])      # columns 3 and 4 are parallel
    rep = is_mds(G)
    assert not rep.holds
    assert rep.witness.sets == ((2, 3),)
    assert recheck_witness(G, rep.witness)


def test_not_mds_fails_every_order():
    F = field_new(5)
    G = MatrixGF(F, [[1, 0, 1, 2], [0, 1, 1, 2]])
    for ell in (1, 2, 3, 4):
        rep = is_mds_ell(G, ell)
        assert not rep.holds and rep.notes == {"failed_order": 1}
        assert not is_mds_ell_reduced(G, ell).holds


def test_known_633_verdicts():
    for method in ("subspace", "block-det"):
        assert is_mds_ell(vandermonde(GOOD_633), 3, method).holds
        rep = is_mds_ell(vandermonde(BAD_633), 3, method)
        assert not rep.holds
        assert recheck_witness(vandermonde(BAD_633), rep.witness)
        assert intersect_dim(vandermonde(BAD_633), rep.witness) > 0


def test_order_two_is_rank_check():
    rep = is_mds_ell(vandermonde(BAD_633), 2)
    assert rep.holds and rep.method == "rank"


def test_bad_arguments():
    V = vandermonde(GOOD_633)
    with pytest.raises(ValueError):
        is_mds_ell(V, 0)
    with pytest.raises(ValueError):
        is_mds_ell_reduced(V, 0)
    with pytest.raises(ValueError):
        is_mds_ell(V, 3, "gauss")
    with pytest.raises(ValueError):
        zero_intersection_test(V, "nope")


def test_report_json_shape():
    rep = is_mds_ell(vandermonde(BAD_633), 3, "block-det")
    d = rep.to_json()
    assert list(d)[:6] == ["property", "holds", "witness", "collections_checked", "method",
                           "elapsed_ms"]
    assert d["property"] == "MDS(3)" and d["holds"] is False
    assert all(1 <= i <= 6 for s in d["witness"]["sets"] for i in s)
    json.dumps(d)


def test_methods_agree_on_random_generators():
    rng = random.Random(5)
    for q in (3, 4, 5, 7, 8):
        F = field_of_order(q)
        for _ in range(6):
            k, n = rng.choice([(2, 4), (3, 5), (3, 6), (2, 5)])
            G = random_generator(F, k, n, rng)
            a = is_mds_ell(G, 3, "subspace")
            b = is_mds_ell(G, 3, "block-det")
            assert a.holds == b.holds
            assert a.witness == b.witness
            c = check_definition3(G, 3, seed=1)
            assert c.holds == a.holds


def test_reduced_matches_full():
    rng = random.Random(11)
    for q in (5, 7, 8, 11):
        F = field_of_order(q)
        for _ in range(5):
            G = random_generator(F, 3, rng.choice([5, 6]), rng)
            for ell in (3, 4):
                full = is_mds_ell(G, ell)
                red = is_mds_ell_reduced(G, ell)
                assert full.holds == red.holds
                if not red.holds:
                    assert recheck_witness(G, red.witness)


def test_reduced_notes():
    rep = is_mds_ell_reduced(vandermonde(GOOD_633), 7)
    assert rep.holds and rep.notes["effective_order"] == 3
    rep = is_mds_ell_reduced(vandermonde(BAD_633), 5)
    assert not rep.holds and rep.notes["failed_order"] == 3


def test_parallel_scan_is_deterministic():
    V = vandermonde(BAD_633)
    serial = is_mds_ell(V, 3, "block-det")
    par = is_mds_ell(V, 3, "block-det", workers=2)
    assert par.holds == serial.holds
    assert par.witness == serial.witness
    assert par.collections_checked == serial.collections_checked


def test_progress_callback():
    seen = []
    is_mds_ell(vandermonde(GOOD_633), 3, progress=seen.append)
    assert seen == []      # 1595 collections, below the heartbeat interval
    is_mds_ell(vandermonde(GOOD_633), 4, progress=seen.append)   # 20500 collections
    assert seen == [10000, 20000]


def test_recheck_rejects_non_violations():
    V = vandermonde(GOOD_633)
    assert not recheck_witness(V, SubsetCollection(6, [(0, 1), (2, 3), (4, 5)]))
    # not generic, so never a witness
    assert not recheck_witness(V, SubsetCollection(6, [(0, 1), (0, 2), (0, 3)]))


def test_generic_dim_oracle_values():
    C = SubsetCollection(6, [(0, 1), (2, 3), (4, 5)])
    assert generic_dim_oracle(GenericDimQuery(6, 3, C)) == 0
    C = SubsetCollection(6, [(0, 1, 2), (0, 1, 3)])
    assert generic_dim_oracle(GenericDimQuery(6, 3, C)) == 3
    C = SubsetCollection(6, [(0, 1), (0, 2)])
    assert generic_dim_oracle(GenericDimQuery(6, 3, C)) == 1
    with pytest.raises(ValueError):
        GenericDimQuery(6, 3, C, prime=17)
    with pytest.raises(ValueError):
        GenericDimQuery(6, 3, C, trials=0)


def test_definition3_notes_characteristic():
    rep = check_definition3(vandermonde(GOOD_633), 3)
    assert rep.holds
    assert rep.notes == {"oracle_prime": DEFAULT_PRIME, "code_characteristic": 11}
    assert not check_definition3(vandermonde(BAD_633), 3).holds


def test_code_key_ignores_basis_choice():
    F = field_new(7)
    G = MatrixGF(F, [[1, 2, 3, 4], [0, 1, 5, 6]])
    H = MatrixGF(F, [[1, 3, 1, 3], [2, 4, 6, 1]])   # rows: r0 + r1, 2 r0
    assert code_key(G) == code_key(H)


def test_monotonicity_log():
    with record_verdicts() as log:
        is_mds_ell(vandermonde(GOOD_633), 3)
        is_mds_ell(vandermonde(BAD_633), 3)
    assert len(log) >= 2
    assert monotonicity_violations(log) == []
    key = code_key(vandermonde(GOOD_633))
    assert monotonicity_violations([(key, 4, True), (key, 3, False)]) == [(key, 4, 3)]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_subspace_and_block_det_agree_property(seed):
    rng = random.Random(seed)
    F = field_of_order(rng.choice([4, 5, 7, 9]))
    G = random_generator(F, 3, 5, rng)
    a, b = is_mds_ell(G, 3, "subspace"), is_mds_ell(G, 3, "block-det")
    assert (a.holds, a.witness) == (b.holds, b.witness)


def test_orders_one_and_two_hold_for_mds():
    for code in (GOOD_633, BAD_633):
        V = vandermonde(code)
        assert is_mds_ell(V, 1).holds and is_mds_ell(V, 2).holds


def test_order_above_k_matches_order_k():
    rng = random.Random(21)
    for q in (5, 7, 8):
        F = field_of_order(q)
        for _ in range(3):
            G = random_generator(F, 2, 4, rng)
            base = is_mds_ell(G, 2).holds
            assert is_mds_ell(G, 7, "subspace").holds == base
            assert is_mds_ell_reduced(G, 7).holds == base
    for code in (GOOD_633, BAD_633):
        V = vandermonde(code)
        assert is_mds_ell_reduced(V, 8).holds == is_mds_ell(V, 3).holds
