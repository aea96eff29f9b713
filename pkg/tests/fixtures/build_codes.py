"""Regenerate codes.json.

Each fixture records its MDS(l) verdicts for l = 3..k.  Verdicts come from the
subspace route and are cross-checked against the block-determinant route and,
where the tuple count is small enough, the sampling oracle; the script stops
on any disagreement.  Run from the repository root:

    python3 tests/fixtures/build_codes.py
"""

import json
import pathlib
import random

from hmds.formats import code_to_json
from hmds.gf import field_new, field_of_order
from hmds.linalg import MatrixGF, rank
from hmds.rs import RSCode, vandermonde
from hmds.verifier import check_definition3, is_mds_ell

OUT = pathlib.Path(__file__).with_name("codes.json")

RS = [
    ("rs_gf7_5_3", 7, (2, 0, 3, 5, 1), 3),
    ("rs_gf8_6_3", 8, (0, 1, 2, 3, 4, 5), 3),
    ("rs_gf11_6_3", 11, (0, 1, 2, 3, 4, 6), 3),
    ("rs_gf13_6_3", 13, (0, 1, 2, 3, 4, 5), 3),
    ("rs_gf16_6_3", 16, (4, 15, 10, 7, 8, 11), 3),
    ("rs_gf37_7_3", 37, (22, 15, 29, 6, 28, 1, 33), 3),
    ("rs_gf16_7_4", 16, (0, 1, 2, 3, 4, 5, 6), 4),
    ("rs_gf64_7_4", 64, (21, 46, 60, 11, 62, 50, 6), 4),
    ("rs_gf127_7_4", 127, (92, 57, 4, 117, 18, 62, 104), 4),
    ("rs_gf9_5_4", 9, (0, 1, 2, 3, 4), 4),
]


def generator_codes():
    rng = random.Random(2024)
    out = []
    for q, k, n in [(8, 3, 6), (9, 3, 6), (5, 3, 5), (7, 2, 5), (16, 3, 7), (4, 2, 4)]:
        F = field_of_order(q)
        while True:
            G = MatrixGF(F, [[rng.randrange(q) for _ in range(n)] for _ in range(k)], n)
            if rank(G) == k:
                break
        out.append((f"gen_gf{q}_{n}_{k}", G))
    # systematic MDS(3) code over GF(11) from the good RS fixture, row reduced
    F = field_new(11)
    out.append(("gen_gf11_6_3_sys", MatrixGF(F, [[1, 0, 0, 1, 3, 10], [0, 1, 0, 8, 3, 9],
                                                 [0, 0, 1, 3, 6, 4]])))
    return out


def verdicts(G, k):
    n = G.cols
    res = {}
    for ell in range(3, max(k, 3) + 1):
        a = is_mds_ell(G, ell, "subspace")
        b = is_mds_ell(G, ell, "block-det")
        assert a.holds == b.holds, (G, ell)
        if n <= 6 and k <= 3:
            c = check_definition3(G, ell, seed=7)
            assert c.holds == a.holds, (G, ell)
        res[str(ell)] = a.holds
        print(f"  MDS({ell}) = {a.holds}", flush=True)
    return res


def main():
    codes = []
    for name, q, pts, k in RS:
        print(name, flush=True)
        code = RSCode(field_of_order(q), pts, k)
        codes.append({"name": name, "code": code_to_json(code), "mds": verdicts(vandermonde(code), k)})
    for name, G in generator_codes():
        print(name, flush=True)
        codes.append({"name": name, "code": code_to_json(G), "mds": verdicts(G, G.rows)})
    OUT.write_text(json.dumps({"codes": codes}, indent=1) + "\n")


if __name__ == "__main__":
    main()
