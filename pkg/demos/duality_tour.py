"""
MDS(l+1) of a code against average-radius list decoding of its dual.

For each (6,3) RS code over GF(8) we compare the MDS(3) verdict with the
LD-MDS(1) and LD-MDS(2) verdicts of the dual code, and print one list
decoding witness: three dual codewords with a centre inside the budget.
"""
import itertools
from collections import Counter

from hmds import RSCode, dual, field_new, vandermonde
from hmds.listdec import duality_check, is_ld_mds

F = field_new(2, 3)
tally = Counter()
for pts in itertools.combinations(range(8), 6):
    rep = duality_check(vandermonde(RSCode(F, pts, 3)), 2)
    tally[(rep.notes["mds"], rep.holds)] += 1

print("(MDS(3), sides agree) -> number of point sets")
for key, count in sorted(tally.items()):
    print(" ", key, count)

H = dual(vandermonde(RSCode(F, (0, 1, 2, 3, 4, 5), 3)))
rep, wit = is_ld_mds(H, 2)
print("\ndual LD-MDS(2):", rep.holds, "budget", rep.notes["budget"])
if wit is not None:
    print("centre", wit.y)
    for c in wit.codewords:
        print("  codeword", c)
    print("total weight", wit.total_weight)
