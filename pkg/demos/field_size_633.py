"""
Which fields carry a (6,3)-MDS(3) Reed-Solomon code?

Ordinary MDS only needs six distinct points.  Order 3 asks more: no three
disjoint pairs of points may give a singular 3x3 matrix of elementary
symmetric functions.  We scan every 6-point set of each small field with that
pair test and compare against the general verifier on one survivor.
"""
import itertools

from hmds import RSCode, field_of_order, is_mds_ell, vandermonde
from hmds.gf import prime_powers
from hmds.rs import mds3_criterion
from hmds.sizer import exhaustive_min_q, random_search

print("q   6-point sets   MDS(3) sets")
for q in prime_powers(7, 16):
    F = field_of_order(q)
    total = good = 0
    for pts in itertools.combinations(range(q), 6):
        total += 1
        good += mds3_criterion(RSCode(F, pts, 3)).holds
    print(f"{q:<3} {total:>12}   {good:>10}")

# GF(13) comes out empty while GF(11) and GF(16) do not: existence is not
# monotone in the field size.

q, code = exhaustive_min_q(6, 3, 3, 16)
print("\nsmallest field:", q, "points", code.points)

found = random_search(6, 3, 3, q, seed=1)
print("random search with seed 1:", found.code.points, "after", found.trials, "trials")
rep = is_mds_ell(vandermonde(found.code), 3, "subspace")
print("general verifier:", rep.holds, "after", rep.collections_checked, "collections")
