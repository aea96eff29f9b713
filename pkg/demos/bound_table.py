"""
Field sizes that guarantee an (n,k)-MDS(l) RS code, from two formulas.

Both are evaluated as exact integers (e replaced by a rational upper bound),
so the comparison is not affected by floating point.  The new bound is
exponential in (l-1)k rather than in n, which pays off when (l-1)k is small
compared with n.
"""
from hmds.sizer import compare_bounds

grid = [(n, k, ell) for n in (10, 20, 50, 100, 200) for k in (2, 3, 4) for ell in (2, 3)]
print(f"{'n':>4} {'k':>2} {'l':>2} {'Delta':>5} {'log2 new':>9} {'log2 prior':>10}  smaller")
for r in compare_bounds(grid):
    print(f"{r['n']:>4} {r['k']:>2} {r['ell']:>2} {r['Delta']:>5} {r['log2_new']:>9.1f} "
          f"{r['log2_prior']:>10.1f}  {r['smaller']}")
