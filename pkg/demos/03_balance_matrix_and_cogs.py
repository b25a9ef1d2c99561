#!/usr/bin/env python3
"""Balance conditions, their 0-1 matrix, and cog extraction.

Over n ordered atoms, the balance conditions on k-subsets form a matrix
of rank C(n,k) - C(n-k,k); its null space is spanned by the C(n-k,k)
narrow cogs.  Any nonzero vector yields a cog after k difference steps.
"""

import math
from fractions import Fraction

from regwa import (CogSpec, FinVec, balance_nullity, balance_rank,
                   canonical_pool, extract_cog, is_balanced, make_cog,
                   matrix_rank, narrow_cogs, subset_key, AtomKind)

print("rank table (rows: k, columns: n), with the closed form alongside")
for k in range(1, 4):
    cells = []
    for n in range(k, 9):
        rank = balance_rank(n, k)
        assert rank == math.comb(n, k) - math.comb(n - k, k)
        cells.append(f"{rank:3d}")
    print(f"  k={k}:", " ".join(cells))

print("\nnarrow cogs over six atoms, k=2:")
T = canonical_pool(AtomKind.ORDERED, 6)
cogs = narrow_cogs(T, 2)
print("  count:", len(cogs), "| rank:", matrix_rank(cogs),
      "| null dimension:", balance_nullity(6, 2))

spec = CogSpec(tuple(Fraction(v) for v in (1, 2, 3, 4)))
cog = make_cog(spec)
print("\nthe cog on 1<2<3<4:", {tuple(map(str, key)): str(c) for key, c in sorted(cog.items())})
print("balanced over {1..6}?", is_balanced(cog, T, 2))

print("\nextracting a cog from a messy vector:")
v = FinVec({subset_key((Fraction(1), Fraction(3))): 2,
            subset_key((Fraction(2), Fraction(3))): -5,
            subset_key((Fraction(3), Fraction(4))): 1})
ext = extract_cog(v, [Fraction(i) for i in (1, 2, 3, 4)], 2)
print("  chosen interleaving:", tuple(map(str, ext.alpha.alpha)))
print("  result == make_cog of it?", ext.vector == make_cog(ext.alpha))
