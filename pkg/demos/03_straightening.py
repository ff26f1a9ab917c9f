"""
Weight spaces of Weyl modules and the straightening law
=======================================================

A Weyl module is presented, one weight at a time, as divided monomials
modulo the box relations.  The classes of semistandard tableaux form a
basis, and "straightening" writes any tableau class in that basis.

The last section shows a boundary phenomenon: a tableau class that is zero
while its degree-raised shift (insert p^d leading 1s) is not.  This is why
the degree-raising isomorphisms downstream need their hypotheses.
"""

import numpy as np

from weylkit import Tableau, build_weight_space, straighten, two_row_straighten

p = 3

# The weight (2,2) slice of the Weyl module of shape (2,2) over F_3.
model = build_weight_space((2, 2), (2, 2), p)
print("monomials:", model.monomials)
print("semistandard basis:", [str(t) for t in model.sst])
print("relation rank:", model.relation_rank)
print()

# Straightening {1,2/1,2}: exchanging the bottom 1 gives -2 = 1 times
# {1,1/2,2} over F_3.
u = Tableau.from_entries([[1, 2], [1, 2]], 2)
print("[{1,2/1,2}] =", straighten(u, p), "in basis", [str(t) for t in model.sst])

# The two-row closed form computes the same expansion without touching the
# relation space.
print("closed form agrees:", np.array_equal(two_row_straighten(u, (2, 2), p), straighten(u, p)))
print()

# Boundary witness: [{1,2/2,2}] lives in the weight (1,3) slice of shape
# (2,2), which is zero... but after inserting p leading 1s the shifted
# class is nonzero.  Insertion compatibility needs mu_2 <= alpha_1, and
# here 2 > 1.
v = Tableau.from_entries([[1, 2], [2, 2]], 2)
for q in (2, 3):
    gone = straighten(v, q)
    lifted = straighten(v.plus_shift(1, q), q)
    print(f"p={q}: [{{1,2/2,2}}] lives in a {gone.size}-dim slice;",
          f"shifted class coordinates = {lifted}")
