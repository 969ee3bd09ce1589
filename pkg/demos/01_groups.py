"""
Building finite groups
======================

Groups are Cayley tables with the identity at index 0.  They can come from a
named family, a permutation closure, or a table typed in by hand.
"""

import numpy as np

from powergraphs.groups import classify, from_cayley_table, from_permutation_generators, make

# The Heisenberg group over F_3: 27 unitriangular matrices, every element of order 3.
h3 = make("heisenberg 3")
print(h3.name, "order", h3.order)
print(classify(h3).to_dict())

# Element orders are read straight off the cached power table.
print("orders:", np.bincount(h3.orders))

# S_3 from two generators, closed by breadth-first multiplication.
s3 = from_permutation_generators(["(1 2)", "(1 2 3)"], max_order=100)
print("S3 labels:", s3.labels)

# The Klein four group as a raw table; classify recognises it as (Z_2)^2.
k4 = from_cayley_table([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]], name="K4")
print("K4 elementary abelian:", classify(k4).elementary_abelian)

# Maximal cyclic subgroups of Q_8: three of order 4 meeting in {1, -1}.
q8 = make("quaternion 8")
for sub in q8.maximal_cyclic:
    print(sorted(q8.labels[x] for x in sub))
