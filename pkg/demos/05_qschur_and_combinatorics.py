"""
q-Schur algebras, periodic matrices and segments
================================================

The finite q-Schur algebra S_q(2, 2) from the tensor-space model, and the
combinatorics that index the affine version.
"""

import random

from affcell.corpus import (
    PeriodicMatrix,
    d_stat,
    enumerate_segments,
    gen_qschur,
    row_col_sums,
    young_longest_idempotent,
)
from affcell.corpus.periodic import random_periodic

q22 = gen_qschur(2, 2)
print(q22.rank, "basis elements; units", q22.units)
print(q22.product("[0,1;1,0]", "[0,1;1,0]"))

for lam in [(2, 0), (1, 1), (0, 2)]:
    v, _ = young_longest_idempotent(lam, q22)
    print(v.line())

# %%
# d_A for periodic matrices.
A = PeriodicMatrix(2, {(1, 3): 1, (2, 1): 2})
print(d_stat(A), row_col_sums(A), row_col_sums(A.transpose()))

rng = random.Random(1)
for _ in range(3):
    B = random_periodic(3, 4, rng)
    print(B.to_dict()["entries"], "d =", d_stat(B))

# %%
# Multisegments of total length 3 with at most 2 segments, centers a and b.
for ms in enumerate_segments(3, 2, ["a", "b"]):
    print([str(s) for s in ms])
