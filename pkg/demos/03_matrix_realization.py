"""
Cells as generalized matrix algebras
====================================

Each cell algebra is a matrix algebra M_n(k) with the twisted product
x . y = x Psi y.  Rows are indexed by right cells and columns by left
cells, each through its distinguished element.
"""

from affcell import (
    assemble_cell_chain,
    asymptotic_algebra,
    cell_labeling,
    cell_realization,
    two_sided_cells,
    verify_affine_cell_ideal,
)
from affcell.corpus import gen_hecke_kl

s3 = gen_hecke_kl(2)
dec = two_sided_cells(s3)
mid = asymptotic_algebra(s3, ["cs", "ct", "cst", "cts"])
lab = cell_labeling(s3, mid)
for b, (j, l, _) in lab.items():
    print(f"{b:4s} -> E_{j}{l}")

g = cell_realization(mid, lab)
print("Psi =", g.psi_strings())

# %%
# The middle cell is layer 2 of the chain; check it is an affine cell ideal.
print(verify_affine_cell_ideal(s3, dec, 2, mid, lab).line())

# %%
# And the whole chain C_1 < C_2 < C_3 = A.
chain = assemble_cell_chain(s3, dec)
print(chain.line())
for layer in chain.children:
    print("  " + layer.line())
