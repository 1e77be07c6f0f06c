"""
Structure-constant tables and their cells
=========================================

A based algebra is given by its basis, a generalized unit and a table of
products with coefficients in Z[v, v^-1].  Here we build the Hecke algebra
of S3 in its Kazhdan-Lusztig basis and look at the cells.
"""

from affcell import ba_dump, ba_load, one_sided_cells, two_sided_cells
from affcell.corpus import gen_hecke_kl

s3 = gen_hecke_kl(2)
print(s3.basis)

# C_s squares to (v + v^-1) C_s in this normalization
print(s3.product("cs", "cs"))
print(s3.product("cs", "cts"))

# tables round-trip through the JSON document format
text = ba_dump(s3)
again = ba_load(text)
print(again.rank, "elements,", len(again.table), "nonzero products")

# %%
# Two-sided cells come out lowest first: the longest element, then the
# four elements of length 1 and 2, then the identity.
dec = two_sided_cells(s3)
for cell in dec.cells:
    print("cell", cell)

print("left cells ", one_sided_cells(s3, "left").cells)
print("right cells", one_sided_cells(s3, "right").cells)

# %%
# S4 has five two-sided cells, one per partition of 4, of sizes f_lambda^2.
s4 = gen_hecke_kl(3)
print([len(c) for c in two_sided_cells(s4).cells])
