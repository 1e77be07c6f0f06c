"""
Representation rings of general linear groups
=============================================

Tensor products of GL_k irreducibles via Littlewood-Richardson numbers,
with a determinant twist for negative weights.
"""

from affcell import RepRingElement, lr_coefficient, weyl_dimension
from affcell.repring import JRingElement, j_matrix_iso, j_multiply, tensor_decompose_gl

print(lr_coefficient((2, 1), (2, 1), (3, 2, 1)))

# V(1,0) (x) V(0,-1) for GL2 is the adjoint plus the trivial
for w, m in tensor_decompose_gl((1, 0), (0, -1)):
    print(m, w, "dim", weyl_dimension(w))

# %%
# Elements of the representation ring and duals.
x = RepRingElement.irr((2,), ((1, 0),))
y = x * x.dual()
print(y, "  dimension", y.dimension())
print((x * x).dual() == x.dual() * x.dual())

# %%
# The J-ring on triples (d, d', s) is a matrix ring over the representation ring.
a = JRingElement(2, (2,), {(1, 2, ((1, 0),)): 1})
b = JRingElement(2, (2,), {(2, 1, ((0, -1),)): 1})
for row in j_matrix_iso(j_multiply(a, b)):
    print([str(e) for e in row])
