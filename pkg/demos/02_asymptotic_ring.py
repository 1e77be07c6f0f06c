"""
The a-function and the asymptotic ring
======================================

On each two-sided cell the a-value is the top v-degree of the within-cell
structure constants, and the coefficients at that degree (gamma) multiply
the t-basis of the asymptotic ring.
"""

from affcell import asymptotic_algebra, check_P3, two_sided_cells
from affcell.corpus import gen_hecke_kl

s4 = gen_hecke_kl(3)
asys = [asymptotic_algebra(s4, c) for c in two_sided_cells(s4).cells]
for asy in asys:
    a = set(asy.a.values.values())
    print(f"{len(asy.cell):2d} elements  a = {a}  D_c = {asy.distinguished}")

# %%
# gamma for the middle cell of S3: t_cs t_cs = t_cs, t_cs t_cst = t_cst, ...
s3 = gen_hecke_kl(2)
mid = asymptotic_algebra(s3, ["cs", "ct", "cst", "cts"])
for b, b2, b3, g in mid.gamma_triples():
    print(f"t_{b} t_{b2} -> {g} t_{b3}")

# the sum of the distinguished t_d is the identity of the ring
print(mid.one())

# %%
# P3 compares left multiplication on the cell with right gamma-multiplication.
print(check_P3(s4, asys).line())

bad = s3.with_entry("cs", "ct", "cst", 2)
bad_asys = [asymptotic_algebra(bad, c) for c in two_sided_cells(bad).cells]
print(check_P3(bad, bad_asys).line())
