"""
The full pipeline
=================

``analyze`` runs every check in order and collects the verdicts; the same
report is what the ``affcell analyze`` command writes.
"""

from affcell import analyze
from affcell.corpus import gen_hecke_kl

report = analyze(gen_hecke_kl(3))
print(report.render_text())

# %%
# A corrupted table fails, and each failed verdict carries a witness.
bad = gen_hecke_kl(2).with_entry("cs", "ct", "cst", 2)
for v in analyze(bad).failures():
    print(v.line())
