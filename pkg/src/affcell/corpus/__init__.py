"""Generated test algebras and the periodic-matrix / segment combinatorics."""
from .hecke import gen_hecke_kl
from .periodic import PeriodicMatrix, d_stat, row_col_sums
from .qschur import gen_qschur, young_longest_idempotent
from .segments import Segment, enumerate_segments, wp_partition
