import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from affcell.corpus.periodic import PeriodicMatrix, d_stat, random_periodic, row_col_sums


def windowed_d(A, periods):
    """The defining sum with k, l cut to a window of the given number of periods."""
    n = A.n
    lo, hi = -periods * n, periods * n
    js = [j for (_, j) in A.entries]
    jlo, jhi = min(js, default=0) - periods * n, max(js, default=0) + periods * n
    total = 0
    for (i, j), a in A.entries.items():
        for k in range(lo, i + 1):
            for l in range(j + 1, jhi + 1):
                b = A[k, l]
                if b:
                    total += a * b
    return total


def truncation_oracle(A):
    """Grow the window until the value is stable for two consecutive enlargements."""
    p = 1
    prev = windowed_d(A, p)
    while True:
        p += 1
        cur = windowed_d(A, p)
        if cur == prev and windowed_d(A, p + 1) == cur:
            return cur
        prev = cur


def test_single_entry():
    A = PeriodicMatrix(2, {(1, 2): 1})
    assert d_stat(A) == truncation_oracle(A) == 0
    assert row_col_sums(A) == ((1, 0), (0, 1))


def test_diagonal_is_zero():
    for lam in [(2, 1), (0, 3), (1, 1, 1)]:
        A = PeriodicMatrix(len(lam), {(i + 1, i + 1): a for i, a in enumerate(lam)})
        assert d_stat(A) == 0
        assert row_col_sums(A) == (lam, lam)


def test_random_matches_oracle():
    rng = random.Random(7)
    for _ in range(60):
        A = random_periodic(rng.randint(1, 3), rng.randint(1, 4), rng)
        assert d_stat(A) == truncation_oracle(A)


def test_known_values():
    # n = 1, entries a_{1,1} = a_{1,2} = 1: pairs (1,1),(k,l) with k <= 1, l > 1
    A = PeriodicMatrix(1, {(1, 1): 1, (1, 2): 1})
    assert d_stat(A) == truncation_oracle(A)
    B = PeriodicMatrix(2, {(1, 3): 1, (2, 1): 1})
    assert d_stat(B) == truncation_oracle(B)


entries = st.dictionaries(
    st.tuples(st.integers(1, 3), st.integers(-4, 6)), st.integers(1, 2), min_size=1, max_size=3
)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), entries)
def test_transpose_swaps_sums(n, ents):
    A = PeriodicMatrix(n, {(min(i, n), j): a for (i, j), a in ents.items()})
    r, c = row_col_sums(A)
    rt, ct = row_col_sums(A.transpose())
    assert rt == c and ct == r
    assert sum(r) == sum(c) == A.r
    assert A.transpose().transpose() == A


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), entries, st.integers(-3, 3))
def test_periodicity_and_storage(n, ents, t):
    A = PeriodicMatrix(n, {(min(i, n), j): a for (i, j), a in ents.items()})
    for (i, j), a in A.entries.items():
        assert A[i + t * n, j + t * n] == a
    # storing a translate of a row gives the same matrix
    shifted = PeriodicMatrix(n, {(i + t * n, j + t * n): a for (i, j), a in A.entries.items()})
    assert shifted == A


def test_serialization_roundtrip(tmp_path):
    A = PeriodicMatrix(3, {(1, 4): 2, (3, -1): 1})
    path = tmp_path / "a.json"
    path.write_text(json.dumps(A.to_dict()))
    assert PeriodicMatrix.load(path) == A
    assert A.to_dict() == {"n": 3, "entries": [[1, 4, 2], [3, -1, 1]]}


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        PeriodicMatrix(0, {})
    with pytest.raises(ValueError):
        PeriodicMatrix(2, {(1, 1): -1})
