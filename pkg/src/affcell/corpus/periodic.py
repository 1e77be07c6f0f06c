"""n-periodic Z x Z matrices indexing the affine q-Schur basis.

A periodic matrix stores one period of rows, ``(i, j) -> a_ij`` with
``1 <= i <= n`` and any integer ``j``; all other entries follow from
``a_{i+n, j+n} = a_{i, j}``.  Files use ``{"n": n, "entries": [[i, j, a], ...]}``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Union

__all__ = ["PeriodicMatrix", "d_stat", "row_col_sums", "random_periodic"]


@dataclass(frozen=True)
class PeriodicMatrix:
    n: int
    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("period must be positive")
        clean = {}
        for (i, j), a in dict(self.entries).items():
            i, j, a = int(i), int(j), int(a)
            if a < 0:
                raise ValueError(f"negative entry at {(i, j)}")
            if not 1 <= i <= self.n:
                # shift into the stored period
                t = (i - 1) // self.n
                i, j = i - t * self.n, j - t * self.n
            if a:
                clean[(i, j)] = clean.get((i, j), 0) + a
        object.__setattr__(self, "entries", clean)

    @property
    def r(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        t = (i - 1) // self.n
        return self.entries.get((i - t * self.n, j - t * self.n), 0)

    def transpose(self) -> "PeriodicMatrix":
        return PeriodicMatrix(self.n, {(j, i): a for (i, j), a in self.entries.items()})

    def to_dict(self) -> dict:
        return {"n": self.n, "entries": [[i, j, a] for (i, j), a in sorted(self.entries.items())]}

    @classmethod
    def from_dict(cls, doc: Mapping) -> "PeriodicMatrix":
        return cls(int(doc["n"]), {(int(i), int(j)): int(a) for i, j, a in doc["entries"]})

    @classmethod
    def load(cls, path: Union[str, Path]) -> "PeriodicMatrix":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def d_stat(A: PeriodicMatrix) -> int:
    """sum of a_ij a_kl over 1 <= i <= n, k <= i, j < l.

    For stored entries (i, j) and (k0, l0), the translates (k0 + tn, l0 + tn)
    contribute when ``(j - l0)/n < t <= (i - k0)/n``; that count is exact.
    """
    n = A.n
    total = 0
    items = list(A.entries.items())
    for (i, j), a in items:
        for (k0, l0), b in items:
            count = (i - k0) // n - (j - l0) // n
            if count > 0:
                total += a * b * count
    return total


def row_col_sums(A: PeriodicMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(r(A)_1..r(A)_n, c(A)_1..c(A)_n) over one period."""
    n = A.n
    rows = [0] * n
    cols = [0] * n
    for (i, j), a in A.entries.items():
        rows[i - 1] += a
        cols[(j - 1) % n] += a
    return tuple(rows), tuple(cols)


def random_periodic(n: int, r: int, rng: random.Random, spread: int = 2) -> PeriodicMatrix:
    """r units dropped into random cells with |j - i| <= spread * n."""
    entries: dict[tuple[int, int], int] = {}
    for _ in range(r):
        i = rng.randint(1, n)
        j = rng.randint(i - spread * n, i + spread * n)
        entries[(i, j)] = entries.get((i, j), 0) + 1
    return PeriodicMatrix(n, entries)
