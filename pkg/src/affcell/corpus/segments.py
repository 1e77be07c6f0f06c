"""Segments and multisegments over a finite alphabet of centers.

A center is an opaque label standing for a generic point of C*.  The segment
with center ``a`` and length ``k`` is the progression a z^{-k+1}, a z^{-k+3},
..., a z^{k-1}; its elements are tracked as ``(a, offset)`` pairs, and offsets
at distinct labels never collide.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

__all__ = [
    "Segment",
    "Multisegment",
    "multisegment",
    "wp_partition",
    "total_length",
    "enumerate_segments",
    "segments_by_partition",
    "partitions_at_most",
    "brute_force_segments",
]


@dataclass(frozen=True, order=True)
class Segment:
    center: str
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"segment length must be positive, got {self.length}")

    def elements(self) -> list[tuple[str, int]]:
        """(center, z-exponent) pairs."""
        k = self.length
        return [(self.center, e) for e in range(-k + 1, k, 2)]

    def __str__(self) -> str:
        return f"({self.center},{self.length})"


# unordered multiset, kept as a sorted tuple
Multisegment = tuple


def multisegment(segs: Iterable) -> Multisegment:
    out = []
    for s in segs:
        out.append(s if isinstance(s, Segment) else Segment(str(s[0]), int(s[1])))
    return tuple(sorted(out))


def total_length(ms: Sequence[Segment]) -> int:
    return sum(s.length for s in ms)


def wp_partition(ms: Sequence) -> tuple[int, ...]:
    """Lengths sorted weakly decreasing."""
    return tuple(sorted((s.length if isinstance(s, Segment) else int(s) for s in ms), reverse=True))


def partitions_at_most(r: int, n: int, largest: int | None = None):
    """Partitions of r with at most n parts, in decreasing lexicographic order."""
    if largest is None:
        largest = r
    if r == 0:
        yield ()
        return
    if n == 0:
        return
    for first in range(min(r, largest), 0, -1):
        for rest in partitions_at_most(r - first, n - 1, first):
            yield (first,) + rest


def segments_by_partition(lam: Sequence[int], alphabet: Sequence[str]) -> list[Multisegment]:
    """S_{r,lam}: multisegments whose length partition is lam."""
    alphabet = sorted(set(alphabet))
    lam = tuple(lam)
    found: set[Multisegment] = set()

    def place(i: int, chosen: list[Segment]):
        if i == len(lam):
            found.add(tuple(sorted(chosen)))
            return
        # equal parts take nondecreasing centers so each multiset appears once
        lo = 0
        if i and lam[i] == lam[i - 1]:
            lo = alphabet.index(chosen[-1].center)
        for c in alphabet[lo:]:
            place(i + 1, chosen + [Segment(c, lam[i])])

    place(0, [])
    return sorted(found)


def enumerate_segments(r: int, n: int, alphabet: Sequence[str]) -> list[Multisegment]:
    """S_r^{(n)}: multisegments of total length r with at most n segments."""
    if r < 0 or n < 0:
        raise ValueError("r and n must be nonnegative")
    out = []
    for lam in partitions_at_most(r, n):
        out.extend(segments_by_partition(lam, alphabet))
    return sorted(out)


def brute_force_segments(r: int, n: int, alphabet: Sequence[str]) -> list[Multisegment]:
    """Every multiset of (center, length) pairs with total length r, filtered by number of parts."""
    pool = [Segment(c, k) for c in sorted(set(alphabet)) for k in range(1, r + 1)]
    out = set()
    for p in range(0, r + 1):
        for combo in combinations_with_replacement(pool, p):
            if total_length(combo) == r and len(wp_partition(combo)) <= n:
                out.add(tuple(sorted(combo)))
    return sorted(out)
