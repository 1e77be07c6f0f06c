"""Two-sided, left and right cells of a based algebra.

``b <=_LR b'`` means ``b`` lies in every based two-sided ideal containing
``b'``.  Based ideals are closed under taking supports, so the based ideal
generated by ``b'`` is the set of labels reachable from ``b'`` in the graph
with an edge ``b' -> b''`` whenever ``c[x, b'][b'']`` or ``c[b', x][b'']`` is
nonzero for some ``x``.  Cells are the strongly connected components.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .based_algebra import BasedAlgebra
from .verdict import Verdict

__all__ = [
    "CellDecomposition",
    "lr_preorder",
    "two_sided_cells",
    "one_sided_cells",
    "cell_ideal_basis",
    "check_cell_order",
    "check_involution_on_cells",
]

SIDES = ("two-sided", "left", "right")


@dataclass
class CellDecomposition:
    """Cells listed along a linear extension of the cell order, lowest first.

    ``order`` holds pairs ``(i, j)`` with ``cells[i] <= cells[j]``
    (reflexive); ``chain`` is the chosen linear extension as indices into
    ``cells``.
    """

    cells: list[tuple[str, ...]]
    order: set[tuple[int, int]]
    chain: tuple[int, ...]
    side: str = "two-sided"
    _where: dict[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._where = {b: i for i, c in enumerate(self.cells) for b in c}

    def __len__(self) -> int:
        return len(self.cells)

    def cell_of(self, b: str) -> int:
        return self._where[b]

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.order

    def partition(self) -> set[frozenset[str]]:
        return {frozenset(c) for c in self.cells}

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "cells": [list(c) for c in self.cells],
            "order": sorted([i, j] for i, j in self.order if i != j),
            "chain": list(self.chain),
        }


def _edges(alg: BasedAlgebra, side: str) -> dict[str, set[str]]:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    adj: dict[str, set[str]] = {b: set() for b in alg.basis}
    for (x, y), row in alg.table.items():
        for z in row:
            if side in ("two-sided", "left"):
                adj[y].add(z)  # z in supp(x * y)
            if side in ("two-sided", "right"):
                adj[x].add(z)  # z in supp(x * y)
    return adj


def _reach(adj: dict[str, set[str]], start: str) -> frozenset[str]:
    seen = {start}
    todo = deque([start])
    while todo:
        b = todo.popleft()
        for z in adj[b]:
            if z not in seen:
                seen.add(z)
                todo.append(z)
    return frozenset(seen)


def lr_preorder(alg: BasedAlgebra, side: str = "two-sided") -> dict[str, frozenset[str]]:
    """Map each ``b'`` to the basis of the based ideal it generates.

    ``b <= b'`` iff ``b in lr_preorder(alg)[b']``.
    """
    adj = _edges(alg, side)
    return {b: _reach(adj, b) for b in alg.basis}


def _decompose(alg: BasedAlgebra, side: str) -> CellDecomposition:
    adj = _edges(alg, side)
    g = nx.DiGraph()
    g.add_nodes_from(alg.basis)
    g.add_edges_from((b, z) for b, zs in adj.items() for z in zs if z != b)
    cond = nx.condensation(g)
    idx = alg.index
    members = {
        n: tuple(sorted(cond.nodes[n]["members"], key=idx.__getitem__)) for n in cond.nodes
    }
    # condensation edges point from higher to lower cells; reverse for "lowest first"
    up = cond.reverse(copy=True)
    key = lambda n: (len(members[n]), min(members[n]))
    ordered = list(nx.lexicographical_topological_sort(up, key=key))
    pos = {n: i for i, n in enumerate(ordered)}
    cells = [members[n] for n in ordered]
    order = set()
    for n in cond.nodes:
        for lower in nx.descendants(cond, n) | {n}:
            order.add((pos[lower], pos[n]))
    return CellDecomposition(cells, order, tuple(range(len(cells))), side)


def two_sided_cells(alg: BasedAlgebra) -> CellDecomposition:
    key = ("cells", "two-sided")
    if key not in alg._cache:
        alg._cache[key] = _decompose(alg, "two-sided")
    return alg._cache[key]


def one_sided_cells(alg: BasedAlgebra, side: str) -> CellDecomposition:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    key = ("cells", side)
    if key not in alg._cache:
        alg._cache[key] = _decompose(alg, side)
    return alg._cache[key]


def cell_ideal_basis(dec: CellDecomposition, j: int) -> set[str]:
    """Labels of the first ``j`` cells along the chain (1-based)."""
    if not 1 <= j <= len(dec.cells):
        raise IndexError(f"cell index {j} out of range 1..{len(dec.cells)}")
    out: set[str] = set()
    for i in dec.chain[:j]:
        out.update(dec.cells[i])
    return out


def check_cell_order(dec: CellDecomposition) -> Verdict:
    """The cell order is a partial order and the chain is a linear extension of it."""
    f = len(dec.cells)
    name = "P1(a) cell order"
    for i in range(f):
        if (i, i) not in dec.order:
            return Verdict(name, False, witness=[i], detail="order not reflexive")
    for i, j in dec.order:
        if i != j and (j, i) in dec.order:
            return Verdict(name, False, witness=[i, j], detail="order not antisymmetric")
        for k in range(f):
            if (j, k) in dec.order and (i, k) not in dec.order:
                return Verdict(name, False, witness=[i, j, k], detail="order not transitive")
    pos = {c: p for p, c in enumerate(dec.chain)}
    if sorted(dec.chain) != list(range(f)):
        return Verdict(name, False, detail="chain is not a permutation of the cells")
    for i, j in dec.order:
        if pos[i] > pos[j]:
            return Verdict(name, False, witness=[i, j], detail="chain is not a linear extension")
    return Verdict(name, True, detail=f"{f} cells, finite partial order with compatible chain")


def check_involution_on_cells(alg: BasedAlgebra, dec: CellDecomposition) -> Verdict:
    """iota maps two-sided cells onto two-sided cells and preserves their order."""
    name = "involution on cells"
    image = {}
    for i, cell in enumerate(dec.cells):
        targets = {dec.cell_of(alg.involution[b]) for b in cell}
        if len(targets) != 1:
            return Verdict(name, False, witness=list(cell), detail="cell is split by the involution")
        (j,) = targets
        if len({alg.involution[b] for b in cell}) != len(dec.cells[j]):
            return Verdict(name, False, witness=list(cell), detail="cell not mapped onto a cell")
        image[i] = j
    for i, j in dec.order:
        if (image[i], image[j]) not in dec.order:
            return Verdict(name, False, witness=[i, j], detail="involution does not preserve order")
    return Verdict(name, True)
