"""a-function, gamma constants and the asymptotic ring of a two-sided cell.

For a 2-cell ``c`` the a-value of ``b`` is the least ``n >= 0`` with
``v^-n b L ⊆ L``, ``L`` the Z[v^-1]-lattice spanned by ``c`` inside the
cell algebra ``A_c``.  On a finite table this is the largest exponent
occurring among the within-cell constants ``c[b, b'][b'']`` (clamped at 0).
The gamma constants are the coefficients at that exponent and define the
ring ``A_c^inf`` with Z-basis ``t_b``.

Elements of ``A_c^inf`` (or of its k-linear extension) are plain dicts
``label -> coefficient``; coefficients may be ``int`` or ``LaurentPoly``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from .based_algebra import BasedAlgebra
from .cells import two_sided_cells
from .laurent import ZERO, LaurentPoly
from .verdict import Verdict

__all__ = [
    "AFunctionTable",
    "AsymptoticAlgebra",
    "GammaBoundError",
    "P2Error",
    "a_function",
    "gamma_table",
    "distinguished_set",
    "asymptotic_algebra",
    "check_P1",
    "check_P2",
    "check_P3",
    "check_gamma_associativity",
    "check_psi_factorization",
    "infty_action",
    "compute_psi",
    "t_multiply",
]

MAX_EXHAUSTIVE_D_SEARCH = 20


class GammaBoundError(ValueError):
    def __init__(self, message: str, witness):
        super().__init__(f"{message}: {witness}")
        self.witness = witness


class P2Error(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass
class AFunctionTable:
    cell: tuple[str, ...]
    values: dict[str, int]

    def __getitem__(self, b: str) -> int:
        return self.values[b]


@dataclass
class AsymptoticAlgebra:
    alg: BasedAlgebra = field(repr=False)
    cell: tuple[str, ...]
    a: AFunctionTable
    gamma: dict[tuple[str, str], dict[str, int]]
    distinguished: Optional[tuple[str, ...]] = None
    d_candidates: list[tuple[str, ...]] = field(default_factory=list)

    def g(self, b: str, b2: str, b3: str) -> int:
        return self.gamma.get((b, b2), {}).get(b3, 0)

    def t(self, b: str) -> dict:
        return {b: 1}

    def mul(self, x: Mapping, y: Mapping) -> dict:
        return t_multiply(self, x, y)

    def one(self) -> dict:
        if self.distinguished is None:
            raise P2Error("no distinguished set computed for this cell")
        return {d: 1 for d in self.distinguished}

    def gamma_triples(self) -> list[tuple[str, str, str, int]]:
        order = {b: i for i, b in enumerate(self.cell)}
        out = []
        for (b, b2), row in self.gamma.items():
            for b3, g in row.items():
                out.append((b, b2, b3, g))
        out.sort(key=lambda t: (order[t[0]], order[t[1]], order[t[2]]))
        return out


def _require_cell(alg: BasedAlgebra, cell: Sequence[str]) -> tuple[str, ...]:
    cell_set = frozenset(cell)
    if cell_set not in two_sided_cells(alg).partition():
        raise ValueError(f"{sorted(cell_set)} is not a two-sided cell of {alg.name or 'the algebra'}")
    return tuple(sorted(cell_set, key=alg.index.__getitem__))


def a_function(alg: BasedAlgebra, cell: Sequence[str]) -> AFunctionTable:
    cell = _require_cell(alg, cell)
    members = set(cell)
    values = {}
    for b in cell:
        top = 0
        for b2 in cell:
            for b3, c in alg.product(b, b2).items():
                if b3 in members:
                    top = max(top, c.max_degree())
        values[b] = top
    return AFunctionTable(cell, values)


def gamma_table(alg: BasedAlgebra, cell: Sequence[str], af: AFunctionTable) -> AsymptoticAlgebra:
    """gamma[b, b'][b''] = coefficient of v^a(b) in c[b, b'][b''] (within the cell)."""
    cell = tuple(sorted(set(cell), key=alg.index.__getitem__))
    members = set(cell)
    gamma: dict[tuple[str, str], dict[str, int]] = {}
    for b in cell:
        ab = af[b]
        for b2 in cell:
            row = {}
            for b3, c in alg.product(b, b2).items():
                if b3 not in members:
                    continue
                if c.max_degree() > ab:
                    raise GammaBoundError(
                        "within-cell constant exceeds the a-value bound", (b, b2, b3)
                    )
                g = c.coeff(ab)
                if g:
                    row[b3] = g
            if row:
                gamma[(b, b2)] = row
    return AsymptoticAlgebra(alg, cell, af, gamma)


def t_multiply(asy: AsymptoticAlgebra, x: Mapping, y: Mapping) -> dict:
    """Product in A_c^inf (or its extension by scalars) of t-combinations."""
    out: dict = {}
    for b, cb in x.items():
        for b2, cb2 in y.items():
            row = asy.gamma.get((b, b2))
            if not row:
                continue
            s = cb * cb2
            for b3, g in row.items():
                out[b3] = out.get(b3, 0) + s * g
    return {k: c for k, c in out.items() if c != 0}


def _mult_matrices(asy: AsymptoticAlgebra) -> tuple[dict, dict]:
    pos = {b: i for i, b in enumerate(asy.cell)}
    n = len(asy.cell)
    left, right = {}, {}
    for d in asy.cell:
        L = np.zeros((n, n), dtype=np.int64)
        R = np.zeros((n, n), dtype=np.int64)
        for b in asy.cell:
            for b3, g in asy.gamma.get((d, b), {}).items():
                L[pos[b3], pos[b]] = g
            for b3, g in asy.gamma.get((b, d), {}).items():
                R[pos[b3], pos[b]] = g
        left[d], right[d] = L, R
    return left, right


def distinguished_set(asy: AsymptoticAlgebra) -> tuple[str, ...]:
    """Find D_c: orthogonal gamma-idempotents whose t-sum is the identity.

    Candidates are the ``d`` with ``t_d t_d = t_d``.  A greedy orthogonal
    selection is tried first, then every subset when there are at most
    ``MAX_EXHAUSTIVE_D_SEARCH`` candidates.  Raises :class:`P2Error` if no
    set works.  All valid sets are kept in ``asy.d_candidates``; the
    lexicographically least (in basis order) is stored and returned.
    """
    cell = asy.cell
    idem = [d for d in cell if asy.gamma.get((d, d), {}) == {d: 1}]
    left, right = _mult_matrices(asy)
    eye = np.eye(len(cell), dtype=np.int64)

    def orthogonal(a, b):
        return not asy.gamma.get((a, b)) and not asy.gamma.get((b, a))

    def valid(S):
        if not S:
            return False
        if any(not orthogonal(a, b) for a, b in itertools.combinations(S, 2)):
            return False
        return np.array_equal(sum(left[d] for d in S), eye) and np.array_equal(
            sum(right[d] for d in S), eye
        )

    greedy: list[str] = []
    for d in idem:
        if all(orthogonal(d, e) for e in greedy):
            greedy.append(d)
    found: list[tuple[str, ...]] = []
    if valid(greedy):
        found = [tuple(greedy)]
    elif len(idem) <= MAX_EXHAUSTIVE_D_SEARCH:
        for k in range(1, len(idem) + 1):
            for S in itertools.combinations(idem, k):
                if valid(S):
                    found.append(S)
    else:
        raise P2Error(
            f"{len(idem)} idempotent candidates exceed the exhaustive search limit", idem
        )
    if not found:
        raise P2Error("A_c^inf has no generalized unit made of basis idempotents", list(cell))
    order = {b: i for i, b in enumerate(cell)}
    found.sort(key=lambda S: [order[d] for d in S])
    asy.d_candidates = found
    asy.distinguished = found[0]
    return found[0]


def asymptotic_algebra(alg: BasedAlgebra, cell: Sequence[str], find_units: bool = True) -> AsymptoticAlgebra:
    af = a_function(alg, cell)
    asy = gamma_table(alg, af.cell, af)
    if find_units:
        distinguished_set(asy)
    return asy


# --- property checks -------------------------------------------------------


def check_P1(alg: BasedAlgebra, asy: AsymptoticAlgebra) -> Verdict:
    """P1(b) finiteness and P1(c) constancy of a on c 1_lambda."""
    name = "P1(b,c) a-function"
    for b, a in asy.a.values.items():
        if a is None or a < 0:
            return Verdict(name, False, witness=b, detail="a-value not a finite nonnegative integer")
    for lam in alg.units:
        vals = {asy.a[b] for b in asy.cell if alg.sector.get(b, (None, None))[1] == lam}
        if len(vals) > 1:
            return Verdict(
                name, False, witness=[lam, sorted(vals)], detail="a not constant on c 1_lambda"
            )
    return Verdict(name, True, detail=f"a-values {sorted(set(asy.a.values.values()))}")


def check_gamma_associativity(asy: AsymptoticAlgebra) -> Verdict:
    name = "A_c^inf associativity"
    for x, y, z in itertools.product(asy.cell, repeat=3):
        lhs = t_multiply(asy, t_multiply(asy, {x: 1}, {y: 1}), {z: 1})
        rhs = t_multiply(asy, {x: 1}, t_multiply(asy, {y: 1}, {z: 1}))
        if lhs != rhs:
            return Verdict(name, False, witness=[x, y, z])
    return Verdict(name, True)


def unit_sectors(asy: AsymptoticAlgebra) -> dict[str, tuple[str, str]]:
    """For each b the unique (d, d') with t_d t_b = t_b = t_b t_d'.

    Raises :class:`P2Error` when the t-basis is not compatible with D_c.
    """
    if asy.distinguished is None:
        raise P2Error("no distinguished set")
    out = {}
    for b in asy.cell:
        tb = {b: 1}
        rows, cols = [], []
        for d in asy.distinguished:
            lp = t_multiply(asy, {d: 1}, tb)
            rp = t_multiply(asy, tb, {d: 1})
            if lp not in ({}, tb) or rp not in ({}, tb):
                raise P2Error("t-basis not compatible with the generalized unit", [d, b])
            if lp:
                rows.append(d)
            if rp:
                cols.append(d)
        if len(rows) != 1 or len(cols) != 1:
            raise P2Error("basis element not in a unique sector of D_c", b)
        out[b] = (rows[0], cols[0])
    return out


def check_P2(asy: AsymptoticAlgebra) -> Verdict:
    name = "P2(a) generalized unit of A_c^inf"
    try:
        if asy.distinguished is None:
            distinguished_set(asy)
        unit_sectors(asy)
    except P2Error as exc:
        return Verdict(name, False, witness=exc.witness, detail=str(exc))
    detail = f"D_c = {list(asy.distinguished)}"
    if len(asy.d_candidates) > 1:
        detail += f"; {len(asy.d_candidates)} valid sets found, using the least"
    return Verdict(name, True, detail=detail)


def _sparse_mm(x: dict, y: dict) -> dict:
    out: dict = {}
    for i, row in x.items():
        acc: dict = {}
        for k, a in row.items():
            for j, b in y.get(k, {}).items():
                acc[j] = acc.get(j, 0) + a * b
        acc = {j: c for j, c in acc.items() if c != 0}
        if acc:
            out[i] = acc
    return out


def _first_diff(x: dict, y: dict):
    for i in set(x) | set(y):
        rx, ry = x.get(i, {}), y.get(i, {})
        for j in set(rx) | set(ry):
            if LaurentPoly.coerce(rx.get(j, 0)) != LaurentPoly.coerce(ry.get(j, 0)):
                return i, j
    return None


def check_P3(
    alg: BasedAlgebra,
    asys: Sequence[AsymptoticAlgebra],
    max_exhaustive_rank: int = 30,
    samples: int = 2000,
    seed: int = 0,
) -> Verdict:
    """Both P3 identities, for b2, b' in one cell and b1, b3 ranging over B.

    The first identity says left multiplication by ``b1`` (cut to the cell)
    commutes with right multiplication by ``t_b3``; the second is its
    mirror.  Witnesses are ``(equation, b1, b2, b3, b')``.
    """
    name = "P3"
    exhaustive = alg.rank <= max_exhaustive_rank
    rng = random.Random(seed)
    for asy in asys:
        cell = asy.cell
        members = set(cell)

        def cut(b, side):
            # matrix of x -> b x (side 'left') or x -> x b, restricted to the cell
            m = {}
            for x in cell:
                prod = alg.product(b, x) if side == "left" else alg.product(x, b)
                row = {y: c for y, c in prod.items() if y in members}
                if row:
                    m[x] = row
            return m

        def gright(b3):
            return {x: dict(asy.gamma[(x, b3)]) for x in cell if (x, b3) in asy.gamma}

        def gleft(b1):
            return {x: dict(asy.gamma[(b1, x)]) for x in cell if (b1, x) in asy.gamma}

        pairs1 = [(b1, b3) for b1 in alg.basis for b3 in cell]
        pairs2 = [(b1, b3) for b1 in cell for b3 in alg.basis]
        if not exhaustive:
            pairs1 = [rng.choice(pairs1) for _ in range(samples)]
            pairs2 = [rng.choice(pairs2) for _ in range(samples)]
        for b1, b3 in pairs1:
            M, R = cut(b1, "left"), gright(b3)
            diff = _first_diff(_sparse_mm(M, R), _sparse_mm(R, M))
            if diff:
                return Verdict(name, False, witness=[1, b1, diff[0], b3, diff[1]],
                               detail="first identity fails")
        for b1, b3 in pairs2:
            N, L = cut(b3, "right"), gleft(b1)
            diff = _first_diff(_sparse_mm(L, N), _sparse_mm(N, L))
            if diff:
                return Verdict(name, False, witness=[2, b1, diff[0], b3, diff[1]],
                               detail="second identity fails")
    return Verdict(name, True, detail="exhaustive" if exhaustive else f"{samples} sampled pairs per cell")


# --- bimodule action and Psi -------------------------------------------------


def infty_action(asy: AsymptoticAlgebra, b: str, b2: str) -> dict[str, LaurentPoly]:
    """t_b o b' = sum over b'' in the cell of c[b, b'][b''] t_b''."""
    members = set(asy.cell)
    if b not in members or b2 not in members:
        raise ValueError(f"{b!r} and {b2!r} must both lie in the cell")
    return {b3: c for b3, c in asy.alg.product(b, b2).items() if b3 in members}


def action(asy: AsymptoticAlgebra, x: Mapping, b2: str) -> dict:
    """k-linear extension of ``infty_action`` in the first argument."""
    out: dict = {}
    for b, cb in x.items():
        for b3, c in infty_action(asy, b, b2).items():
            out[b3] = out.get(b3, ZERO) + c * cb
    return {k: c for k, c in out.items() if c != 0}


def compute_psi(asy: AsymptoticAlgebra) -> dict[str, LaurentPoly]:
    """(sum_d t_d) o (sum_d d) as a k-combination of t-basis elements."""
    if asy.distinguished is None:
        raise P2Error("Psi needs the distinguished set (P2 failed upstream)")
    out: dict[str, LaurentPoly] = {}
    for d in asy.distinguished:
        for d2 in asy.distinguished:
            for b3, c in infty_action(asy, d, d2).items():
                out[b3] = out.get(b3, ZERO) + c
    return {k: c for k, c in out.items() if c}


def check_psi_factorization(asy: AsymptoticAlgebra, psi: Optional[Mapping] = None) -> Verdict:
    """t_b o b' == t_b Psi t_b' in A_c^inf extended to k, for all b, b' in the cell."""
    name = "Psi factorization t_b o b' = t_b Psi t_b'"
    if psi is None:
        psi = compute_psi(asy)
    for b in asy.cell:
        left = t_multiply(asy, {b: 1}, psi)
        for b2 in asy.cell:
            lhs = infty_action(asy, b, b2)
            rhs = {k: LaurentPoly.coerce(c) for k, c in t_multiply(asy, left, {b2: 1}).items()}
            if lhs != rhs:
                return Verdict(name, False, witness=[b, b2])
    return Verdict(name, True)
