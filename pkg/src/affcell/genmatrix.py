"""Generalized matrix algebras and the cell-by-cell affine cellular structure.

A generalized matrix algebra ``(M_n(B), Psi)`` is the space of n x n
matrices over a commutative ring ``B`` with product ``x . y = x Psi y``.
If ``B`` has an involution ``sigma`` with ``sigma(Psi_jl) = Psi_lj``, the
map ``E_jl(b) -> E_lj(sigma(b))`` is an anti-involution.

Each two-sided cell ``c`` is realized as ``(M_{n_c}(k (x) B_c), Psi_c)``
through a labeling ``b -> (j, l, s)`` (1-based ``j, l``).  For finite
Hecke corpora the group ``G_c`` is trivial and ``s`` is the empty label
``()``, so entries live in ``k (x) Z = k``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Optional

from .asymptotic import AsymptoticAlgebra, P2Error, compute_psi, unit_sectors
from .based_algebra import BasedAlgebra
from .cells import CellDecomposition, cell_ideal_basis, one_sided_cells
from .laurent import ONE, ZERO, LaurentPoly
from .repring import IrrLabel, RepRingElement, dual_weight, matrix_multiply
from .verdict import Verdict, combine

__all__ = [
    "CommutativeBaseRing",
    "GenMatrixAlgebra",
    "INTEGERS",
    "LAURENT",
    "rep_ring",
    "gm_multiply",
    "gm_involution",
    "gm_check_sigma_rho",
    "elementary",
    "asymptotic_labeling",
    "cell_labeling",
    "cell_realization",
    "verify_cell_realization",
    "assemble_cell_chain",
    "verify_affine_cell_ideal",
]

Labeling = dict[str, tuple[int, int, IrrLabel]]


@dataclass(frozen=True)
class CommutativeBaseRing:
    """Commutative ring for matrix entries: zero, one and the involution sigma."""

    name: str
    zero: Any
    one: Any
    sigma: Callable[[Any], Any] = field(default=lambda x: x)
    shape: Optional[tuple[int, ...]] = None  # group shape for representation rings

    def fmt(self, x) -> str:
        return str(x)


INTEGERS = CommutativeBaseRing("Z", 0, 1)
LAURENT = CommutativeBaseRing("k", ZERO, ONE, lambda p: p)


def rep_ring(shape=(), over_k: bool = True) -> CommutativeBaseRing:
    """The representation ring of GL_{k1} x ... (optionally tensored with k), sigma = dual."""
    shape = tuple(shape)
    unit = ONE if over_k else 1
    name = "B[" + "x".join(f"GL{k}" for k in shape) + "]" if shape else "Z"
    if over_k:
        name = "k(x)" + name
    return CommutativeBaseRing(
        name,
        RepRingElement.zero(shape),
        RepRingElement.one(shape, unit),
        lambda x: x.dual(),
        shape,
    )


@dataclass
class GenMatrixAlgebra:
    n: int
    base: CommutativeBaseRing
    psi: list[list[Any]]

    def __post_init__(self):
        if len(self.psi) != self.n or any(len(r) != self.n for r in self.psi):
            raise ValueError(f"Psi must be {self.n} x {self.n}")

    def zero_matrix(self):
        return [[self.base.zero for _ in range(self.n)] for _ in range(self.n)]

    def psi_strings(self) -> list[list[str]]:
        return [[self.base.fmt(x) for x in row] for row in self.psi]


def elementary(g: GenMatrixAlgebra, j: int, l: int, b) -> list[list[Any]]:
    """E_jl(b) with 1-based indices."""
    m = g.zero_matrix()
    m[j - 1][l - 1] = b
    return m


def _check_shape(x, n):
    if len(x) != n or any(len(r) != n for r in x):
        raise ValueError(f"expected an {n} x {n} matrix")


def gm_multiply(x, y, g: GenMatrixAlgebra):
    _check_shape(x, g.n)
    _check_shape(y, g.n)
    z = g.base.zero
    return matrix_multiply(matrix_multiply(x, g.psi, z), y, z)


def gm_involution(x, g: GenMatrixAlgebra):
    _check_shape(x, g.n)
    return [[g.base.sigma(x[l][j]) for l in range(g.n)] for j in range(g.n)]


def gm_check_sigma_rho(g: GenMatrixAlgebra) -> Verdict:
    name = "sigma(Psi_jl) = Psi_lj"
    for j in range(g.n):
        for l in range(g.n):
            if g.base.sigma(g.psi[j][l]) != g.psi[l][j]:
                return Verdict(name, False, witness=[j + 1, l + 1])
    return Verdict(name, True)


# --- cell realizations -------------------------------------------------------


def asymptotic_labeling(asy: AsymptoticAlgebra) -> Labeling:
    """Label b by (row, column) = positions of the D_c units with t_d t_b t_d' = t_b.

    The group part is the trivial label; this is P4(a) for cells whose
    group ``G_c`` is trivial.  Raises :class:`P2Error` if the t-basis is not
    compatible with ``D_c``.
    """
    sectors = unit_sectors(asy)
    pos = {d: i + 1 for i, d in enumerate(asy.distinguished)}
    return {b: (pos[d], pos[d2], ()) for b, (d, d2) in sectors.items()}


def cell_labeling(alg: BasedAlgebra, asy: AsymptoticAlgebra) -> Labeling:
    """Label b by the D_c member in its right cell (row) and in its left cell (column).

    Right cells come from right multiplication and left cells from left
    multiplication, as in :func:`cells.one_sided_cells`.
    """
    if asy.distinguished is None:
        raise P2Error("cell labeling needs D_c")
    left = one_sided_cells(alg, "left")
    right = one_sided_cells(alg, "right")
    pos = {d: i + 1 for i, d in enumerate(asy.distinguished)}
    row_of = {right.cell_of(d): pos[d] for d in asy.distinguished}
    col_of = {left.cell_of(d): pos[d] for d in asy.distinguished}
    out = {}
    for b in asy.cell:
        r, c = right.cell_of(b), left.cell_of(b)
        if r not in row_of or c not in col_of:
            raise P2Error("one-sided cell without a distinguished element", b)
        out[b] = (row_of[r], col_of[c], ())
    return out


def _base_for(labeling: Labeling) -> CommutativeBaseRing:
    shapes = {tuple(len(w) for w in s) for (_, _, s) in labeling.values()}
    if len(shapes) != 1:
        raise ValueError(f"labels use inconsistent group shapes {shapes}")
    return rep_ring(shapes.pop(), over_k=True)


def _to_matrix(elem: Mapping[str, LaurentPoly], labeling: Labeling, n: int, base: CommutativeBaseRing):
    m = [[base.zero for _ in range(n)] for _ in range(n)]
    for b, c in elem.items():
        j, l, s = labeling[b]
        m[j - 1][l - 1] = m[j - 1][l - 1] + RepRingElement.irr(base.shape, s, c)
    return m


def cell_realization(asy: AsymptoticAlgebra, labeling: Labeling) -> GenMatrixAlgebra:
    """(M_{n_c}(k (x) B_c), Psi_c) with Psi_c reshaped through the labeling."""
    base = _base_for(labeling)
    n = len(asy.distinguished)
    psi = _to_matrix(compute_psi(asy), labeling, n, base)
    return GenMatrixAlgebra(n, base, psi)


def _check_bijection(cell, labeling: Labeling, n: int) -> Optional[Verdict]:
    name = "P4(a) labeling"
    if set(labeling) != set(cell):
        return Verdict(name, False, witness=sorted(set(labeling) ^ set(cell)),
                       detail="labeling does not cover exactly the cell")
    images = list(labeling.values())
    if len(set(images)) != len(images):
        dup = next(b for b in cell if images.count(labeling[b]) > 1)
        return Verdict(name, False, witness=dup, detail="labeling not injective")
    groups = {s for (_, _, s) in images}
    expected = {(j, l, s) for j in range(1, n + 1) for l in range(1, n + 1) for s in groups}
    if set(images) != expected:
        missing = sorted(expected - set(images), key=str)
        return Verdict(name, False, witness=missing[:3], detail="image is not {1..n}^2 x S")
    return None


def verify_cell_realization(
    alg: BasedAlgebra,
    asy: AsymptoticAlgebra,
    labeling: Labeling,
    g: Optional[GenMatrixAlgebra] = None,
) -> Verdict:
    """The cell algebra A_c equals (M_n(k (x) B_c), Psi_c) under the labeling.

    For every pair the within-cell product of ``b, b'`` is compared with
    ``E(b) Psi E(b')`` mapped back through the labeling; then ``iota(b)``
    must carry the label ``(l, j, sigma(s))``.
    """
    name = "P4 realization"
    if asy.distinguished is None:
        return Verdict(name, False, detail="no distinguished set (P2 failed)")
    n = len(asy.distinguished)
    bad = _check_bijection(asy.cell, labeling, n)
    if bad is not None:
        return bad
    if g is None:
        g = cell_realization(asy, labeling)
    if g.n != n:
        return Verdict(name, False, detail=f"matrix size {g.n} != n_c = {n}")
    try:
        base = _base_for(labeling)
    except ValueError as exc:
        return Verdict(name, False, detail=str(exc))
    if g.base.shape != base.shape:
        return Verdict(name, False, detail=f"base ring {g.base.name} does not match labels")
    inverse = {lab: b for b, lab in labeling.items()}
    members = set(asy.cell)
    for b in asy.cell:
        j, l, s = labeling[b]
        x = elementary(g, j, l, RepRingElement.irr(base.shape, s, ONE))
        for b2 in asy.cell:
            p, q, s2 = labeling[b2]
            y = elementary(g, p, q, RepRingElement.irr(base.shape, s2, ONE))
            mat = gm_multiply(x, y, g)
            back: dict[str, LaurentPoly] = {}
            for r in range(n):
                for col in range(n):
                    for s3, c in mat[r][col].terms.items():
                        key = (r + 1, col + 1, s3)
                        if key not in inverse:
                            return Verdict(name, False, witness=[b, b2],
                                           detail=f"matrix product leaves the cell at {key}")
                        back[inverse[key]] = back.get(inverse[key], ZERO) + c
            back = {k: c for k, c in back.items() if c}
            want = {b3: c for b3, c in alg.product(b, b2).items() if b3 in members}
            if back != want:
                return Verdict(name, False, witness=[b, b2], detail="A_c product != E Psi E")
    for b in asy.cell:
        j, l, s = labeling[b]
        ib = alg.involution[b]
        if labeling.get(ib) != (l, j, dual_weight(s)):
            return Verdict(name, False, witness=[b, ib], detail="iota(b) is not labelled (l, j, sigma(s))")
    return Verdict(name, True, detail=f"n_c = {n}, base {g.base.name}")


def assemble_cell_chain(alg: BasedAlgebra, dec: CellDecomposition) -> Verdict:
    """Check that C_1 ⊂ ... ⊂ C_f = A along the chain is a cell chain."""
    layers = []
    seen: set[str] = set()
    for j in range(1, len(dec.cells) + 1):
        cell = dec.cells[dec.chain[j - 1]]
        ideal = cell_ideal_basis(dec, j)
        below = ideal - set(cell)
        parts = []
        closed = True
        witness = None
        for b in sorted(ideal, key=alg.index.__getitem__):
            for x in alg.basis:
                for z in list(alg.product(x, b)) + list(alg.product(b, x)):
                    if z not in ideal:
                        closed, witness = False, [x, b, z]
                        break
                if not closed:
                    break
            if not closed:
                break
        parts.append(Verdict(f"C_{j} is a two-sided ideal", closed, witness=witness))
        inv_ok = {alg.involution[b] for b in cell} == set(cell)
        parts.append(Verdict(f"iota(C'_{j}) = C'_{j}", inv_ok, witness=None if inv_ok else list(cell)))
        quot_ok, qwit = True, None
        for b in cell:
            for b2 in cell:
                stray = [z for z in alg.product(b, b2) if z not in below and z not in cell]
                if stray:
                    quot_ok, qwit = False, [b, b2, stray[0]]
                    break
            if not quot_ok:
                break
        parts.append(Verdict(f"C_{j}/C_{j-1} = A_c", quot_ok, witness=qwit))
        disjoint = not (seen & set(cell))
        seen |= set(cell)
        parts.append(Verdict(f"C'_{j} disjoint from lower layers", disjoint))
        layers.append(combine(f"layer {j}: {list(cell)}", parts))
    covers = seen == set(alg.basis)
    layers.append(Verdict("C_f = A", covers, witness=None if covers else sorted(set(alg.basis) - seen)))
    return combine("cell chain", layers, detail=f"length {len(dec.cells)}")


def verify_affine_cell_ideal(
    alg: BasedAlgebra,
    dec: CellDecomposition,
    j: int,
    asy: AsymptoticAlgebra,
    labeling: Labeling,
    g: Optional[GenMatrixAlgebra] = None,
) -> Verdict:
    """C_j / C_{j-1} is an affine cell ideal of A / C_{j-1}, in matrix form.

    Checks iota-stability of the layer, the generalized-matrix realization,
    the symmetry of Psi needed for kappa, and that iota corresponds to
    kappa: E_jl(s) -> E_lj(sigma(s)) element by element.
    """
    cell = dec.cells[dec.chain[j - 1]]
    if set(cell) != set(asy.cell):
        raise ValueError(f"layer {j} is {list(cell)}, not the cell of the given asymptotic algebra")
    parts = []
    stable = {alg.involution[b] for b in cell} == set(cell)
    parts.append(Verdict("i(J) = J", stable, witness=None if stable else list(cell)))
    if g is None and asy.distinguished is not None:
        try:
            g = cell_realization(asy, labeling)
        except (ValueError, KeyError) as exc:
            parts.append(Verdict("realization", False, detail=str(exc)))
    real = verify_cell_realization(alg, asy, labeling, g)
    parts.append(real)
    if real and g is not None:
        parts.append(gm_check_sigma_rho(g))
        ok, wit = True, None
        base = g.base
        for b in cell:
            jj, ll, s = labeling[b]
            x = elementary(g, jj, ll, RepRingElement.irr(base.shape, s, ONE))
            j2, l2, s2 = labeling[alg.involution[b]]
            if gm_involution(x, g) != elementary(g, j2, l2, RepRingElement.irr(base.shape, s2, ONE)):
                ok, wit = False, [b, alg.involution[b]]
                break
        parts.append(Verdict("iota <-> kappa elementwise", ok, witness=wit))
    return combine(f"affine cell ideal (layer {j})", parts)
