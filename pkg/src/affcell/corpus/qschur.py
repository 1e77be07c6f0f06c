"""Finite q-Schur algebras S_q(n, r) from the tensor-space model.

``V^{(x)r}`` has basis ``e_i`` for words ``i in {1..n}^r`` and a right
action of the Hecke algebra (normalization ``(T + 1)(T - q) = 0``,
``q = v^2``)::

    e_i T_p = e_{i s_p}                    if i_p < i_{p+1}
            = q e_i                        if i_p = i_{p+1}
            = q e_{i s_p} + (q - 1) e_i    if i_p > i_{p+1}

The endomorphism ``phi_A`` (A an n x n matrix of nonnegative integers
summing to r) sends the sorted word ``i_mu`` of weight ``mu = colsums(A)``
to the sum of all ``e_j`` with ``(j, i_mu)`` in the place-permutation orbit
of type ``A``, and is extended H-linearly.  Products ``phi_A phi_B`` are read
off at orbit representatives: orbit sums have disjoint supports, so no
linear solving is needed.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian
from typing import Dict, Sequence, Tuple

from ..based_algebra import AlgebraElement, BasedAlgebra
from ..laurent import ONE, ZERO, LaurentPoly
from ..verdict import Verdict

Word = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]
Vector = Dict[Word, LaurentPoly]

SUPPORTED = {(2, 2), (2, 3)}
_Q = LaurentPoly({2: 1})


def compositions(r: int, n: int):
    """Compositions of r into n nonnegative parts, lexicographically decreasing."""
    if n == 1:
        yield (r,)
        return
    for first in range(r, -1, -1):
        for rest in compositions(r - first, n - 1):
            yield (first,) + rest


def matrices(n: int, r: int) -> list[Matrix]:
    out = []
    for flat in compositions(r, n * n):
        out.append(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
    return out


def matrix_label(A: Matrix) -> str:
    return "[" + ";".join(",".join(map(str, row)) for row in A) + "]"


def row_sums(A: Matrix) -> tuple[int, ...]:
    return tuple(sum(row) for row in A)


def col_sums(A: Matrix) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*A))


def sorted_word(mu: Sequence[int]) -> Word:
    return tuple(a for a, m in enumerate(mu, start=1) for _ in range(m))


def weight(word: Word, n: int) -> tuple[int, ...]:
    return tuple(word.count(a) for a in range(1, n + 1))


def orbit_type(j: Word, i: Word, n: int) -> Matrix:
    A = [[0] * n for _ in range(n)]
    for a, b in zip(j, i):
        A[a - 1][b - 1] += 1
    return tuple(map(tuple, A))


def act(vec: Vector, p: int) -> Vector:
    """Right action of T_p (swap of positions p, p+1, 0-based) on a vector."""
    out: Vector = {}
    for w, c in vec.items():
        a, b = w[p], w[p + 1]
        sw = w[:p] + (b, a) + w[p + 2:]
        if a < b:
            _acc(out, sw, c)
        elif a == b:
            _acc(out, w, c * _Q)
        else:
            _acc(out, sw, c * _Q)
            _acc(out, w, c * (_Q - 1))
    return {k: c for k, c in out.items() if c}


def ascending_path(word: Word) -> list[int]:
    """Positions p_1, ..., p_m with e_{sorted(word)} T_{p_1} ... T_{p_m} = e_word."""
    w = list(word)
    steps = []
    done = False
    while not done:
        done = True
        for p in range(len(w) - 1):
            if w[p] > w[p + 1]:
                w[p], w[p + 1] = w[p + 1], w[p]
                steps.append(p)
                done = False
    return steps[::-1]


class TensorSpaceSchur:
    def __init__(self, n: int, r: int):
        self.n, self.r = n, r
        self.words = list(cartesian(range(1, n + 1), repeat=r))
        self.basis = matrices(n, r)

    @lru_cache(maxsize=None)
    def generator_image(self, A: Matrix) -> Vector:
        """phi_A(e_{i_mu}) as the orbit sum."""
        i = sorted_word(col_sums(A))
        return {j: ONE for j in self.words if orbit_type(j, i, self.n) == A}

    @lru_cache(maxsize=None)
    def phi_on_word(self, A: Matrix, word: Word) -> Vector:
        if weight(word, self.n) != col_sums(A):
            return {}
        vec = dict(self.generator_image(A))
        for p in ascending_path(word):
            vec = act(vec, p)
        return vec

    def phi(self, A: Matrix, vec: Vector) -> Vector:
        out: Vector = {}
        for w, c in vec.items():
            for k, p in self.phi_on_word(A, w).items():
                _acc(out, k, c * p)
        return {k: c for k, c in out.items() if c}

    def check_hecke_linear(self, A: Matrix) -> bool:
        """phi_A(e_w T_p) == phi_A(e_w) T_p for all words and positions."""
        for w in self.words:
            for p in range(self.r - 1):
                if self.phi(A, act({w: ONE}, p)) != act(self.phi(A, {w: ONE}), p):
                    return False
        return True

    def product(self, A: Matrix, B: Matrix) -> dict[Matrix, LaurentPoly]:
        if col_sums(A) != row_sums(B):
            return {}
        mu = col_sums(B)
        image = self.phi(A, self.generator_image(B))
        out: dict[Matrix, LaurentPoly] = {}
        for C in self.basis:
            if col_sums(C) != mu or row_sums(C) != row_sums(A):
                continue
            rep = next(iter(self.generator_image(C)))
            c = image.get(rep, ZERO)
            if c:
                out[C] = c
        # orbit sums are disjoint, so the expansion must reproduce the image exactly
        rebuilt: Vector = {}
        for C, c in out.items():
            for j in self.generator_image(C):
                rebuilt[j] = c
        if rebuilt != image:
            raise ArithmeticError(f"phi_{A} phi_{B} is not a combination of orbit sums")
        return out


def diagonal(lam: Sequence[int]) -> Matrix:
    n = len(lam)
    return tuple(tuple(lam[i] if i == j else 0 for j in range(n)) for i in range(n))


def gen_qschur(n: int, r: int) -> BasedAlgebra:
    """S_q(n, r) in the basis phi_A, with units phi_lambda = phi_diag(lambda)."""
    if (n, r) not in SUPPORTED:
        raise ValueError(f"q-Schur corpus supports (n, r) in {sorted(SUPPORTED)}, got {(n, r)}")
    S = TensorSpaceSchur(n, r)
    label = {A: matrix_label(A) for A in S.basis}
    table = {}
    for A in S.basis:
        for B in S.basis:
            row = S.product(A, B)
            if row:
                table[(label[A], label[B])] = {label[C]: c for C, c in row.items()}
    units = [label[diagonal(lam)] for lam in compositions(r, n)]
    sector = {label[A]: (label[diagonal(row_sums(A))], label[diagonal(col_sums(A))]) for A in S.basis}
    involution = {label[A]: label[tuple(zip(*A))] for A in S.basis}
    return BasedAlgebra(
        [label[A] for A in S.basis], units, sector, table, involution, name=f"qschur-{n}-{r}"
    )


# --- Young subgroup longest elements ----------------------------------------


def young_blocks(lam: Sequence[int]) -> list[range]:
    out, start = [], 0
    for part in lam:
        out.append(range(start, start + part))
        start += part
    return out


def young_longest(lam: Sequence[int]) -> tuple[int, ...]:
    """Longest element of S_{lam_1} x ... x S_{lam_n}, one-line on 0..r-1."""
    w = []
    for block in young_blocks(lam):
        w.extend(reversed(block))
    return tuple(w)


def double_coset_matrix(a: Sequence[int], w: Sequence[int], b: Sequence[int]) -> Matrix:
    """Matrix of the double coset S_a w S_b: entry (p, q) counts k in block q of b with w(k) in block p of a."""
    blocks_a = young_blocks(a)
    where_a = {k: p for p, blk in enumerate(blocks_a) for k in blk}
    A = [[0] * len(b) for _ in range(len(a))]
    for q, blk in enumerate(young_blocks(b)):
        for k in blk:
            A[where_a[w[k]]][q] += 1
    return tuple(map(tuple, A))


def young_longest_idempotent(lam: Sequence[int], alg: BasedAlgebra) -> tuple[Verdict, AlgebraElement]:
    """Locate the basis element indexed by (lam, w_lam, lam) and test {A}{A} = {A}."""
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam) or not lam:
        raise ValueError(f"{lam} is not a composition")
    w = young_longest(lam)
    A = double_coset_matrix(lam, w, lam)
    lbl = matrix_label(A)
    if lbl not in alg.index:
        raise ValueError(f"{lam} is not a composition of the algebra's r into n parts")
    x = alg.element(lbl)
    ok = alg.multiply(x, x) == x
    name = f"Young idempotent {lam}"
    return Verdict(name, ok, witness=None if ok else lbl, detail=f"w_lambda = {w}, element {lbl}"), x


def _acc(d: dict, k, c) -> None:
    d[k] = d.get(k, ZERO) + c
