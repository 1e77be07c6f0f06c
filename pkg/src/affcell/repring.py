"""Representation rings of products of general linear groups.

Irreducibles of ``GL_k1 x ... x GL_km`` are labelled by one dominant weight
(a weakly decreasing integer tuple of length ``k_i``) per factor.  Tensor
multiplicities come from Littlewood-Richardson coefficients, computed by
enumerating LR skew tableaux; weights with negative entries are first
twisted by a power of the determinant.

Also here: the ring ``J_c`` on triples ``(d, d', s)`` and its reshaping
into ``n_c x n_c`` matrices over the representation ring.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian
from typing import Iterator, Mapping, Sequence

__all__ = [
    "GLWeight",
    "IrrLabel",
    "RepRingElement",
    "JRingElement",
    "partitions",
    "lr_coefficient",
    "tensor_decompose_gl",
    "tensor_decompose",
    "dual_weight",
    "weyl_dimension",
    "trivial_label",
    "j_multiply",
    "j_matrix_iso",
    "matrix_multiply",
]

GLWeight = tuple[int, ...]
IrrLabel = tuple[GLWeight, ...]


def _as_partition(p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not a partition")
    return tuple(x for x in p if x)


def check_weight(w: Sequence[int]) -> GLWeight:
    w = tuple(int(x) for x in w)
    if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
        raise ValueError(f"{w} is not weakly decreasing")
    return w


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(n - first, rest_parts, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _lr(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if len(lam) > len(nu) or any(l > n for l, n in zip(lam, nu)):
        return 0
    rows = len(nu)
    lam_full = lam + (0,) * (rows - len(lam))
    cells = [(i, j) for i in range(rows) for j in range(nu[i] - 1, lam_full[i] - 1, -1)]
    # cells in reverse reading order: rows top to bottom, right to left
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        # the lattice condition forces entries <= i + 1 in row i
        hi = min(len(mu), i + 1)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if i > 0 and j >= lam_full[i - 1]:
            lo = filling[(i - 1, j)] + 1
        total = 0
        for x in range(lo, hi + 1):
            if counts[x] >= mu[x - 1]:
                continue
            if x > 1 and counts[x] + 1 > counts[x - 1]:
                continue
            counts[x] += 1
            filling[(i, j)] = x
            total += place(k + 1)
            del filling[(i, j)]
            counts[x] -= 1
        return total

    return place(0)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """LR coefficient c^nu_{lam, mu}; 0 when |nu| != |lam| + |mu|."""
    return _lr_sym(_as_partition(lam), _as_partition(mu), _as_partition(nu))


def _lr_sym(lam, mu, nu) -> int:
    # c is symmetric in lam, mu; filling with the smaller content is cheaper
    if (sum(mu), mu) > (sum(lam), lam):
        lam, mu = mu, lam
    return _lr(lam, mu, nu)


def _supersets(lam: tuple[int, ...], n: int, k: int) -> Iterator[tuple[int, ...]]:
    lam = lam + (0,) * (k - len(lam))
    for nu in partitions(n, max_parts=k):
        nu_full = nu + (0,) * (k - len(nu))
        if all(a >= b for a, b in zip(nu_full, lam)):
            yield nu


@lru_cache(maxsize=None)
def tensor_decompose_gl(a: GLWeight, b: GLWeight) -> tuple[tuple[GLWeight, int], ...]:
    """Decompose V_a (x) V_b for GL_k, k = len(a) = len(b)."""
    a, b = check_weight(a), check_weight(b)
    if len(a) != len(b):
        raise ValueError(f"weights {a} and {b} belong to different GL_k")
    k = len(a)
    if k == 0:
        return (((), 1),)
    m = max(0, -min(a), -min(b))
    lam = _as_partition([x + m for x in a])
    mu = _as_partition([x + m for x in b])
    out = []
    for nu in _supersets(lam, sum(lam) + sum(mu), k):
        c = _lr_sym(lam, mu, nu)
        if c:
            full = nu + (0,) * (k - len(nu))
            out.append((tuple(x - 2 * m for x in full), c))
    return tuple(out)


def dual_weight(s: IrrLabel) -> IrrLabel:
    """Dual representation: reverse and negate each factor's weight."""
    return tuple(tuple(-x for x in reversed(w)) for w in s)


def weyl_dimension(w: Sequence[int]) -> int:
    """Dimension of the GL_k irreducible with highest weight ``w``."""
    w = check_weight(w)
    k = len(w)
    num = den = 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= w[i] - w[j] + j - i
            den *= j - i
    return num // den


def trivial_label(shape: Sequence[int]) -> IrrLabel:
    return tuple((0,) * k for k in shape)


def _check_label(s: IrrLabel, shape: tuple[int, ...]) -> IrrLabel:
    s = tuple(check_weight(w) for w in s)
    if tuple(len(w) for w in s) != shape:
        raise ValueError(f"label {s} does not match group shape {shape}")
    return s


def tensor_decompose(s: IrrLabel, s2: IrrLabel, shape: Sequence[int]) -> "RepRingElement":
    shape = tuple(shape)
    s, s2 = _check_label(s, shape), _check_label(s2, shape)
    factors = [tensor_decompose_gl(a, b) for a, b in zip(s, s2)]
    terms: dict[IrrLabel, int] = {}
    for combo in cartesian(*factors):
        label = tuple(w for w, _ in combo)
        mult = 1
        for _, c in combo:
            mult *= c
        terms[label] = terms.get(label, 0) + mult
    return RepRingElement(shape, terms)


class RepRingElement:
    """Finitely supported combination of irreducibles of a product of GL's.

    Coefficients are usually ints; ``LaurentPoly`` coefficients give the
    scalar extension k (x) B_c.
    """

    __slots__ = ("shape", "terms")

    def __init__(self, shape: Sequence[int], terms: Mapping[IrrLabel, object] | None = None):
        self.shape = tuple(shape)
        self.terms: dict[IrrLabel, object] = {}
        for s, c in (terms or {}).items():
            if c != 0:
                self.terms[tuple(tuple(w) for w in s)] = c

    @classmethod
    def irr(cls, shape, s: IrrLabel, coeff=1) -> "RepRingElement":
        return cls(shape, {s: coeff})

    @classmethod
    def one(cls, shape, coeff=1) -> "RepRingElement":
        return cls(shape, {trivial_label(shape): coeff})

    @classmethod
    def zero(cls, shape) -> "RepRingElement":
        return cls(shape)

    def _coerce(self, other) -> "RepRingElement":
        if isinstance(other, RepRingElement):
            if other.shape != self.shape:
                raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
            return other
        return RepRingElement.one(self.shape, other)

    def __add__(self, other) -> "RepRingElement":
        other = self._coerce(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out[s] + c if s in out else c
        return RepRingElement(self.shape, out)

    __radd__ = __add__

    def __neg__(self) -> "RepRingElement":
        return RepRingElement(self.shape, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other) -> "RepRingElement":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "RepRingElement":
        if not isinstance(other, RepRingElement):
            return RepRingElement(self.shape, {s: c * other for s, c in self.terms.items()})
        other = self._coerce(other)
        out: dict[IrrLabel, object] = {}
        for s, c in self.terms.items():
            for s2, c2 in other.terms.items():
                cc = c * c2
                for s3, m in tensor_decompose(s, s2, self.shape).terms.items():
                    out[s3] = out[s3] + cc * m if s3 in out else cc * m
        return RepRingElement(self.shape, out)

    def __rmul__(self, other) -> "RepRingElement":
        return self * other

    def dual(self) -> "RepRingElement":
        return RepRingElement(self.shape, {dual_weight(s): c for s, c in self.terms.items()})

    def dimension(self):
        total = 0
        for s, c in self.terms.items():
            d = 1
            for w in s:
                d *= weyl_dimension(w)
            total = total + c * d
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, RepRingElement):
            return self.shape == other.shape and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.shape, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        if self.shape == ():
            return str(self.terms[()])
        parts = []
        for s in sorted(self.terms, reverse=True):
            label = "x".join("(" + ",".join(map(str, w)) + ")" for w in s)
            parts.append(f"{self.terms[s]}*[{label}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"RepRingElement({self.shape}, {self})"


class JRingElement:
    """Integer combination of triples (d, d', s), 1 <= d, d' <= n_c."""

    __slots__ = ("n", "shape", "terms")

    def __init__(self, n: int, shape: Sequence[int], terms: Mapping[tuple, int] | None = None):
        self.n = n
        self.shape = tuple(shape)
        self.terms: dict[tuple, int] = {}
        for (d, d2, s), c in (terms or {}).items():
            if not (1 <= d <= n and 1 <= d2 <= n):
                raise ValueError(f"index ({d}, {d2}) outside 1..{n}")
            if c:
                key = (d, d2, _check_label(s, self.shape))
                self.terms[key] = self.terms.get(key, 0) + c
        self.terms = {k: c for k, c in self.terms.items() if c}

    def __add__(self, other: "JRingElement") -> "JRingElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return JRingElement(self.n, self.shape, out)

    def __mul__(self, other: "JRingElement") -> "JRingElement":
        return j_multiply(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, JRingElement) and (self.n, self.shape, self.terms) == (
            other.n, other.shape, other.terms)

    def __repr__(self) -> str:
        return f"JRingElement(n={self.n}, {self.terms})"


def j_multiply(x: JRingElement, y: JRingElement) -> JRingElement:
    """(d1, d1', s)(d2, d2', s') = delta(d1', d2) sum_s'' c^{s''}_{s s'} (d1, d2', s'')."""
    if (x.n, x.shape) != (y.n, y.shape):
        raise ValueError("J-ring elements of different cells")
    out: dict[tuple, int] = {}
    for (d1, d1p, s), c in x.terms.items():
        for (d2, d2p, s2), c2 in y.terms.items():
            if d1p != d2:
                continue
            for s3, m in tensor_decompose(s, s2, x.shape).terms.items():
                key = (d1, d2p, s3)
                out[key] = out.get(key, 0) + c * c2 * m
    return JRingElement(x.n, x.shape, out)


def j_matrix_iso(x: JRingElement) -> list[list[RepRingElement]]:
    """(d, d', s) -> E_{d d'}(s), an n_c x n_c matrix over the representation ring."""
    mat = [[RepRingElement.zero(x.shape) for _ in range(x.n)] for _ in range(x.n)]
    for (d, d2, s), c in x.terms.items():
        mat[d - 1][d2 - 1] = mat[d - 1][d2 - 1] + RepRingElement.irr(x.shape, s, c)
    return mat


def matrix_multiply(x, y, zero):
    """Ordinary matrix product over any commutative ring with Python operators."""
    n, m, p = len(x), len(y), len(y[0]) if y else 0
    if any(len(row) != m for row in x):
        raise ValueError("shape mismatch in matrix product")
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for k in range(m):
                a, b = x[i][k], y[k][j]
                if a != 0 and b != 0:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out
