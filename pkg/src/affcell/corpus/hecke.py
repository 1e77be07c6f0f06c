"""Kazhdan-Lusztig bases of Hecke algebras of small symmetric groups.

Conventions (balanced normalization): over k = Z[v, v^-1] the standard basis
``H_w`` satisfies ``H_s^2 = 1 + (v^-1 - v) H_s``.  The KL basis element
``C_s = H_s + v`` then squares to ``(v + v^-1) C_s``, and in general

    C_w = H_w + sum_{y < w} h_{y,w} H_y,    h_{y,w} in v Z[v],

with ``h_{y,w} = v^(l(w) - l(y)) P_{y,w}(v^-2)`` for the classical KL
polynomial ``P_{y,w}``.

Permutations are one-line tuples on ``0..n-1`` composed as functions,
``(u w)(j) = u(w(j))``; generator ``i`` swaps the values ``i`` and ``i+1``.
Basis labels spell the lexicographically least reduced word with letters
``s, t, u, w`` for the generators, prefixed by ``c``; the identity is ``e``.
So in S3, ``cts`` is ``C_{ts}`` and the longest element is ``csts``.
"""
from __future__ import annotations

from itertools import permutations
from typing import Dict, Tuple

from ..based_algebra import BasedAlgebra
from ..laurent import ONE, ZERO, LaurentPoly

Perm = Tuple[int, ...]
HElement = Dict[Perm, LaurentPoly]

LETTERS = "stuw"
MAX_RANK = 4

_V = LaurentPoly({1: 1})
_VINV = LaurentPoly({-1: 1})
_QUAD = _VINV - _V  # coefficient in H_s^2 = 1 + (v^-1 - v) H_s
_VPLUS = _V + _VINV


def compose(u: Perm, w: Perm) -> Perm:
    return tuple(u[j] for j in w)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, wi in enumerate(w):
        out[wi] = i
    return tuple(out)


def length(w: Perm) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def simple(i: int, n: int) -> Perm:
    p = list(range(n))
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def bruhat_leq(y: Perm, w: Perm) -> bool:
    """Tableau criterion: y <= w iff every count #{j <= i : y(j) >= k} is dominated."""
    n = len(w)
    for i in range(n):
        for k in range(n):
            cy = sum(1 for j in range(i + 1) if y[j] >= k)
            cw = sum(1 for j in range(i + 1) if w[j] >= k)
            if cy > cw:
                return False
    return True


class HeckeKL:
    """KL data of the Hecke algebra of S_{m+1}: words, KL basis, mu-values."""

    def __init__(self, m: int):
        if not 1 <= m <= MAX_RANK:
            raise ValueError(f"rank must be in 1..{MAX_RANK}, got {m}")
        self.m = m
        self.n = n = m + 1
        self.gens = [simple(i, n) for i in range(m)]
        self.identity: Perm = tuple(range(n))
        perms = list(permutations(range(n)))
        self.length = {w: length(w) for w in perms}

        # lexicographically least reduced words, built up by length
        word: dict[Perm, str] = {self.identity: ""}
        for w in sorted(perms, key=self.length.__getitem__):
            if w == self.identity:
                continue
            s = next(i for i in range(m) if self.length[compose(self.gens[i], w)] < self.length[w])
            word[w] = LETTERS[s] + word[compose(self.gens[s], w)]
        self.word = word
        self.perms = sorted(perms, key=lambda w: (self.length[w], word[w]))
        self.label = {w: ("c" + word[w]) if word[w] else "e" for w in self.perms}
        self.by_label = {lbl: w for w, lbl in self.label.items()}

        self.kl: dict[Perm, HElement] = {}
        self.mu: dict[Perm, list[tuple[Perm, int]]] = {}
        self._build_kl()

    # standard basis arithmetic -------------------------------------------

    def left_mult_gen(self, i: int, h: HElement) -> HElement:
        """H_s * h for the i-th generator."""
        s = self.gens[i]
        out: HElement = {}
        for w, c in h.items():
            sw = compose(s, w)
            _acc(out, sw, c)
            if self.length[sw] < self.length[w]:
                _acc(out, w, c * _QUAD)
        return _clean(out)

    def right_mult_gen(self, h: HElement, i: int) -> HElement:
        s = self.gens[i]
        out: HElement = {}
        for w, c in h.items():
            ws = compose(w, s)
            _acc(out, ws, c)
            if self.length[ws] < self.length[w]:
                _acc(out, w, c * _QUAD)
        return _clean(out)

    def standard_multiply(self, x: HElement, y: HElement) -> HElement:
        """Product in the standard basis, expanding H_w along a reduced word."""
        out: HElement = {}
        for w, c in x.items():
            part = {k: c * p for k, p in y.items()}
            for letter in reversed(self.word[w]):
                part = self.left_mult_gen(LETTERS.index(letter), part)
            for k, p in part.items():
                _acc(out, k, p)
        return _clean(out)

    def bar(self, h: HElement) -> HElement:
        """Bar involution: v -> v^-1 on coefficients, H_w -> H_{w^-1}^-1."""
        out: HElement = {}
        for w, c in h.items():
            term = {self.identity: c.bar()}
            # bar(H_w) = bar(H_{s1}) ... bar(H_{sk}),  bar(H_s) = H_s + (v - v^-1)
            for letter in reversed(self.word[w]):
                i = LETTERS.index(letter)
                shifted = self.left_mult_gen(i, term)
                for k, p in term.items():
                    _acc(shifted, k, p * (-_QUAD))
                term = _clean(shifted)
            for k, p in term.items():
                _acc(out, k, p)
        return _clean(out)

    def to_kl(self, h: HElement) -> dict[Perm, LaurentPoly]:
        """Rewrite a standard-basis element in the KL basis (unitriangular peel)."""
        rest = dict(h)
        out: dict[Perm, LaurentPoly] = {}
        while rest:
            w = max(rest, key=lambda z: (self.length[z], self.word[z]))
            c = rest[w]
            out[w] = c
            for y, p in self.kl[w].items():
                _acc(rest, y, -(c * p))
            rest = _clean(rest)
        return out

    # KL basis ---------------------------------------------------------------

    def _build_kl(self) -> None:
        e = self.identity
        self.kl[e] = {e: ONE}
        self.mu[e] = []
        for w in self.perms:
            if w == e:
                continue
            i = LETTERS.index(self.word[w][0])
            x = compose(self.gens[i], w)
            cx = self.kl[x]
            # C_s C_x = (H_s + v) C_x
            prod = self.left_mult_gen(i, cx)
            for y, p in cx.items():
                _acc(prod, y, _V * p)
            for z, mu in self.mu[x]:
                if self.length[compose(self.gens[i], z)] < self.length[z]:
                    for y, p in self.kl[z].items():
                        _acc(prod, y, -(p * mu))
            cw = _clean(prod)
            self.kl[w] = cw
            self.mu[w] = [
                (y, p.coeff(1)) for y, p in sorted(cw.items(), key=lambda t: self.index_key(t[0]))
                if y != w and p.coeff(1)
            ]

    def index_key(self, w: Perm):
        return (self.length[w], self.word[w])

    def h_poly(self, y: Perm, w: Perm) -> LaurentPoly:
        return self.kl[w].get(y, ZERO)

    def kl_polynomial(self, y: Perm, w: Perm) -> list[int]:
        """Coefficients [p_0, p_1, ...] of the classical P_{y,w}(q)."""
        h = self.h_poly(y, w)
        if not h:
            return []
        d = self.length[w] - self.length[y]
        coeffs: dict[int, int] = {}
        for e, c in h.items():
            k, r = divmod(d - e, 2)
            if r or k < 0:
                raise ArithmeticError(f"h_{{y,w}} has unexpected exponent {e}")
            coeffs[k] = c
        top = max(coeffs)
        return [coeffs.get(k, 0) for k in range(top + 1)]

    # structure constants ----------------------------------------------------

    def structure_constants(self) -> dict[tuple[Perm, Perm], dict[Perm, LaurentPoly]]:
        """All products C_x C_y in the KL basis.

        Uses the left action of C_s through mu-values and the recursion
        C_x = C_s C_{sx} - sum mu(z, sx) C_z, row by row in length order.
        """
        e = self.identity
        prods: dict[Perm, dict[Perm, dict[Perm, LaurentPoly]]] = {
            e: {y: {y: ONE} for y in self.perms}
        }
        for x in self.perms:
            if x == e:
                continue
            i = LETTERS.index(self.word[x][0])
            xs = compose(self.gens[i], x)
            row = {}
            for y in self.perms:
                vec = self._cs_times(i, prods[xs][y])
                for z, mu in self.mu[xs]:
                    if self.length[compose(self.gens[i], z)] < self.length[z]:
                        for k, p in prods[z][y].items():
                            _acc(vec, k, -(p * mu))
                row[y] = _clean(vec)
            prods[x] = row
        return {(x, y): prods[x][y] for x in self.perms for y in self.perms}

    def _cs_times(self, i: int, vec: dict[Perm, LaurentPoly]) -> dict[Perm, LaurentPoly]:
        s = self.gens[i]
        out: dict[Perm, LaurentPoly] = {}
        for y, c in vec.items():
            sy = compose(s, y)
            if self.length[sy] < self.length[y]:
                _acc(out, y, c * _VPLUS)
            else:
                _acc(out, sy, c)
                for z, mu in self.mu[y]:
                    if self.length[compose(s, z)] < self.length[z]:
                        _acc(out, z, c * mu)
        return out

    def kl_multiply_via_standard(self, x: Perm, y: Perm) -> dict[Perm, LaurentPoly]:
        """C_x C_y computed in the standard basis and converted back."""
        return self.to_kl(self.standard_multiply(self.kl[x], self.kl[y]))


def gen_hecke_kl(m: int) -> BasedAlgebra:
    """Hecke algebra of S_{m+1} (1 <= m <= 4) as a based algebra in its KL basis."""
    if not isinstance(m, int) or not 1 <= m <= MAX_RANK:
        raise ValueError(f"Hecke corpus supports ranks 1..{MAX_RANK} (S2..S5), got {m!r}")
    H = HeckeKL(m)
    lbl = H.label
    table = {
        (lbl[x], lbl[y]): {lbl[z]: c for z, c in row.items()}
        for (x, y), row in H.structure_constants().items()
        if row
    }
    basis = [lbl[w] for w in H.perms]
    return BasedAlgebra(
        basis,
        ["e"],
        {b: ("e", "e") for b in basis},
        table,
        {lbl[w]: lbl[inverse(w)] for w in H.perms},
        name=f"hecke-S{m + 1}-kl",
    )


def _acc(d: dict, k, c: LaurentPoly) -> None:
    d[k] = d.get(k, ZERO) + c


def _clean(d: dict) -> dict:
    return {k: c for k, c in d.items() if c}
