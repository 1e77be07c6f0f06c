"""Exact arithmetic in the ring k = Z[v, v^-1].

A :class:`LaurentPoly` is an immutable sparse mapping ``exponent -> coefficient``
with Python integers as coefficients, so nothing ever overflows.  The zero
polynomial is the empty mapping and its degree is ``None``.

The textual form used by every file format in this package is a sum of
``c*v^e`` terms, highest exponent first::

    >>> LaurentPoly.parse("1*v^1 + 1*v^-1") * LaurentPoly.parse("v - v^-1")
    LaurentPoly('1*v^2 + -1*v^-2')
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Optional, Union

__all__ = [
    "LaurentPoly",
    "lp_add",
    "lp_mul",
    "lp_bar",
    "lp_max_degree",
    "lp_coeff_at",
    "ZERO",
    "ONE",
    "V",
]

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = int(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def coerce(cls, x: Scalar) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls({0: x})
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    _TERM = re.compile(r"([+-]?)(\d*)(\*?)(v(?:\^([+-]?\d+))?)?$")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse ``c*v^e`` sums.  Whitespace is ignored; ``0`` is zero.

        Also accepts the shorthands ``v``, ``-v^2``, ``3`` and a leading or
        infix ``-`` in place of ``+ -``.
        """
        s = "".join(str(text).split())
        if not s:
            raise ValueError("empty Laurent polynomial text")
        # split before every sign that is not part of an exponent
        pieces = re.split(r"(?<!\^)(?=[+-])", s)
        terms: dict[int, int] = {}
        for piece in pieces:
            if piece in ("", "+"):
                continue
            m = cls._TERM.match(piece)
            if m is None or (not m.group(2) and not m.group(4)):
                raise ValueError(f"malformed Laurent term {piece!r} in {text!r}")
            sign, digits, star, vpart, exp = m.groups()
            if star and not (digits and vpart):
                raise ValueError(f"malformed Laurent term {piece!r} in {text!r}")
            if digits and vpart and not star:
                raise ValueError(f"missing '*' in term {piece!r}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            e = 0
            if vpart:
                e = int(exp) if exp is not None else 1
            terms[e] = terms.get(e, 0) + c
        return cls(terms)

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def max_degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def min_degree(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def coeff(self, n: int) -> int:
        return self._terms.get(n, 0)

    def bar(self) -> "LaurentPoly":
        """The ring involution ``v -> v^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def evaluate(self, x):
        """Specialize ``v`` to ``x`` (``x`` must be invertible for e < 0)."""
        total = 0
        for e, c in self._terms.items():
            total = total + c * (x ** e)
        return total

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only monomials with unit coefficient are invertible")
            (e, c), = self._terms.items()
            return LaurentPoly({e * k: c ** -k})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            if other == 0:
                return not self._terms
            return self._terms == {0: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*v^{e}" for e, c in sorted(self._terms.items(), reverse=True))

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def lp_bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def lp_max_degree(p: LaurentPoly) -> Optional[int]:
    return p.max_degree()


def lp_coeff_at(p: LaurentPoly, n: int) -> int:
    return p.coeff(n)


def lp_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict[int, int] = {}
    for p in polys:
        for e, c in p._terms.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(out)
