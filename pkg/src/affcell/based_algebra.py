"""Based algebras over k = Z[v, v^-1] given by full structure-constant tables.

A based algebra carries a finite basis ``B``, a generalized unit
``X -> B`` (orthogonal idempotents ``1_lambda`` whose two-sided sectors
decompose the algebra), the sparse table of constants ``c[b, b'][b'']``
and a basis-permuting anti-involution ``iota``.

Tables are exchanged as JSON documents::

    {
      "name": "...",                       # optional
      "basis": ["e", "cs"],
      "units": ["e"],
      "sector": {"e": ["e", "e"], "cs": ["e", "e"]},
      "involution": {"e": "e", "cs": "cs"},
      "products": [
        {"left": "cs", "right": "cs",
         "result": [{"basis": "cs", "coeff": "1*v^1 + 1*v^-1"}]}
      ]
    }

Absent products are zero.
"""
from __future__ import annotations

import itertools
import json
import random
from pathlib import Path
from typing import Iterable, Mapping, Optional, Union

import jsonschema

from .laurent import ZERO, LaurentPoly
from .verdict import Verdict

__all__ = [
    "AlgebraElement",
    "BasedAlgebra",
    "TableError",
    "TABLE_SCHEMA",
    "ba_load",
    "ba_dump",
    "ba_multiply",
    "ba_check_generalized_unit",
    "ba_check_involution",
    "check_associativity",
]


class TableError(ValueError):
    """A table document is malformed or violates a based-algebra axiom."""

    def __init__(self, message: str, witness=None):
        super().__init__(message if witness is None else f"{message}: {witness}")
        self.witness = witness


TABLE_SCHEMA = {
    "type": "object",
    "required": ["basis", "units", "sector", "involution", "products"],
    "properties": {
        "name": {"type": "string"},
        "basis": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "units": {"type": "array", "items": {"type": "string"}},
        "sector": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {"type": "string"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "involution": {"type": "object", "additionalProperties": {"type": "string"}},
        "products": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["left", "right", "result"],
                "properties": {
                    "left": {"type": "string"},
                    "right": {"type": "string"},
                    "result": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["basis", "coeff"],
                            "properties": {
                                "basis": {"type": "string"},
                                "coeff": {"type": ["string", "integer"]},
                            },
                        },
                    },
                },
            },
        },
    },
}


class AlgebraElement:
    """Finitely supported k-combination of basis labels."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Mapping[str, Union[int, LaurentPoly]]] = None):
        self.coeffs: dict[str, LaurentPoly] = {}
        if coeffs:
            for b, c in coeffs.items():
                c = LaurentPoly.coerce(c)
                if c:
                    self.coeffs[b] = c

    @classmethod
    def basis_element(cls, b: str) -> "AlgebraElement":
        return cls({b: 1})

    def support(self) -> set[str]:
        return set(self.coeffs)

    def __getitem__(self, b: str) -> LaurentPoly:
        return self.coeffs.get(b, ZERO)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.coeffs)
        for b, c in other.coeffs.items():
            out[b] = out.get(b, ZERO) + c
        return AlgebraElement(out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def scale(self, c) -> "AlgebraElement":
        c = LaurentPoly.coerce(c)
        return AlgebraElement({b: c * x for b, x in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "AlgebraElement(0)"
        inner = " + ".join(f"({c})*{b}" for b, c in sorted(self.coeffs.items()))
        return f"AlgebraElement({inner})"


class BasedAlgebra:
    """Finite based algebra with a generalized unit and a basis involution.

    The constructor stores its arguments without validation; use
    :func:`ba_load` (or :meth:`validate`) to enforce the axioms.
    """

    def __init__(
        self,
        basis: Iterable[str],
        units: Iterable[str],
        sector: Mapping[str, tuple[str, str]],
        table: Mapping[tuple[str, str], Mapping[str, Union[int, LaurentPoly]]],
        involution: Mapping[str, str],
        name: str = "",
    ):
        self.basis: tuple[str, ...] = tuple(basis)
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.units: tuple[str, ...] = tuple(units)
        self.sector: dict[str, tuple[str, str]] = {b: tuple(s) for b, s in sector.items()}
        self.table: dict[tuple[str, str], dict[str, LaurentPoly]] = {}
        for key, row in table.items():
            clean = {}
            for b2, c in row.items():
                c = LaurentPoly.coerce(c)
                if c:
                    clean[b2] = c
            if clean:
                self.table[tuple(key)] = clean
        self.involution: dict[str, str] = dict(involution)
        self.name = name
        self._cache: dict = {}

    @property
    def rank(self) -> int:
        return len(self.basis)

    def product(self, b: str, b2: str) -> dict[str, LaurentPoly]:
        return self.table.get((b, b2), {})

    def coeff(self, b: str, b2: str, b3: str) -> LaurentPoly:
        return self.table.get((b, b2), {}).get(b3, ZERO)

    def element(self, b: str) -> AlgebraElement:
        return AlgebraElement.basis_element(b)

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        out: dict[str, LaurentPoly] = {}
        for b, cb in x.coeffs.items():
            for b2, cb2 in y.coeffs.items():
                row = self.table.get((b, b2))
                if not row:
                    continue
                s = cb * cb2
                for b3, c in row.items():
                    out[b3] = out.get(b3, ZERO) + s * c
        return AlgebraElement(out)

    def apply_involution(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement({self.involution[b]: c for b, c in x.coeffs.items()})

    def with_entry(self, b: str, b2: str, b3: str, value) -> "BasedAlgebra":
        """Copy of this algebra with one structure constant replaced."""
        table = {k: dict(row) for k, row in self.table.items()}
        table.setdefault((b, b2), {})[b3] = LaurentPoly.coerce(value)
        return BasedAlgebra(self.basis, self.units, self.sector, table, self.involution, self.name)

    def validate(self, check_assoc: bool = True, max_exhaustive_rank: int = 30, seed: int = 0) -> None:
        _validate(self, check_assoc, max_exhaustive_rank, seed)

    # serialization --------------------------------------------------------

    def to_document(self) -> dict:
        products = []
        for b in self.basis:
            for b2 in self.basis:
                row = self.table.get((b, b2))
                if not row:
                    continue
                result = [
                    {"basis": b3, "coeff": str(row[b3])}
                    for b3 in sorted(row, key=self.index.__getitem__)
                ]
                products.append({"left": b, "right": b2, "result": result})
        doc = {}
        if self.name:
            doc["name"] = self.name
        doc.update(
            basis=list(self.basis),
            units=list(self.units),
            sector={b: list(self.sector[b]) for b in self.basis if b in self.sector},
            involution={b: self.involution[b] for b in self.basis if b in self.involution},
            products=products,
        )
        return doc

    @classmethod
    def from_document(cls, doc: Mapping) -> "BasedAlgebra":
        try:
            jsonschema.validate(doc, TABLE_SCHEMA)
        except jsonschema.ValidationError as exc:
            path = "/".join(str(p) for p in exc.absolute_path)
            raise TableError(f"schema violation at '{path}': {exc.message}") from None
        basis = list(doc["basis"])
        known = set(basis)
        if len(known) != len(basis):
            dup = next(b for b in basis if basis.count(b) > 1)
            raise TableError("duplicate basis label", dup)
        table: dict[tuple[str, str], dict[str, LaurentPoly]] = {}
        for rec in doc["products"]:
            b, b2 = rec["left"], rec["right"]
            for lbl in (b, b2):
                if lbl not in known:
                    raise TableError("unknown basis label in products", (b, b2))
            row = table.setdefault((b, b2), {})
            for term in rec["result"]:
                b3 = term["basis"]
                if b3 not in known:
                    raise TableError("unknown basis label in products", (b, b2, b3))
                try:
                    c = LaurentPoly.coerce(term["coeff"])
                except ValueError as exc:
                    raise TableError(f"bad coefficient: {exc}", (b, b2, b3)) from None
                row[b3] = row.get(b3, ZERO) + c
        return cls(
            basis,
            doc["units"],
            {b: tuple(s) for b, s in doc["sector"].items()},
            table,
            doc["involution"],
            doc.get("name", ""),
        )


def _validate(alg: BasedAlgebra, check_assoc: bool, max_exhaustive_rank: int, seed: int) -> None:
    known = set(alg.basis)
    for u in alg.units:
        if u not in known:
            raise TableError("unit is not a basis label", u)
    if len(set(alg.units)) != len(alg.units):
        raise TableError("duplicate unit label", alg.units)
    units = set(alg.units)
    for b in alg.basis:
        if b not in alg.sector:
            raise TableError("basis element has no sector", b)
    for b, (lam, lam2) in alg.sector.items():
        if b not in known:
            raise TableError("sector given for unknown label", b)
        if lam not in units or lam2 not in units:
            raise TableError("sector index is not a unit", (b, lam, lam2))
    for u in alg.units:
        if alg.sector[u] != (u, u):
            raise TableError("unit does not lie in its own diagonal sector", u)

    inv = alg.involution
    if set(inv) != known or set(inv.values()) != known:
        raise TableError("involution is not a permutation of the basis")
    for b in alg.basis:
        if inv[inv[b]] != b:
            raise TableError("involution does not square to the identity", b)
    for u in alg.units:
        if inv[u] not in units:
            raise TableError("involution does not map units to units", u)

    for (b, b2), row in alg.table.items():
        for b3 in row:
            lb, rb = alg.sector[b]
            lb2, rb2 = alg.sector[b2]
            l3, r3 = alg.sector[b3]
            if rb != lb2 or l3 != lb or r3 != rb2:
                raise TableError("product violates sector decomposition", (b, b2, b3))

    for u in alg.units:
        for u2 in alg.units:
            got = alg.product(u, u2)
            want = {u: LaurentPoly.const(1)} if u == u2 else {}
            if got != want:
                raise TableError("unit axiom 1_a 1_b = delta_ab 1_a fails", (u, u2))

    if check_assoc:
        v = check_associativity(alg, max_exhaustive_rank=max_exhaustive_rank, seed=seed)
        if not v:
            raise TableError("table is not associative", v.witness)


def ba_load(
    source: Union[str, Path, Mapping],
    check_assoc: bool = True,
    max_exhaustive_rank: int = 30,
    seed: int = 0,
) -> BasedAlgebra:
    """Load and validate a table document (a path, JSON text, or parsed mapping).

    Raises :class:`TableError` naming the offending label, pair or triple.
    """
    if isinstance(source, Mapping):
        doc = source
    else:
        text = str(source)
        if isinstance(source, Path) or not text.lstrip().startswith("{"):
            text = Path(source).read_text(encoding="utf-8")
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TableError(f"invalid JSON: {exc}") from None
    alg = BasedAlgebra.from_document(doc)
    _validate(alg, check_assoc, max_exhaustive_rank, seed)
    return alg


def ba_dump(alg: BasedAlgebra, path: Union[str, Path, None] = None) -> str:
    text = json.dumps(alg.to_document(), indent=1, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def ba_multiply(x: AlgebraElement, y: AlgebraElement, alg: BasedAlgebra) -> AlgebraElement:
    return alg.multiply(x, y)


def ba_check_generalized_unit(alg: BasedAlgebra) -> Verdict:
    name = "generalized unit"
    units = alg.units
    if not units:
        return Verdict(name, False, detail="empty unit set")
    for u in units:
        if u not in alg.index:
            return Verdict(name, False, witness=u, detail="unit is not a basis element")
    for u in units:
        for u2 in units:
            want = {u: LaurentPoly.const(1)} if u == u2 else {}
            if alg.product(u, u2) != want:
                return Verdict(name, False, witness=[u, u2], detail="units are not orthogonal idempotents")
    for b in alg.basis:
        if b not in alg.sector:
            return Verdict(name, False, witness=b, detail="basis element lies in no sector")
        lam, lam2 = alg.sector[b]
        if lam not in units or lam2 not in units:
            return Verdict(name, False, witness=b, detail="sector indices are not units")
        x = alg.element(b)
        for u in units:
            left = alg.multiply(alg.element(u), x)
            right = alg.multiply(x, alg.element(u))
            if left != (x if u == lam else AlgebraElement()):
                return Verdict(name, False, witness=[u, b], detail="1_lambda b is not delta b")
            if right != (x if u == lam2 else AlgebraElement()):
                return Verdict(name, False, witness=[b, u], detail="b 1_lambda is not delta b")
    return Verdict(name, True, detail=f"{len(units)} unit(s); sum of units is a two-sided identity")


def ba_check_involution(alg: BasedAlgebra) -> Verdict:
    """``iota`` must satisfy c[b, b'][b''] = c[iota b', iota b][iota b'']."""
    name = "involution"
    inv = alg.involution
    known = set(alg.basis)
    if set(inv) != known or set(inv.values()) != known:
        return Verdict(name, False, detail="involution is not a permutation of the basis")
    for b in alg.basis:
        if inv[inv[b]] != b:
            return Verdict(name, False, witness=b, detail="involution does not square to identity")
    for b in alg.basis:
        for b2 in alg.basis:
            row = alg.product(b, b2)
            mirrored = alg.product(inv[b2], inv[b])
            if len(row) != len(mirrored):
                bad = next(
                    (b3 for b3 in alg.basis if alg.coeff(b, b2, b3) != mirrored.get(inv[b3], ZERO)),
                )
                return Verdict(name, False, witness=[b, b2, bad], detail="not an anti-automorphism")
            for b3, c in row.items():
                if mirrored.get(inv[b3], ZERO) != c:
                    return Verdict(name, False, witness=[b, b2, b3], detail="not an anti-automorphism")
    return Verdict(name, True)


def check_associativity(
    alg: BasedAlgebra, max_exhaustive_rank: int = 30, samples: int = 10_000, seed: int = 0
) -> Verdict:
    name = "associativity"
    basis = alg.basis
    if alg.rank <= max_exhaustive_rank:
        triples = itertools.product(basis, repeat=3)
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        triples = ((rng.choice(basis), rng.choice(basis), rng.choice(basis)) for _ in range(samples))
        mode = f"{samples} sampled triples"
    for b, b2, b3 in triples:
        left = _row_times(alg, alg.product(b, b2), b3, side="left")
        right = _row_times(alg, alg.product(b2, b3), b, side="right")
        if left != right:
            return Verdict(name, False, witness=[b, b2, b3], detail="(b b') b'' != b (b' b'')")
    return Verdict(name, True, detail=mode)


def _row_times(alg: BasedAlgebra, row: Mapping[str, LaurentPoly], other: str, side: str) -> dict:
    out: dict[str, LaurentPoly] = {}
    for x, cx in row.items():
        prod = alg.product(x, other) if side == "left" else alg.product(other, x)
        for y, cy in prod.items():
            out[y] = out.get(y, ZERO) + cx * cy
    return {k: c for k, c in out.items() if c}
