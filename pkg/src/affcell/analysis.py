"""Full pipeline: table checks, cells, a-function, gamma, P1-P4, Psi, realization, chain.

:func:`analyze` never raises on mathematical failures; every step becomes a
:class:`Verdict`, and downstream steps that lack their inputs are recorded
as failures naming the missing prerequisite.  The structured rendering is
sorted JSON and depends only on the input table and options.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .asymptotic import (
    AsymptoticAlgebra,
    GammaBoundError,
    P2Error,
    a_function,
    check_gamma_associativity,
    check_psi_factorization,
    check_P1,
    check_P2,
    check_P3,
    compute_psi,
    gamma_table,
)
from .based_algebra import (
    BasedAlgebra,
    ba_check_generalized_unit,
    ba_check_involution,
    check_associativity,
)
from .cells import check_cell_order, check_involution_on_cells, one_sided_cells, two_sided_cells
from .genmatrix import (
    asymptotic_labeling,
    assemble_cell_chain,
    cell_labeling,
    cell_realization,
    verify_affine_cell_ideal,
)
from .verdict import Verdict

__all__ = ["AnalysisReport", "CellSection", "analyze"]

GAMMA_EXCERPT = 12
FORMAT_VERSION = 1


@dataclass
class CellSection:
    index: int
    members: list[str]
    a_values: dict[str, int] = field(default_factory=dict)
    distinguished: Optional[list[str]] = None
    gamma_excerpt: list[list[Any]] = field(default_factory=list)
    gamma_count: int = 0
    psi: Optional[list[list[str]]] = None
    labeling: dict[str, list[int]] = field(default_factory=dict)
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.verdicts)

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "members": self.members,
            "a": self.a_values,
            "distinguished": self.distinguished,
            "gamma_nonzero": self.gamma_count,
            "gamma_excerpt": self.gamma_excerpt,
            "psi": self.psi,
            "labeling": self.labeling,
            "passed": self.passed,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


@dataclass
class AnalysisReport:
    name: str
    rank: int
    units: list[str]
    checks: list[Verdict] = field(default_factory=list)
    cells: list[CellSection] = field(default_factory=list)
    left_cells: list[list[str]] = field(default_factory=list)
    right_cells: list[list[str]] = field(default_factory=list)
    global_verdicts: list[Verdict] = field(default_factory=list)
    options: dict[str, Any] = field(default_factory=dict)

    @property
    def verdicts(self) -> list[Verdict]:
        out = list(self.checks)
        for sec in self.cells:
            out.extend(sec.verdicts)
        out.extend(self.global_verdicts)
        return out

    @property
    def passed(self) -> bool:
        return all(self.verdicts)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v]

    def to_dict(self) -> dict:
        return {
            "format": "affcell-report",
            "version": FORMAT_VERSION,
            "algebra": {"name": self.name, "rank": self.rank, "units": self.units},
            "options": self.options,
            "checks": [v.to_dict() for v in self.checks],
            "two_sided_cells": [sec.members for sec in self.cells],
            "left_cells": self.left_cells,
            "right_cells": self.right_cells,
            "cells": [sec.to_dict() for sec in self.cells],
            "global": [v.to_dict() for v in self.global_verdicts],
            "passed": self.passed,
        }

    def render_structured(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True, ensure_ascii=False) + "\n"

    def render_text(self) -> str:
        lines = [f"algebra {self.name or '(unnamed)'}: rank {self.rank}, units {self.units}"]
        lines.append("")
        lines.append("table checks")
        lines.extend("  " + v.line() for v in self.checks)
        lines.append("")
        lines.append(f"{len(self.cells)} two-sided cells (lowest first)")
        for sec in self.cells:
            a_set = sorted(set(sec.a_values.values()))
            lines.append(f"cell {sec.index}: {sec.members}")
            lines.append(f"  a = {a_set[0] if len(a_set) == 1 else a_set}")
            if sec.distinguished is not None:
                lines.append(f"  D_c = {sec.distinguished}")
            if sec.psi is not None:
                lines.append(f"  Psi_c = {sec.psi}")
            lines.extend("  " + v.line() for v in sec.verdicts)
        lines.append("")
        lines.append("global")
        lines.extend("  " + v.line() for v in self.global_verdicts)
        lines.append("")
        if self.passed:
            lines.append("RESULT: P1-P4 verified; affine cellular structure exhibited")
        else:
            lines.append(f"RESULT: {len(self.failures())} check(s) failed")
        return "\n".join(lines) + "\n"


def _fail(name: str, why: str) -> Verdict:
    return Verdict(name, False, detail=why)


def _analyze_cell(alg: BasedAlgebra, dec, j: int) -> tuple[CellSection, Optional[AsymptoticAlgebra]]:
    cell = dec.cells[dec.chain[j - 1]]
    sec = CellSection(j, list(cell))
    af = a_function(alg, cell)
    sec.a_values = dict(af.values)
    try:
        asy = gamma_table(alg, cell, af)
    except GammaBoundError as exc:
        sec.verdicts.append(Verdict("gamma bound deg c <= a(b)", False, witness=list(exc.witness)))
        return sec, None
    sec.verdicts.append(Verdict("gamma bound deg c <= a(b)", True))
    sec.verdicts.append(check_P1(alg, asy))
    triples = asy.gamma_triples()
    sec.gamma_count = len(triples)
    sec.gamma_excerpt = [list(t) for t in triples[:GAMMA_EXCERPT]]
    sec.verdicts.append(check_gamma_associativity(asy))
    p2 = check_P2(asy)
    sec.verdicts.append(p2)
    if not p2:
        for name in ("labelings agree", "Psi factorization t_b o b' = t_b Psi t_b'", f"affine cell ideal (layer {j})"):
            sec.verdicts.append(_fail(name, "needs D_c (P2 failed)"))
        return sec, asy
    sec.distinguished = list(asy.distinguished)
    try:
        by_units = asymptotic_labeling(asy)
        by_cells = cell_labeling(alg, asy)
    except P2Error as exc:
        sec.verdicts.append(Verdict("labelings agree", False, witness=exc.witness, detail=str(exc)))
        return sec, asy
    agree = by_units == by_cells
    sec.verdicts.append(Verdict(
        "labelings agree",
        agree,
        witness=None if agree else next(b for b in asy.cell if by_units[b] != by_cells[b]),
        detail="D_c sectors match (right cell, left cell)",
    ))
    sec.labeling = {b: [r, c] for b, (r, c, _) in by_cells.items()}
    psi = compute_psi(asy)
    sec.verdicts.append(check_psi_factorization(asy, psi))
    try:
        g = cell_realization(asy, by_cells)
        sec.psi = g.psi_strings()
    except (ValueError, KeyError) as exc:
        sec.verdicts.append(_fail(f"affine cell ideal (layer {j})", str(exc)))
        return sec, asy
    sec.verdicts.append(verify_affine_cell_ideal(alg, dec, j, asy, by_cells, g))
    return sec, asy


def analyze(
    alg: BasedAlgebra,
    max_exhaustive_rank: int = 30,
    seed: int = 0,
    samples: int = 2000,
) -> AnalysisReport:
    report = AnalysisReport(
        alg.name,
        alg.rank,
        list(alg.units),
        options={"max_exhaustive_rank": max_exhaustive_rank, "seed": seed},
    )
    report.checks.append(ba_check_generalized_unit(alg))
    report.checks.append(ba_check_involution(alg))
    report.checks.append(check_associativity(alg, max_exhaustive_rank=max_exhaustive_rank, seed=seed))

    dec = two_sided_cells(alg)
    report.checks.append(check_cell_order(dec))
    report.checks.append(check_involution_on_cells(alg, dec))
    report.left_cells = [list(c) for c in one_sided_cells(alg, "left").cells]
    report.right_cells = [list(c) for c in one_sided_cells(alg, "right").cells]

    asys = []
    for j in range(1, len(dec.cells) + 1):
        sec, asy = _analyze_cell(alg, dec, j)
        report.cells.append(sec)
        if asy is not None:
            asys.append(asy)

    if len(asys) == len(dec.cells):
        report.global_verdicts.append(
            check_P3(alg, asys, max_exhaustive_rank=max_exhaustive_rank, samples=samples, seed=seed)
        )
    else:
        report.global_verdicts.append(_fail("P3", "gamma undefined on some cell"))
    report.global_verdicts.append(assemble_cell_chain(alg, dec))
    return report
