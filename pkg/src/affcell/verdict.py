from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    """Outcome of a structural check.  Failures carry a witness."""

    name: str
    passed: bool
    witness: Any = None
    detail: str = ""
    children: list["Verdict"] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        if self.detail:
            out["detail"] = self.detail
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        s = f"[{tag}] {self.name}"
        if self.detail:
            s += f": {self.detail}"
        if not self.passed and self.witness is not None:
            s += f" (witness: {_plain(self.witness)})"
        return s


def combine(name: str, parts: list[Verdict], detail: str = "") -> Verdict:
    failed = next((p for p in parts if not p.passed), None)
    return Verdict(
        name,
        failed is None,
        witness=None if failed is None else failed.witness,
        detail=detail or ("" if failed is None else f"{failed.name} failed"),
        children=list(parts),
    )


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)
