"""Verification reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .rings import MPoly

REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["check-id", "paper-ref", "status", "residual", "intermediates"],
    "additionalProperties": False,
    "properties": {
        "check-id": {"type": "string"},
        "paper-ref": {"type": "string"},
        "status": {"enum": ["pass", "fail"]},
        "residual": {"type": "string"},
        "tolerance": {"type": "number", "exclusiveMinimum": 0},
        "intermediates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "paper-ref", "residual"],
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string"},
                    "paper-ref": {"type": "string"},
                    "residual": {"type": "string"},
                },
            },
        },
    },
}


def _text(residual) -> str:
    return str(residual)


def _is_small(residual: str, tol: float) -> bool:
    try:
        return abs(float(residual)) < tol
    except ValueError:
        return False


def _is_zero(residual) -> bool:
    if isinstance(residual, MPoly):
        return residual.is_zero()
    if isinstance(residual, str):
        return residual.strip() == "0"
    return residual == 0


@dataclass
class Intermediate:
    label: str
    ref: str
    residual: str

    @property
    def ok(self) -> bool:
        return _is_zero(self.residual)

    def to_dict(self) -> dict:
        return {"label": self.label, "paper-ref": self.ref, "residual": self.residual}


@dataclass
class VerificationReport:
    """Outcome of one symbolic check.

    ``status`` is ``"pass"`` exactly when the final residual is zero, or,
    for numeric checks carrying a ``tol``, when it is below ``tol``.  Each
    intermediate identity carries its own residual; ``ok`` requires all of
    them to vanish as well.
    """

    check_id: str
    ref: str
    residual: str
    intermediates: list[Intermediate] = field(default_factory=list)
    tol: float | None = None

    @property
    def status(self) -> str:
        if self.tol is not None:
            return "pass" if _is_small(self.residual, self.tol) else "fail"
        return "pass" if _is_zero(self.residual) else "fail"

    @property
    def ok(self) -> bool:
        return self.status == "pass" and all(i.ok for i in self.intermediates)

    def add(self, label: str, ref: str, residual) -> Intermediate:
        item = Intermediate(label, ref, _text(residual))
        self.intermediates.append(item)
        return item

    def to_dict(self) -> dict:
        out = {
            "check-id": self.check_id,
            "paper-ref": self.ref,
            "status": self.status,
            "residual": self.residual,
            "intermediates": [i.to_dict() for i in self.intermediates],
        }
        if self.tol is not None:
            out["tolerance"] = self.tol
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        rep = cls(data["check-id"], data["paper-ref"], data["residual"],
                  [Intermediate(i["label"], i["paper-ref"], i["residual"]) for i in data["intermediates"]],
                  data.get("tolerance"))
        if rep.status != data["status"]:
            raise ValueError("status field disagrees with residual")
        return rep

    def summary(self) -> str:
        bound = f" (tolerance {self.tol:g})" if self.tol is not None else ""
        lines = [f"[{'PASS' if self.ok else 'FAIL'}] {self.check_id}: {self.ref}", f"    residual: {self.residual}{bound}"]
        for i in self.intermediates:
            lines.append(f"    {'ok ' if i.ok else 'BAD'} {i.label} ({i.ref}): residual {i.residual}")
        return "\n".join(lines)


def make_report(check_id: str, ref: str, residual, intermediates: list[Intermediate] | None = None) -> VerificationReport:
    return VerificationReport(check_id, ref, _text(residual), list(intermediates or []))
