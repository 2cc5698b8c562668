"""Structured verdicts shared by every checker, and their JSON form."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    ERROR = "error"
    REPORT = "report"


class Level(str, enum.Enum):
    """How much a verdict matters to the caller.

    Only ``THEOREM`` outcomes can fail a suite; the others are evidence.
    """

    THEOREM = "theorem"
    CONJECTURE = "conjecture"
    INFORMATIONAL = "informational"


@dataclass
class Report:
    task: str
    params: dict[str, Any] = field(default_factory=dict)
    status: Status = Status.ERROR
    residue: str | None = None
    expected: str | None = None
    actual: str | None = None
    notes: str = ""
    timing_ms: int = 0
    level: Level = Level.THEOREM

    @property
    def ok(self) -> bool:
        """False only for a theorem-level task that did not hold."""
        return self.level is not Level.THEOREM or self.status is Status.HOLDS

    def to_json(self) -> dict[str, Any]:
        # key order is part of the output contract
        return {
            "task": self.task,
            "params": dict(self.params),
            "status": Status(self.status).value,
            "residue": self.residue,
            "expected": self.expected,
            "actual": self.actual,
            "notes": self.notes,
            "timing_ms": int(self.timing_ms),
        }

    def line(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        tag = "" if self.level is Level.THEOREM else f" [{Level(self.level).value}]"
        text = f"{Status(self.status).value:6s} {self.task} {ps}{tag} ({self.timing_ms} ms)"
        if self.notes:
            text += f": {self.notes}"
        return text
