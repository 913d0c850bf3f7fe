from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

HOLDS = "holds"
FAILS = "fails"
VACUOUS = "vacuous"


def implication(premise: bool, conclusion: bool) -> str:
    if not premise:
        return VACUOUS
    return HOLDS if conclusion else FAILS


@dataclass
class ClauseReport:
    """Per-clause verdicts of a multi-part statement, plus optional witnesses."""

    clauses: dict[str, str]
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return FAILS not in self.clauses.values()


@dataclass(frozen=True)
class VerdictRecord:
    check: str
    instance: str
    verdict: str
    witness: Any = None

    def __post_init__(self):
        if self.verdict not in (HOLDS, FAILS, VACUOUS):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == FAILS and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    def as_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "instance": self.instance,
            "verdict": self.verdict,
            "witness": self.witness,
        }
