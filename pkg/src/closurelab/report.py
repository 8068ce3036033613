"""Structured results shared by the closure, multiplicity and detector layers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"
UNSUPPORTED = "unsupported"
PARTIAL = "partial"
VERDICTS = (HOLDS, FAILS, INCONCLUSIVE, UNSUPPORTED, PARTIAL)

# hypothesis ledger states
VERIFIED = "verified"
VIOLATED = "violated"
ASSERTED = "caller-asserted"
UNVERIFIED = "unverified"
AUTOMATIC = "always satisfied"


@dataclass
class Report:
    """Outcome of a detector run; every verdict carries the numbers it rests on."""

    check: str
    ring: str
    input: str
    quantities: dict = field(default_factory=dict)
    verdict: str = INCONCLUSIVE
    conclusion: str = ""
    hypotheses: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "ring": self.ring,
            "input": self.input,
            "quantities": {k: _jsonable(v) for k, v in self.quantities.items()},
            "verdict": self.verdict,
            "conclusion": self.conclusion,
            "hypotheses": dict(self.hypotheses),
            "witnesses": [str(w) for w in self.witnesses],
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        q = ", ".join(f"{k}={_jsonable(v)}" for k, v in self.quantities.items())
        text = f"{self.check}[{self.input}]: {self.verdict}"
        if self.conclusion:
            text += f" ({self.conclusion})"
        if q:
            text += f"; {q}"
        return text


def _jsonable(v: Any):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)
