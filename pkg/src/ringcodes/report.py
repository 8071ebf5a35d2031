"""Verdict reports with a stable JSON form.

Every check in the package returns a :class:`Report`.  Its JSON form is::

    {"claim": str, "params": {...}, "verdict": "holds" | "fails" | "error",
     "witness": {...} | null, "deviations": [str, ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

HOLDS = "holds"
FAILS = "fails"
ERROR = "error"

REPORT_SCHEMA = {
    "type": "object",
    "required": ["claim", "params", "verdict", "witness", "deviations"],
    "additionalProperties": False,
    "properties": {
        "claim": {"type": "string"},
        "params": {"type": "object"},
        "verdict": {"enum": [HOLDS, FAILS, ERROR]},
        "witness": {"type": ["object", "null"]},
        "deviations": {"type": "array", "items": {"type": "string"}},
    },
}


@dataclass
class Report:
    claim: str
    params: dict
    verdict: str
    witness: dict | None = None
    deviations: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.verdict not in (HOLDS, FAILS, ERROR):
            raise ValueError(f"bad verdict {self.verdict!r}")

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "verdict": self.verdict,
            "witness": self.witness,
            "deviations": list(self.deviations),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)

    def to_text(self) -> str:
        lines = [f"{self.claim}: {self.verdict}"]
        for k, v in self.params.items():
            lines.append(f"  {k} = {v}")
        if self.witness:
            lines.append("  witness:")
            for k, v in self.witness.items():
                lines.append(f"    {k}: {v}")
        for d in self.deviations:
            lines.append(f"  note: {d}")
        return "\n".join(lines)


def verdict(ok: bool) -> str:
    return HOLDS if ok else FAILS
