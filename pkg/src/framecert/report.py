"""Certificate report records and their JSON / text renderings."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

SCHEMA = 1


@dataclass
class ClaimRecord:
    id: str
    description: str
    paper_anchor: str
    status: str
    witness: dict[str, Any] = field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class CertificateReport:
    records: list[ClaimRecord] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    def add(self, record: ClaimRecord) -> None:
        if any(r.id == record.id for r in self.records):
            raise ValueError(f"duplicate claim id {record.id}")
        self.records.append(record)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "status": "pass" if self.passed else "fail",
            "metadata": self.metadata,
            "records": [asdict(r) for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            lines.append(f"[{r.status.upper()}] {r.id}: {r.description} ({r.elapsed_ms} ms)")
            for key, value in r.witness.items():
                lines.append(f"    {key}: {_human(key, value)}")
        n_pass = sum(r.passed for r in self.records)
        lines.append(f"{n_pass}/{len(self.records)} claims pass; overall {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


_COORD_KEYS = ("support", "supports", "coords", "triple", "block")


def _shift(value):
    if isinstance(value, int) and not isinstance(value, bool):
        return value + 1
    if isinstance(value, list):
        return [_shift(v) for v in value]
    return value


def _human(key: str, value) -> str:
    # JSON is 0-based; text output shows coordinates the way they are written by hand
    if key.endswith(_COORD_KEYS):
        return f"{_shift(value)} (1-based)"
    return json.dumps(value) if isinstance(value, (dict, list)) else str(value)
