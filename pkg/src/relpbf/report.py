"""Check records shared by every verification routine and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Violation:
    where: tuple
    residual: str

    def to_json(self) -> dict:
        return {"where": [str(w) for w in self.where], "residual": self.residual}


@dataclass
class CheckResult:
    """Outcome of one named check: how many cases were examined, which failed."""

    name: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, where: tuple, residual: Any) -> None:
        self.violations.append(Violation(tuple(where), str(residual)))

    def to_json(self, max_violations: int = 50) -> dict:
        out = {
            "identity": self.name,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "violation_count": len(self.violations),
        }
        if self.violations:
            out["violations"] = [v.to_json() for v in self.violations[:max_violations]]
        if self.info:
            out["info"] = self.info
        return out


@dataclass
class Report:
    command: list[str]
    records: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        self.records.append(result)
        return result

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def summary(self) -> dict:
        n_pass = sum(r.passed for r in self.records)
        return {"total": len(self.records), "passed": n_pass, "failed": len(self.records) - n_pass}

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "notes": self.notes,
            "records": [r.to_json() for r in self.records],
            "summary": self.summary(),
            "status": "pass" if self.passed else "fail",
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def render_text(self) -> str:
        lines = ["$ " + " ".join(self.command)]
        lines.extend(self.notes)
        for r in self.records:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"[{status}] {r.name} ({r.checked} checked, {len(r.violations)} violations)")
            for v in r.violations[:10]:
                lines.append(f"    at {', '.join(map(str, v.where))}: {v.residual}")
            if len(r.violations) > 10:
                lines.append(f"    ... {len(r.violations) - 10} more")
        s = self.summary()
        lines.append(f"summary: {s['passed']}/{s['total']} passed")
        return "\n".join(lines)
