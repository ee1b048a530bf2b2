"""Pass/fail reports produced by the verification routines."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  [{self.detail}]" if self.detail else ""
        return f"{status}  {self.name}: expected {self.expected!r}, got {self.actual!r}{extra}"


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, expected, actual, detail: str = "") -> Check:
        c = Check(name, expected, actual, detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "n_checks": len(self.checks),
            "n_failures": len(self.failures),
            "checks": [c.to_dict() for c in self.checks],
        }

    def text(self) -> str:
        head = f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({len(self.checks)} checks, {len(self.failures)} failures)"
        return "\n".join([head] + ["  " + c.line() for c in self.checks])
