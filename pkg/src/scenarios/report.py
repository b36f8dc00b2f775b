"""Scenario reports: named checks against stored expectations, rendered as text or JSON."""
import json
from typing import Any, Dict, List

from pydantic import BaseModel, Field


class Check(BaseModel):
    name: str
    expected: Any
    actual: Any
    passed: bool
    provenance: str


class ScenarioReport(BaseModel):
    scenario: str
    parameters: Dict[str, Any] = {}
    values: Dict[str, Any] = {}
    checks: List[Check] = []
    flags: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def check(self, name: str, expected: Any, actual: Any, passed: bool, provenance: str) -> bool:
        self.checks.append(Check(name=name, expected=expected, actual=actual, passed=passed, provenance=provenance))
        return passed

    def expect_equal(self, name: str, expected: Any, actual: Any, provenance: str) -> bool:
        return self.check(name, expected, actual, expected == actual, provenance)

    def expect_at_most(self, name: str, bound: float, actual: float, provenance: str) -> bool:
        return self.check(name, f"<= {_dump(bound)}", actual, actual <= bound, provenance)

    def expect_at_least(self, name: str, bound: float, actual: float, provenance: str) -> bool:
        return self.check(name, f">= {_dump(bound)}", actual, actual >= bound, provenance)

    def to_dict(self) -> dict:
        data = self.model_dump()
        data["passed"] = self.passed
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"scenario: {self.scenario}"]
        if self.parameters:
            lines.append("parameters: " + ", ".join(f"{k}={_dump(v)}" for k, v in self.parameters.items()))
        for key, value in self.values.items():
            lines.append(f"  {key} = {_dump(value)}")
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.name}: {_dump(c.actual)} (expected {_dump(c.expected)}) [{c.provenance}]")
        for flag in self.flags:
            lines.append(f"flag: {flag}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _dump(value: Any) -> str:
    # same spelling as the JSON output, minus the quotes around plain strings
    if isinstance(value, str):
        return value
    return json.dumps(value, ensure_ascii=False)
