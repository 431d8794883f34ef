"""Pass/fail check records shared by every verification suite."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from .ratcore import HalfInt, MPoly, Phase, fmt_rat


def to_jsonable(value: Any) -> Any:
    """Render values for JSON; rationals travel as ``"p/q"`` strings, plain ints stay ints."""
    if isinstance(value, (bool, int)) or value is None:
        return value
    if isinstance(value, Fraction):
        return fmt_rat(value)
    if isinstance(value, (HalfInt, Phase, MPoly)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)


@dataclass
class Check:
    id: str
    inputs: Dict[str, Any]
    expected: Any
    actual: Any
    status: str

    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "inputs": to_jsonable(self.inputs),
            "expected": to_jsonable(self.expected),
            "actual": to_jsonable(self.actual),
            "status": self.status,
        }


@dataclass
class Report:
    suite: str
    checks: List[Check] = field(default_factory=list)

    def add(self, id: str, expected: Any, actual: Any, **inputs: Any) -> Check:
        """Record a check; it passes iff ``expected == actual`` exactly."""
        status = "pass" if _exact_equal(expected, actual) else "fail"
        check = Check(id, inputs, expected, actual, status)
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str | None = None) -> None:
        for c in other.checks:
            cid = f"{prefix}/{c.id}" if prefix else c.id
            self.checks.append(Check(cid, c.inputs, c.expected, c.actual, c.status))

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed()]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> Dict[str, int]:
        n_fail = len(self.failures)
        return {"total": len(self.checks), "pass": len(self.checks) - n_fail, "fail": n_fail}

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "checks": [c.to_json() for c in self.checks],
            "summary": self.summary(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def csv_rows(self) -> List[List[str]]:
        rows = []
        for c in self.checks:
            rows.append([
                self.suite,
                c.id,
                json.dumps(to_jsonable(c.inputs), sort_keys=True),
                json.dumps(to_jsonable(c.expected), sort_keys=True),
                json.dumps(to_jsonable(c.actual), sort_keys=True),
                c.status,
            ])
        return rows


CSV_HEADER = ["suite", "id", "inputs", "expected", "actual", "status"]


def reports_to_csv(reports: List[Report]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerows(r.csv_rows())
    return buf.getvalue()


def _exact_equal(a: Any, b: Any) -> bool:
    if isinstance(a, MPoly) or isinstance(b, MPoly):
        return isinstance(a, MPoly) and isinstance(b, MPoly) and a.variables == b.variables and a.terms == b.terms
    if isinstance(a, float) or isinstance(b, float):
        raise TypeError("floating-point values are not allowed in checks")
    return a == b
