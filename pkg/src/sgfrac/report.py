"""Structured pass/fail reports rendered as stable text.

A report is a sequence of cases; each renders as a `case:` block listing
its inputs and computed values followed by a verdict line, and the final
line summarizes `PASS k/k` or `FAIL passed/total`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping


@dataclass(frozen=True)
class Case:
    label: str
    values: Mapping[str, str]
    passed: bool

    def render(self) -> str:
        lines = [f"case: {self.label}"]
        for key, value in self.values.items():
            lines.append(f"  {key} = {value}")
        lines.append(f"  verdict: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


@dataclass
class Report:
    cases: list[Case] = field(default_factory=list)

    def extend(self, other: "Report") -> None:
        self.cases.extend(other.cases)

    def add(self, case: Case) -> None:
        self.cases.append(case)

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def all_passed(self) -> bool:
        return self.passed == self.total

    def summary(self) -> str:
        if self.all_passed:
            return f"PASS {self.passed}/{self.total}"
        return f"FAIL {self.passed}/{self.total}"

    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def render(self) -> str:
        blocks = [case.render() for case in self.cases]
        blocks.append(self.summary())
        return "\n\n".join(blocks) + "\n"
