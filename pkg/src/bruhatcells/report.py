"""Structured pass/fail records shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckResult", "Report"]


@dataclass(frozen=True)
class CheckResult:
    subject: str        # what was checked, e.g. a Cartan type or class label
    check: str          # short machine-friendly check name
    kind: str           # "EXACT", "SOUND" or "COMPLETE"
    passed: bool
    witness: str | None = None   # offending element / pair on failure

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        tail = f"  witness={self.witness}" if self.witness else ""
        return f"[{self.kind}] {self.subject} {self.check}: {status}{tail}"

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "check": self.check,
            "kind": self.kind,
            "passed": self.passed,
            "witness": self.witness,
        }


@dataclass
class Report:
    name: str
    results: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, subject, check, kind, passed, witness=None):
        self.results.append(CheckResult(subject, check, kind, bool(passed), witness))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failed(self, kinds=None) -> list[CheckResult]:
        return [
            r
            for r in self.results
            if not r.passed and (kinds is None or r.kind in kinds)
        ]

    def to_text(self) -> str:
        lines = [f"# {self.name}"]
        lines += [r.line() for r in self.results]
        lines += [f"note: {n}" for n in self.notes]
        lines.append(f"result: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
            "notes": list(self.notes),
        }
