"""Verification reports: named pass/fail checks with witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field

from .serialize import to_jsonable


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"name": self.name, "pass": bool(self.ok)}
        if self.witness:
            out["witness"] = to_jsonable(self.witness)
        return out


class Report:
    """Ordered collection of checks plus computed artifacts."""

    def __init__(self, title: str):
        self.title = title
        self.checks: list[Check] = []
        self.artifacts: dict = {}

    def check(self, name: str, ok: bool, **witness) -> bool:
        self.checks.append(Check(name, bool(ok), witness if not ok else
                                 {k: v for k, v in witness.items() if k == "x"}))
        return bool(ok)

    def add(self, name: str, value) -> None:
        self.artifacts[name] = value

    def extend(self, other: "Report", prefix: str | None = None) -> "Report":
        pre = f"{prefix or other.title}: "
        for c in other.checks:
            self.checks.append(Check(pre + c.name, c.ok, c.witness))
        return self

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.passed

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def verdict(self, name: str) -> bool:
        for c in self.checks:
            if c.name == name:
                return c.ok
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks],
                "artifacts": to_jsonable(self.artifacts)}

    def summary(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.ok else 'FAIL'}] {c.name}")
        return "\n".join(lines)

    def __repr__(self):
        return f"Report({self.title!r}, passed={self.passed}, checks={len(self.checks)})"
