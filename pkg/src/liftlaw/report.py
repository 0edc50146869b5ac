from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator


def fmt_id(x: Any) -> str:
    """Render an identifier (string or nested tuple) compactly and stably."""
    if isinstance(x, tuple):
        return "(" + ",".join(fmt_id(y) for y in x) + ")"
    return str(x)


@dataclass(frozen=True)
class Violation:
    check: str
    message: str
    witness: tuple[tuple[str, Any], ...] = ()

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "message": self.message,
            "witness": {k: fmt_id(v) for k, v in self.witness},
        }

    def __str__(self) -> str:
        if not self.witness:
            return f"[{self.check}] {self.message}"
        wit = ", ".join(f"{k}={fmt_id(v)}" for k, v in self.witness)
        return f"[{self.check}] {self.message} ({wit})"


@dataclass
class Report:
    """Ordered list of violations; empty means every checked law holds."""

    subject: str = ""
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check: str, message: str, **witness: Any) -> None:
        self.violations.append(Violation(check, message, tuple(witness.items())))

    def extend(self, other: "Report | Iterable[Violation]") -> "Report":
        if isinstance(other, Report):
            other = other.violations
        self.violations.extend(other)
        return self

    def checks(self) -> set[str]:
        return {v.check for v in self.violations}

    def __iter__(self) -> Iterator[Violation]:
        return iter(self.violations)

    def __len__(self) -> int:
        return len(self.violations)

    def __str__(self) -> str:
        head = f"{self.subject or 'report'}: {'PASS' if self.ok else 'FAIL'}"
        return "\n".join([head] + [f"  {v}" for v in self.violations])
