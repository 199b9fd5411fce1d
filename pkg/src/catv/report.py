"""Validation reports: a subject plus canonically sorted violation records."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: Tuple[Any, ...]
    detail: str = ""
    payload: Dict[str, Any] = field(default_factory=dict, compare=False)

    def sort_key(self) -> Tuple[str, str]:
        return (self.kind, repr(self.witness))

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "kind": self.kind,
            "witness": [_jsonable(w) for w in self.witness],
            "detail": self.detail,
        }
        if self.payload:
            out["payload"] = {k: _jsonable(v) for k, v in self.payload.items()}
        return out


@dataclass
class Report:
    """Result of a check; an empty violation list means the check passed."""

    subject: str
    violations: List[Violation] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, witness: Tuple[Any, ...], detail: str = "", **payload: Any) -> None:
        self.violations.append(Violation(kind, tuple(witness), detail, dict(payload)))

    def extend(self, other: "Report", prefix: str = "") -> None:
        for v in other.violations:
            kind = f"{prefix}{v.kind}" if prefix else v.kind
            self.violations.append(Violation(kind, v.witness, v.detail, v.payload))
        self.notes.extend(other.notes)
        self.checked += other.checked

    def finish(self) -> "Report":
        self.violations.sort(key=Violation.sort_key)
        return self

    def witnesses(self, kind: str | None = None) -> List[Tuple[Any, ...]]:
        return [v.witness for v in self.violations if kind is None or v.kind == kind]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
            "notes": list(self.notes),
        }

    def render(self, limit: int = 20) -> str:
        head = f"{self.subject}: {'ok' if self.ok else f'{len(self.violations)} violation(s)'}"
        lines = [head]
        for v in self.violations[:limit]:
            lines.append(f"  - {v.kind} {v.witness}: {v.detail}".rstrip(": "))
        if len(self.violations) > limit:
            lines.append(f"  ... {len(self.violations) - limit} more")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "tolist"):
        return value.tolist()
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)
