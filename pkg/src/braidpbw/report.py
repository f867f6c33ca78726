"""Pass/fail reports with witnesses, rendered as JSON-ready dicts or text."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    ok: bool
    witness: dict | None = None
    detail: dict | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "ok": self.ok}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    kind: str
    info: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: dict | None = None, detail: dict | None = None):
        self.checks.append(Check(name, bool(ok), witness, detail))
        return ok

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def first_failure(self):
        fails = self.failures()
        return fails[0] if fails else None

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "info": self.info,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"{self.kind}: {'pass' if self.ok else 'FAIL'}"]
        for k in sorted(self.info):
            lines.append(f"  {k}: {self.info[k]}")
        for c in self.checks:
            lines.append(f"  [{'ok' if c.ok else 'FAIL'}] {c.name}")
            if c.witness:
                for k in sorted(c.witness):
                    lines.append(f"      {k}: {c.witness[k]}")
        return "\n".join(lines)
