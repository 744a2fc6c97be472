"""Check results and reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

# evidence levels
DIMENSION = "dimension equality only"
ISOMORPHISM = "isomorphism verified"
EXACT = "exact matrix identity"


@dataclass(frozen=True)
class Mismatch:
    locus: tuple
    lhs: Any
    rhs: Any
    note: str = ""

    def __str__(self) -> str:
        s = f"at {self.locus}: {self.lhs} vs {self.rhs}"
        return f"{s} ({self.note})" if self.note else s


@dataclass
class CheckResult:
    """Outcome of one verification routine."""

    name: str
    failures: list = field(default_factory=list)
    evidence: dict = field(default_factory=dict)
    level: str = DIMENSION
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        return self.skipped is None and not self.failures

    @property
    def status(self) -> str:
        if self.skipped is not None:
            return SKIPPED
        return PASS if not self.failures else FAIL

    def __bool__(self) -> bool:
        return self.passed

    def fail(self, locus, lhs, rhs, note="") -> None:
        self.failures.append(Mismatch(tuple(locus), lhs, rhs, note))

    def compare(self, locus, lhs, rhs, note="") -> bool:
        if lhs != rhs:
            self.fail(locus, lhs, rhs, note)
            return False
        return True

    def __str__(self) -> str:
        head = f"{self.name}: {self.status} [{self.level}]"
        if self.skipped:
            return f"{head} {self.skipped}"
        if self.failures:
            return head + "; first failure " + str(self.failures[0])
        return head


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class CheckRecord:
    check_id: str
    anchor: str
    status: str
    evidence: dict
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {"check_id": self.check_id, "anchor": self.anchor, "status": self.status,
                "evidence": _jsonable(self.evidence), "elapsed": round(self.elapsed, 6)}

    @classmethod
    def from_result(cls, check_id: str, anchor: str, res: CheckResult, elapsed: float = 0.0):
        ev = {"level": res.level, **res.evidence}
        if res.failures:
            ev["failures"] = [{"locus": list(m.locus), "lhs": m.lhs, "rhs": m.rhs,
                               **({"note": m.note} if m.note else {})} for m in res.failures]
        if res.skipped:
            ev["reason"] = res.skipped
        return cls(check_id, anchor, res.status, ev, elapsed)


@dataclass
class Report:
    records: list = field(default_factory=list)

    def add(self, rec: CheckRecord) -> None:
        self.records.append(rec)

    def sorted(self) -> "Report":
        return Report(sorted(self.records, key=lambda r: r.check_id))

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    def failures(self) -> list:
        return [r for r in self.records if r.status == FAIL]

    def to_json(self, timings: bool = True) -> list:
        out = [r.to_json() for r in self.records]
        if not timings:
            for o in out:
                o.pop("elapsed")
        return out


def emit_report(report: Report, fmt: str = "text", timings: bool = True) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(timings), indent=2, sort_keys=True)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    if not report.records:
        return "(no checks)"
    w = max(len(r.check_id) for r in report.records)
    lines = []
    for r in report.records:
        ev = r.evidence
        extra = ev.get("level", "")
        if r.status == FAIL and ev.get("failures"):
            f = ev["failures"][0]
            extra = f"{extra}; at {tuple(f['locus'])}: {f['lhs']} vs {f['rhs']}"
            if len(ev["failures"]) > 1:
                extra += f" (+{len(ev['failures']) - 1} more)"
        elif r.status == SKIPPED:
            extra = ev.get("reason", "")
        t = f"{r.elapsed:7.3f}s " if timings else ""
        lines.append(f"{r.check_id:<{w}}  {r.status.upper():<7} {t}{r.anchor}  {extra}".rstrip())
    return "\n".join(lines)
