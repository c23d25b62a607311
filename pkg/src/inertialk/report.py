"""Check reports: rows of {check, subject, pass, witness}."""
from __future__ import annotations

import json


def _plain(x):
    """Make witnesses JSON-friendly and deterministic."""
    from .cyclofield import CycNum
    from .scalg import Elem

    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, CycNum):
        return x.to_json()
    if isinstance(x, Elem):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


class Report:
    def __init__(self, title: str = ""):
        self.title = title
        self.rows: list[dict] = []

    def add(self, check: str, subject: str, passed: bool, witness=None):
        self.rows.append({"check": check, "subject": subject, "pass": bool(passed), "witness": _plain(witness)})
        return passed

    def extend(self, other: "Report"):
        self.rows.extend(other.rows)
        return self

    @property
    def ok(self) -> bool:
        return all(r["pass"] for r in self.rows)

    def failures(self):
        return [r for r in self.rows if not r["pass"]]

    def find(self, check: str):
        return [r for r in self.rows if r["check"] == check]

    def to_json(self) -> str:
        return json.dumps(self.rows, indent=2, sort_keys=True)

    def to_text(self) -> str:
        if not self.rows:
            return "(no checks)"
        w1 = max(len(r["check"]) for r in self.rows)
        w2 = max(len(r["subject"]) for r in self.rows)
        lines = []
        for r in self.rows:
            mark = "PASS" if r["pass"] else "FAIL"
            wit = "" if r["witness"] is None else "  " + json.dumps(r["witness"], sort_keys=True)
            lines.append(f"{mark}  {r['check']:<{w1}}  {r['subject']:<{w2}}{wit}")
        return "\n".join(lines)

    def __repr__(self):
        return f"Report({self.title!r}, {len(self.rows)} rows, ok={self.ok})"
