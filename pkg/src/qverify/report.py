"""Structured verification outcomes with deterministic JSON and TSV output."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Any, Optional

from . import __version__
from .series import Comparison, Mismatch

DEFAULT_MAX_COUNTEREXAMPLES = 20

# Counterexamples kept in memory per check; the total is counted regardless.
_KEEP = 1000


@dataclass
class Check:
    """One named claim and whether it held.

    ``expected`` is False for claims printed in the source material that are
    known not to hold; such a check failing is a confirmed discrepancy, but it
    is still reported as a failure.
    """

    name: str
    kind: str = "combinatorial"
    expected: bool = True
    note: str = ""
    mismatches: list[Mismatch] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    count: int = 0
    compared: int = 0

    @property
    def passed(self) -> bool:
        return self.count == 0

    def fail(self, example: dict) -> None:
        self.count += 1
        if len(self.counterexamples) < _KEEP:
            self.counterexamples.append(example)

    def tick(self, n: int = 1) -> None:
        self.compared += n

    @classmethod
    def from_comparison(cls, name: str, cmp: Comparison, expected: bool = True, note: str = "") -> "Check":
        chk = cls(name, kind="series", expected=expected, note=note)
        chk.mismatches = list(cmp.mismatches)
        chk.count = len(cmp.mismatches)
        chk.compared = cmp.monomials_compared
        return chk

    def as_dict(self, limit: int) -> dict:
        out: dict[str, Any] = {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "expected": "pass" if self.expected else "fail",
            "kind": self.kind,
        }
        if self.note:
            out["note"] = self.note
        out["checked"] = self.compared
        out["count"] = self.count
        if self.kind == "series":
            out["mismatches"] = [m.as_dict() for m in self.mismatches[:limit]]
        else:
            out["counterexamples"] = self.counterexamples[:limit]
        out["truncated"] = self.count > limit
        return out


def _timestamp() -> Optional[str]:
    # Wall-clock time would break byte-identical reruns; honour the
    # reproducible-builds convention instead.
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if not epoch:
        return None
    import datetime

    return datetime.datetime.fromtimestamp(int(epoch), datetime.timezone.utc).isoformat()


@dataclass
class Report:
    command: str
    config: dict
    checks: list[Check] = field(default_factory=list)
    totals: dict = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def unexpected(self) -> list[Check]:
        return [c for c in self.checks if c.passed != c.expected]

    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def as_dict(self, limit: int = DEFAULT_MAX_COUNTEREXAMPLES) -> dict:
        totals = dict(self.totals)
        totals["checks"] = len(self.checks)
        totals["failed"] = sum(not c.passed for c in self.checks)
        totals["unexpected"] = len(self.unexpected)
        return {
            "run": {
                "command": self.command,
                "config": self.config,
                "version": __version__,
                "timestamp": _timestamp(),
            },
            "status": "pass" if self.passed else "fail",
            "checks": [c.as_dict(limit) for c in self.checks],
            "totals": totals,
        }

    def to_json(self, limit: int = DEFAULT_MAX_COUNTEREXAMPLES) -> str:
        return json.dumps(self.as_dict(limit), indent=2, ensure_ascii=False) + "\n"

    def to_tsv(self) -> str:
        lines = ["name\tstatus\texpected\tcount\tchecked"]
        for c in self.checks:
            lines.append(
                f"{c.name}\t{'pass' if c.passed else 'fail'}\t"
                f"{'pass' if c.expected else 'fail'}\t{c.count}\t{c.compared}"
            )
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.command}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "pass" if c.passed else "FAIL"
            tail = "" if c.expected else "  (printed claim, expected to fail)"
            lines.append(f"  [{mark}] {c.name}: {c.count} of {c.compared}{tail}")
        for k, v in self.totals.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines) + "\n"
