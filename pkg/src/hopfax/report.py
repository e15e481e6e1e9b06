"""Check reports: per-law pass/fail records with failure witnesses.

Every structural validation in the engine produces a Report.  A record
carries the law it checked (as a self-describing formula string), a status,
and — on failure — the first offending basis tuple, so any failure can be
reproduced by re-evaluating that single law instance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"


@dataclass
class CheckRecord:
    check_id: str
    law: str
    status: str
    witness: tuple | None = None
    detail: str = ""

    def as_dict(self):
        d = {"check": self.check_id, "law": self.law, "status": self.status}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    subject: str
    records: list = field(default_factory=list)

    def add(self, check_id, law, ok, witness=None, detail=""):
        status = PASS if ok else FAIL
        self.records.append(CheckRecord(check_id, law, status, witness, detail))
        return ok

    def add_na(self, check_id, law, detail=""):
        self.records.append(CheckRecord(check_id, law, NA, None, detail))

    def merge(self, other, prefix=""):
        for r in other.records:
            cid = f"{prefix}{r.check_id}" if prefix else r.check_id
            self.records.append(CheckRecord(cid, r.law, r.status, r.witness, r.detail))

    @property
    def passed(self):
        return all(r.status != FAIL for r in self.records)

    @property
    def failures(self):
        return [r for r in self.records if r.status == FAIL]

    def first_failure(self):
        f = self.failures
        return f[0] if f else None

    def sorted_records(self):
        return sorted(self.records, key=lambda r: r.check_id)

    def render_text(self):
        lines = [f"subject: {self.subject}"]
        for r in self.sorted_records():
            line = f"  [{r.status:>4}] {r.check_id}: {r.law}"
            if r.status == FAIL and r.witness is not None:
                line += f"  witness={list(r.witness)}"
            if r.detail:
                line += f"  ({r.detail})"
            lines.append(line)
        n_fail = len(self.failures)
        lines.append(f"  => {len(self.records)} checks, {n_fail} failed")
        return "\n".join(lines)

    def render_json(self):
        return json.dumps(
            {
                "subject": self.subject,
                "passed": self.passed,
                "checks": [r.as_dict() for r in self.sorted_records()],
            },
            indent=2,
            default=str,
        )

    def require(self, error_cls, message=None):
        """Raise error_cls carrying this report when any check failed."""
        if not self.passed:
            f = self.first_failure()
            msg = message or f"{self.subject}: {f.check_id} failed"
            if f.witness is not None:
                msg += f" at {list(f.witness)}"
            raise error_cls(msg, self)
        return self
