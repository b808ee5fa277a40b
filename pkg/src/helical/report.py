"""Structured pass/fail reports.

Every verification entry carries enough witness data (dimensions, indices,
violation locations) to recompute its verdict.  Reports serialize to JSON
with sorted keys so identical inputs produce byte-identical output; wall
times are deliberately not part of the document.
"""

from __future__ import annotations

import hashlib
import json

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
SKIPPED = "skipped"


class VerificationReport:
    def __init__(self, command: str, parameters: dict | None = None):
        self.command = command
        self.parameters = parameters or {}
        self.input_info: dict = {}
        self.checks: list[dict] = []

    def add(self, name: str, status, witness: dict | None = None):
        if status is True:
            status = PASS
        elif status is False:
            status = FAIL
        if status not in (PASS, FAIL, INCONCLUSIVE, SKIPPED):
            raise ValueError(f"bad status {status!r}")
        self.checks.append({"name": name, "status": status, "witness": witness or {}})

    def extend(self, other: "VerificationReport", prefix: str = ""):
        for c in other.checks:
            self.checks.append({"name": prefix + c["name"], "status": c["status"],
                                "witness": c["witness"]})

    def count(self, status) -> int:
        return sum(1 for c in self.checks if c["status"] == status)

    @property
    def passed(self) -> bool:
        return self.count(FAIL) == 0 and self.count(INCONCLUSIVE) == 0

    @property
    def status(self) -> str:
        if self.count(FAIL):
            return FAIL
        if self.count(INCONCLUSIVE):
            return INCONCLUSIVE
        return PASS

    def first_failure(self):
        for c in self.checks:
            if c["status"] == FAIL:
                return c
        return None

    def exit_code(self) -> int:
        if self.count(FAIL):
            return 1
        if self.count(INCONCLUSIVE):
            return 2
        return 0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "input": self.input_info,
            "parameters": self.parameters,
            "checks": self.checks,
            "summary": {
                "pass": self.count(PASS),
                "fail": self.count(FAIL),
                "inconclusive": self.count(INCONCLUSIVE),
                "skipped": self.count(SKIPPED),
            },
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def dims_witness(dims: dict) -> dict:
    """Degree -> count table with string keys, for stable JSON."""
    return {str(k): v for k, v in sorted(dims.items())}


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()
