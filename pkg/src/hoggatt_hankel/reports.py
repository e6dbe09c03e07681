"""Structured pass/fail records for identity checks, plus JSON/CSV emission.

Every verification operation returns a ``VerificationReport`` rather than
raising on mathematical failure: a falsified identity is a result to record,
not an error.  Reports serialize deterministically; exact integers and
rationals are rendered as decimal/fraction strings so no consumer ever
faces 64-bit overflow ambiguity.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
MISMATCH = "mismatch"

STATUSES = (PASS, FAIL, SKIPPED, MISMATCH)

REPORT_SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check at one parameter point.

    lhs/rhs carry exact witness values as strings; notes carry auxiliary
    findings (normalized forms, recovered coefficients, skip reasons).
    Reports are deterministic for a given parameter point and code version.
    """

    check: str
    params: Mapping[str, int]
    status: str
    lhs: str = ""
    rhs: str = ""
    notes: str = ""

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        """True unless the check failed or mismatched (skips are ok)."""
        return self.status in (PASS, SKIPPED)

    def to_dict(self) -> dict:
        return {
            "id": self.check,
            "params": dict(self.params),
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "notes": self.notes,
        }


def reports_to_json(
    reports: Iterable[VerificationReport],
    config: Mapping | None = None,
    version: str = REPORT_SCHEMA_VERSION,
) -> str:
    """Deterministic JSON document {version, config, results}."""
    doc = {
        "version": version,
        "config": dict(config) if config is not None else {},
        "results": [r.to_dict() for r in reports],
    }
    return json.dumps(doc, indent=2) + "\n"


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    """Flat CSV rendering: one row per report."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "params", "status", "lhs", "rhs", "notes"])
    for r in reports:
        params = ";".join(f"{k}={v}" for k, v in r.params.items())
        writer.writerow([r.check, params, r.status, r.lhs, r.rhs, r.notes])
    return buf.getvalue()


def summarize(reports: Iterable[VerificationReport]) -> dict[str, int]:
    """Count reports by status."""
    counts = {status: 0 for status in STATUSES}
    for r in reports:
        counts[r.status] += 1
    return counts
