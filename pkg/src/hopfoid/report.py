"""Named verification checks and machine-readable reports.

A report is an ordered list of named checks, each pass/fail/skipped with
an optional counterexample witness, plus a ledger of printed-formula
discrepancies.  Serialization is canonical: with timing suppressed, two
runs over the same inputs produce byte-identical JSON.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor


class CheckResult:
    __slots__ = ("check_id", "description", "identity", "status", "witness",
                 "timing_ms")

    def __init__(self, check_id, description, identity, status, witness=None,
                 timing_ms=0.0):
        self.check_id = check_id
        self.description = description
        self.identity = identity
        self.status = status  # "pass" | "fail" | "skipped"
        self.witness = witness
        self.timing_ms = timing_ms

    def to_json(self, include_timing=True):
        out = {
            "check_id": self.check_id,
            "description": self.description,
            "paper_ref": self.identity,
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if include_timing:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out


class VerificationReport:
    """Ordered collection of named checks with deterministic output."""

    def __init__(self, title, meta=None):
        self.title = title
        self.meta = dict(meta or {})
        self.checks = []
        self.discrepancies = []
        self._pending = []

    # -- recording ---------------------------------------------------------

    def run(self, check_id, description, identity, fn):
        """Run fn() -> (ok, witness) now and record the outcome."""
        t0 = time.perf_counter()
        ok, witness = fn()
        dt = (time.perf_counter() - t0) * 1000.0
        self.checks.append(CheckResult(
            check_id, description, identity,
            "pass" if ok else "fail", witness, dt))
        return ok

    def add(self, check_id, description, identity, fn):
        """Queue fn for execute(); order of add() calls is preserved."""
        self._pending.append((check_id, description, identity, fn))

    def execute(self, jobs=1):
        """Run queued checks, optionally on a worker pool.

        Results are recorded in queue order no matter which worker
        finishes first, so reports are reproducible for any job count.
        """
        pending, self._pending = self._pending, []
        if jobs <= 1:
            for item in pending:
                self.run(*item)
            return self
        def work(item):
            _, _, _, fn = item
            t0 = time.perf_counter()
            ok, witness = fn()
            return ok, witness, (time.perf_counter() - t0) * 1000.0
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, pending))
        for (check_id, desc, identity, _), (ok, witness, dt) in zip(
                pending, results):
            self.checks.append(CheckResult(
                check_id, desc, identity,
                "pass" if ok else "fail", witness, dt))
        return self

    def skip(self, check_id, description, identity, reason):
        self.checks.append(CheckResult(
            check_id, description, identity, "skipped", {"reason": reason}))

    def discrepancy(self, formula_id, printed, computed, status,
                    known_issue=False, note=None):
        entry = {
            "formula_id": formula_id,
            "printed": printed,
            "computed": computed,
            "status": status,  # "pass" | "mismatch"
            "known_issue": known_issue,
        }
        if note:
            entry["note"] = note
        self.discrepancies.append(entry)

    def extend(self, other):
        self.checks.extend(other.checks)
        self.discrepancies.extend(other.discrepancies)
        return self

    # -- outcomes ----------------------------------------------------------

    @property
    def passed(self):
        return all(c.status != "fail" for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == "fail"]

    def counts(self):
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def undocumented_mismatches(self):
        return [d for d in self.discrepancies
                if d["status"] == "mismatch" and not d["known_issue"]]

    # -- rendering ---------------------------------------------------------

    def to_json(self, include_timing=True):
        return {
            "title": self.title,
            "meta": self.meta,
            "checks": [c.to_json(include_timing) for c in self.checks],
            "paper_discrepancies": self.discrepancies,
            "summary": self.counts(),
            "passed": self.passed,
        }

    def to_json_str(self, include_timing=True):
        return json.dumps(self.to_json(include_timing), indent=2,
                          sort_keys=True) + "\n"

    def to_text(self, include_timing=True):
        lines = ["== %s ==" % self.title]
        for c in self.checks:
            mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[c.status]
            line = "[%s] %-38s %s" % (mark, c.check_id, c.description)
            if include_timing and c.status != "skipped":
                line += "  (%.1f ms)" % c.timing_ms
            lines.append(line)
            if c.status == "fail" and c.witness is not None:
                lines.append("       witness: %s" % json.dumps(
                    c.witness, sort_keys=True))
        if self.discrepancies:
            lines.append("-- printed-formula ledger --")
            for dd in self.discrepancies:
                tag = dd["status"]
                if dd["status"] == "mismatch" and dd["known_issue"]:
                    tag = "mismatch (documented)"
                lines.append("[%s] %s" % (tag, dd["formula_id"]))
                if dd["status"] == "mismatch":
                    lines.append("       printed:  %s" % dd["printed"])
                    lines.append("       computed: %s" % dd["computed"])
        cc = self.counts()
        lines.append("summary: %d pass, %d fail, %d skipped" %
                     (cc["pass"], cc["fail"], cc["skipped"]))
        return "\n".join(lines) + "\n"
