"""Verification reports shared by scan and suite runners.

A report records what was checked, every failure with a reproducible
witness, and every skipped case with a reason code.  Rendering omits
wall-clock time so identical runs produce byte-identical output.
"""

from __future__ import annotations


class VerificationReport:
    """Outcome of one verification suite or scan run."""

    __slots__ = ("suite", "formation", "scope", "cases_run", "failures",
                 "skips", "notes", "elapsed")

    def __init__(self, suite, formation, scope, cases_run, failures,
                 skips=(), notes=(), elapsed=0.0):
        self.suite = suite
        self.formation = formation      # formation key or None
        self.scope = scope
        self.cases_run = int(cases_run)
        # failures: (group, case, expected, observed); skips: (group, case, reason)
        self.failures = tuple(failures)
        self.skips = tuple(skips)
        self.notes = tuple(notes)
        self.elapsed = elapsed

    @property
    def passed(self):
        return not self.failures

    def text_lines(self):
        """Deterministic human-readable rendering (no timing)."""
        head = "suite=%s" % self.suite
        if self.formation is not None:
            head += " formation=%s" % self.formation
        lines = [head,
                 "scope: %s" % self.scope,
                 "cases run: %d" % self.cases_run,
                 "status: %s" % ("pass" if self.passed else "FAIL")]
        for note in self.notes:
            lines.append("note: %s" % note)
        for group, case, reason in self.skips:
            lines.append("skip: group=%s case=%s reason=%s" % (group, case, reason))
        for group, case, expected, observed in self.failures:
            lines.append("failure: group=%s case=%s expected=%s observed=%s"
                         % (group, case, expected, observed))
        return lines

    def records(self):
        """One machine-readable record per reported case outcome."""
        out = []
        base = {"suite": self.suite}
        if self.formation is not None:
            base["formation"] = self.formation
        for note in self.notes:
            rec = dict(base)
            rec.update(group="*", case="note", status="note", witness=note)
            out.append(rec)
        for group, case, expected, observed in self.failures:
            rec = dict(base)
            rec.update(group=group, case=case, status="fail",
                       witness="expected=%s observed=%s" % (expected, observed))
            out.append(rec)
        for group, case, reason in self.skips:
            rec = dict(base)
            rec.update(group=group, case=case, status="skip", witness=reason)
            out.append(rec)
        rec = dict(base)
        rec.update(group="*", case="summary",
                   status="pass" if self.passed else "fail",
                   witness="cases=%d failures=%d skips=%d"
                   % (self.cases_run, len(self.failures), len(self.skips)))
        out.append(rec)
        return out
