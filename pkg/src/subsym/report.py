"""Structured verification reports with deterministic serialization.

A report carries one entry per check: name, status ('pass' | 'fail' |
'finding') and an exact witness string for anything that did not pass.
'finding' is reserved for a computation that contradicts a claimed
closed-form identity (as opposed to an internal error); it fails the run
(nonzero exit) but is flagged apart from ordinary failures.

Emitted JSON/CSV is byte-stable for identical requests: keys are sorted,
scalars use canonical exact strings, and wall-clock timing is kept on the
in-memory object only.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | finding
    witness: str | None = None


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seed: int | None = None
    elapsed_seconds: float | None = None

    def add(self, name, ok, witness=None, finding=False):
        status = "pass" if ok else ("finding" if finding else "fail")
        self.checks.append(CheckResult(name, status, None if ok else witness))

    def note(self, text):
        self.notes.append(text)

    @property
    def status(self) -> str:
        if any(c.status == "fail" for c in self.checks):
            return "fail"
        if any(c.status == "finding" for c in self.checks):
            return "finding"
        return "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_jsonable(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "parameters": {k: self.parameters[k] for k in sorted(self.parameters)},
            "seed": self.seed,
            "status": self.status,
            "checks": [
                {"name": c.name, "status": c.status, "witness": c.witness}
                for c in self.checks
            ],
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, indent=2) + "\n"

    def summary_lines(self):
        for c in self.checks:
            mark = {"pass": "PASS", "fail": "FAIL", "finding": "FINDING"}[c.status]
            suffix = "" if c.witness is None else f"  witness: {c.witness}"
            yield f"[{mark}] {self.suite}: {c.name}{suffix}"


def emit(report: VerificationReport, path, fmt="json"):
    """Write a report; byte-stable for fixed inputs (timing excluded)."""
    if fmt == "json":
        data = report.dumps()
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "check", "status", "witness"])
        for c in report.checks:
            w.writerow([report.suite, c.name, c.status, c.witness or ""])
        data = buf.getvalue()
    else:
        raise ValueError(f"unknown format {fmt!r}")
    try:
        with open(path, "w") as fh:
            fh.write(data)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc
    return path


def classalg_table_csv(k, path):
    """CSV of class-algebra structure constants: cell lists '(tau):p/q'."""
    from fractions import Fraction

    from .classalg import partitions, structure_constant_table

    table = structure_constant_table(k)
    parts = list(partitions(k))

    def fmt_cell(coeffs):
        items = []
        for tau in parts:
            if tau in coeffs:
                c = coeffs[tau]
                f = Fraction(int(c.numerator), int(c.denominator))
                items.append(f"{list(tau)}:{f.numerator}/{f.denominator}")
        return "; ".join(items)

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lhs\\rhs"] + [str(list(mu)) for mu in parts])
    for lam in parts:
        w.writerow([str(list(lam))] + [fmt_cell(table[(lam, mu)]) for mu in parts])
    with open(path, "w") as fh:
        fh.write(buf.getvalue())
    return path


def isotypic_table_json(k, N, path):
    from .classalg import partitions

    from .decompose import isotypic_table, lambda_plus_dual, weyl_dim

    table = isotypic_table(k, N)
    data = {
        "schema_version": SCHEMA_VERSION,
        "k": k,
        "dim": N,
        "ranks": {str(list(lam)): table[lam] for lam in partitions(k)},
        "total": sum(table.values()),
        "weyl_formula": {
            str(list(lam)): weyl_dim(lambda_plus_dual(lam, N), N)
            for lam in partitions(k)
        },
        "stable_range": N >= 2 * k,
    }
    with open(path, "w") as fh:
        fh.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
    return path
