"""Report containers and serialisation for verification runs.

A :class:`VerificationReport` collects everything one registry run
produced: the instances whose radii were computed (with eigensolver
residuals), the inequalities that were asserted (with margins), the
overall verdict, and free-form notes about any scan restrictions.

``emit_report`` renders a report to JSON, CSV (one row per instance) or
Markdown (which prints the inequality chain in assertion order), always
with a fixed field order so byte-level diffs of two runs are meaningful.
``render_figures`` writes small matplotlib summaries next to the
delimited output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

__all__ = [
    "InstanceRecord",
    "InequalityRecord",
    "VerificationReport",
    "STATUS_PASS",
    "STATUS_FAIL",
    "STATUS_UNMET",
    "emit_report",
    "render_figures",
]

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_UNMET = "hypotheses-unmet"

#: Residual ceiling every reported radius must satisfy.
RESIDUAL_LIMIT = 1e-12


@dataclass(frozen=True)
class InstanceRecord:
    """One hypergraph whose spectral radius entered the report."""

    label: str
    m: int
    k: int
    n: int
    radius: float
    residual: float
    iterations: int

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "m": self.m,
            "k": self.k,
            "n": self.n,
            "radius": self.radius,
            "residual": self.residual,
            "iterations": self.iterations,
        }


@dataclass(frozen=True)
class InequalityRecord:
    """One asserted comparison ``lhs <relation> rhs``.

    ``margin`` is ``rhs_value - lhs_value`` for the ordered relations and
    ``-|lhs_value - rhs_value|`` for equality, so a larger margin is
    always safer and a negative margin on a strict relation is a
    violation.
    """

    lhs: str
    rhs: str
    lhs_value: float
    rhs_value: float
    relation: str  # "<", "<=", or "=="
    margin: float
    holds: bool

    def as_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "lhs_value": self.lhs_value,
            "rhs_value": self.rhs_value,
            "relation": self.relation,
            "margin": self.margin,
            "holds": self.holds,
        }


@dataclass
class VerificationReport:
    """Everything a single registry run produced."""

    theorem_id: str
    params: dict
    tol: float
    status: str
    passed: bool
    instances: list[InstanceRecord] = field(default_factory=list)
    inequalities: list[InequalityRecord] = field(default_factory=list)
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)
    wall_time_s: float = 0.0

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "params": dict(self.params),
            "tol": self.tol,
            "status": self.status,
            "passed": self.passed,
            "instances": [r.as_dict() for r in self.instances],
            "inequalities": [r.as_dict() for r in self.inequalities],
            "counterexample": self.counterexample,
            "notes": list(self.notes),
            "wall_time_s": self.wall_time_s,
        }


def emit_report(report: VerificationReport, format: str = "json") -> str:
    """Serialise ``report``; ``format`` is ``json``, ``csv`` or ``md``."""
    if format == "json":
        return json.dumps(report.as_dict(), indent=2) + "\n"
    if format == "csv":
        return _emit_csv(report)
    if format == "md":
        return _emit_md(report)
    raise ValueError(f"unknown report format {format!r}; expected json, csv, or md")


_CSV_FIELDS = [
    "theorem_id",
    "status",
    "label",
    "m",
    "k",
    "n",
    "radius",
    "residual",
    "iterations",
]


def _emit_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rec in report.instances:
        row = {"theorem_id": report.theorem_id, "status": report.status}
        row.update(rec.as_dict())
        writer.writerow(row)
    return buf.getvalue()


def _emit_md(report: VerificationReport) -> str:
    lines: list[str] = []
    lines.append(f"# Verification: {report.theorem_id}")
    lines.append("")
    params = ", ".join(f"{key}={value}" for key, value in report.params.items())
    lines.append(f"- parameters: {params or '(none)'}")
    lines.append(f"- strictness tolerance: {report.tol:g}")
    lines.append(f"- status: **{report.status}**")
    lines.append(f"- wall time: {report.wall_time_s:.3f} s")
    lines.append("")
    if report.instances:
        lines.append("## Instances")
        lines.append("")
        lines.append("| label | m | k | n | radius | residual |")
        lines.append("| --- | --- | --- | --- | --- | --- |")
        for rec in report.instances:
            lines.append(
                f"| {rec.label} | {rec.m} | {rec.k} | {rec.n} "
                f"| {rec.radius:.12f} | {rec.residual:.2e} |"
            )
        lines.append("")
    if report.inequalities:
        lines.append("## Inequality chain")
        lines.append("")
        for rec in report.inequalities:
            mark = "ok" if rec.holds else "VIOLATED"
            lines.append(
                f"- {rec.lhs} ({rec.lhs_value:.12f}) {rec.relation} "
                f"{rec.rhs} ({rec.rhs_value:.12f})  "
                f"[margin {rec.margin:.3e}, {mark}]"
            )
        lines.append("")
    if report.counterexample is not None:
        lines.append("## Counter-instance")
        lines.append("")
        lines.append("```json")
        lines.append(json.dumps(report.counterexample, indent=2))
        lines.append("```")
        lines.append("")
    if report.notes:
        lines.append("## Notes")
        lines.append("")
        for note in report.notes:
            lines.append(f"- {note}")
        lines.append("")
    return "\n".join(lines)


def render_figures(report: VerificationReport, out_dir: str | Path) -> list[Path]:
    """Write PNG summaries of the report; returns the paths written.

    Two figures are produced when there is data to show: a bar chart of
    the instance radii and a bar chart of the inequality margins (log
    scale, violations highlighted).  Rendering uses the Agg backend so it
    works headless.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    # Large scans report only their leaders; cap the bars to stay legible.
    instances = report.instances[:40]
    if instances:
        fig, ax = plt.subplots(figsize=(max(6.0, 0.45 * len(instances)), 4.0))
        labels = [rec.label for rec in instances]
        ax.bar(range(len(instances)), [rec.radius for rec in instances], color="#4878a8")
        ax.set_xticks(range(len(instances)))
        ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=7)
        ax.set_ylabel("spectral radius")
        ax.set_title(f"{report.theorem_id}: instance radii")
        fig.tight_layout()
        path = out / f"{report.theorem_id}_radii.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    inequalities = report.inequalities[:60]
    if inequalities:
        fig, ax = plt.subplots(figsize=(max(6.0, 0.3 * len(inequalities)), 4.0))
        margins = [rec.margin for rec in inequalities]
        colors = ["#2e7d32" if rec.holds else "#c62828" for rec in inequalities]
        ax.bar(range(len(inequalities)), margins, color=colors)
        ax.set_yscale("symlog", linthresh=1e-12)
        ax.axhline(report.tol, color="#888888", linewidth=0.8, linestyle="--")
        ax.set_xlabel("assertion index (chain order)")
        ax.set_ylabel("margin")
        ax.set_title(f"{report.theorem_id}: assertion margins")
        fig.tight_layout()
        path = out / f"{report.theorem_id}_margins.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    return written
