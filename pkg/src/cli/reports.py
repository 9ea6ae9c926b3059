"""
Report objects produced by every CLI command.

A report is a list of named DataFrame sections plus an overall verdict. It
renders as plain text, as JSON, or as an Excel workbook with one sheet per
section. Reports carry no timing, so identical inputs give identical bytes.
"""

import json
import logging
import re
from dataclasses import dataclass, field

import pandas as pd

logger = logging.getLogger(__name__)

SEPARATOR = "-" * 80


@dataclass
class Report:
    command: str
    inputs: tuple
    depth: int
    sections: list = field(default_factory=list)
    passed: bool = True
    notes: list = field(default_factory=list)

    def add(self, title, frame, required=True):
        """
        Appends a section; a required section with a failing row fails the report.

        Args:
            title: Section heading (and Excel sheet name)
            frame: DataFrame, optionally with a boolean "passed" column
            required: Whether the section's passes count towards the verdict
        """
        self.sections.append((title, frame))
        if required and "passed" in frame.columns and not frame["passed"].astype(bool).all():
            self.passed = False
            logger.info("%s: section %r has failures", self.command, title)
        return frame

    def note(self, text):
        self.notes.append(text)

    def fail(self):
        self.passed = False

    def section(self, title):
        for name, frame in self.sections:
            if name == title:
                return frame
        raise KeyError(title)

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def summary(self):
        """Rows and failures per section."""
        rows = []
        for title, frame in self.sections:
            failures = int((~frame["passed"].astype(bool)).sum()) if "passed" in frame.columns else 0
            rows.append({"section": title, "rows": len(frame), "failures": failures})
        return pd.DataFrame(rows, columns=["section", "rows", "failures"])


def render_text(report):
    """Structured text: header, one block per section, verdict."""
    lines = [
        f"command: {report.command}",
        f"inputs: {', '.join(report.inputs)}",
        f"depth: {report.depth} (all claims are checked up to this depth)",
    ]
    lines.extend(f"note: {text}" for text in report.notes)
    for title, frame in report.sections:
        lines.append(SEPARATOR)
        lines.append(title)
        lines.append(SEPARATOR)
        lines.append("(empty)" if frame.empty else frame.to_string(index=False))
    lines.append(SEPARATOR)
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def to_json(report):
    """Machine format; sections become lists of records."""
    payload = {
        "command": report.command,
        "inputs": list(report.inputs),
        "depth": report.depth,
        "notes": list(report.notes),
        "passed": report.passed,
        "sections": [
            {"title": title, "rows": json.loads(frame.to_json(orient="records"))}
            for title, frame in report.sections
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _sheet_name(title, used):
    name = re.sub(r"[\[\]:*?/\\]", "_", title)[:31] or "section"
    base, k = name, 1
    while name in used:
        suffix = f"_{k}"
        name = base[: 31 - len(suffix)] + suffix
        k += 1
    used.add(name)
    return name


def to_excel(report, path):
    """
    Writes a summary sheet and one sheet per section.

    Args:
        report: Report
        path: Output .xlsx path
    """
    used = {"summary"}
    with pd.ExcelWriter(path, engine="openpyxl") as writer:
        report.summary().to_excel(writer, sheet_name="summary", index=False)
        for title, frame in report.sections:
            frame.to_excel(writer, sheet_name=_sheet_name(title, used), index=False)
    logger.info("wrote %d sections to %s", len(report.sections), path)
    return path
