import logging
import math
from dataclasses import dataclass

import pandas as pd

from .case_runner import CaseReport, run_case
from .config import CaseConfig
from .reference_tables import (COLUMN_AGREEMENT, ORDER_FACTOR, TIGHT_TOLERANCE, Gate, ReferenceCell, ReferenceTable,
                               reference_table)

__all__ = ["CellResult", "ColumnCheck", "TableReport", "judge", "reproduce_table"]

PASS = "PASS"
FAIL = "FAIL"
REFERENCE = "REF"
SKIPPED = "-"

def judge(cell : ReferenceCell, report : CaseReport) -> str:
    if not cell.gate.runs:
        return REFERENCE if cell.gate is Gate.REFERENCE_ONLY else SKIPPED
    if cell.gate is Gate.DIVERGED:
        return PASS if not report.completed else FAIL
    if not report.completed:
        return FAIL
    target = cell.target
    if cell.gate is Gate.TIGHT:
        return PASS if abs(report.linf - target) <= TIGHT_TOLERANCE * target else FAIL
    if cell.gate is Gate.UPPER_BOUND:
        return PASS if report.linf <= target * (1.0 + TIGHT_TOLERANCE) else FAIL
    return PASS if target / ORDER_FACTOR <= report.linf <= target * ORDER_FACTOR else FAIL

def _format_value(value) -> str:
    if value is None:
        return ""
    if value == math.inf:
        return "inf"
    return f"{value:.4e}"

def _expected_text(cell : ReferenceCell) -> str:
    prefix = "<= " if cell.gate is Gate.UPPER_BOUND else ""
    return prefix + _format_value(cell.target)

@dataclass
class CellResult:
    cell : ReferenceCell
    report : CaseReport
    verdict : str

    @property
    def computed(self) -> str:
        if self.report is None:
            return ""
        if not self.report.completed:
            return f"diverged@{self.report.diverged_at_step}"
        return _format_value(self.report.linf)

    @property
    def deviation(self):
        target = self.cell.target
        if self.report is None or not self.report.completed or target in (None, math.inf):
            return None
        return (self.report.linf - target) / target

@dataclass
class ColumnCheck:
    dx : float
    dt : float
    methods : tuple
    spread : float

    @property
    def passed(self) -> bool:
        return self.spread is not None and self.spread <= COLUMN_AGREEMENT

    def __str__(self):
        names = ", ".join(str(method) for method in self.methods)
        spread = "n/a" if self.spread is None else f"{self.spread:.2%}"
        return f"Column check (dx={self.dx:g}, dt={self.dt:g}) across {names}: spread {spread} {PASS if self.passed else FAIL}"

@dataclass
class TableReport:
    table : ReferenceTable
    results : list
    column_check : ColumnCheck = None

    def count(self, verdict : str) -> int:
        return len([result for result in self.results if result.verdict == verdict])

    @property
    def all_passed(self) -> bool:
        column_passed = self.column_check is None or self.column_check.passed
        return self.count(FAIL) == 0 and column_passed

    def to_frame(self, include_wall_time : bool = True) -> pd.DataFrame:
        rows = []
        for result in self.results:
            cell = result.cell
            row = { "table": cell.table_id,
                    "row": cell.row,
                    "method": "" if cell.method is None else str(cell.method),
                    "dx": cell.dx,
                    "dt": cell.dt,
                    "gate": str(cell.gate),
                    "reference": cell.value,
                    "expected": cell.target,
                    "computed": result.report.linf if result.report is not None else None,
                    "status": str(result.report.status) if result.report is not None else "",
                    "diverged_at_step": result.report.diverged_at_step if result.report is not None else None,
                    "deviation": result.deviation,
                    "verdict": result.verdict,
                    "source": cell.source }
            if include_wall_time:
                row["wall_time"] = result.report.wall_time if result.report is not None else None
            rows.append(row)
        return pd.DataFrame(rows)

    def render(self) -> str:
        """Aligned plain-text report. Wall times are left out so reruns compare byte for byte."""
        rows = []
        notes = []
        for result in self.results:
            cell = result.cell
            if cell.value is None:
                continue
            deviation = result.deviation
            gate = str(cell.gate)
            if cell.amended:
                notes.append(f"[{len(notes) + 1}] {cell.row} dx={cell.dx:g} dt={cell.dt:g}: {cell.source}")
                gate = f"{gate} [{len(notes)}]"
            rows.append({ "Method": cell.row,
                          "dx": f"{cell.dx:g}",
                          "dt": f"{cell.dt:g}",
                          "Computed": result.computed,
                          "Reference": _format_value(cell.value),
                          "Expected": _expected_text(cell) if cell.amended else "",
                          "Deviation": "" if deviation is None else f"{deviation:+.2%}",
                          "Gate": gate,
                          "Verdict": result.verdict })
        lines = [f"Table {self.table.table_id}: {self.table.title}",
                 "",
                 pd.DataFrame(rows).to_string(index=False),
                 ""]
        if notes:
            lines += notes + [""]
        if self.column_check is not None:
            lines.append(str(self.column_check))
        lines.append(f"Summary: {self.count(PASS)} PASS, {self.count(FAIL)} FAIL, "
                     f"{self.count(REFERENCE)} reference only, {self.count(SKIPPED)} not reported")
        return "\n".join(lines) + "\n"

    def write_csv(self, path):
        self.to_frame().to_csv(path, index=False, float_format="%.17g", lineterminator="\n")

def _column_check(table : ReferenceTable, results) -> ColumnCheck:
    if table.agreement_column is None:
        return None
    dx, dt = table.agreement_column
    values = []
    for result in results:
        cell = result.cell
        if cell.method in table.agreement_methods and (cell.dx, cell.dt) == (dx, dt):
            if result.report is None or not result.report.completed:
                return ColumnCheck(dx, dt, table.agreement_methods, None)
            values.append(result.report.linf)
    spread = max(values) / min(values) - 1.0 if values and min(values) > 0 else None
    return ColumnCheck(dx, dt, table.agreement_methods, spread)

def reproduce_table(table_id : int, runner = None) -> TableReport:
    """Runs every in-scope cell of a reference table and judges it against its gate.

    Cases run in parallel through runner (a BenchmarkRunner) when given, sequentially otherwise. Results are kept in
    table order either way.
    """
    logger = logging.getLogger("sinc_dqm")
    table = reference_table(table_id)
    cells = table.runnable_cells()
    configs = [CaseConfig(problem=table.problem, method=cell.method, dx=cell.dx, dt=cell.dt) for cell in cells]

    if runner is None:
        reports = [run_case(config) for config in configs]
    else:
        reports = runner.run_cases(configs, description=f"table {table.table_id}")

    report_for = { (cell.row, cell.dx, cell.dt): report for cell, report in zip(cells, reports) }
    results = []
    for cell in table.cells():
        report = report_for.get((cell.row, cell.dx, cell.dt))
        results.append(CellResult(cell, report, judge(cell, report)))

    table_report = TableReport(table, results, _column_check(table, results))
    logger.info(f"Table {table.table_id}: {table_report.count(PASS)} PASS, {table_report.count(FAIL)} FAIL.")
    return table_report
