from collections import defaultdict
from typing import Dict, List

from trislope.catalog import RowReport, TestCurveRow
from trislope.helpers import format_rational
from trislope.report.render import render_table


def tables_text(rows: List[TestCurveRow], reports: List[RowReport], title: str) -> str:
  """One line per test curve, laid out like the printed tables, plus the first few mismatches."""
  by_row: Dict[str, List[RowReport]] = defaultdict(list)
  for report in reports:
    by_row[report.row].append(report)

  lines = []
  for row in rows:
    row_reports = by_row.get(row.id, [])
    passed = all(r.passed for r in row_reports)
    lines.append([row.id, row.surface.name, row.bundle_description, str(row.b_range), row.boundary_description, str(row.residual), len(row_reports), passed])

  mismatches = [r for r in reports if not r.passed][:10]
  footer = None
  if mismatches:
    footer = "\n".join(
      f"{r.row} n={r.n} b={r.b} l={format_rational(r.l)} m={format_rational(r.m)}: residual {format_rational(r.residual)} != expected {format_rational(r.expected)}"
      for r in mismatches)
  return render_table(title, ["Row", "S", "E", "b", "Intersection with higher boundary", "Residual", "Cases", "Status"], lines, footer=footer)
