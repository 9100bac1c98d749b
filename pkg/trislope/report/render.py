import csv
import io
from typing import Any, List, Optional, Sequence

from rich.console import Console
from rich.table import Table
from rich.text import Text

from trislope.report.envelope import ReportEnvelope

FORMATS = ("text", "csv", "json")


def _cell(value: Any) -> str:
  if isinstance(value, bool): return "true" if value else "false"
  if value is None: return ""
  return str(value)


def render_json(envelope: ReportEnvelope) -> str:
  return envelope.to_json() + "\n"


def render_csv(envelope: ReportEnvelope, fields: Optional[Sequence[str]] = None) -> str:
  if fields is None:
    fields = list(envelope.results[0]) if envelope.results else []
  out = io.StringIO()
  writer = csv.DictWriter(out, fieldnames=list(fields), lineterminator="\n", extrasaction="ignore")
  writer.writeheader()
  for record in envelope.results:
    writer.writerow({k: _cell(record.get(k)) for k in fields})
  return out.getvalue()


def render_table(title: str, columns: Sequence[str], rows: List[Sequence[Any]], footer: Optional[str] = None, width: int = 160) -> str:
  table = Table(title=title, show_lines=False)
  for column in columns:
    table.add_column(column, overflow="fold")
  for row in rows:
    cells = []
    for value in row:
      if isinstance(value, bool):
        cells.append(Text("PASS", style="green") if value else Text("FAIL", style="bold red"))
      else:
        cells.append(_cell(value))
    table.add_row(*cells)
  console = Console(file=io.StringIO(), width=width, force_terminal=False, color_system=None)
  console.print(table)
  if footer: console.print(footer)
  return console.file.getvalue()


def render_records(envelope: ReportEnvelope, title: Optional[str] = None, fields: Optional[Sequence[str]] = None) -> str:
  if fields is None:
    fields = list(envelope.results[0]) if envelope.results else []
  rows = [[record.get(k) for k in fields] for record in envelope.results]
  return render_table(title or envelope.command, fields, rows, footer=verdict_line(envelope))


def verdict_line(envelope: ReportEnvelope) -> str:
  failed = len(envelope.failures)
  if failed == 0: return f"{envelope.command}: all {len(envelope.results)} checks pass (engine {envelope.engine_version})"
  return f"{envelope.command}: {failed} of {len(envelope.results)} checks FAILED (engine {envelope.engine_version})"


def render(envelope: ReportEnvelope, fmt: str, text: Optional[str] = None, fields: Optional[Sequence[str]] = None) -> str:
  """`text` overrides the generic table for the text format."""
  if fmt == "json": return render_json(envelope)
  if fmt == "csv": return render_csv(envelope, fields)
  if fmt == "text": return text if text is not None else render_records(envelope, fields=fields)
  raise ValueError(f"Unknown format {fmt!r}; expected one of {FORMATS}")
