from .envelope import ReportEnvelope
from .render import FORMATS, render, render_csv, render_json, render_records, render_table, verdict_line
from .tables import tables_text

__all__ = ["ReportEnvelope", "FORMATS", "render", "render_csv", "render_json", "render_records", "render_table", "verdict_line", "tables_text"]
