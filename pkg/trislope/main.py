import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import mpmath
from pydantic import ValidationError

from trislope import helpers
from trislope.catalog import Parity, assemble_class, catalog, evaluate_row, find_row, perturb_row
from trislope.config import (
  ChiConfig,
  ClassConfig,
  SweepConfig,
  TablesConfig,
  VerifyConfig,
  parse_lm_sample,
  parse_perturbation,
)
from trislope.catalog.residual import DEFAULT_LM_SAMPLES
from trislope.helpers import VERSION, debug_print, format_rational, print_trislope, set_debug_level, to_rational
from trislope.orbifold import ChiQuery, chi, chi_numeric_oracle, oracle_deviation
from trislope.report import ReportEnvelope, render, render_table, tables_text, verdict_line
from trislope.sweep import sharp_slope, sweep_genus
from trislope.verification import run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

RECORD_FIELDS = ["row", "n", "b", "l", "m", "lambda", "kappa", "delta", "mu_or_tau", "residual", "expected", "pass"]


def _lm_sample(text: str):
  try:
    return parse_lm_sample(text)
  except ValueError as e:
    raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument("--format", choices=["text", "csv", "json"], default="text", help="Output format (default: text)")
  common.add_argument("--workers", type=int, default=1, help="Threads used to fan out row evaluations")
  common.add_argument("--debug", type=int, default=None, help="Diagnostic level on stderr (overrides the DEBUG env var)")

  parser = argparse.ArgumentParser(prog="trislope", description="Exact slope invariants of trigonal test curves")
  subparsers = parser.add_subparsers(dest="command", required=True)

  tables = subparsers.add_parser("tables", parents=[common], help="Evaluate the test-curve tables against their residual closed forms")
  tables.add_argument("--parity", choices=["even", "odd", "all"], default="all", help="Which table to evaluate")
  tables.add_argument("--n-max", type=int, default=30, help="Largest n to evaluate (n >= 3)")
  tables.add_argument("--lm", type=_lm_sample, action="append", default=None, metavar="L,M", help="An (l, m) sample; repeatable")
  tables.set_defaults(handler=cmd_tables)

  verify = subparsers.add_parser("verify", parents=[common], help="Run the full verification suite")
  verify.add_argument("--json", dest="format", action="store_const", const="json", help="Shorthand for --format json")
  verify.add_argument("--n-max", type=int, default=30, help="Largest n for table fidelity")
  verify.add_argument("--perturb", action="append", default=[], metavar="ROW:FIELD=VALUE", help="Replace a table constant (negative control)")
  verify.set_defaults(handler=cmd_verify)

  chi_parser = subparsers.add_parser("chi", parents=[common], help="Orbifold correction at a mu_n point with characters a, b")
  chi_parser.add_argument("n", type=int)
  chi_parser.add_argument("a", type=int)
  chi_parser.add_argument("b", type=int)
  chi_parser.add_argument("--precision", type=int, default=30, help="Digits for the numeric cross-check (>= 15)")
  chi_parser.set_defaults(handler=cmd_chi)

  class_parser = subparsers.add_parser("class", parents=[common], help="Coefficients of the extremal effective divisor class at genus g")
  class_parser.add_argument("--parity", choices=["even", "odd"], required=True)
  class_parser.add_argument("--g", type=int, required=True)
  class_parser.set_defaults(handler=cmd_class)

  sweep = subparsers.add_parser("sweep", parents=[common], help="Invariants and slopes of the sweeping families")
  sweep.add_argument("--g-min", type=int, default=4)
  sweep.add_argument("--g-max", type=int, default=20)
  sweep.set_defaults(handler=cmd_sweep)

  version = subparsers.add_parser("version", help="Print the engine version")
  version.set_defaults(handler=cmd_version)
  return parser


def _emit(envelope: ReportEnvelope, fmt: str, text: Optional[str] = None, fields: Optional[List[str]] = None) -> int:
  sys.stdout.write(render(envelope, fmt, text, fields))
  return EXIT_PASS if envelope.all_pass else EXIT_FAIL


def cmd_tables(args) -> int:
  config = TablesConfig(parity=args.parity, n_max=args.n_max, lm_samples=args.lm or [(to_rational(l), to_rational(m)) for l, m in DEFAULT_LM_SAMPLES], format=args.format, workers=args.workers)
  rows = catalog(config.parity_filter)
  with ThreadPoolExecutor(max_workers=config.workers) as pool:
    per_row = list(pool.map(lambda row: evaluate_row(row, config.n_max, config.lm_samples), rows))
  reports = sorted((r for batch in per_row for r in batch), key=lambda r: r.sort_key())
  envelope = ReportEnvelope.build("tables", config.parameters(), [r.to_dict() for r in reports])
  text = None
  if config.format == "text":
    text = tables_text(rows, reports, f"Test curves ({config.parity}), 3 <= n <= {config.n_max}") + verdict_line(envelope) + "\n"
  return _emit(envelope, config.format, text, RECORD_FIELDS)


def cmd_verify(args) -> int:
  config = VerifyConfig(n_max=args.n_max, perturb=[parse_perturbation(p) for p in args.perturb], format=args.format, workers=args.workers)
  rows = catalog()
  for row_id, field_name, value in config.perturb:
    target = find_row(row_id, rows)
    rows = [perturb_row(r, field_name, value) if r.id == target.id else r for r in rows]
    debug_print(1, f"perturbed {row_id}.{field_name} = {value}")
  records = run_suite(rows, n_max=config.n_max, workers=config.workers, progress=config.format == "text")
  envelope = ReportEnvelope.build("verify", config.parameters(), records)
  return _emit(envelope, config.format)


def cmd_chi(args) -> int:
  config = ChiConfig(n=args.n, a=args.a, b=args.b, precision=args.precision, format=args.format, workers=args.workers)
  query = ChiQuery(config.n, config.a, config.b)
  value = chi(query)
  deviation = oracle_deviation(query, config.precision)
  record = {
    "n": query.n,
    "a": query.a,
    "b": query.b,
    "chi": format_rational(value),
    "closed_form": format_rational(chi(query, method="closed_form")),
    "oracle": mpmath.nstr(chi_numeric_oracle(query, config.precision), 20),
    "deviation": mpmath.nstr(deviation, 3),
    "pass": bool(deviation < mpmath.mpf("1e-9")) and chi(query, method="closed_form") == value,
  }
  envelope = ReportEnvelope.build("chi", config.parameters(), [record])
  text = None
  if config.format == "text":
    text = f"chi(n={query.n}, a={query.a}, b={query.b}) = {record['chi']}\n|chi - oracle| = {record['deviation']} at {config.precision} digits\n"
  return _emit(envelope, config.format, text)


def cmd_class(args) -> int:
  config = ClassConfig(parity=args.parity, g=args.g, format=args.format, workers=args.workers)
  assembly = assemble_class(Parity(config.parity), config.g)
  sharp = sharp_slope(config.g)
  records = [
    {"term": assembly.divisor, "g1": None, "g2": None, "coefficient": format_rational(assembly.lead_coefficient), "row": None, "pass": True},
    {"term": "lambda", "g1": None, "g2": None, "coefficient": format_rational(assembly.lambda_coefficient), "row": None, "pass": True},
    {"term": "delta", "g1": None, "g2": None, "coefficient": format_rational(assembly.delta_coefficient), "row": None, "pass": True},
    {"term": "slope", "g1": None, "g2": None, "coefficient": format_rational(assembly.slope), "row": None, "pass": assembly.slope == sharp},
  ]
  records += [dict(h.to_dict(), **{"pass": h.coefficient >= 0}) for h in assembly.higher]
  records += [{"term": label.kind.value, "g1": label.g1, "g2": label.g2, "coefficient": None, "row": None, "pass": False} for label in assembly.uncovered]
  envelope = ReportEnvelope.build("class", config.parameters(), records)
  text = None
  if config.format == "text":
    title = (f"{format_rational(assembly.lead_coefficient)}[{assembly.divisor}] = {format_rational(assembly.lambda_coefficient)} lambda"
             f" - {format_rational(assembly.delta_coefficient)} delta - sum c_i (higher boundary), g = {config.g}")
    rows = [[r["term"], r["g1"], r["g2"], r["coefficient"], r["row"], r["pass"]] for r in records]
    verdict = "all coefficients >= 0" if assembly.nonnegative else "NEGATIVE coefficient found"
    text = render_table(title, ["term", "g1", "g2", "coefficient", "row", "status"], rows, footer=f"{verdict}; {verdict_line(envelope)}")
  return _emit(envelope, config.format, text)


def cmd_sweep(args) -> int:
  config = SweepConfig(g_min=args.g_min, g_max=args.g_max, format=args.format, workers=args.workers)
  records = []
  for g in range(config.g_min, config.g_max + 1):
    result = sweep_genus(g)
    records.append(dict(result.to_dict(), **{"pass": result.slope == sharp_slope(g)}))
  envelope = ReportEnvelope.build("sweep", config.parameters(), records)
  text = None
  if config.format == "text":
    rows = [[r["g"], r["parity"], r["lambda"], r["kappa"], r["delta"], r["slope"], r["pass"]] for r in records]
    text = render_table("Sweeping families", ["g", "parity", "lambda", "kappa", "delta", "slope", "status"], rows, footer=verdict_line(envelope))
  return _emit(envelope, config.format, text)


def cmd_version(args) -> int:
  print(VERSION)
  return EXIT_PASS


def main(argv: Optional[List[str]] = None) -> int:
  parser = build_parser()
  try:
    args = parser.parse_args(argv)
  except SystemExit as e:
    return e.code if isinstance(e.code, int) else EXIT_USAGE
  if getattr(args, "debug", None) is not None:
    set_debug_level(args.debug)
  if helpers.DEBUG >= 1: print_trislope()
  try:
    return args.handler(args)
  except (ValidationError, ValueError) as e:
    print(f"Error: {e}", file=sys.stderr)
    return EXIT_USAGE
  except ArithmeticError as e:
    print(f"Check failed: {e}", file=sys.stderr)
    return EXIT_FAIL


def run():
  sys.exit(main())


if __name__ == "__main__":
  run()
