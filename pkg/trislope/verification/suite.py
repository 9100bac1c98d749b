"""The full verification suite behind `trislope verify`.

Each check returns plain records {"check", "subject", "cases", "detail", "pass"}
so they drop straight into a ReportEnvelope. The row catalog is a parameter:
passing perturbed rows is how negative controls are run.
"""
import random
import sys
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import mpmath
from tqdm import tqdm

from trislope.catalog import DEFAULT_LM_SAMPLES, Parity, TestCurveRow, assemble_class, catalog, evaluate_row
from trislope.chow import DivisorClass, SurfaceId, intersect, make_surface
from trislope.errors import TrislopeError
from trislope.helpers import debug_print, format_rational
from trislope.orbifold import ChiQuery, character_sum, character_sum_closed_form, chi, oracle_deviation, orbi_correction
from trislope.sweep import hyperelliptic_slope, sharp_slope, sweep_even, sweep_odd

Record = Dict[str, Any]

CHI_N_MAX = 12
CHI_TOLERANCE = mpmath.mpf("1e-9")


def _record(check: str, subject: str, cases: int, failures: List[str]) -> Record:
  return {
    "check": check,
    "subject": subject,
    "cases": cases,
    "detail": "; ".join(failures[:3]) if failures else "ok",
    "pass": not failures,
  }


def check_chow(samples: int = 200, seed: int = 0) -> List[Record]:
  rng = random.Random(seed)
  records = []
  expected_kappa = {SurfaceId.S0: 0, SurfaceId.S1: -1, SurfaceId.S2: -2, SurfaceId.S3: -3}
  for surface_id in SurfaceId:
    S = make_surface(surface_id)
    failures = []
    if intersect(S, S.omega, S.omega) != S.kappa_s or S.kappa_s != expected_kappa[surface_id]:
      failures.append(f"kappa_S = {S.kappa_s}")
    if intersect(S, S.fiber, S.fiber) != 0:
      failures.append("fiber.fiber != 0")
    if surface_id != SurfaceId.S0 and intersect(S, S.fiber, S.basis_class("Finf")) != 0:
      failures.append("fiber.Finf != 0")

    def random_class():
      return DivisorClass(surface_id, tuple(Fraction(rng.randint(-60, 60), rng.randint(1, 9)) for _ in S.basis))

    for _ in range(samples):
      d1, d2, d3 = random_class(), random_class(), random_class()
      a, b = Fraction(rng.randint(-20, 20), rng.randint(1, 7)), Fraction(rng.randint(-20, 20), rng.randint(1, 7))
      if intersect(S, d1, d2) != intersect(S, d2, d1):
        failures.append(f"asymmetric on {d1}, {d2}")
      if intersect(S, a*d1 + b*d2, d3) != a*intersect(S, d1, d3) + b*intersect(S, d2, d3):
        failures.append(f"not bilinear on {d1}, {d2}, {d3}")
    records.append(_record("intersection form", surface_id.name, samples + 3, failures))
  return records


def check_chi(n_max: int = CHI_N_MAX) -> List[Record]:
  failures, cases = [], 0
  for n in range(2, n_max + 1):
    for a in range(n):
      if character_sum(n, a) != character_sum_closed_form(n, a):
        failures.append(f"character sum n={n} a={a}: cyclotomic {character_sum(n, a)} vs closed form {character_sum_closed_form(n, a)}")
      for b in range(n):
        cases += 1
        q = ChiQuery(n, a, b)
        if chi(q) != chi(ChiQuery(n, b, a)):
          failures.append(f"chi({n},{a},{b}) not symmetric")
        if oracle_deviation(q) >= CHI_TOLERANCE:
          failures.append(f"chi({n},{a},{b}) = {chi(q)} disagrees with the numeric oracle")
  records = [_record("chi oracle", f"2 <= n <= {n_max}", cases, failures)]
  defaults = []
  for surface_id, expected in ((SurfaceId.S2, Fraction(0)), (SurfaceId.S3, Fraction(-2, 9))):
    got = orbi_correction(make_surface(surface_id).orbi_points)
    if got != expected: defaults.append(f"{surface_id.name}: {got} != {expected}")
  records.append(_record("orbi-point defaults", "S2, S3", 2, defaults))
  return records


def check_row(row: TestCurveRow, n_max: int, lm_samples: Sequence[Tuple[Any, Any]]) -> List[Record]:
  failures, genus_failures, spread = [], [], []
  try:
    reports = evaluate_row(row, n_max, lm_samples)
  except (TrislopeError, ValueError, ArithmeticError) as e:
    return [_record("table fidelity", row.id, 0, [f"{type(e).__name__}: {e}"])]
  by_point = defaultdict(set)
  for r in reports:
    by_point[(r.n, r.b)].add(r.residual)
    if not r.passed:
      failures.append(f"n={r.n} b={r.b} l={format_rational(r.l)} m={format_rational(r.m)}: {format_rational(r.residual)} != {format_rational(r.expected)}")
    if r.boundary is not None and not r.boundary.satisfies(row.genus(r.n)):
      genus_failures.append(f"n={r.n} b={r.b}: {r.boundary.violation(row.genus(r.n))}")
  for (n, b), values in sorted(by_point.items()):
    if len(values) > 1:
      spread.append(f"n={n} b={b}: residual depends on (l, m)")
  return [
    _record("table fidelity", row.id, len(reports), failures),
    _record("(l,m)-independence", row.id, len(by_point), spread),
    _record("genus consistency", row.id, len(reports), sorted(set(genus_failures))),
  ]


def check_class(rows: List[TestCurveRow], even_g_max: int = 60, odd_g_max: int = 61) -> List[Record]:
  records = []
  for parity, genera in ((Parity.EVEN, range(4, even_g_max + 1, 2)), (Parity.ODD, range(5, odd_g_max + 1, 2))):
    failures = []
    for g in genera:
      try:
        assembly = assemble_class(parity, g, rows)
      except (TrislopeError, ValueError, ArithmeticError) as e:
        failures.append(f"g={g}: {e}")
        continue
      for h in assembly.higher:
        if h.coefficient < 0:
          failures.append(f"g={g} row {h.row}: {h.label} has coefficient {h.coefficient}")
      if assembly.uncovered:
        failures.append(f"g={g}: no test curve reaches {', '.join(map(str, assembly.uncovered[:3]))}")
      if assembly.slope != sharp_slope(g):
        failures.append(f"g={g}: class slope {assembly.slope} != {sharp_slope(g)}")
    records.append(_record("non-negativity", parity.value, len(genera), failures))
  return records


def check_sweeps(n_max: int = 60, g_max: int = 120) -> List[Record]:
  records = []
  for parity, sweep in ((Parity.EVEN, sweep_even), (Parity.ODD, sweep_odd)):
    failures = []
    for n in range(3, n_max + 1):
      try:
        result = sweep(n)
      except TrislopeError as e:
        failures.append(str(e))
        continue
      if result.slope != sharp_slope(result.g):
        failures.append(f"n={n}: slope {result.slope} != {sharp_slope(result.g)}")
    records.append(_record("sweeping slope", parity.value, n_max - 2, failures))
  below = [f"g={g}" for g in range(4, g_max + 1) if not sharp_slope(g) < hyperelliptic_slope(g)]
  records.append(_record("below hyperelliptic slope", f"4 <= g <= {g_max}", g_max - 3, below))
  return records


def run_suite(rows: Optional[List[TestCurveRow]] = None,
              n_max: int = 30,
              lm_samples: Sequence[Tuple[Any, Any]] = DEFAULT_LM_SAMPLES,
              workers: int = 1,
              progress: bool = True) -> List[Record]:
  rows = rows if rows is not None else catalog()
  tasks: List[Tuple[str, Callable[[], List[Record]]]] = [
    ("chow", check_chow),
    ("chi", check_chi),
    ("class", lambda: check_class(rows)),
    ("sweeps", check_sweeps),
  ]
  tasks += [(row.id, lambda row=row: check_row(row, n_max, lm_samples)) for row in rows]

  results: Dict[str, List[Record]] = {}
  with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
    futures = {pool.submit(fn): name for name, fn in tasks}
    with tqdm(total=len(futures), desc="verify", file=sys.stderr, disable=not progress) as bar:
      for future in as_completed(futures):
        name = futures[future]
        results[name] = future.result()
        debug_print(2, f"verify: {name} done")
        bar.update(1)
  # deterministic order regardless of completion order
  return [record for name, _ in tasks for record in results[name]]
