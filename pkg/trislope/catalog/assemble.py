from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from trislope.catalog.boundary import BoundaryLabel, BoundaryType, Parity, admissible_labels
from trislope.catalog.residual import residual_coefficients
from trislope.catalog.rows import TestCurveRow, catalog
from trislope.errors import ParityError
from trislope.helpers import debug_print, format_rational


@dataclass(frozen=True)
class HigherCoefficient:
  label: BoundaryLabel
  coefficient: Fraction
  row: str

  def to_dict(self):
    return {
      "term": self.label.kind.value,
      "g1": self.label.g1,
      "g2": self.label.g2,
      "coefficient": format_rational(self.coefficient),
      "row": self.row,
    }


@dataclass(frozen=True)
class ClassAssembly:
  """lead*[D] = lambda_coeff*lambda - delta_coeff*delta - sum of c_i * (higher boundary divisor)."""
  parity: Parity
  g: int
  lead_coefficient: Fraction
  lambda_coefficient: Fraction
  delta_coefficient: Fraction
  higher: Tuple[HigherCoefficient, ...] = field(default_factory=tuple)
  uncovered: Tuple[BoundaryLabel, ...] = field(default_factory=tuple)

  @property
  def nonnegative(self) -> bool:
    return all(h.coefficient >= 0 for h in self.higher)

  @property
  def slope(self) -> Fraction:
    return self.lambda_coefficient/self.delta_coefficient

  @property
  def divisor(self) -> str:
    return "mu" if self.parity == Parity.EVEN else "tau"


def check_genus(parity: Parity, g: int) -> None:
  if not isinstance(g, int) or isinstance(g, bool):
    raise ParityError(f"Genus must be an integer, got {g!r}")
  if Parity.of_genus(g) != parity:
    raise ParityError(f"{parity.value} parity needs an {parity.value} genus, got g={g}")
  minimum = 4 if parity == Parity.EVEN else 5
  if g < minimum:
    raise ParityError(f"{parity.value} genus must be at least {minimum}, got g={g}")


def _n_of_genus(parity: Parity, g: int) -> int:
  return (g + 2)//2 if parity == Parity.EVEN else (g + 1)//2


def assemble_class(parity: Parity, g: int, rows: Optional[List[TestCurveRow]] = None) -> ClassAssembly:
  """Read the higher boundary coefficients off the test-curve residuals at genus g.

  Every admissible b of every row of this parity pins one coefficient: the
  residual divided by how often the curve meets the divisor. Labels allowed at
  genus g that no row reaches are reported as uncovered.
  """
  check_genus(parity, g)
  rows = [r for r in (rows if rows is not None else catalog(parity)) if r.parity == parity]
  n = _n_of_genus(parity, g)
  coeffs = residual_coefficients(parity, g)

  found: Dict[Tuple[BoundaryType, int, int], HigherCoefficient] = {}
  for row in rows:
    if row.boundary is None: continue
    for b in row.admissible_b(n):
      label = row.boundary_label(n, b)
      value = row.expected_residual(n, b)/label.multiplicity
      key = (label.kind, label.g1, label.g2)
      keys = (key,) if label.kind.ordered else (key, (label.kind, label.g2, label.g1))
      for seen in (found[k] for k in keys if k in found):
        if seen.coefficient != value:
          raise ArithmeticError(f"Rows {seen.row} and {row.id} disagree on {label.kind.value}({label.g1},{label.g2}) at g={g}: "
                                f"{seen.coefficient} vs {value}")
      found.setdefault(key, HigherCoefficient(label, value, row.id))

  uncovered = []
  for kind in BoundaryType:
    for label in admissible_labels(kind, g):
      key, swapped = (kind, label.g1, label.g2), (kind, label.g2, label.g1)
      if key in found or (not kind.ordered and swapped in found): continue
      uncovered.append(label)

  higher = tuple(sorted(found.values(), key=lambda h: h.label.key()))
  debug_print(2, f"assemble_class({parity.value}, g={g}): {len(higher)} coefficients, {len(uncovered)} uncovered")
  return ClassAssembly(
    parity=parity,
    g=g,
    lead_coefficient=coeffs.lead,
    lambda_coefficient=coeffs.lambda_coeff,
    delta_coefficient=coeffs.delta_coeff,
    higher=higher,
    uncovered=tuple(uncovered),
  )
