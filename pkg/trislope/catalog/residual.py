from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Tuple

from trislope import helpers
from trislope.catalog.boundary import BoundaryLabel, Parity
from trislope.catalog.rows import MuRule, TestCurveRow
from trislope.chow import DivisorClass, SurfaceModel, intersect, make_surface
from trislope.covers import BundleSpec, adjust_delta, chern, kappa_lambda
from trislope.errors import ParityError
from trislope.helpers import RationalLike, debug_print, format_rational, to_rational

DEFAULT_LM_SAMPLES: Tuple[Tuple[int, int], ...] = ((50, 60), (70, 55), (101, 103))


class ResidualCoefficients(NamedTuple):
  """Residual = lambda_coeff*lambda - delta_coeff*delta - lead*[mu or tau]."""
  lead: Fraction
  lambda_coeff: Fraction
  delta_coeff: Fraction


def residual_coefficients(parity: Parity, g: int) -> ResidualCoefficients:
  if parity == Parity.EVEN:
    return ResidualCoefficients(Fraction(2*(g - 3)), Fraction(7*g + 6), Fraction(g))
  return ResidualCoefficients(Fraction(2), Fraction(21*g + 27), Fraction(3*g + 1))


def mu_degree(row: TestCurveRow, n: int, b: int, l: RationalLike, m: RationalLike) -> Fraction:
  if row.parity != Parity.EVEN:
    raise ParityError(f"mu is the even-genus divisor; row {row.id} is odd")
  if row.mu_rule == MuRule.DEG_L_MINUS_DEG_M:
    return to_rational(l) - to_rational(m)
  return Fraction(0)


def tau_degree(surface: SurfaceModel, bundle: BundleSpec, quotient: DivisorClass, correction: RationalLike = 0) -> Fraction:
  """tau = D.(D + omega) + correction with D = 3 c1(Q) - c1(E), the branch count of D -> B by adjunction."""
  d = 3*quotient - chern(surface, bundle).c1
  return intersect(surface, d, d + surface.omega) + to_rational(correction)


@dataclass(frozen=True)
class RowReport:
  row: str
  n: int
  b: int
  l: Fraction
  m: Fraction
  lambda_: Fraction
  kappa: Fraction
  delta: Fraction
  mu_or_tau: Fraction
  residual: Fraction
  expected: Fraction
  boundary: Optional[BoundaryLabel] = None
  sort_index: Tuple[int, int] = (0, 0)

  @property
  def passed(self) -> bool:
    return self.residual == self.expected

  def sort_key(self):
    return (self.sort_index, self.n, self.b, self.l, self.m)

  def to_dict(self):
    return {
      "row": self.row,
      "n": self.n,
      "b": self.b,
      "l": format_rational(self.l),
      "m": format_rational(self.m),
      "lambda": format_rational(self.lambda_),
      "kappa": format_rational(self.kappa),
      "delta": format_rational(self.delta),
      "mu_or_tau": format_rational(self.mu_or_tau),
      "residual": format_rational(self.residual),
      "expected": format_rational(self.expected),
      "pass": self.passed,
    }


def residual(row: TestCurveRow, n: int, b: int, l: RationalLike, m: RationalLike) -> RowReport:
  row.check(n, b)
  l, m = to_rational(l), to_rational(m)
  S = make_surface(row.surface)
  bundle = row.bundle(n, b, l, m)
  inv = adjust_delta(kappa_lambda(S, bundle, row.chi_override), row.delta_adjustment)
  g = row.genus(n)
  coeffs = residual_coefficients(row.parity, g)
  if row.parity == Parity.EVEN:
    divisor_degree = mu_degree(row, n, b, l, m)
  else:
    divisor_degree = tau_degree(S, bundle, row.quotient_class(n, b, l, m), row.tau_correction)
  computed = coeffs.lambda_coeff*inv.lambda_ - coeffs.delta_coeff*inv.delta_adjusted - coeffs.lead*divisor_degree
  report = RowReport(
    row=row.id,
    n=n,
    b=b,
    l=l,
    m=m,
    lambda_=inv.lambda_,
    kappa=inv.kappa,
    delta=inv.delta_adjusted,
    mu_or_tau=divisor_degree,
    residual=computed,
    expected=row.expected_residual(n, b),
    boundary=row.boundary_label(n, b),
    sort_index=row.sort_key(),
  )
  if helpers.DEBUG >= 2 and not report.passed:
    debug_print(2, f"{row.id} n={n} b={b} l={l} m={m}: residual {computed} != expected {report.expected}")
  return report


def evaluate_row(row: TestCurveRow, n_max: int, lm_samples: Iterable[Tuple[RationalLike, RationalLike]] = DEFAULT_LM_SAMPLES) -> List[RowReport]:
  samples = [(to_rational(l), to_rational(m)) for l, m in lm_samples]
  reports = []
  for n in range(3, n_max + 1):
    for b in row.admissible_b(n):
      for l, m in samples:
        reports.append(residual(row, n, b, l, m))
  return reports
