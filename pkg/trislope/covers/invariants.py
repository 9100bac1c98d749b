from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional

from trislope.chow import DivisorClass, SurfaceModel, intersect
from trislope.covers.bundle import BundleKind, BundleSpec, chern
from trislope import helpers
from trislope.helpers import RationalLike, debug_print, to_rational
from trislope.orbifold import orbi_correction


@dataclass(frozen=True)
class CoverInvariants:
  lambda_: Fraction
  kappa: Fraction
  delta_raw: Fraction
  delta_adjusted: Fraction
  chi_total: Fraction

  def to_dict(self):
    return {
      "lambda": self.lambda_,
      "kappa": self.kappa,
      "delta_raw": self.delta_raw,
      "delta_adjusted": self.delta_adjusted,
      "chi_total": self.chi_total,
    }


def kappa_lambda(surface: SurfaceModel, bundle: BundleSpec, chi_override: Optional[RationalLike] = None) -> CoverInvariants:
  """Hodge and kappa degrees of the trigonal family cut out in P(E) over the base surface.

  kappa  = 3 kappa_S + 2 c1^2 + 4 c1.omega - 3 c2
  lambda = lambda_S + (kappa_S + delta_S)/6 + c1^2/2 + c1.omega/2 - c2 + sum chi(p)

  The boundary degree of the coarse family is 12 lambda - kappa.
  """
  data = chern(surface, bundle)
  chi_total = orbi_correction(surface.orbi_points) if chi_override is None else to_rational(chi_override)
  kappa = 3*surface.kappa_s + 2*data.c1sq + 4*data.c1_dot_omega - 3*data.c2
  lambda_ = (surface.lambda_s + (surface.kappa_s + surface.delta_s)/6 + data.c1sq/2 + data.c1_dot_omega/2 - data.c2 + chi_total)
  delta_raw = 12*lambda_ - kappa
  if helpers.DEBUG >= 3:
    debug_print(3, f"kappa_lambda({surface.id.name}, {bundle}): c1^2={data.c1sq} c1.w={data.c1_dot_omega} c2={data.c2} chi={chi_total} -> lambda={lambda_} kappa={kappa}")
  return CoverInvariants(lambda_=lambda_, kappa=kappa, delta_raw=delta_raw, delta_adjusted=delta_raw, chi_total=chi_total)


def adjust_delta(invariants: CoverInvariants, adjustment: RationalLike) -> CoverInvariants:
  # rational tails make the raw count overshoot; the adjustment is per boundary type
  return replace(invariants, delta_adjusted=invariants.delta_raw - to_rational(adjustment))


def cubic_form_summands(surface: SurfaceModel, bundle: BundleSpec) -> List[DivisorClass]:
  """Line summands of Sym^3(E) (x) det(E)^dual for split E = A + B: 2A-B, A, B, 2B-A."""
  if bundle.kind != BundleKind.SPLIT:
    raise ValueError(f"Only split bundles have a canonical splitting of the cubic forms, got {bundle.kind.value}")
  if bundle.surface != surface.id:
    raise ValueError(f"Bundle on {bundle.surface.name} evaluated on {surface.id.name}")
  a, b = bundle.first, bundle.second
  return [2*a - b, a, b, 2*b - a]


def fiber_degrees(surface: SurfaceModel, bundle: BundleSpec):
  return intersect(surface, bundle.first, surface.fiber), intersect(surface, bundle.second, surface.fiber)


def is_balanced(surface: SurfaceModel, bundle: BundleSpec) -> bool:
  first, second = fiber_degrees(surface, bundle)
  return abs(first - second) <= 1
