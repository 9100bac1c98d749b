"""Sweeping families on P^1 x B and the slopes they pin down.

Even genus g = 2n-2 uses E = O(n sigma + F) + O(n sigma + F); odd genus
g = 2n-1 uses E = O(n sigma + F) + O((n+1) sigma + 2F). Both live on the
product surface, which is the S0 model with sigma as the section class.
"""
from dataclasses import dataclass
from fractions import Fraction

from trislope.catalog.boundary import Parity
from trislope.chow import SurfaceId, make_surface
from trislope.covers import BundleSpec, kappa_lambda
from trislope.errors import SweepIdentityError
from trislope.helpers import RationalLike, debug_print, format_rational, to_rational


@dataclass(frozen=True)
class SweepResult:
  parity: Parity
  n: int
  g: int
  lambda_: Fraction
  kappa: Fraction
  delta: Fraction

  @property
  def slope(self) -> Fraction:
    return self.delta/self.lambda_

  def to_dict(self):
    return {
      "parity": self.parity.value,
      "g": self.g,
      "lambda": format_rational(self.lambda_),
      "kappa": format_rational(self.kappa),
      "delta": format_rational(self.delta),
      "slope": format_rational(self.slope),
    }


def sweeping_bundle(parity: Parity, n: int) -> BundleSpec:
  S = make_surface(SurfaceId.S0)
  if parity == Parity.EVEN:
    return BundleSpec.split(S.divisor(s=n, F=1), S.divisor(s=n, F=1))
  return BundleSpec.split(S.divisor(s=n, F=1), S.divisor(s=n + 1, F=2))


def _sweep(parity: Parity, n: int, expected) -> SweepResult:
  if not isinstance(n, int) or n < 3:
    raise ValueError(f"Sweeping families need n >= 3, got n={n}")
  inv = kappa_lambda(make_surface(SurfaceId.S0), sweeping_bundle(parity, n))
  result = SweepResult(parity, n, parity.genus(n), inv.lambda_, inv.kappa, inv.delta_raw)
  got = (result.lambda_, result.kappa, result.delta)
  if got != expected:
    raise SweepIdentityError(f"{parity.value} sweeping family at n={n} gives (lambda, kappa, delta) = {got}, expected {expected}")
  if result.slope != sharp_slope(result.g):
    raise SweepIdentityError(f"{parity.value} sweeping family at g={result.g} has slope {result.slope}, expected {sharp_slope(result.g)}")
  debug_print(2, f"sweep {parity.value} n={n} g={result.g}: lambda={result.lambda_} kappa={result.kappa} delta={result.delta}")
  return result


def sweep_even(n: int) -> SweepResult:
  g = 2*n - 2
  return _sweep(Parity.EVEN, n, (g, 5*g - 6, 7*g + 6))


def sweep_odd(n: int) -> SweepResult:
  return _sweep(Parity.ODD, n, (3*n - 1, 15*n - 15, 21*n + 3))


def sweep_genus(g: int) -> SweepResult:
  if g < 4: raise ValueError(f"Sweeping families start at g = 4, got g={g}")
  return sweep_even((g + 2)//2) if g % 2 == 0 else sweep_odd((g + 1)//2)


def sharp_slope(g: int) -> Fraction:
  if not isinstance(g, int) or g < 4:
    raise ValueError(f"The sharp slope is stated for g >= 4, got g={g}")
  if g % 2 == 0:
    return 7 + Fraction(6, g)
  return 7 + Fraction(20, 3*g + 1)


def hyperelliptic_slope(g: int) -> Fraction:
  if not isinstance(g, int) or g < 2:
    raise ValueError(f"The hyperelliptic slope needs g >= 2, got g={g}")
  return 8 + Fraction(4, g)


def bound_defect(g: int, lambda_: RationalLike, delta: RationalLike) -> Fraction:
  """s_g * lambda - delta: zero on the sweeping families, >= 0 on curves avoiding the extremal divisor."""
  return sharp_slope(g)*to_rational(lambda_) - to_rational(delta)
