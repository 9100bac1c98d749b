from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Tuple

from trislope.chow.divisor_class import BASES, DivisorClass, SurfaceId
from trislope.errors import SurfaceMismatchError
from trislope.helpers import RationalLike, debug_print


@dataclass(frozen=True)
class OrbiPoint:
  """A mu_n orbi-point where E restricts to k(-a) + k(-b)."""
  n: int
  a: int
  b: int

  def __post_init__(self):
    if self.n < 2:
      raise ValueError(f"An orbi-point needs a stabilizer of order n >= 2, got {self.n}")
    if not (0 <= self.a < self.n and 0 <= self.b < self.n):
      raise ValueError(f"Characters must satisfy 0 <= a, b < n, got n={self.n}, a={self.a}, b={self.b}")


PairingMatrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class SurfaceModel:
  id: SurfaceId
  pairing_matrix: PairingMatrix
  omega: DivisorClass
  fiber: DivisorClass
  section: DivisorClass
  kappa_s: Fraction
  delta_s: Fraction
  lambda_s: Fraction
  orbi_points: Tuple[OrbiPoint, ...] = field(default_factory=tuple)

  def __post_init__(self):
    size = len(BASES[self.id])
    if len(self.pairing_matrix) != size or any(len(row) != size for row in self.pairing_matrix):
      raise ValueError(f"Pairing on {self.id.name} must be {size}x{size}")
    for j in range(size):
      for k in range(j):
        if self.pairing_matrix[j][k] != self.pairing_matrix[k][j]:
          raise ValueError(f"Pairing on {self.id.name} is not symmetric at ({j}, {k})")

  @property
  def basis(self) -> Tuple[str, ...]:
    return BASES[self.id]

  @property
  def index(self) -> int:
    return self.id.index

  def basis_class(self, symbol: str) -> DivisorClass:
    return DivisorClass.from_terms(self.id, {symbol: 1})

  def divisor(self, **terms: RationalLike) -> DivisorClass:
    """Build a class from basis symbols; "F" always means the full fiber."""
    fiber_coefficient = terms.pop("F", 0) if "F" not in self.basis else 0
    return DivisorClass.from_terms(self.id, terms) + self.fiber*fiber_coefficient

  def zero(self) -> DivisorClass:
    return DivisorClass.zero(self.id)

  def pairing(self, d1: DivisorClass, d2: DivisorClass) -> Fraction:
    return intersect(self, d1, d2)


def intersect(surface: SurfaceModel, d1: DivisorClass, d2: DivisorClass) -> Fraction:
  for d in (d1, d2):
    if d.surface != surface.id:
      raise SurfaceMismatchError(f"Class {d} lives on {d.surface.name}, cannot intersect on {surface.id.name}")
  total = Fraction(0)
  for j, x in enumerate(d1.coefficients):
    if x == 0: continue
    row = surface.pairing_matrix[j]
    for k, y in enumerate(d2.coefficients):
      if y == 0: continue
      total += x*y*row[k]
  return total


DEFAULT_ORBI_POINTS = {
  SurfaceId.S0: (),
  SurfaceId.S1: (),
  SurfaceId.S2: (OrbiPoint(2, 0, 1),),
  SurfaceId.S3: (OrbiPoint(3, 1, 2),),
}


def _blown_up_pairing(i: int) -> PairingMatrix:
  # basis (s, F0, Finf); s meets F0 only since it avoids the center of the blowup
  q = Fraction(1, i)
  return (
    (Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(1), -q, q),
    (Fraction(0), q, -q),
  )


@lru_cache(maxsize=None)
def make_surface(surface_id: SurfaceId) -> SurfaceModel:
  i = surface_id.index
  if surface_id == SurfaceId.S0:
    matrix = ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))
    section = DivisorClass.from_terms(surface_id, {"s": 1})
    fiber = DivisorClass.from_terms(surface_id, {"F": 1})
    omega = DivisorClass.from_terms(surface_id, {"s": -2})
    delta_s = Fraction(0)
  else:
    matrix = _blown_up_pairing(i)
    section = DivisorClass.from_terms(surface_id, {"s": 1})
    fiber = DivisorClass.from_terms(surface_id, {"F0": 1, "Finf": 1})
    omega = DivisorClass.from_terms(surface_id, {"s": -2, "Finf": i})
    # the mu_i orbi-node contributes 1/i
    delta_s = Fraction(1, i)

  skeleton = SurfaceModel(surface_id, matrix, omega, fiber, section, Fraction(0), delta_s, Fraction(0), DEFAULT_ORBI_POINTS[surface_id])
  kappa_s = intersect(skeleton, omega, omega)
  debug_print(3, f"make_surface({surface_id.name}): kappa_S={kappa_s} delta_S={delta_s}")
  return replace(skeleton, kappa_s=kappa_s)


def with_orbi_points(surface: SurfaceModel, points: Iterable[OrbiPoint]) -> SurfaceModel:
  return replace(surface, orbi_points=tuple(points))
