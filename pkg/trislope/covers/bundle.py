from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from trislope.chow import DivisorClass, SurfaceModel, intersect
from trislope.errors import SurfaceMismatchError


class BundleKind(Enum):
  SPLIT = "split"
  EXTENSION = "extension"


@dataclass(frozen=True)
class BundleSpec:
  """Rank-2 bundle E on a base surface, kept only through its two line classes.

  For SPLIT, first and second are the summands. For EXTENSION, first is the
  sub line bundle and second the quotient. Chern data is the same either way.
  """
  kind: BundleKind
  first: DivisorClass
  second: DivisorClass

  def __post_init__(self):
    if self.first.surface != self.second.surface:
      raise SurfaceMismatchError(f"Bundle classes live on different surfaces: {self.first.surface.name} and {self.second.surface.name}")

  @classmethod
  def split(cls, first: DivisorClass, second: DivisorClass) -> "BundleSpec":
    return cls(BundleKind.SPLIT, first, second)

  @classmethod
  def extension(cls, sub: DivisorClass, quotient: DivisorClass) -> "BundleSpec":
    return cls(BundleKind.EXTENSION, sub, quotient)

  @property
  def surface(self):
    return self.first.surface

  @property
  def quotient(self) -> DivisorClass:
    return self.second

  def __str__(self) -> str:
    if self.kind == BundleKind.SPLIT:
      return f"O({self.first}) + O({self.second})"
    return f"O({self.first}) -> E -> O({self.second})"


class ChernData(NamedTuple):
  c1: DivisorClass
  c1sq: Fraction
  c1_dot_omega: Fraction
  c2: Fraction


def chern(surface: SurfaceModel, bundle: BundleSpec) -> ChernData:
  if bundle.surface != surface.id:
    raise SurfaceMismatchError(f"Bundle on {bundle.surface.name} evaluated on {surface.id.name}")
  c1 = bundle.first + bundle.second
  return ChernData(
    c1=c1,
    c1sq=intersect(surface, c1, c1),
    c1_dot_omega=intersect(surface, c1, surface.omega),
    c2=intersect(surface, bundle.first, bundle.second),
  )
