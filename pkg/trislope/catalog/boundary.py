from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional


class Parity(Enum):
  EVEN = "even"
  ODD = "odd"

  def genus(self, n: int) -> int:
    return 2*n - 2 if self == Parity.EVEN else 2*n - 1

  @classmethod
  def of_genus(cls, g: int) -> "Parity":
    return cls.EVEN if g % 2 == 0 else cls.ODD


class _Constraint(NamedTuple):
  offset: int  # g1 + g2 = g + offset
  min_g1: int
  min_g2: int
  ordered: bool  # whether (g1, g2) and (g2, g1) are different divisors


class BoundaryType(Enum):
  DELTA1 = "Delta1"
  DELTA2 = "Delta2"
  DELTA3 = "Delta3"
  DELTA4 = "Delta4"
  DELTA5 = "Delta5"
  DELTA6 = "Delta6"
  HYP = "H"

  @property
  def constraint(self) -> Optional[_Constraint]:
    return _CONSTRAINTS.get(self)

  @property
  def ordered(self) -> bool:
    return self.constraint is not None and self.constraint.ordered


_CONSTRAINTS = {
  BoundaryType.DELTA1: _Constraint(-2, 0, 0, False),
  BoundaryType.DELTA2: _Constraint(-1, 0, 0, False),
  BoundaryType.DELTA3: _Constraint(0, 1, 1, False),
  BoundaryType.DELTA4: _Constraint(-1, 0, 1, True),
  BoundaryType.DELTA5: _Constraint(0, 0, 1, True),
  BoundaryType.DELTA6: _Constraint(0, 1, 1, False),
}


@dataclass(frozen=True)
class BoundaryLabel:
  """Where the special fiber of a test curve lands, and how often the curve meets that divisor."""
  kind: BoundaryType
  g1: int
  g2: int
  multiplicity: int = 1

  def violation(self, g: int) -> Optional[str]:
    if self.kind == BoundaryType.HYP:
      # H is read as (g1, g2) = (0, g)
      if (self.g1, self.g2) != (0, g): return f"H expects (g1, g2) = (0, {g}), got ({self.g1}, {self.g2})"
      return None
    c = self.kind.constraint
    if self.g1 + self.g2 != g + c.offset:
      return f"{self.kind.value} needs g1 + g2 = {g + c.offset} at g={g}, got {self.g1} + {self.g2}"
    if self.g1 < c.min_g1 or self.g2 < c.min_g2:
      return f"{self.kind.value} needs g1 >= {c.min_g1} and g2 >= {c.min_g2}, got ({self.g1}, {self.g2})"
    return None

  def satisfies(self, g: int) -> bool:
    return self.violation(g) is None

  def key(self):
    return (list(BoundaryType).index(self.kind), self.g1, self.g2)

  def __str__(self) -> str:
    if self.kind == BoundaryType.HYP: return f"H = {self.multiplicity}"
    return f"{self.kind.value}({self.g1},{self.g2}) = {self.multiplicity}"


def admissible_labels(kind: BoundaryType, g: int):
  """Every (g1, g2) allowed for a boundary type at genus g, as labels of multiplicity 1."""
  if kind == BoundaryType.HYP:
    return [BoundaryLabel(kind, 0, g)]
  c = kind.constraint
  total = g + c.offset
  return [BoundaryLabel(kind, g1, total - g1) for g1 in range(c.min_g1, total - c.min_g2 + 1)]
