from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple

from trislope.errors import SurfaceMismatchError
from trislope.helpers import RationalLike, format_rational, to_rational


class SurfaceId(Enum):
  S0 = 0
  S1 = 1
  S2 = 2
  S3 = 3

  @property
  def index(self) -> int:
    # order of the orbi-node on the reducible fiber; 1 is an ordinary node
    return self.value


BASES: Dict[SurfaceId, Tuple[str, ...]] = {
  SurfaceId.S0: ("s", "F"),
  SurfaceId.S1: ("s", "F0", "Finf"),
  SurfaceId.S2: ("s", "F0", "Finf"),
  SurfaceId.S3: ("s", "F0", "Finf"),
}


@dataclass(frozen=True)
class DivisorClass:
  """A Q-linear combination of the basis divisors of one base surface."""
  surface: SurfaceId
  coefficients: Tuple[Fraction, ...]

  def __post_init__(self):
    if len(self.coefficients) != len(BASES[self.surface]):
      raise SurfaceMismatchError(f"{self.surface.name} has basis {BASES[self.surface]}, got {len(self.coefficients)} coefficients")

  @classmethod
  def zero(cls, surface: SurfaceId) -> "DivisorClass":
    return cls(surface, tuple(Fraction(0) for _ in BASES[surface]))

  @classmethod
  def from_terms(cls, surface: SurfaceId, terms: Mapping[str, RationalLike]) -> "DivisorClass":
    basis = BASES[surface]
    unknown = [symbol for symbol in terms if symbol not in basis]
    if unknown:
      raise SurfaceMismatchError(f"Symbols {unknown} are not divisors on {surface.name} (basis {basis})")
    return cls(surface, tuple(to_rational(terms.get(symbol, 0)) for symbol in basis))

  @property
  def basis(self) -> Tuple[str, ...]:
    return BASES[self.surface]

  def coefficient(self, symbol: str) -> Fraction:
    try:
      return self.coefficients[self.basis.index(symbol)]
    except ValueError as e:
      raise SurfaceMismatchError(f"{symbol!r} is not a basis divisor on {self.surface.name}") from e

  def terms(self) -> Iterator[Tuple[str, Fraction]]:
    return zip(self.basis, self.coefficients)

  def is_zero(self) -> bool:
    return all(c == 0 for c in self.coefficients)

  def _check_same_surface(self, other: "DivisorClass") -> None:
    if not isinstance(other, DivisorClass):
      raise TypeError(f"Expected a DivisorClass, got {type(other).__name__}")
    if other.surface != self.surface:
      raise SurfaceMismatchError(f"Cannot combine a class on {self.surface.name} with a class on {other.surface.name}")

  def __add__(self, other: "DivisorClass") -> "DivisorClass":
    self._check_same_surface(other)
    return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

  def __sub__(self, other: "DivisorClass") -> "DivisorClass":
    self._check_same_surface(other)
    return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

  def __neg__(self) -> "DivisorClass":
    return DivisorClass(self.surface, tuple(-a for a in self.coefficients))

  def __mul__(self, scalar: RationalLike) -> "DivisorClass":
    if isinstance(scalar, DivisorClass): return NotImplemented
    k = to_rational(scalar)
    return DivisorClass(self.surface, tuple(k*a for a in self.coefficients))

  __rmul__ = __mul__

  def __str__(self) -> str:
    parts = []
    for symbol, c in self.terms():
      if c == 0: continue
      sign = "-" if c < 0 else "+"
      magnitude = abs(c)
      body = symbol if magnitude == 1 else f"{format_rational(magnitude)}{symbol}"
      parts.append((sign, body))
    if not parts: return "0"
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
      text += f" {sign} {body}"
    return text
