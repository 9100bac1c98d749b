"""Orbifold Riemann-Roch correction at a mu_n orbi-point.

For an orbi-point with stabilizer mu_n where E restricts to k(-a) + k(-b),

  chi = 1/n * sum_{i=1}^{n-1} (zeta^{ia} + zeta^{ib}) / (2 - zeta^i - zeta^{-i}).

The exact value is computed in the cyclotomic field Q[x]/(Phi_n(x)); the
closed form (n^2-1)/12 - a(n-a)/2 for each character sum is kept as an
independent path, and an mpmath evaluation of the defining sum referees both.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import mpmath
import sympy
from sympy import QQ, Poly, Symbol, cyclotomic_poly

from trislope.chow.surface_model import OrbiPoint
from trislope.errors import InvalidChiQueryError, NonRationalResultError
from trislope.helpers import debug_print

_x = Symbol("x")

METHODS = ("cyclotomic", "closed_form")


@dataclass(frozen=True)
class ChiQuery:
  n: int
  a: int
  b: int

  def __post_init__(self):
    if not isinstance(self.n, int) or self.n < 2:
      raise InvalidChiQueryError(f"chi needs a stabilizer order n >= 2, got n={self.n}")
    # characters only matter mod n
    object.__setattr__(self, "a", self.a % self.n)
    object.__setattr__(self, "b", self.b % self.n)

  @classmethod
  def from_orbi_point(cls, point: OrbiPoint) -> "ChiQuery":
    return cls(point.n, point.a, point.b)


def _to_fraction(value) -> Fraction:
  rational = sympy.Rational(value)
  return Fraction(int(rational.p), int(rational.q))


@lru_cache(maxsize=None)
def character_sum(n: int, a: int) -> Fraction:
  """sum_{i=1}^{n-1} zeta^{ia} / (2 - zeta^i - zeta^{-i}), exactly."""
  if n < 2: raise InvalidChiQueryError(f"character sums need n >= 2, got n={n}")
  a %= n
  phi = Poly(cyclotomic_poly(n, _x), _x, domain=QQ)
  total = Poly(0, _x, domain=QQ)
  for i in range(1, n):
    # x^n = 1 modulo Phi_n, so zeta^{-i} is x^{n-i}
    numerator = Poly(_x**((i*a) % n), _x, domain=QQ)
    denominator = Poly(2 - _x**i - _x**(n - i), _x, domain=QQ)
    total = total + numerator*denominator.invert(phi)
  total = total.rem(phi)
  if total.degree() > 0:
    raise NonRationalResultError(f"Character sum for n={n}, a={a} left a non-constant cyclotomic coordinate: {total.as_expr()}")
  value = _to_fraction(total.as_expr())
  debug_print(3, f"character_sum(n={n}, a={a}) = {value}")
  return value


def character_sum_closed_form(n: int, a: int) -> Fraction:
  if n < 2: raise InvalidChiQueryError(f"character sums need n >= 2, got n={n}")
  a %= n
  return Fraction(n*n - 1, 12) - Fraction(a*(n - a), 2)


def chi(query: ChiQuery, method: str = "cyclotomic") -> Fraction:
  if method == "cyclotomic":
    total = character_sum(query.n, query.a) + character_sum(query.n, query.b)
  elif method == "closed_form":
    total = character_sum_closed_form(query.n, query.a) + character_sum_closed_form(query.n, query.b)
  else:
    raise ValueError(f"Unknown chi method {method!r}; expected one of {METHODS}")
  return total/query.n


def chi_numeric_oracle(query: ChiQuery, precision: int = 30) -> mpmath.mpf:
  if precision < 15:
    raise ValueError(f"The chi oracle needs at least 15 digits, got {precision}")
  n, a, b = query.n, query.a, query.b
  with mpmath.workdps(precision):
    total = mpmath.mpc(0)
    for i in range(1, n):
      angle = 2*mpmath.pi*i/n
      numerator = mpmath.expj(angle*a) + mpmath.expj(angle*b)
      total += numerator/(2 - 2*mpmath.cos(angle))
    return +(total.real/n)


def oracle_deviation(query: ChiQuery, precision: int = 30) -> mpmath.mpf:
  exact = chi(query)
  with mpmath.workdps(precision):
    return abs(mpmath.mpf(exact.numerator)/exact.denominator - chi_numeric_oracle(query, precision))


def orbi_correction(points: Iterable[OrbiPoint]) -> Fraction:
  return sum((chi(ChiQuery.from_orbi_point(p)) for p in points), Fraction(0))
