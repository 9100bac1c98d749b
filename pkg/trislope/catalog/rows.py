"""The test-curve tables, as data.

Each row is written the way it reads in the tables: the bundle column as two
line classes L(...) and M(...), the stated range of b, the boundary genus map,
the delta and tau bookkeeping for rational tails, and the residual closed form
as text. Linear expressions in (n, b) and the residual polynomials in
(g1, g2, g) are parsed once with sympy into exact rational coefficients.
"""
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy
from sympy import QQ, Poly

from trislope.catalog.boundary import BoundaryLabel, BoundaryType, Parity
from trislope.chow import DivisorClass, SurfaceId, SurfaceModel, make_surface
from trislope.covers import BundleKind, BundleSpec
from trislope.errors import InadmissibleParametersError
from trislope.helpers import RationalLike, format_rational, parse_rational, to_rational

_n, _b = sympy.symbols("n b")
_g1, _g2, _g = sympy.symbols("g1 g2 g")


def _fraction(value) -> Fraction:
  rational = sympy.Rational(value)
  return Fraction(int(rational.p), int(rational.q))


def _sympify(text: str, symbols) -> sympy.Expr:
  try:
    expr = sympy.sympify(text, locals={str(s): s for s in symbols})
  except (sympy.SympifyError, SyntaxError, TypeError) as e:
    raise ValueError(f"Cannot parse {text!r}: {e}") from e
  unknown = expr.free_symbols - set(symbols)
  if unknown:
    raise ValueError(f"{text!r} uses {sorted(map(str, unknown))}; only {[str(s) for s in symbols]} are allowed")
  return expr


def _poly(text: str, expr, *gens) -> Poly:
  try:
    return Poly(expr, *gens, domain=QQ)
  except (sympy.PolynomialError, sympy.polys.polyerrors.CoercionFailed) as e:
    raise ValueError(f"{text!r} is not a polynomial in {[str(s) for s in gens]}: {e}") from e


@dataclass(frozen=True)
class Affine:
  """const + n_coeff*n + b_coeff*b"""
  const: Fraction = Fraction(0)
  n_coeff: Fraction = Fraction(0)
  b_coeff: Fraction = Fraction(0)

  @classmethod
  def parse(cls, text: str) -> "Affine":
    expr = _sympify(text, (_n, _b))
    poly = _poly(text, expr, _n, _b)
    if poly.total_degree() > 1:
      raise ValueError(f"{text!r} is not linear in n and b")
    coeffs: Dict[Tuple[int, int], Fraction] = {monom: _fraction(c) for monom, c in poly.as_dict().items()}
    return cls(coeffs.get((0, 0), Fraction(0)), coeffs.get((1, 0), Fraction(0)), coeffs.get((0, 1), Fraction(0)))

  def __call__(self, n: int, b: int = 0) -> Fraction:
    return self.const + self.n_coeff*n + self.b_coeff*b

  def is_zero(self) -> bool:
    return self.const == 0 and self.n_coeff == 0 and self.b_coeff == 0

  def __str__(self) -> str:
    parts = []
    for symbol, c in (("n", self.n_coeff), ("b", self.b_coeff), ("", self.const)):
      if c == 0: continue
      magnitude = abs(c)
      body = format_rational(magnitude) if not symbol else (symbol if magnitude == 1 else f"{format_rational(magnitude)}{symbol}")
      parts.append(("-" if c < 0 else "+", body))
    if not parts: return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
      text += f"{sign}{body}"
    return text


def _coefficient_text(affine: Affine, symbol: str) -> str:
  text = str(affine)
  if text == "1": return symbol
  if text.isalnum(): return f"{text}{symbol}"
  return f"({text}){symbol}"


@dataclass(frozen=True)
class LineSpec:
  """The line class  s_coeff*s - finf_twist*Finf + (l or m)*F."""
  s_coeff: Affine
  finf_twist: Affine = Affine()
  twist: str = "l"

  def __post_init__(self):
    if self.twist not in ("l", "m"):
      raise ValueError(f"A line class is twisted by l (for L) or m (for M), got {self.twist!r}")

  def divisor(self, surface: SurfaceModel, n: int, b: int, l: RationalLike, m: RationalLike) -> DivisorClass:
    terms = {"s": self.s_coeff(n, b), "F": l if self.twist == "l" else m}
    if not self.finf_twist.is_zero():
      terms["Finf"] = -self.finf_twist(n, b)
    return surface.divisor(**terms)

  def __str__(self) -> str:
    body = _coefficient_text(self.s_coeff, "s")
    if not self.finf_twist.is_zero():
      body += f" - {_coefficient_text(self.finf_twist, 'Finf')}"
    return f"{self.twist.upper()}({body})"


def L(s: str, finf: Optional[str] = None) -> LineSpec:
  return LineSpec(Affine.parse(s), Affine.parse(finf) if finf else Affine(), "l")


def M(s: str, finf: Optional[str] = None) -> LineSpec:
  return LineSpec(Affine.parse(s), Affine.parse(finf) if finf else Affine(), "m")


@dataclass(frozen=True)
class BRange:
  lower: Affine
  upper: Affine
  modulus: int = 1
  residue: int = 0

  @classmethod
  def of(cls, lower: str, upper: str, modulus: int = 1, residue: int = 0) -> "BRange":
    return cls(Affine.parse(lower), Affine.parse(upper), modulus, residue % modulus)

  def violation(self, n: int, b: int) -> Optional[str]:
    if not self.lower(n) <= b <= self.upper(n):
      return f"{self} (n={n})"
    if b % self.modulus != self.residue:
      return f"{self} (n={n})"
    return None

  def values(self, n: int) -> List[int]:
    lo, hi = math.ceil(self.lower(n)), math.floor(self.upper(n))
    return [b for b in range(lo, hi + 1) if b % self.modulus == self.residue]

  def __str__(self) -> str:
    text = f"{self.lower} <= b <= {self.upper}"
    if self.lower == self.upper: text = f"b = {self.lower}"
    if self.modulus == 2 and self.residue == 1: text += ", b odd"
    elif self.modulus > 1: text += f", b = {self.residue} (mod {self.modulus})"
    return text


@dataclass(frozen=True)
class ClosedForm:
  """A residual polynomial in g1, g2 and g with exact rational coefficients."""
  text: str
  terms: Tuple[Tuple[Tuple[int, int, int], Fraction], ...] = field(init=False, repr=False, compare=False)

  def __post_init__(self):
    expr = _sympify(self.text, (_g1, _g2, _g))
    poly = _poly(self.text, expr, _g1, _g2, _g)
    object.__setattr__(self, "terms", tuple(sorted((monom, _fraction(c)) for monom, c in poly.as_dict().items())))

  def __call__(self, g1: int, g2: int, g: int) -> Fraction:
    total = Fraction(0)
    for (e1, e2, e3), c in self.terms:
      total += c*(g1**e1)*(g2**e2)*(g**e3)
    return total

  def __str__(self) -> str:
    return self.text


class MuRule(Enum):
  ZERO = "zero"
  DEG_L_MINUS_DEG_M = "deg L - deg M"


@dataclass(frozen=True)
class TestCurveRow:
  __test__ = False

  parity: Parity
  index: int
  surface: SurfaceId
  kind: BundleKind
  first: LineSpec
  second: LineSpec
  b_range: BRange
  residual: ClosedForm
  boundary: Optional[BoundaryType] = None
  g1: Affine = Affine()
  g2: Affine = Affine()
  multiplicity: int = 1
  delta_adjustment: Fraction = Fraction(0)
  tau_correction: Fraction = Fraction(0)
  mu_rule: MuRule = MuRule.ZERO
  chi_override: Fraction = Fraction(0)

  @property
  def id(self) -> str:
    return f"{self.parity.value}-{self.index}"

  def sort_key(self):
    return (0 if self.parity == Parity.EVEN else 1, self.index)

  def genus(self, n: int) -> int:
    return self.parity.genus(n)

  def violation(self, n: int, b: int) -> Optional[str]:
    if not isinstance(n, int) or n < 3:
      return f"n >= 3 (got n={n})"
    return self.b_range.violation(n, b)

  def admits(self, n: int, b: int) -> bool:
    return self.violation(n, b) is None

  def check(self, n: int, b: int) -> None:
    problem = self.violation(n, b)
    if problem is not None:
      raise InadmissibleParametersError(f"Row {self.id} rejects (n={n}, b={b}): requires {problem}")

  def admissible_b(self, n: int) -> List[int]:
    if n < 3: return []
    return self.b_range.values(n)

  def bundle(self, n: int, b: int, l: RationalLike, m: RationalLike) -> BundleSpec:
    S = make_surface(self.surface)
    return BundleSpec(self.kind, self.first.divisor(S, n, b, l, m), self.second.divisor(S, n, b, l, m))

  def quotient_class(self, n: int, b: int, l: RationalLike, m: RationalLike) -> DivisorClass:
    # Q is always the M(...) class
    return self.second.divisor(make_surface(self.surface), n, b, l, m)

  def boundary_label(self, n: int, b: int) -> Optional[BoundaryLabel]:
    if self.boundary is None: return None
    g1, g2 = self.g1(n, b), self.g2(n, b)
    if g1.denominator != 1 or g2.denominator != 1:
      raise InadmissibleParametersError(f"Row {self.id} gives non-integral genera ({g1}, {g2}) at n={n}, b={b}")
    return BoundaryLabel(self.boundary, int(g1), int(g2), self.multiplicity)

  def expected_residual(self, n: int, b: int) -> Fraction:
    label = self.boundary_label(n, b)
    g1, g2 = (label.g1, label.g2) if label else (0, 0)
    return self.residual(g1, g2, self.genus(n))

  @property
  def bundle_description(self) -> str:
    if self.kind == BundleKind.SPLIT:
      return f"{self.first} + {self.second}"
    return f"{self.first} -> E -> {self.second}"

  @property
  def boundary_description(self) -> str:
    if self.boundary is None: return "---"
    if self.boundary == BoundaryType.HYP: return f"H = {self.multiplicity}"
    return f"{self.boundary.value}(g1,g2) = {self.multiplicity}; g1 = {self.g1}, g2 = {self.g2}"


def _row(parity, index, surface, kind, first, second, b_range, residual, **kwargs) -> TestCurveRow:
  for name in ("delta_adjustment", "tau_correction", "chi_override"):
    if name in kwargs: kwargs[name] = to_rational(kwargs[name])
  for name in ("g1", "g2"):
    if name in kwargs: kwargs[name] = Affine.parse(kwargs[name])
  return TestCurveRow(parity, index, surface, kind, first, second, b_range, ClosedForm(residual), **kwargs)


E, O = Parity.EVEN, Parity.ODD
S0, S1, S2, S3 = SurfaceId.S0, SurfaceId.S1, SurfaceId.S2, SurfaceId.S3
SPLIT, EXT = BundleKind.SPLIT, BundleKind.EXTENSION
D1, D2, D3, D4, D5, D6, H = (BoundaryType.DELTA1, BoundaryType.DELTA2, BoundaryType.DELTA3, BoundaryType.DELTA4, BoundaryType.DELTA5,
                             BoundaryType.DELTA6, BoundaryType.HYP)

# g = 2n - 2; mu is the Maroni divisor
EVEN_ROWS: Tuple[TestCurveRow, ...] = (
  _row(E, 1, S0, SPLIT, L("n"), L("n"), BRange.of("0", "0"), "0"),
  _row(E, 2, S0, EXT, L("n-1"), M("n+1"), BRange.of("0", "0"), "0", mu_rule=MuRule.DEG_L_MINUS_DEG_M),
  _row(E, 3, S1, SPLIT, L("n", "b"), M("n", "b"), BRange.of("1", "n-1"), "3/2*g1*g2", boundary=D1, g1="2*(n-b)-2", g2="2*b-2"),
  _row(E, 4, S1, SPLIT, L("n", "b"), M("n", "b-1"), BRange.of("2", "n-1"), "(3*g1*g2 + g1 + g2 - 1)/2", boundary=D1, g1="2*(n-b)-1",
       g2="2*b-3"),
  _row(E, 5, S1, EXT, L("n", "b"), M("n"), BRange.of("2", "2*n-2"), "g2*(g1*g2 + g2**2 + 5*g1 - 1)/2", boundary=D4, g1="2*n-b-2", g2="b-1",
       delta_adjustment=1),
  _row(E, 6, S1, EXT, L("n", "b"), M("n"), BRange.of("n", "2*n-2"), "g2*(g1*g2 + g2**2 + 5*g1 - g2 - 6)/2 + g", boundary=D6,
       g1="2*n-b-1", g2="b-1", delta_adjustment=2),
  _row(E, 7, S1, EXT, L("n", "b"), M("n"), BRange.of("2*n-1", "2*n-1"), "g*(g-2)*(g+1)/2", boundary=H, g1="0", g2="2*n-2",
       multiplicity=2, delta_adjustment=3),
  _row(E, 8, S2, SPLIT, L("n", "b"), M("n", "b-1"), BRange.of("2", "2*n-1"), "3*g1*g2", boundary=D2, g1="2*n-b-1", g2="b-2"),
  _row(E, 9, S2, EXT, L("n", "b"), M("n"), BRange.of("3", "4*n-3", 2, 1), "g2**3 + g1*g2**2 - 2*g2**2 + 4*g1*g2 - g1 - g2",
       boundary=D5, g1="2*n-(b+3)/2", g2="(b-1)/2", delta_adjustment=2),
  _row(E, 10, S3, SPLIT, L("n", "b"), M("n", "b-1"), BRange.of("5", "3*n-4", 3, 2), "9/2*g1*g2 - g1 - g2", boundary=D3,
       g1="2*n-(2*b+2)/3", g2="(2*b-4)/3", chi_override=Fraction(-2, 9)),
  _row(E, 11, S3, SPLIT, L("n", "b"), M("n", "b-2"), BRange.of("4", "3*n-2", 3, 1), "(9*g1*g2 - g1 - g2 - 3)/2", boundary=D3,
       g1="2*n-(2*b+1)/3", g2="(2*b-5)/3", chi_override=Fraction(-2, 9)),
)

# g = 2n - 1; tau is the tangency divisor, Q is the M(...) class
ODD_ROWS: Tuple[TestCurveRow, ...] = (
  _row(O, 1, S0, SPLIT, L("n+1"), M("n"), BRange.of("0", "0"), "0"),
  _row(O, 2, S1, SPLIT, L("n+1", "b"), M("n", "b"), BRange.of("1", "n-1"), "3/2*g2*(3*g1 + 1)", boundary=D1, g1="2*(n-b)-1",
       g2="2*b-2"),
  _row(O, 3, S1, EXT, L("n+1", "b"), M("n"), BRange.of("2", "2*n-1"), "3/2*g2*(g1*g2 + g2**2 + 5*g1 + g2 + 4)", boundary=D4,
       g1="2*n-b-1", g2="b-1", delta_adjustment=1, tau_correction=2),
  _row(O, 4, S1, EXT, L("n+1", "b"), M("n"), BRange.of("n+1", "2*n-1"), "3/2*g2*(g1*g2 + g2**2 + 5*g1 - 1) + 3*g + 1", boundary=D6,
       g1="2*n-b", g2="b-1", delta_adjustment=2, tau_correction=2),
  _row(O, 5, S1, EXT, L("n+1", "b"), M("n"), BRange.of("2*n", "2*n"), "3/2*g*(g**2 + 3) + 2", boundary=H, g1="0", g2="2*n-1",
       multiplicity=2, delta_adjustment=3, tau_correction=2),
  _row(O, 6, S2, SPLIT, L("n+1", "b"), M("n", "b-1"), BRange.of("2", "2*n"), "9*g1*g2", boundary=D2, g1="2*n-b", g2="b-2"),
  _row(O, 7, S2, EXT, L("n+1", "b"), M("n"), BRange.of("3", "4*n-1", 2, 1), "3*g2*(g2**2 + g1*g2 + 4*g1 - g2 + 4) - 3*g - 1",
       boundary=D5, g1="2*n-(b+1)/2", g2="(b-1)/2", delta_adjustment=2, tau_correction=Fraction(3, 2)),
  _row(O, 8, S3, SPLIT, L("n+1", "b"), M("n", "b-1"), BRange.of("5", "3*n-1", 3, 2), "3/2*(9*g1*g2 - 2*g1 - g2) - 1", boundary=D3,
       g1="2*n-(2*b-1)/3", g2="(2*b-4)/3", chi_override=Fraction(-2, 9)),
  _row(O, 9, S3, SPLIT, L("n+1", "b"), M("n", "b-2"), BRange.of("4", "3*n-2", 3, 1), "3/2*(9*g1*g2 - g1 - 2*g2) - 1", boundary=D3,
       g1="2*n-(2*b-2)/3", g2="(2*b-5)/3", chi_override=Fraction(-2, 9)),
)


def catalog(parity: Optional[Parity] = None) -> List[TestCurveRow]:
  if parity == Parity.EVEN: return list(EVEN_ROWS)
  if parity == Parity.ODD: return list(ODD_ROWS)
  return list(EVEN_ROWS) + list(ODD_ROWS)


def find_row(row_id: str, rows: Optional[List[TestCurveRow]] = None) -> TestCurveRow:
  for row in rows if rows is not None else catalog():
    if row.id == row_id: return row
  raise ValueError(f"No test-curve row {row_id!r}; rows are even-1..even-{len(EVEN_ROWS)} and odd-1..odd-{len(ODD_ROWS)}")


PERTURBABLE_FIELDS = ("delta_adjustment", "tau_correction", "chi_override", "g1", "g2", "residual")


def perturb_row(row: TestCurveRow, field_name: str, value: str) -> TestCurveRow:
  """Copy of `row` with one table constant replaced; used for negative controls.

  Fields the row never reads are refused, as is a value equal to the current one,
  so an accepted perturbation always changes what the row evaluates.
  """
  if field_name not in PERTURBABLE_FIELDS:
    raise ValueError(f"Cannot perturb {field_name!r}; choose one of {PERTURBABLE_FIELDS}")
  if field_name == "tau_correction" and row.parity != Parity.ODD:
    raise ValueError(f"Row {row.id} has no tau term; tau_correction only applies to odd rows")
  if field_name in ("g1", "g2") and row.boundary is None:
    raise ValueError(f"Row {row.id} meets no higher boundary divisor; {field_name} is never read")
  if field_name in ("delta_adjustment", "tau_correction", "chi_override"):
    new = parse_rational(value)
  elif field_name in ("g1", "g2"):
    new = Affine.parse(value)
  else:
    new = ClosedForm(value)
  current = getattr(row, field_name)
  if (new.terms == current.terms if field_name == "residual" else new == current):
    raise ValueError(f"Perturbation {row.id}:{field_name}={value} leaves the row unchanged")
  return replace(row, **{field_name: new})
