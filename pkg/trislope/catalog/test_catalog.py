import unittest
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trislope.catalog import (
  Affine,
  BoundaryType,
  BRange,
  ClosedForm,
  Parity,
  assemble_class,
  catalog,
  evaluate_row,
  find_row,
  mu_degree,
  perturb_row,
  residual,
  tau_degree,
)
from trislope.chow import SurfaceId, make_surface
from trislope.covers import BundleSpec
from trislope.errors import InadmissibleParametersError, ParityError

B_RANGES = {
  "even-1": lambda n, b: b == 0,
  "even-2": lambda n, b: b == 0,
  "even-3": lambda n, b: 1 <= b <= n - 1,
  "even-4": lambda n, b: 2 <= b <= n - 1,
  "even-5": lambda n, b: 2 <= b <= 2*n - 2,
  "even-6": lambda n, b: n <= b <= 2*n - 2,
  "even-7": lambda n, b: b == 2*n - 1,
  "even-8": lambda n, b: 2 <= b <= 2*n - 1,
  "even-9": lambda n, b: b % 2 == 1 and 3 <= b <= 4*n - 3,
  "even-10": lambda n, b: b % 3 == 2 and 5 <= b <= 3*n - 4,
  "even-11": lambda n, b: b % 3 == 1 and 4 <= b <= 3*n - 2,
  "odd-1": lambda n, b: b == 0,
  "odd-2": lambda n, b: 1 <= b <= n - 1,
  "odd-3": lambda n, b: 2 <= b <= 2*n - 1,
  "odd-4": lambda n, b: n + 1 <= b <= 2*n - 1,
  "odd-5": lambda n, b: b == 2*n,
  "odd-6": lambda n, b: 2 <= b <= 2*n,
  "odd-7": lambda n, b: b % 2 == 1 and 3 <= b <= 4*n - 1,
  "odd-8": lambda n, b: b % 3 == 2 and 5 <= b <= 3*n - 1,
  "odd-9": lambda n, b: b % 3 == 1 and 4 <= b <= 3*n - 2,
}


class TestCatalog(unittest.TestCase):
  def test_row_counts(self):
    # the hyperelliptic case is its own row in both tables
    self.assertEqual(len(catalog(Parity.EVEN)), 11)
    self.assertEqual(len(catalog(Parity.ODD)), 9)
    self.assertEqual([r.id for r in catalog()], list(B_RANGES))

  def test_even_delta1_genus_map(self):
    row = find_row("even-3")
    self.assertEqual(row.boundary, BoundaryType.DELTA1)
    for n in range(3, 10):
      for b in row.admissible_b(n):
        label = row.boundary_label(n, b)
        self.assertEqual((label.g1, label.g2), (2*(n - b) - 2, 2*b - 2))

  def test_residual_texts(self):
    self.assertEqual(str(find_row("odd-8").residual), "3/2*(9*g1*g2 - 2*g1 - g2) - 1")
    self.assertEqual(find_row("even-3").residual(2, 2, 6), 6)

  def test_adjustments(self):
    expected = {
      BoundaryType.DELTA4: (1, 2),
      BoundaryType.DELTA5: (2, Fraction(3, 2)),
      BoundaryType.DELTA6: (2, 2),
      BoundaryType.HYP: (3, 2),
    }
    for row in catalog():
      delta, tau = expected.get(row.boundary, (0, 0))
      self.assertEqual(row.delta_adjustment, delta, row.id)
      self.assertEqual(row.tau_correction, tau if row.parity == Parity.ODD else 0, row.id)

  def test_chi_overrides(self):
    for row in catalog():
      self.assertEqual(row.chi_override, Fraction(-2, 9) if row.surface == SurfaceId.S3 else 0, row.id)

  def test_h_rows_meet_twice(self):
    for row_id in ("even-7", "odd-5"):
      row = find_row(row_id)
      self.assertEqual(row.multiplicity, 2)
      label = row.boundary_label(5, row.admissible_b(5)[0])
      self.assertEqual((label.g1, label.g2), (0, row.genus(5)))

  def test_descriptions(self):
    self.assertEqual(find_row("even-4").bundle_description, "L(ns - bFinf) + M(ns - (b-1)Finf)")
    self.assertEqual(find_row("odd-3").bundle_description, "L((n+1)s - bFinf) -> E -> M(ns)")
    self.assertEqual(str(find_row("even-9").b_range), "3 <= b <= 4n-3, b odd")
    self.assertEqual(find_row("even-1").boundary_description, "---")

  def test_unknown_row(self):
    with self.assertRaises(ValueError):
      find_row("even-12")


class TestDivisorDegrees(unittest.TestCase):
  def test_mu(self):
    self.assertEqual(mu_degree(find_row("even-1"), 4, 0, 5, 3), 0)
    self.assertEqual(mu_degree(find_row("even-2"), 4, 0, 5, 3), 2)
    self.assertEqual(mu_degree(find_row("even-2"), 4, 0, 7, 7), 0)
    with self.assertRaises(ParityError):
      mu_degree(find_row("odd-1"), 4, 0, 5, 3)

  def test_tau_on_s0(self):
    S = make_surface(SurfaceId.S0)
    for n, l, m in [(3, 5, 7), (8, 50, 60), (11, 2, 1)]:
      E = BundleSpec.split(S.divisor(s=n + 1, F=l), S.divisor(s=n, F=m))
      self.assertEqual(tau_degree(S, E, E.quotient), (2*n - 4)*(2*m - l))

  def test_tau_correction_is_added(self):
    row = find_row("odd-7")
    S = make_surface(row.surface)
    E, Q = row.bundle(4, 5, 50, 60), row.quotient_class(4, 5, 50, 60)
    self.assertEqual(tau_degree(S, E, Q, row.tau_correction) - tau_degree(S, E, Q), Fraction(3, 2))


class TestResidual(unittest.TestCase):
  def test_s1_split_example(self):
    report = residual(find_row("even-3"), 4, 2, 5, 7)
    self.assertEqual(report.lambda_, 34)
    self.assertEqual(report.delta, 271)
    self.assertEqual(report.residual, 6)
    self.assertEqual(report.expected, 6)
    self.assertTrue(report.passed)

  def test_s0_rows_vanish(self):
    for row_id in ("even-1", "even-2", "odd-1"):
      for n, l, m in [(3, 1, 1), (7, 50, 60), (12, 101, 3)]:
        self.assertEqual(residual(find_row(row_id), n, 0, l, m).residual, 0)

  def test_inadmissible(self):
    with self.assertRaises(InadmissibleParametersError) as e:
      residual(find_row("even-3"), 4, 4, 5, 7)
    self.assertIn("1 <= b <= n-1", str(e.exception))
    with self.assertRaises(InadmissibleParametersError) as e:
      residual(find_row("even-10"), 6, 6, 5, 7)
    self.assertIn("(mod 3)", str(e.exception))
    with self.assertRaises(InadmissibleParametersError):
      residual(find_row("odd-1"), 2, 0, 1, 1)

  def test_report_wire_format(self):
    record = residual(find_row("even-10"), 5, 5, 50, 60).to_dict()
    self.assertEqual(set(record), {"row", "n", "b", "l", "m", "lambda", "kappa", "delta", "mu_or_tau", "residual", "expected", "pass"})
    self.assertTrue(record["pass"])
    self.assertNotIn(".", record["lambda"])

  def test_b_range_completeness(self):
    for row in catalog():
      for n in range(3, 13):
        for b in range(-3, 4*n + 4):
          self.assertEqual(row.admits(n, b), B_RANGES[row.id](n, b), f"{row.id} n={n} b={b}")

  def test_genus_consistency(self):
    for row in catalog():
      if row.boundary is None: continue
      for n in range(3, 25):
        for b in row.admissible_b(n):
          label = row.boundary_label(n, b)
          self.assertTrue(label.satisfies(row.genus(n)), f"{row.id} n={n} b={b}: {label.violation(row.genus(n))}")


@pytest.mark.parametrize("row", catalog(), ids=lambda r: r.id)
def test_table_fidelity(row):
  reports = evaluate_row(row, 14)
  assert reports
  failures = [r for r in reports if not r.passed]
  assert not failures, failures[:3]


@st.composite
def row_points(draw):
  row = draw(st.sampled_from(catalog()))
  n = draw(st.integers(min_value=3, max_value=40))
  b = draw(st.sampled_from(row.admissible_b(n)))
  lm = st.fractions(min_value=-200, max_value=200, max_denominator=5)
  return row, n, b, (draw(lm), draw(lm)), (draw(lm), draw(lm))


@given(row_points())
def test_residual_independent_of_line_degrees(point):
  row, n, b, first, second = point
  a, c = residual(row, n, b, *first), residual(row, n, b, *second)
  assert a.residual == c.residual == a.expected


class TestPerturbation(unittest.TestCase):
  def test_perturbed_constants_fail(self):
    for row_id, field_name, value in [("even-5", "delta_adjustment", "0"), ("odd-7", "tau_correction", "2"), ("even-10", "chi_override", "0"),
                                      ("odd-2", "g1", "2*(n-b)"), ("even-8", "residual", "3*g1*g2 + 1")]:
      row = perturb_row(find_row(row_id), field_name, value)
      reports = evaluate_row(row, 8, [(50, 60)])
      self.assertTrue(any(not r.passed for r in reports), f"{row_id}.{field_name}={value}")

  def test_bad_field(self):
    with self.assertRaises(ValueError):
      perturb_row(find_row("even-3"), "surface", "S2")
    with self.assertRaises(ValueError):
      perturb_row(find_row("even-3"), "g1", "n*b")

  def test_fields_the_row_never_reads(self):
    for row_id, field_name, value in [("even-3", "tau_correction", "5"), ("even-7", "tau_correction", "1"), ("even-1", "g1", "n+7"),
                                      ("even-2", "g2", "b+3"), ("odd-1", "g2", "b+3")]:
      with self.assertRaises(ValueError) as e:
        perturb_row(find_row(row_id), field_name, value)
      self.assertIn(row_id, str(e.exception))

  def test_unchanged_value_rejected(self):
    for row_id, field_name, value in [("odd-3", "tau_correction", "2"), ("odd-7", "delta_adjustment", "2"), ("even-3", "g1", "2*n-2*b-2"),
                                      ("even-3", "residual", "3*g1*g2/2")]:
      with self.assertRaises(ValueError):
        perturb_row(find_row(row_id), field_name, value)

  def test_affine_parse(self):
    self.assertEqual(Affine.parse("2*n-(b+3)/2"), Affine(Fraction(-3, 2), Fraction(2), Fraction(-1, 2)))
    self.assertEqual(str(Affine.parse("2*(n-b)-2")), "2n-2b-2")


class TestAssembleClass(unittest.TestCase):
  def test_even_g4(self):
    assembly = assemble_class(Parity.EVEN, 4)
    self.assertEqual((assembly.lambda_coefficient, assembly.delta_coefficient, assembly.lead_coefficient), (34, 4, 2))
    self.assertTrue(assembly.nonnegative)
    self.assertEqual(assembly.uncovered, ())

  def test_odd_g5(self):
    assembly = assemble_class(Parity.ODD, 5)
    self.assertEqual((assembly.lambda_coefficient, assembly.delta_coefficient, assembly.lead_coefficient), (132, 16, 2))
    self.assertTrue(assembly.nonnegative)

  def test_delta1_with_rational_component(self):
    assembly = assemble_class(Parity.EVEN, 8)
    found = {(h.label.kind, h.label.g1, h.label.g2): h.coefficient for h in assembly.higher}
    self.assertEqual(found[(BoundaryType.DELTA1, 6, 0)], 0)
    self.assertEqual(found[(BoundaryType.HYP, 0, 8)], Fraction(8*6*9, 4))

  def test_nonnegative_and_complete(self):
    for g in list(range(4, 61, 2)) + list(range(5, 62, 2)):
      assembly = assemble_class(Parity.of_genus(g), g)
      self.assertTrue(assembly.nonnegative, f"g={g}")
      self.assertEqual(assembly.uncovered, (), f"g={g}")
      sharp = Fraction(7) + (Fraction(6, g) if g % 2 == 0 else Fraction(20, 3*g + 1))
      self.assertEqual(assembly.slope, sharp)

  def test_swapped_unordered_conflict(self):
    # one b each, so the two rows only meet through the (g1, g2) <-> (g2, g1) symmetry of Delta1
    original = replace(find_row("even-4"), b_range=BRange.of("2", "2"))
    swapped = replace(original, g1=Affine.parse("2*b-3"), g2=Affine.parse("2*(n-b)-1"), residual=ClosedForm("(3*g1*g2 + g1 + g2 + 1)/2"))
    with self.assertRaises(ArithmeticError) as e:
      assemble_class(Parity.EVEN, 8, [original, swapped])
    self.assertIn("Delta1", str(e.exception))
    assembly = assemble_class(Parity.EVEN, 8, [original, replace(swapped, residual=original.residual)])
    self.assertEqual([(h.label.g1, h.label.g2, h.coefficient) for h in assembly.higher], [(1, 5, 10), (5, 1, 10)])

  def test_bad_genus(self):
    for parity, g in [(Parity.EVEN, 5), (Parity.EVEN, 2), (Parity.ODD, 3), (Parity.ODD, 6)]:
      with self.assertRaises(ParityError):
        assemble_class(parity, g)


if __name__ == "__main__":
  unittest.main()
