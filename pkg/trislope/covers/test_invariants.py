import unittest
from fractions import Fraction

from hypothesis import given, strategies as st

from trislope.chow import DivisorClass, SurfaceId, make_surface
from trislope.covers import BundleKind, BundleSpec, adjust_delta, chern, cubic_form_summands, is_balanced, kappa_lambda
from trislope.errors import SurfaceMismatchError


def s1_split(n, b, l, m):
  S = make_surface(SurfaceId.S1)
  return S, BundleSpec.split(S.divisor(s=n, Finf=-b, F=l), S.divisor(s=n, Finf=-b, F=m))


class TestChern(unittest.TestCase):
  def test_s0_balanced_square(self):
    S = make_surface(SurfaceId.S0)
    n, l = 5, 7
    data = chern(S, BundleSpec.split(S.divisor(s=n, F=l), S.divisor(s=n, F=l)))
    self.assertEqual(data.c1sq, 8*n*l)
    self.assertEqual(data.c2, 2*n*l)
    self.assertEqual(data.c1_dot_omega, -4*l)
    self.assertEqual(data.c1, S.divisor(s=2*n, F=2*l))

  def test_s1_split(self):
    n, b, l, m = 6, 2, 11, 13
    S, E = s1_split(n, b, l, m)
    data = chern(S, E)
    self.assertEqual(data.c2, n*(l + m) - b*b)
    self.assertEqual(data.c1sq, 4*n*(l + m) - 4*b*b)
    self.assertEqual(data.c1_dot_omega, 2*b - 2*(l + m))

  def test_zero_summand(self):
    for surface_id in SurfaceId:
      S = make_surface(surface_id)
      self.assertEqual(chern(S, BundleSpec.split(S.omega, S.zero())).c2, 0)

  def test_kind_does_not_change_chern_data(self):
    S = make_surface(SurfaceId.S2)
    sub, quotient = S.divisor(s=4, Finf=-3, F=9), S.divisor(s=4, F=5)
    self.assertEqual(chern(S, BundleSpec.split(sub, quotient)), chern(S, BundleSpec.extension(sub, quotient)))

  def test_surface_mismatch(self):
    S0, S1 = make_surface(SurfaceId.S0), make_surface(SurfaceId.S1)
    with self.assertRaises(SurfaceMismatchError):
      BundleSpec.split(S0.section, S1.section)
    with self.assertRaises(SurfaceMismatchError):
      chern(S1, BundleSpec.split(S0.section, S0.section))


class TestKappaLambda(unittest.TestCase):
  def test_even_sweeping_family(self):
    S = make_surface(SurfaceId.S0)
    for n in range(3, 12):
      g = 2*n - 2
      inv = kappa_lambda(S, BundleSpec.split(S.divisor(s=n, F=1), S.divisor(s=n, F=1)))
      self.assertEqual((inv.lambda_, inv.kappa, inv.delta_raw), (g, 5*g - 6, 7*g + 6))

  def test_odd_sweeping_family(self):
    S = make_surface(SurfaceId.S0)
    for n in range(3, 12):
      inv = kappa_lambda(S, BundleSpec.split(S.divisor(s=n, F=1), S.divisor(s=n + 1, F=2)))
      self.assertEqual((inv.lambda_, inv.kappa, inv.delta_raw), (3*n - 1, 15*n - 15, 21*n + 3))

  def test_s1_split_family(self):
    for n, b, l, m in [(4, 2, 5, 7), (9, 3, 50, 60), (12, 11, 101, 103)]:
      S, E = s1_split(n, b, l, m)
      inv = kappa_lambda(S, E)
      self.assertEqual(inv.lambda_, (n - 1)*(l + m) - b*b + b)
      self.assertEqual(inv.kappa, (5*n - 8)*(l + m) - 5*b*b + 8*b - 3)
      self.assertEqual(inv.delta_raw, (7*n - 4)*(l + m) - 7*b*b + 4*b + 3)
      self.assertEqual(inv.chi_total, 0)

  def test_chi_total_defaults(self):
    for surface_id, expected in [(SurfaceId.S0, 0), (SurfaceId.S1, 0), (SurfaceId.S2, 0), (SurfaceId.S3, Fraction(-2, 9))]:
      S = make_surface(surface_id)
      inv = kappa_lambda(S, BundleSpec.split(S.divisor(s=3, F=4), S.divisor(s=3, F=5)))
      self.assertEqual(inv.chi_total, expected)

  def test_chi_override(self):
    S = make_surface(SurfaceId.S3)
    E = BundleSpec.split(S.divisor(s=3, F=4), S.divisor(s=3, F=5))
    default, pinned = kappa_lambda(S, E), kappa_lambda(S, E, chi_override=0)
    self.assertEqual(pinned.lambda_ - default.lambda_, Fraction(2, 9))
    self.assertEqual(pinned.kappa, default.kappa)

  def test_adjust_delta(self):
    S, E = s1_split(4, 2, 5, 7)
    inv = kappa_lambda(S, E)
    self.assertEqual(inv.delta_adjusted, inv.delta_raw)
    for adjustment in (0, 1, 2, 3):
      adjusted = adjust_delta(inv, adjustment)
      self.assertEqual(adjusted.delta_adjusted, inv.delta_raw - adjustment)
      self.assertEqual(adjusted.delta_raw, 12*adjusted.lambda_ - adjusted.kappa)


class TestCubicForms(unittest.TestCase):
  def test_odd_sweeping_summands(self):
    S = make_surface(SurfaceId.S0)
    n = 5
    summands = cubic_form_summands(S, BundleSpec.split(S.divisor(s=n, F=1), S.divisor(s=n + 1, F=2)))
    self.assertEqual(summands, [S.divisor(s=n - 1), S.divisor(s=n, F=1), S.divisor(s=n + 1, F=2), S.divisor(s=n + 2, F=3)])

  def test_extension_has_no_splitting(self):
    S = make_surface(SurfaceId.S0)
    with self.assertRaises(ValueError):
      cubic_form_summands(S, BundleSpec.extension(S.divisor(s=2), S.divisor(s=4)))

  def test_balance(self):
    S = make_surface(SurfaceId.S0)
    n, l, m = 6, 3, 8
    self.assertTrue(is_balanced(S, BundleSpec.split(S.divisor(s=n, F=l), S.divisor(s=n, F=m))))
    self.assertTrue(is_balanced(S, BundleSpec.split(S.divisor(s=n + 1, F=l), S.divisor(s=n, F=m))))
    self.assertFalse(is_balanced(S, BundleSpec.extension(S.divisor(s=n - 1, F=l), S.divisor(s=n + 1, F=m))))
    self.assertEqual(BundleSpec.extension(S.section, S.fiber).kind, BundleKind.EXTENSION)


rationals = st.fractions(min_value=-100, max_value=100, max_denominator=6)
parameters = st.tuples(st.integers(min_value=3, max_value=40), st.integers(min_value=0, max_value=40), rationals, rationals, rationals, rationals)


@given(parameters)
def test_invariants_affine_in_line_degrees(p):
  n, b, l, m, l2, m2 = p

  def values(l, m):
    inv = kappa_lambda(*s1_split(n, b, l, m))
    return inv.lambda_, inv.kappa, inv.delta_raw

  base, moved_l, moved_m, moved_both = values(l, m), values(l2, m), values(l, m2), values(l2, m2)
  for k in range(3):
    assert moved_both[k] == moved_l[k] + moved_m[k] - base[k]


@st.composite
def bundles(draw):
  surface_id = draw(st.sampled_from(list(SurfaceId)))
  size = 2 if surface_id == SurfaceId.S0 else 3
  first = DivisorClass(surface_id, tuple(draw(st.lists(rationals, min_size=size, max_size=size))))
  second = DivisorClass(surface_id, tuple(draw(st.lists(rationals, min_size=size, max_size=size))))
  return make_surface(surface_id), BundleSpec(draw(st.sampled_from(list(BundleKind))), first, second)


@given(bundles(), st.sampled_from([0, 1, 2, 3]))
def test_delta_raw_is_twelve_lambda_minus_kappa(data, adjustment):
  S, E = data
  inv = adjust_delta(kappa_lambda(S, E), adjustment)
  assert inv.delta_raw == 12*inv.lambda_ - inv.kappa
  assert inv.delta_adjusted == inv.delta_raw - adjustment


if __name__ == "__main__":
  unittest.main()
