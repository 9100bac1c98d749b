from .bundle import BundleKind, BundleSpec, ChernData, chern
from .invariants import CoverInvariants, adjust_delta, cubic_form_summands, fiber_degrees, is_balanced, kappa_lambda

__all__ = [
  "BundleKind", "BundleSpec", "ChernData", "chern", "CoverInvariants", "adjust_delta", "cubic_form_summands", "fiber_degrees", "is_balanced",
  "kappa_lambda"
]
