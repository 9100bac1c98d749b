from .boundary import BoundaryLabel, BoundaryType, Parity, admissible_labels
from .rows import (
  EVEN_ROWS,
  ODD_ROWS,
  PERTURBABLE_FIELDS,
  Affine,
  BRange,
  ClosedForm,
  LineSpec,
  MuRule,
  TestCurveRow,
  catalog,
  find_row,
  perturb_row,
)
from .residual import DEFAULT_LM_SAMPLES, ResidualCoefficients, RowReport, evaluate_row, mu_degree, residual, residual_coefficients, tau_degree
from .assemble import ClassAssembly, HigherCoefficient, assemble_class, check_genus

__all__ = [
  "BoundaryLabel", "BoundaryType", "Parity", "admissible_labels", "EVEN_ROWS", "ODD_ROWS", "PERTURBABLE_FIELDS", "Affine", "BRange", "ClosedForm",
  "LineSpec", "MuRule", "TestCurveRow", "catalog", "find_row", "perturb_row", "DEFAULT_LM_SAMPLES", "ResidualCoefficients", "RowReport",
  "evaluate_row", "mu_degree", "residual", "residual_coefficients", "tau_degree", "ClassAssembly", "HigherCoefficient", "assemble_class",
  "check_genus"
]
