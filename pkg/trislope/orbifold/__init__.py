from .chi import (
  METHODS,
  ChiQuery,
  character_sum,
  character_sum_closed_form,
  chi,
  chi_numeric_oracle,
  oracle_deviation,
  orbi_correction,
)

__all__ = [
  "METHODS",
  "ChiQuery",
  "character_sum",
  "character_sum_closed_form",
  "chi",
  "chi_numeric_oracle",
  "oracle_deviation",
  "orbi_correction",
]
