from fractions import Fraction
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from trislope.catalog import Parity, check_genus
from trislope.helpers import format_rational, parse_rational

FormatName = Literal["text", "csv", "json"]
LmSample = Tuple[Fraction, Fraction]


def parse_lm_sample(text: str) -> LmSample:
  """'50,60' -> (50, 60); each side may be a p/q rational."""
  parts = text.split(",")
  if len(parts) != 2:
    raise ValueError(f"An (l, m) sample is written 'L,M', got {text!r}")
  return parse_rational(parts[0]), parse_rational(parts[1])


def parse_perturbation(text: str) -> Tuple[str, str, str]:
  """'even-6:delta_adjustment=1' -> ('even-6', 'delta_adjustment', '1')."""
  row_id, sep, assignment = text.partition(":")
  field_name, eq, value = assignment.partition("=")
  if not sep or not eq or not row_id or not field_name or not value:
    raise ValueError(f"A perturbation is written ROW:FIELD=VALUE, got {text!r}")
  return row_id.strip(), field_name.strip(), value.strip()


class CommandConfig(BaseModel):
  model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

  format: FormatName = "text"
  workers: int = Field(default=1, ge=1, le=64)


class TablesConfig(CommandConfig):
  parity: Literal["even", "odd", "all"] = "all"
  n_max: int = Field(default=30, ge=3)
  lm_samples: List[LmSample] = Field(min_length=1)

  @property
  def parity_filter(self) -> Optional[Parity]:
    return None if self.parity == "all" else Parity(self.parity)

  def parameters(self):
    return {"parity": self.parity, "n_max": self.n_max, "lm_samples": [[format_rational(l), format_rational(m)] for l, m in self.lm_samples]}


class VerifyConfig(CommandConfig):
  n_max: int = Field(default=30, ge=3)
  perturb: List[Tuple[str, str, str]] = Field(default_factory=list)

  def parameters(self):
    return {"n_max": self.n_max, "perturb": [f"{r}:{f}={v}" for r, f, v in self.perturb]}


class ChiConfig(CommandConfig):
  n: int = Field(ge=2)
  a: int
  b: int
  precision: int = Field(default=30, ge=15)

  def parameters(self):
    return {"n": self.n, "a": self.a, "b": self.b, "precision": self.precision}


class ClassConfig(CommandConfig):
  parity: Literal["even", "odd"]
  g: int

  @model_validator(mode="after")
  def _genus_matches_parity(self) -> "ClassConfig":
    check_genus(Parity(self.parity), self.g)
    return self

  def parameters(self):
    return {"parity": self.parity, "g": self.g}


class SweepConfig(CommandConfig):
  g_min: int = Field(default=4, ge=4)
  g_max: int = Field(default=20, ge=4)

  @model_validator(mode="after")
  def _ordered_range(self) -> "SweepConfig":
    if self.g_min > self.g_max:
      raise ValueError(f"--g-min ({self.g_min}) must not exceed --g-max ({self.g_max})")
    return self

  def parameters(self):
    return {"g_min": self.g_min, "g_max": self.g_max}
