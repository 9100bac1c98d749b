from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from trislope.helpers import VERSION


class ReportEnvelope(BaseModel):
  """What every command emits: its parameters, one record per check, and the overall verdict."""
  model_config = ConfigDict(populate_by_name=True)

  command: str
  parameters: Dict[str, Any]
  results: List[Dict[str, Any]]
  all_pass: bool = Field(alias="allPass")
  engine_version: str = Field(default=VERSION, alias="engineVersion")

  @model_validator(mode="after")
  def _verdict_matches_records(self) -> "ReportEnvelope":
    expected = all(record.get("pass", False) for record in self.results)
    if self.all_pass != expected:
      raise ValueError(f"allPass={self.all_pass} but the records say {expected}")
    return self

  @classmethod
  def build(cls, command: str, parameters: Dict[str, Any], results: List[Dict[str, Any]]) -> "ReportEnvelope":
    return cls(command=command, parameters=parameters, results=results, all_pass=all(r.get("pass", False) for r in results))

  @classmethod
  def from_json(cls, text: str) -> "ReportEnvelope":
    try:
      return cls.model_validate_json(text)
    except ValidationError as e:
      raise ValueError(f"Error validating report envelope: {e}") from e

  def to_json(self) -> str:
    return self.model_dump_json(by_alias=True, indent=2)

  @property
  def failures(self) -> List[Dict[str, Any]]:
    return [r for r in self.results if not r.get("pass", False)]
