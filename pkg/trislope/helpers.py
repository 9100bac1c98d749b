import os
import sys
from fractions import Fraction
from typing import Union

DEBUG = int(os.getenv("DEBUG", default="0"))
VERSION = "0.1.0"

trislope_text = r"""
 _        _     _
| |_ _ __(_)___| | ___  _ __   ___
| __| '__| / __| |/ _ \| '_ \ / _ \
| |_| |  | \__ \ | (_) | |_) |  __/
 \__|_|  |_|___/_|\___/| .__/ \___|
                       |_|
"""

RationalLike = Union[Fraction, int, str]


def set_debug_level(level: int) -> None:
  global DEBUG
  DEBUG = level


def debug_print(level: int, message: str) -> None:
  # stdout is reserved for reports
  if DEBUG >= level: print(message, file=sys.stderr)


def to_rational(value: RationalLike) -> Fraction:
  if isinstance(value, Fraction): return value
  if isinstance(value, bool): raise TypeError(f"Refusing to read a bool as a rational: {value!r}")
  if isinstance(value, (int, str)): return Fraction(value)
  raise TypeError(f"Unsupported rational value {value!r} of type {type(value).__name__}")


def format_rational(value: Fraction) -> str:
  """Wire format: "p/q" in lowest terms, bare "p" for integers."""
  value = to_rational(value)
  if value.denominator == 1: return str(value.numerator)
  return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
  text = text.strip()
  if not text: raise ValueError("Empty rational literal")
  if "." in text or "e" in text.lower(): raise ValueError(f"Rationals are exchanged as 'p/q', got {text!r}")
  return Fraction(text)


def print_trislope():
  print(trislope_text, file=sys.stderr)
