"""Exact membership degrees.

A degree is a rational number in [0, 1], represented as `fractions.Fraction`.
Degrees enter the system as finite decimal strings with at most nine
fractional digits and parse without rounding; internal arithmetic is unbounded
exact rational. Floats are rejected everywhere: `float("0.1")` is not 1/10,
and a single inexact value would poison tie-sensitive verdicts such as mean
equality.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DegreeError

#: Maximum number of fractional digits accepted on input.
MAX_FRACTION_DIGITS = 9

_SCALE = 10**MAX_FRACTION_DIGITS

_DECIMAL = re.compile(r"^(\d+)(?:\.(\d+))?$")

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_degree(text: str) -> Fraction:
    """Parse a decimal string into an exact degree.

    "0.45" -> 9/20, "1" -> 1.  Raises DegreeError on malformed text, more
    than nine fractional digits, or a value outside [0, 1].
    """
    if not isinstance(text, str):
        raise DegreeError(f"degree must be a decimal string, got {type(text).__name__}")
    m = _DECIMAL.match(text.strip())
    if m is None:
        raise DegreeError(f"malformed degree {text!r}: expected a plain decimal like 0.45")
    whole, frac = m.group(1), m.group(2) or ""
    if len(frac) > MAX_FRACTION_DIGITS:
        raise DegreeError(
            f"degree {text!r} has {len(frac)} fractional digits; at most "
            f"{MAX_FRACTION_DIGITS} are accepted"
        )
    value = Fraction(int(whole + frac), 10 ** len(frac))
    if value > ONE:
        raise DegreeError(f"degree {text!r} is outside [0, 1]")
    return value


def coerce_degree(value) -> Fraction:
    """Accept a degree given as str, int, or Fraction; validate the range.

    Floats are refused on purpose — pass the decimal as a string instead.
    """
    if isinstance(value, str):
        return parse_degree(value)
    if isinstance(value, bool):
        raise DegreeError("degree must be a number, not a bool")
    if isinstance(value, float):
        raise DegreeError(
            f"float degrees are inexact; pass {value!r} as a string, e.g. '{value!r}'"
        )
    if isinstance(value, int):
        value = Fraction(value)
    if not isinstance(value, Fraction):
        raise DegreeError(f"cannot use {type(value).__name__} as a degree")
    if value < ZERO or value > ONE:
        raise DegreeError(f"degree {value} is outside [0, 1]")
    return value


def format_degree(value: Fraction) -> str:
    """Render a degree as its minimal exact decimal ("0.45", "1", "0.125").

    Only defined for denominators dividing 10**9, which covers everything a
    document or the generator grid can produce.
    """
    if _SCALE % value.denominator:
        raise DegreeError(f"{value} has no exact decimal form within {MAX_FRACTION_DIGITS} digits")
    scaled = value.numerator * (_SCALE // value.denominator)
    whole, frac = divmod(scaled, _SCALE)
    if frac == 0:
        return str(whole)
    return f"{whole}.{frac:09d}".rstrip("0")


def render_rational(value: Fraction, places: int = 4) -> str:
    """Exact fraction plus a decimal rendering, for human-readable traces.

    Terminating decimals print exactly ("9/20 = 0.45"); non-terminating ones
    print an approximation ("8/15 ≈ 0.5333").
    """
    if value.denominator == 1:
        return str(value.numerator)
    try:
        return f"{value.numerator}/{value.denominator} = {format_degree(value)}"
    except DegreeError:
        approx = float(value)
        return f"{value.numerator}/{value.denominator} ≈ {approx:.{places}f}"
