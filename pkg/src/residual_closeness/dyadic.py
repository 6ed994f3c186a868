"""Exact dyadic rationals ``numerator / 2**exponent``.

Every closeness sum is a finite sum of powers of one half, so these values
compare exactly and render as terminating decimals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

__all__ = ["DyadicValue", "half_pow", "from_histogram"]

_Number = Union["DyadicValue", int]


@total_ordering
@dataclass(frozen=True, init=False)
class DyadicValue:
    """An exact value ``numerator / 2**exponent`` kept in canonical form.

    Canonical form means the numerator is odd, or the value is zero with
    exponent 0. Negative exponents are never stored; integers have
    exponent 0.
    """

    numerator: int
    exponent: int

    def __init__(self, numerator: int, exponent: int = 0) -> None:
        numerator = int(numerator)
        exponent = int(exponent)
        if numerator == 0:
            exponent = 0
        else:
            tz = (numerator & -numerator).bit_length() - 1
            shift = min(tz, exponent) if exponent > 0 else 0
            numerator >>= shift
            exponent -= shift
            if exponent < 0:
                numerator <<= -exponent
                exponent = 0
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    @classmethod
    def coerce(cls, value: _Number | Fraction) -> DyadicValue:
        if isinstance(value, DyadicValue):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        if isinstance(value, Fraction):
            den = value.denominator
            if den & (den - 1):
                raise ValueError(f"{value} is not a dyadic rational")
            return cls(value.numerator, den.bit_length() - 1)
        raise TypeError(f"cannot convert {type(value).__name__} to DyadicValue")

    def _aligned(self, other: DyadicValue) -> tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        return (
            self.numerator << (e - self.exponent),
            other.numerator << (e - other.exponent),
            e,
        )

    def __add__(self, other: _Number) -> DyadicValue:
        if not isinstance(other, (DyadicValue, int)):
            return NotImplemented
        a, b, e = self._aligned(DyadicValue.coerce(other))
        return DyadicValue(a + b, e)

    __radd__ = __add__

    def __sub__(self, other: _Number) -> DyadicValue:
        if not isinstance(other, (DyadicValue, int)):
            return NotImplemented
        a, b, e = self._aligned(DyadicValue.coerce(other))
        return DyadicValue(a - b, e)

    def __rsub__(self, other: _Number) -> DyadicValue:
        if not isinstance(other, (DyadicValue, int)):
            return NotImplemented
        return DyadicValue.coerce(other) - self

    def __neg__(self) -> DyadicValue:
        return DyadicValue(-self.numerator, self.exponent)

    def __mul__(self, other: _Number) -> DyadicValue:
        if not isinstance(other, (DyadicValue, int)):
            return NotImplemented
        other = DyadicValue.coerce(other)
        return DyadicValue(
            self.numerator * other.numerator, self.exponent + other.exponent
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = DyadicValue(other)
        elif isinstance(other, Fraction):
            return self.to_fraction() == other
        if not isinstance(other, DyadicValue):
            return NotImplemented
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __lt__(self, other: _Number) -> bool:
        if not isinstance(other, (DyadicValue, int)):
            return NotImplemented
        a, b, _ = self._aligned(DyadicValue.coerce(other))
        return a < b

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __bool__(self) -> bool:
        return self.numerator != 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def decimal(self) -> str:
        """Exact decimal rendering; dyadics always terminate."""
        sign = "-" if self.numerator < 0 else ""
        mag = abs(self.numerator)
        if self.exponent == 0:
            return f"{sign}{mag}"
        scaled = str(mag * 5**self.exponent).rjust(self.exponent + 1, "0")
        whole, frac = scaled[: -self.exponent], scaled[-self.exponent :]
        return f"{sign}{whole}.{frac.rstrip('0')}"

    def to_json(self) -> dict:
        return {
            "decimal": self.decimal(),
            "numerator": self.numerator,
            "exponent": self.exponent,
        }

    def __str__(self) -> str:
        return self.decimal()

    def __repr__(self) -> str:
        return f"DyadicValue({self.numerator}, {self.exponent})"


def half_pow(d: int) -> DyadicValue:
    """Return ``2**-d`` for ``d >= 0``."""
    if d < 0:
        raise ValueError("exponent must be non-negative")
    return DyadicValue(1, d)


def from_histogram(hist: dict[int, int] | list[int]) -> DyadicValue:
    """Sum ``count * 2**-d`` over a distance histogram in one integer pass."""
    items = hist.items() if isinstance(hist, dict) else enumerate(hist)
    items = [(d, c) for d, c in items if c]
    if not items:
        return DyadicValue(0)
    top = max(d for d, _ in items)
    return DyadicValue(sum(c << (top - d) for d, c in items), top)
