"""Exact coefficient rings: the integers, the rationals and the field with two elements.

Values are stored as plain Python numbers in canonical form (``int`` for
``Z`` and ``F2``, :class:`fractions.Fraction` for ``Q``) so that equality of
canonical values is structural.  :class:`Coefficient` pairs a value with its
ring for callers that want ring checking on every operation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import InvalidInputError, RingMismatchError

__all__ = ["CoeffRing", "Coefficient", "coeff_add", "coeff_mul"]


class CoeffRing(str, enum.Enum):
    INTEGERS = "Z"
    RATIONALS = "Q"
    F2 = "F2"

    @classmethod
    def parse(cls, name: "str | CoeffRing") -> "CoeffRing":
        if isinstance(name, CoeffRing):
            return name
        try:
            return cls(name)
        except ValueError:
            raise InvalidInputError(f"unknown coefficient ring {name!r}") from None

    def canon(self, value):
        """Bring an exact scalar into this ring's canonical form."""
        if isinstance(value, Coefficient):
            if value.ring is not self:
                raise RingMismatchError(f"coefficient in {value.ring.value}, expected {self.value}")
            return value.value
        if isinstance(value, bool) or not isinstance(value, Rational):
            raise InvalidInputError(f"not an exact scalar: {value!r}")
        if self is CoeffRing.RATIONALS:
            value = Fraction(value)
            return int(value) if value.denominator == 1 else value
        if isinstance(value, Fraction) and value.denominator != 1:
            if self is CoeffRing.F2 and value.denominator % 2:
                return (value.numerator * pow(value.denominator, -1, 2)) % 2
            raise InvalidInputError(f"{value} is not an element of {self.value}")
        value = int(value)
        return value % 2 if self is CoeffRing.F2 else value

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    @property
    def characteristic(self) -> int:
        return 2 if self is CoeffRing.F2 else 0

    def format(self, value) -> str:
        return str(value)


@dataclass(frozen=True)
class Coefficient:
    """An exact scalar tagged with the ring it lives in."""

    ring: CoeffRing
    value: object = 0

    def __post_init__(self):
        object.__setattr__(self, "ring", CoeffRing.parse(self.ring))
        object.__setattr__(self, "value", self.ring.canon(self.value))

    def _check(self, other: "Coefficient") -> None:
        if not isinstance(other, Coefficient):
            raise TypeError(f"expected Coefficient, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingMismatchError(f"cannot combine {self.ring.value} with {other.ring.value}")

    def __add__(self, other: "Coefficient") -> "Coefficient":
        self._check(other)
        return Coefficient(self.ring, self.value + other.value)

    def __mul__(self, other: "Coefficient") -> "Coefficient":
        self._check(other)
        return Coefficient(self.ring, self.value * other.value)

    def __neg__(self) -> "Coefficient":
        return Coefficient(self.ring, -self.value)

    def __sub__(self, other: "Coefficient") -> "Coefficient":
        return self + (-other)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.ring.format(self.value)


def coeff_add(a: Coefficient, b: Coefficient) -> Coefficient:
    return a + b


def coeff_mul(a: Coefficient, b: Coefficient) -> Coefficient:
    return a * b
