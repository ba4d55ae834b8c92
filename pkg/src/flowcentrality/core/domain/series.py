from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field, model_validator

Scalar = int | Fraction | float


class Arithmetic(Enum):
    INTEGER = "integer"
    RATIONAL = "rational"
    FLOAT = "float"

    @property
    def exact(self) -> bool:
        return self is not Arithmetic.FLOAT

    def coerce(self, value: Any) -> Scalar:
        if self is Arithmetic.INTEGER:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"Non-integral coefficient {value}")
                return int(value.numerator)
            if isinstance(value, float) and not value.is_integer():
                raise ValueError(f"Non-integral coefficient {value}")
            return int(value)
        if self is Arithmetic.RATIONAL:
            return Fraction(value)
        return float(value)

    def join(self, other: Arithmetic) -> Arithmetic:
        order = [Arithmetic.INTEGER, Arithmetic.RATIONAL, Arithmetic.FLOAT]
        return max(self, other, key=order.index)


class PowerSeries(BaseModel, frozen=True):
    """Truncated formal power series c_0 + c_1 z + ... + c_L z^L.

    Polynomials such as det(I - zA) are series whose order is their degree.
    """

    coeffs: tuple[Any, ...] = Field(min_length=1)
    arithmetic: Arithmetic = Field(default=Arithmetic.FLOAT)

    @model_validator(mode="before")
    @classmethod
    def coerce_coefficients(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        arithmetic = Arithmetic(data.get("arithmetic", Arithmetic.FLOAT))
        coeffs = tuple(arithmetic.coerce(c) for c in data.get("coeffs", ()))
        return {**data, "coeffs": coeffs, "arithmetic": arithmetic}

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Scalar:
        if k < 0:
            raise IndexError(f"Negative coefficient index {k}")
        return self.coeffs[k] if k < len(self.coeffs) else self.arithmetic.coerce(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> PowerSeries:
        coeffs = [self[k] for k in range(order + 1)]
        return PowerSeries(coeffs=tuple(coeffs), arithmetic=self.arithmetic)

    def multiply(self, other: PowerSeries, order: int) -> PowerSeries:
        arithmetic = self.arithmetic.join(other.arithmetic)
        zero = arithmetic.coerce(0)
        out = [zero] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: order + 1 - i]):
                out[i + j] += a * b
        return PowerSeries(coeffs=tuple(out), arithmetic=arithmetic)

    def derivative(self) -> PowerSeries:
        if self.order == 0:
            return PowerSeries(coeffs=(0,), arithmetic=self.arithmetic)
        coeffs = tuple(k * c for k, c in enumerate(self.coeffs) if k > 0)
        return PowerSeries(coeffs=coeffs, arithmetic=self.arithmetic)

    def evaluate(self, z: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def degree(self) -> int:
        for k in range(self.order, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return 0

    def as_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def format(self) -> str:
        return " ".join(str(c) for c in self.coeffs)
