"""Exact dyadic rationals.

Every coefficient produced by the Witt basis and by the 1/2^m Hadamard factor
has the form n * 2^e, so a Scalar stores exactly that pair. The canonical form
keeps the numerator odd (or the value zero with exponent 0), which makes
equality a plain field comparison and the zero test exact.
"""

from app.src.algebra.algebra_errors import ExpressionParseError
from typing import Union
import re


_SCALAR_FORMAT = re.compile(
    r"""
    \A\s*
    (?P<num>[-+]?\d+)
    (?:/(?:2\^(?P<exp>\d+)|(?P<den>\d+)))?
    \s*\Z
    """,
    re.VERBOSE,
)


class Scalar:
    """Immutable value numerator * 2**exponent in canonical form."""

    __slots__ = ("_numerator", "_exponent")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        numerator = int(numerator)
        exponent = int(exponent)
        if numerator == 0:
            exponent = 0
        else:
            shift = (numerator & -numerator).bit_length() - 1
            numerator >>= shift
            exponent += shift
        object.__setattr__(self, "_numerator", numerator)
        object.__setattr__(self, "_exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @property
    def numerator(self) -> int:
        return self._numerator

    @property
    def exponent(self) -> int:
        return self._exponent

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse "n", "n/d" (d a power of two) or "n/2^k"."""
        match = _SCALAR_FORMAT.match(text)
        if match is None:
            raise ExpressionParseError(f"Invalid scalar literal: {text!r}")

        numerator = int(match.group("num"))
        if match.group("exp") is not None:
            return cls(numerator, -int(match.group("exp")))

        if match.group("den") is not None:
            den = int(match.group("den"))
            if den <= 0 or den & (den - 1):
                raise ExpressionParseError(
                    f"Denominator must be a power of two: {text!r}"
                )
            return cls(numerator, -(den.bit_length() - 1))

        return cls(numerator)

    def scale2(self, k: int) -> "Scalar":
        """Multiply by 2**k exactly."""
        return Scalar(self._numerator, self._exponent + k)

    def sign(self) -> int:
        return (self._numerator > 0) - (self._numerator < 0)

    def is_zero(self) -> bool:
        return self._numerator == 0

    def _add(self, other: "Scalar") -> "Scalar":
        if self._numerator == 0:
            return other
        if other._numerator == 0:
            return self
        low = min(self._exponent, other._exponent)
        return Scalar(
            (self._numerator << (self._exponent - low))
            + (other._numerator << (other._exponent - low)),
            low,
        )

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._add(-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other._add(-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(
            self._numerator * other._numerator, self._exponent + other._exponent
        )

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":
        return Scalar(-self._numerator, self._exponent)

    def __pos__(self) -> "Scalar":
        return self

    def __abs__(self) -> "Scalar":
        return Scalar(abs(self._numerator), self._exponent)

    def __bool__(self) -> bool:
        return self._numerator != 0

    def __float__(self) -> float:
        if self._exponent >= 0:
            return float(self._numerator << self._exponent)
        return self._numerator / (1 << -self._exponent)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (
            self._numerator == other._numerator
            and self._exponent == other._exponent
        )

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() >= 0

    def __hash__(self) -> int:
        if self._exponent >= 0:
            return hash(self._numerator << self._exponent)
        return hash((self._numerator, self._exponent))

    def __str__(self) -> str:
        if self._exponent >= 0:
            return str(self._numerator << self._exponent)
        return f"{self._numerator}/{1 << -self._exponent}"

    def __repr__(self) -> str:
        return f"Scalar({self._numerator}, {self._exponent})"


ZERO = Scalar(0)
ONE = Scalar(1)
HALF = Scalar(1, -1)

Coefficient = Union[Scalar, float]


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Scalar(value)
    return NotImplemented


def coerce(value, mode: str = "exact") -> Coefficient:
    """Turn an int/Scalar/float into the coefficient type of ``mode``."""
    match mode:
        case "float":
            return float(value)
        case "exact":
            if isinstance(value, float):
                raise TypeError("Exact mode does not accept float coefficients")
            return _coerce(value)
        case _:
            raise ValueError(f"Unknown scalar mode: {mode}")


def add(a: Coefficient, b: Coefficient) -> Coefficient:
    return a + b


class MultiplicationCounter:
    """Tally of scalar multiplications.

    A counter is owned by one caller; parallel branches each get their own and
    are combined with ``merge``. Additions and sign flips are never counted.
    """

    def __init__(self, enabled: bool = True):
        self.enabled = enabled
        self.count = 0

    def tally(self, n: int = 1):
        if self.enabled:
            self.count += n

    def reset(self):
        self.count = 0

    def merge(self, other: "MultiplicationCounter") -> "MultiplicationCounter":
        merged = MultiplicationCounter(self.enabled or other.enabled)
        merged.count = self.count + other.count
        return merged

    def __repr__(self) -> str:
        return f"MultiplicationCounter(count={self.count}, enabled={self.enabled})"


def mul(
    a: Coefficient, b: Coefficient, counter: MultiplicationCounter | None = None
) -> Coefficient:
    if counter is not None:
        counter.tally()
    return a * b
