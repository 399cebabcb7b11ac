from app.src.algebra.algebra_errors import DimensionMismatchError, ExpressionParseError
from app.src.algebra.scalar import Coefficient, Scalar
from typing import Iterator, Mapping
from types import MappingProxyType


class SparseMultivector:
    """Sparse map from integer basis keys to nonzero coefficients.

    Subclasses fix the meaning of the keys (gamma bitmasks or packed EFB slots)
    and provide the key <-> token conversions used by the text format.
    """

    basis_name = "abstract"

    def __init__(self, m: int, terms: Mapping[int, Coefficient] | None = None):
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        self._m = m
        self._terms: dict[int, Coefficient] = {}
        for key, value in (terms or {}).items():
            self._check_key(key)
            if isinstance(value, int):
                value = Scalar(value)
            if value:
                self._terms[key] = value

    @property
    def m(self) -> int:
        return self._m

    @property
    def terms(self) -> Mapping[int, Coefficient]:
        return MappingProxyType(self._terms)

    @classmethod
    def _from_clean(cls, m: int, terms: dict[int, Coefficient]):
        """Wrap an already validated, zero-free dict without copying."""
        obj = cls.__new__(cls)
        obj._m = m
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, m: int):
        return cls._from_clean(m, {})

    @classmethod
    def basis_size(cls, m: int) -> int:
        return 1 << (2 * m)

    def _check_key(self, key: int):
        if not 0 <= key < self.basis_size(self._m):
            raise ValueError(f"Basis key {key} out of range for m={self._m}")

    def _check_same(self, other: "SparseMultivector"):
        if type(other) is not type(self):
            raise TypeError(
                f"Cannot combine {self.basis_name} and {other.basis_name} multivectors"
            )
        if other._m != self._m:
            raise DimensionMismatchError(
                f"Operands live in different algebras: m={self._m} and m={other._m}"
            )

    def coefficient(self, key: int) -> Coefficient:
        return self._terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[int, Coefficient]]:
        return iter(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other):
        self._check_same(other)
        result = dict(self._terms)
        for key, value in other._terms.items():
            total = result.get(key, 0) + value
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return self._from_clean(self._m, result)

    def __neg__(self):
        return self._from_clean(self._m, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor: Coefficient):
        if not factor:
            return self.zero(self._m)
        return self._from_clean(
            self._m, {k: v * factor for k, v in self._terms.items()}
        )

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._m == other._m and self._terms == other._terms

    __hash__ = None

    # text format: terms joined by " + ", each "coef*tokens"

    def _key_tokens(self, key: int) -> str:
        raise NotImplementedError

    @classmethod
    def _parse_tokens(cls, tokens: list[str], m: int) -> int:
        raise NotImplementedError

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{value}*{self._key_tokens(key)}" for key, value in self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(m={self._m}, '{self}')"

    @classmethod
    def parse(cls, text: str, m: int):
        text = text.strip()
        if text == "0":
            return cls.zero(m)
        if not text:
            raise ExpressionParseError("Empty multivector expression")

        result: dict[int, Coefficient] = {}
        for term in text.split(" + "):
            coef_text, sep, token_text = term.strip().partition("*")
            if not sep:
                raise ExpressionParseError(
                    f"Term {term!r} must have the form 'coef*tokens'"
                )
            coef = Scalar.parse(coef_text)
            key = cls._parse_tokens(token_text.split(), m)
            total = result.get(key, 0) + coef
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return cls._from_clean(m, result)


def collect(m: int, cls, pairs) -> SparseMultivector:
    """Build a multivector from (key, coefficient) pairs, summing repeats."""
    result: dict[int, Coefficient] = {}
    for key, value in pairs:
        total = result.get(key, 0) + value
        if total:
            result[key] = total
        else:
            result.pop(key, None)
    return cls._from_clean(m, result)
