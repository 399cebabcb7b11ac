"""Standard gamma basis of Cl(m,m).

Basis blades are bitmasks over 2m bits: bit i-1 is set when gamma_i is a
factor. Signature is alternating, gamma_{2i-1}^2 = 1 and gamma_{2i}^2 = -1.
This is the direct, every-pair product used as the oracle for the EFB.
"""

from app.src.algebra.algebra_errors import DimensionMismatchError, ExpressionParseError, IndexOutOfRangeError
from app.src.algebra.scalar import Coefficient, MultiplicationCounter, Scalar, coerce, mul
from app.src.algebra.multivector import SparseMultivector
from dataclasses import dataclass
from functools import lru_cache
import logging
import random


logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def negative_square_mask(m: int) -> int:
    """Bits of gamma_2, gamma_4, ..., gamma_2m (the generators squaring to -1)."""
    mask = 0
    for i in range(m):
        mask |= 1 << (2 * i + 1)
    return mask


def generator_square(i: int, m: int | None = None) -> Scalar:
    if i < 1 or (m is not None and i > 2 * m):
        raise IndexOutOfRangeError(f"Generator index {i} out of range")
    return Scalar(1) if i % 2 else Scalar(-1)


def reordering_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation a*b into ascending order."""
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_product(a: int, b: int, m: int) -> tuple[int, int]:
    sign = reordering_sign(a, b)
    if (a & b & negative_square_mask(m)).bit_count() & 1:
        sign = -sign
    return sign, a ^ b


@dataclass(frozen=True)
class GammaMonomial:
    m: int
    mask: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if not 0 <= self.mask < 1 << (2 * self.m):
            raise IndexOutOfRangeError(
                f"Monomial mask {self.mask:#b} does not fit m={self.m}"
            )

    @classmethod
    def from_indices(cls, m: int, indices) -> "GammaMonomial":
        indices = list(indices)
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise ValueError(f"Indices must be strictly ascending: {indices}")
        mask = 0
        for i in indices:
            if not 1 <= i <= 2 * m:
                raise IndexOutOfRangeError(f"Generator index {i} out of range for m={m}")
            mask |= 1 << (i - 1)
        return cls(m, mask)

    @property
    def indices(self) -> tuple[int, ...]:
        return mask_indices(self.mask)

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    def __str__(self) -> str:
        return format_mask(self.mask)


def mask_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def format_mask(mask: int) -> str:
    if not mask:
        return "1"
    return " ".join(f"g{i}" for i in mask_indices(mask))


def monomial_product(x: GammaMonomial, y: GammaMonomial) -> tuple[Scalar, GammaMonomial]:
    if x.m != y.m:
        raise DimensionMismatchError(f"Monomials from m={x.m} and m={y.m}")
    sign, mask = blade_product(x.mask, y.mask, x.m)
    return Scalar(sign), GammaMonomial(x.m, mask)


class GammaMultivector(SparseMultivector):
    basis_name = "gamma"

    def _key_tokens(self, key: int) -> str:
        return format_mask(key)

    @classmethod
    def _parse_tokens(cls, tokens: list[str], m: int) -> int:
        if tokens == ["1"]:
            return 0
        if not tokens:
            raise ExpressionParseError("Missing monomial after '*'")

        mask = 0
        previous = 0
        for token in tokens:
            if not (token.startswith("g") and token[1:].isdigit()):
                raise ExpressionParseError(f"Invalid gamma token: {token!r}")
            i = int(token[1:])
            if not 1 <= i <= 2 * m:
                raise ExpressionParseError(f"Generator {token} out of range for m={m}")
            if i <= previous:
                raise ExpressionParseError(
                    f"Generators must be strictly ascending, got {' '.join(tokens)!r}"
                )
            previous = i
            mask |= 1 << (i - 1)
        return mask

    @classmethod
    def from_monomial(cls, monomial: GammaMonomial, coefficient: Coefficient = 1):
        return cls(monomial.m, {monomial.mask: coefficient})

    @classmethod
    def generator(cls, i: int, m: int):
        if not 1 <= i <= 2 * m:
            raise IndexOutOfRangeError(f"Generator index {i} out of range for m={m}")
        return cls(m, {1 << (i - 1): 1})

    @classmethod
    def identity(cls, m: int):
        return cls(m, {0: 1})

    def grade_part(self, k: int) -> "GammaMultivector":
        return self._from_clean(
            self.m, {key: v for key, v in self._terms.items() if key.bit_count() == k}
        )

    def involute(self) -> "GammaMultivector":
        """Main automorphism gamma_i -> -gamma_i."""
        return self._from_clean(
            self.m,
            {key: (-v if key.bit_count() & 1 else v) for key, v in self._terms.items()},
        )

    def __mul__(self, other):
        if isinstance(other, GammaMultivector):
            return mv_product(self, other)
        return NotImplemented


def mv_product(
    a: GammaMultivector,
    b: GammaMultivector,
    counter: MultiplicationCounter | None = None,
) -> GammaMultivector:
    """Direct product: every term pair costs one scalar multiplication."""
    if a.m != b.m:
        raise DimensionMismatchError(f"Operands from m={a.m} and m={b.m}")

    m = a.m
    result: dict[int, Coefficient] = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            sign, key = blade_product(ka, kb, m)
            value = mul(va, vb, counter)
            total = result.get(key, 0) + (value if sign > 0 else -value)
            if total:
                result[key] = total
            else:
                result.pop(key, None)

    logger.debug("gamma product m=%d: %d x %d terms -> %d", m, len(a), len(b), len(result))
    return GammaMultivector._from_clean(m, result)


def pseudoscalar(m: int) -> GammaMultivector:
    """Gamma = gamma_1 gamma_2 ... gamma_2m."""
    return GammaMultivector(m, {(1 << (2 * m)) - 1: 1})


def random_coefficient(rng: random.Random, mode: str = "exact") -> Coefficient:
    numerator = rng.choice([n for n in range(-7, 8) if n])
    return coerce(Scalar(numerator, -rng.randint(0, 3)), mode)


def random_gamma(
    m: int, rng: random.Random, density: float = 0.5, mode: str = "exact"
) -> GammaMultivector:
    """Random multivector; density 1.0 fills all 2^{2m} coordinates."""
    terms = {
        key: random_coefficient(rng, mode)
        for key in range(1 << (2 * m))
        if density >= 1.0 or rng.random() < density
    }
    return GammaMultivector._from_clean(m, terms)
