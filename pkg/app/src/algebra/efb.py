"""Extended Fock Basis of Cl(m,m).

An EFB element psi_1 psi_2 ... psi_m is packed into 2m bits, two per slot,
slot 1 in the most significant pair so that integer order is tensor order.
Tags: QP = q_i p_i = 00, PQ = p_i q_i = 01, P = p_i = 10, Q = q_i = 11. The
high bit of a tag is its parity under gamma_i -> -gamma_i, so the signature of
an element is read off by masking.

Two basis elements multiply slot by slot through the Cl(1,1) table; the only
global effect is the sign from moving odd phi_i left past odd psi_j (i < j).
"""

from app.src.algebra.algebra_errors import DimensionMismatchError, ExpressionParseError
from app.src.algebra.scalar import Coefficient, MultiplicationCounter, mul
from app.src.algebra.multivector import SparseMultivector
from app.src.algebra.gamma import random_coefficient, reordering_sign
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import product
import logging
import random


logger = logging.getLogger(__name__)


class EfbSymbol(IntEnum):
    QP = 0
    PQ = 1
    P = 2
    Q = 3

    @property
    def parity(self) -> int:
        return -1 if self & 2 else 1

    @property
    def token(self) -> str:
        return _TOKENS[self]

    @classmethod
    def from_token(cls, token: str) -> "EfbSymbol":
        try:
            return _SYMBOLS_BY_TOKEN[token.lower()]
        except KeyError:
            raise ExpressionParseError(f"Invalid EFB slot token: {token!r}") from None


_TOKENS = {EfbSymbol.QP: "qp", EfbSymbol.PQ: "pq", EfbSymbol.P: "p", EfbSymbol.Q: "q"}
_SYMBOLS_BY_TOKEN = {token: symbol for symbol, token in _TOKENS.items()}

QP, PQ, P, Q = EfbSymbol.QP, EfbSymbol.PQ, EfbSymbol.P, EfbSymbol.Q

# row = left factor, column = right factor, in the order (QP, PQ, P, Q)
_SLOT_TABLE: dict[tuple[EfbSymbol, EfbSymbol], EfbSymbol | None] = {
    (QP, QP): QP, (QP, PQ): None, (QP, P): None, (QP, Q): Q,
    (PQ, QP): None, (PQ, PQ): PQ, (PQ, P): P, (PQ, Q): None,
    (P, QP): P, (P, PQ): None, (P, P): None, (P, Q): PQ,
    (Q, QP): None, (Q, PQ): Q, (Q, P): QP, (Q, Q): None,
}

# flat lookup: index 4*a + b, -1 for zero
_SLOT_LOOKUP = [
    -1 if _SLOT_TABLE[a, b] is None else int(_SLOT_TABLE[a, b])
    for a in EfbSymbol
    for b in EfbSymbol
]

# _PARTNER[a][odd] is the only symbol of the given parity with a * it != 0
_PARTNER = [
    [
        next(
            int(b)
            for b in EfbSymbol
            if (b.parity < 0) == bool(odd) and _SLOT_TABLE[a, b] is not None
        )
        for odd in (0, 1)
    ]
    for a in EfbSymbol
]

Signature = tuple[int, ...]


def slot_product(a: EfbSymbol, b: EfbSymbol) -> EfbSymbol | None:
    return _SLOT_TABLE[EfbSymbol(a), EfbSymbol(b)]


def slot_table() -> list[list[EfbSymbol | None]]:
    return [[_SLOT_TABLE[a, b] for b in EfbSymbol] for a in EfbSymbol]


@lru_cache(maxsize=None)
def odd_mask(m: int) -> int:
    """Mask of the parity bit of every slot."""
    mask = 0
    for slot in range(m):
        mask |= 2 << (2 * slot)
    return mask


def _shifts(m: int) -> range:
    return range(2 * (m - 1), -1, -2)


@lru_cache(maxsize=1 << 16)
def basis_product(psi: int, phi: int, m: int) -> tuple[int, int] | None:
    """Product of two packed EFB elements: (sign, key) or None when zero."""
    key = 0
    for shift in _shifts(m):
        r = _SLOT_LOOKUP[((psi >> shift) & 3) << 2 | ((phi >> shift) & 3)]
        if r < 0:
            return None
        key |= r << shift
    odd = odd_mask(m)
    return reordering_sign(phi & odd, psi & odd), key


def partner_key(psi: int, signature_bits: int, m: int) -> int:
    """Packed unique partner of psi whose odd bits equal signature_bits."""
    key = 0
    for shift in _shifts(m):
        odd = (signature_bits >> (shift + 1)) & 1
        key |= _PARTNER[(psi >> shift) & 3][odd] << shift
    return key


def signature_bits(signature: Signature) -> int:
    m = len(signature)
    bits = 0
    for i, s in enumerate(signature):
        if s not in (1, -1):
            raise ValueError(f"Signature entries must be +1 or -1, got {s}")
        if s < 0:
            bits |= 2 << (2 * (m - 1 - i))
    return bits


def bits_signature(bits: int, m: int) -> Signature:
    return tuple(-1 if (bits >> (shift + 1)) & 1 else 1 for shift in _shifts(m))


@dataclass(frozen=True)
class EfbElement:
    m: int
    code: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if not 0 <= self.code < 1 << (2 * self.m):
            raise ValueError(f"EFB code {self.code} does not fit m={self.m}")

    @classmethod
    def from_slots(cls, slots) -> "EfbElement":
        slots = [EfbSymbol(s) for s in slots]
        code = 0
        for s in slots:
            code = code << 2 | int(s)
        return cls(len(slots), code)

    @classmethod
    def from_tokens(cls, text: str) -> "EfbElement":
        return cls.from_slots(EfbSymbol.from_token(t) for t in text.split())

    @property
    def slots(self) -> tuple[EfbSymbol, ...]:
        return tuple(EfbSymbol((self.code >> shift) & 3) for shift in _shifts(self.m))

    @property
    def signature(self) -> Signature:
        return bits_signature(self.code, self.m)

    def __str__(self) -> str:
        return format_code(self.code, self.m)


def format_code(code: int, m: int) -> str:
    return " ".join(_TOKENS[EfbSymbol((code >> shift) & 3)] for shift in _shifts(m))


def all_elements(m: int):
    for code in range(1 << (2 * m)):
        yield EfbElement(m, code)


def all_signatures(m: int):
    return product((1, -1), repeat=m)


def signature_of(element: EfbElement) -> Signature:
    return element.signature


def efb_basis_product(
    psi: EfbElement, phi: EfbElement
) -> tuple[int, EfbElement] | None:
    if psi.m != phi.m:
        raise DimensionMismatchError(f"Elements from m={psi.m} and m={phi.m}")
    result = basis_product(psi.code, phi.code, psi.m)
    if result is None:
        return None
    sign, code = result
    return sign, EfbElement(psi.m, code)


def unique_partner(psi: EfbElement, signature: Signature) -> EfbElement:
    if len(signature) != psi.m:
        raise DimensionMismatchError(
            f"Signature of length {len(signature)} for an element with m={psi.m}"
        )
    return EfbElement(psi.m, partner_key(psi.code, signature_bits(signature), psi.m))


class EfbMultivector(SparseMultivector):
    basis_name = "efb"

    def _key_tokens(self, key: int) -> str:
        return format_code(key, self.m)

    @classmethod
    def _parse_tokens(cls, tokens: list[str], m: int) -> int:
        if len(tokens) != m:
            raise ExpressionParseError(
                f"EFB term needs exactly {m} slot tokens, got {' '.join(tokens)!r}"
            )
        code = 0
        for token in tokens:
            code = code << 2 | int(EfbSymbol.from_token(token))
        return code

    @classmethod
    def from_element(cls, element: EfbElement, coefficient: Coefficient = 1):
        return cls(element.m, {element.code: coefficient})

    @classmethod
    def identity(cls, m: int):
        """1 = prod_i (q_i p_i + p_i q_i): every element with slots in {QP, PQ}."""
        terms = {}
        for slots in product((QP, PQ), repeat=m):
            terms[EfbElement.from_slots(slots).code] = 1
        return cls(m, terms)

    def signature_part(self, signature: Signature) -> "EfbMultivector":
        bits = signature_bits(signature)
        odd = odd_mask(self.m)
        return self._from_clean(
            self.m, {k: v for k, v in self._terms.items() if k & odd == bits}
        )

    def involute(self) -> "EfbMultivector":
        """Main automorphism: Psi -> (prod_i s_i) Psi."""
        odd = odd_mask(self.m)
        return self._from_clean(
            self.m,
            {k: (-v if (k & odd).bit_count() & 1 else v) for k, v in self._terms.items()},
        )

    def elements(self) -> list[EfbElement]:
        return [EfbElement(self.m, k) for k, _ in self]

    def __mul__(self, other):
        if isinstance(other, EfbMultivector):
            return mv_product(self, other)
        return NotImplemented


def _accumulate(result: dict, key: int, value: Coefficient):
    total = result.get(key, 0) + value
    if total:
        result[key] = total
    else:
        result.pop(key, None)


def mv_product(
    a: EfbMultivector,
    b: EfbMultivector,
    counter: MultiplicationCounter | None = None,
) -> EfbMultivector:
    """Product that jumps straight to the unique partner in each signature block.

    b is grouped by signature; for every term of a and every block only the one
    partner key can give a nonzero product, so dense inputs cost 2^{3m}
    multiplications.
    """
    if a.m != b.m:
        raise DimensionMismatchError(f"Operands from m={a.m} and m={b.m}")

    m = a.m
    odd = odd_mask(m)
    blocks: dict[int, dict[int, Coefficient]] = {}
    for kb, vb in b.terms.items():
        blocks.setdefault(kb & odd, {})[kb] = vb

    result: dict[int, Coefficient] = {}
    for ka, va in a.terms.items():
        for bits, block in blocks.items():
            kb = partner_key(ka, bits, m)
            vb = block.get(kb)
            if vb is None:
                continue
            sign, key = basis_product(ka, kb, m)
            value = mul(va, vb, counter)
            _accumulate(result, key, value if sign > 0 else -value)

    logger.debug("efb product m=%d: %d x %d terms -> %d", m, len(a), len(b), len(result))
    return EfbMultivector._from_clean(m, result)


def naive_product(
    a: EfbMultivector,
    b: EfbMultivector,
    counter: MultiplicationCounter | None = None,
) -> EfbMultivector:
    """Every term pair, skipping zero table entries before multiplying."""
    if a.m != b.m:
        raise DimensionMismatchError(f"Operands from m={a.m} and m={b.m}")

    m = a.m
    result: dict[int, Coefficient] = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            hit = basis_product(ka, kb, m)
            if hit is None:
                continue
            sign, key = hit
            value = mul(va, vb, counter)
            _accumulate(result, key, value if sign > 0 else -value)
    return EfbMultivector._from_clean(m, result)


def random_efb(
    m: int, rng: random.Random, density: float = 0.5, mode: str = "exact"
) -> EfbMultivector:
    terms = {
        key: random_coefficient(rng, mode)
        for key in range(1 << (2 * m))
        if density >= 1.0 or rng.random() < density
    }
    return EfbMultivector._from_clean(m, terms)
