"""Simple-spinor structure of EFB elements.

Every EFB element is a Weyl spinor (Gamma Psi = +/- Psi) and is annihilated by
the maximal totally null plane spanned by the first null vector of each slot.
"""

from app.src.algebra.efb import EfbElement, EfbMultivector, mv_product, PQ, QP, P, Q
from app.src.algebra.gamma import pseudoscalar, random_coefficient
from app.src.algebra.transform import gamma_to_efb, witt_vector
from dataclasses import dataclass
from itertools import product
import random


# (q_i p_i - p_i q_i) psi_i = +psi_i for these slots, -psi_i otherwise
_WEYL_PLUS = {QP, Q}

_FIRST_NULL = {QP: "q", Q: "q", PQ: "p", P: "p"}

# same first null vector, opposite parity
_TNP_TWIN = {QP: Q, Q: QP, PQ: P, P: PQ}


@dataclass(frozen=True)
class TnpBasis:
    """One null vector per slot, 'p' or 'q'; spans a maximal totally null plane."""

    vectors: tuple[str, ...]

    def __post_init__(self):
        if not self.vectors or any(v not in ("p", "q") for v in self.vectors):
            raise ValueError(f"TNP basis entries must be 'p' or 'q': {self.vectors}")

    @property
    def m(self) -> int:
        return len(self.vectors)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{v}{i}" for i, v in enumerate(self.vectors, 1)) + ")"


def weyl_sign(psi: EfbElement) -> int:
    sign = 1
    for symbol in psi.slots:
        if symbol not in _WEYL_PLUS:
            sign = -sign
    return sign


def pseudoscalar_efb(m: int) -> EfbMultivector:
    """Gamma = prod_i (q_i p_i - p_i q_i) written in the EFB."""
    return gamma_to_efb(pseudoscalar(m))


def tnp_of(psi: EfbElement) -> TnpBasis:
    return TnpBasis(tuple(_FIRST_NULL[s] for s in psi.slots))


def tnp_vectors(tnp: TnpBasis) -> list[EfbMultivector]:
    return [
        gamma_to_efb(witt_vector(kind, i, tnp.m))
        for i, kind in enumerate(tnp.vectors, 1)
    ]


def annihilates(v: EfbMultivector, psi: EfbElement) -> bool:
    return mv_product(v, EfbMultivector.from_element(psi)).is_zero()


def tnp_class(psi: EfbElement) -> set[EfbElement]:
    choices = [(s, _TNP_TWIN[s]) for s in psi.slots]
    return {EfbElement.from_slots(slots) for slots in product(*choices)}


def same_spinor(psi: EfbElement, phi: EfbElement) -> bool:
    return tnp_of(psi) == tnp_of(phi)


def is_simple_spinor_form(a: EfbMultivector) -> EfbElement | None:
    """The element when a is a nonzero multiple of one EFB element, else None."""
    if len(a) != 1:
        return None
    (code, _), = a
    return EfbElement(a.m, code)


def span_annihilates(psi: EfbElement, rng: random.Random, samples: int = 8) -> bool:
    """Random combinations of the TNP basis of psi all annihilate it."""
    vectors = tnp_vectors(tnp_of(psi))
    target = EfbMultivector.from_element(psi)
    for _ in range(samples):
        v = EfbMultivector.zero(psi.m)
        for vector in vectors:
            v = v + vector.scale(random_coefficient(rng))
        if not mv_product(v, target).is_zero():
            return False
    return True
