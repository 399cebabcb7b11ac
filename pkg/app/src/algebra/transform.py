"""Change of basis between the gamma basis and the EFB.

Two routes are provided. The substitution rules work term by term and are
the ones used by the rest of the package:

    gamma_{2i-1} -> p_i + q_i,  gamma_{2i} -> p_i - q_i,  absent pair -> q_i p_i + p_i q_i

and back through p_i = (gamma_{2i-1} + gamma_{2i}) / 2, q_i = (gamma_{2i-1} - gamma_{2i}) / 2.
The matrix route builds H = I (x) H_m and the recursive permutation P_m as dense
integer arrays and is only meant for cross-checking at small m.

Per slot the Cl(1,1) gamma order is (1, g12, g1, g2) and the EFB order is
(qp, pq, p, q); both carry a (parity, selector) bit pair, and slot 1 is the
leftmost tensor factor.
"""

from app.src.algebra.algebra_errors import IndexOutOfRangeError, SizeLimitError
from app.src.algebra.efb import EfbMultivector, PQ, QP, P, Q
from app.src.algebra.gamma import GammaMonomial, GammaMultivector
from app.src.algebra.scalar import Coefficient, Scalar
from app.src.algebra.multivector import collect
from functools import lru_cache
import numpy as np


DenseMatrix = np.ndarray

MATRIX_LIMIT = 5

H1 = np.array([[1, 1], [1, -1]], dtype=np.int64)
P23 = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.int64
)


def witt_vector(kind: str, i: int, m: int) -> GammaMultivector:
    """p_i = (g_{2i-1} + g_{2i}) / 2 and q_i = (g_{2i-1} - g_{2i}) / 2."""
    if not 1 <= i <= m:
        raise IndexOutOfRangeError(f"Witt index {i} out of range for m={m}")
    half = Scalar(1, -1)
    odd, even = 1 << (2 * i - 2), 1 << (2 * i - 1)
    match kind:
        case "p":
            return GammaMultivector(m, {odd: half, even: half})
        case "q":
            return GammaMultivector(m, {odd: half, even: -half})
        case _:
            raise ValueError(f"Witt vector kind must be 'p' or 'q', got {kind!r}")


def _check_matrix_size(m: int):
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m > MATRIX_LIMIT:
        raise SizeLimitError(
            f"Dense transform matrices are limited to m <= {MATRIX_LIMIT}, got {m}"
        )


def kron_power(matrix: DenseMatrix, k: int) -> DenseMatrix:
    out = np.eye(1, dtype=np.int64)
    for _ in range(k):
        out = np.kron(out, matrix)
    return out


@lru_cache(maxsize=None)
def _hadamard(m: int) -> DenseMatrix:
    return kron_power(H1, m)


def hadamard(m: int) -> DenseMatrix:
    """H_m, the m-fold Kronecker power of H_1."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return _hadamard(m).copy()


def p23() -> DenseMatrix:
    return P23.copy()


@lru_cache(maxsize=None)
def _perm(m: int) -> DenseMatrix:
    if m == 1:
        return np.eye(4, dtype=np.int64)
    inner = _perm(m - 1) @ kron_power(P23, m - 1)
    eye2 = np.eye(2, dtype=np.int64)
    return np.kron(np.kron(eye2, inner), eye2)


def perm(m: int) -> DenseMatrix:
    """P_m = I_2 (x) [P_{m-1} ((x)^{m-1} P_23)] (x) I_2 with P_1 = I_4."""
    _check_matrix_size(m)
    return _perm(m).copy()


@lru_cache(maxsize=None)
def _full_transform(m: int) -> DenseMatrix:
    block = np.kron(np.eye(1 << m, dtype=np.int64), _hadamard(m))
    p = _perm(m)
    return p.T @ block @ p


def full_transform(m: int) -> DenseMatrix:
    """P_m^T (I (x) H_m) P_m; maps tensor-ordered gamma coordinates to EFB ones."""
    _check_matrix_size(m)
    return _full_transform(m).copy()


def tensor_transform(m: int) -> DenseMatrix:
    """(x)^m (I_2 (x) H_1), the same map built directly in tensor order."""
    _check_matrix_size(m)
    return kron_power(np.kron(np.eye(2, dtype=np.int64), H1), m)


def is_symmetric(matrix: DenseMatrix) -> bool:
    return bool(np.array_equal(matrix, matrix.T))


def is_permutation(matrix: DenseMatrix) -> bool:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    if not np.isin(matrix, (0, 1)).all():
        return False
    return bool((matrix.sum(axis=0) == 1).all() and (matrix.sum(axis=1) == 1).all())


# per-slot tensor index (parity bit, selector bit) <-> gamma occupancy of the pair
_SLOT_GAMMA = {0: 0b00, 1: 0b11, 2: 0b01, 3: 0b10}
_GAMMA_SLOT = {bits: index for index, bits in _SLOT_GAMMA.items()}


def tensor_index_to_mask(index: int, m: int) -> int:
    mask = 0
    for slot in range(m):
        local = (index >> (2 * (m - 1 - slot))) & 3
        mask |= _SLOT_GAMMA[local] << (2 * slot)
    return mask


def mask_to_tensor_index(mask: int, m: int) -> int:
    index = 0
    for slot in range(m):
        index = index << 2 | _GAMMA_SLOT[(mask >> (2 * slot)) & 3]
    return index


def gamma_tensor_order(m: int) -> list[GammaMonomial]:
    """(x)^m (1, g_{2i-1,2i}, g_{2i-1}, g_{2i}) flattened, slot 1 leftmost."""
    return [GammaMonomial(m, tensor_index_to_mask(i, m)) for i in range(1 << (2 * m))]


def permuted_gamma_order(m: int) -> list[GammaMonomial]:
    """P_m applied to the tensor-ordered gamma list."""
    order = gamma_tensor_order(m)
    return [order[int(np.argmax(row))] for row in perm(m)]


def format_matrix(matrix: DenseMatrix) -> str:
    width = max(len(str(int(v))) for v in matrix.flat)
    return "\n".join(" ".join(str(int(v)).rjust(width) for v in row) for row in matrix)


# substitution route

_GAMMA_TO_SLOTS = {
    0b00: ((QP, 1), (PQ, 1)),
    0b11: ((QP, 1), (PQ, -1)),
    0b01: ((P, 1), (Q, 1)),
    0b10: ((P, 1), (Q, -1)),
}

_SLOT_TO_GAMMA = {
    QP: ((0b00, 1), (0b11, 1)),
    PQ: ((0b00, 1), (0b11, -1)),
    P: ((0b01, 1), (0b10, 1)),
    Q: ((0b01, 1), (0b10, -1)),
}


def _expand_monomial(mask: int, m: int) -> list[tuple[int, int]]:
    """All (efb key, +/-1) terms of one gamma monomial."""
    terms = [(0, 1)]
    for slot in range(m):
        pair = (mask >> (2 * slot)) & 3
        terms = [
            (key << 2 | int(symbol), sign * factor)
            for key, sign in terms
            for symbol, factor in _GAMMA_TO_SLOTS[pair]
        ]
    return terms


def _expand_element(code: int, m: int) -> list[tuple[int, int]]:
    """All (gamma mask, +/-1) terms of one EFB element, before the 2^-m factor."""
    terms = [(0, 1)]
    for slot in range(m):
        symbol = (code >> (2 * (m - 1 - slot))) & 3
        terms = [
            (mask | bits << (2 * slot), sign * factor)
            for mask, sign in terms
            for bits, factor in _SLOT_TO_GAMMA[symbol]
        ]
    return terms


def gamma_monomial_to_efb(monomial: GammaMonomial) -> EfbMultivector:
    m = monomial.m
    return EfbMultivector(m, dict(_expand_monomial(monomial.mask, m)))


def gamma_to_efb(a: GammaMultivector) -> EfbMultivector:
    m = a.m
    pairs = (
        (key, value if sign > 0 else -value)
        for mask, value in a.terms.items()
        for key, sign in _expand_monomial(mask, m)
    )
    return collect(m, EfbMultivector, pairs)


def efb_to_gamma(a: EfbMultivector) -> GammaMultivector:
    m = a.m
    pairs = (
        (mask, (value if sign > 0 else -value) * Scalar(1, -m))
        for code, value in a.terms.items()
        for mask, sign in _expand_element(code, m)
    )
    return collect(m, GammaMultivector, pairs)


# matrix route


def _apply(matrix: DenseMatrix, coords: dict[int, Coefficient]) -> dict[int, Coefficient]:
    out: dict[int, Coefficient] = {}
    for col, value in coords.items():
        for row in np.flatnonzero(matrix[:, col]):
            entry = int(matrix[row, col])
            total = out.get(int(row), 0) + (value if entry > 0 else -value)
            if total:
                out[int(row)] = total
            else:
                out.pop(int(row), None)
    return out


def gamma_to_efb_by_matrix(a: GammaMultivector) -> EfbMultivector:
    """EFB coordinates = P_m^T (I (x) H_m) P_m times tensor-ordered gamma coordinates."""
    m = a.m
    matrix = full_transform(m)
    coords = {mask_to_tensor_index(mask, m): v for mask, v in a.terms.items()}
    # EFB keys coincide with tensor indices
    return EfbMultivector(m, _apply(matrix, coords))


def efb_to_gamma_by_matrix(a: EfbMultivector) -> GammaMultivector:
    m = a.m
    matrix = full_transform(m)
    scale = Scalar(1, -m)
    coords = _apply(matrix, dict(a.terms))
    return GammaMultivector(
        m, {tensor_index_to_mask(i, m): v * scale for i, v in coords.items()}
    )
