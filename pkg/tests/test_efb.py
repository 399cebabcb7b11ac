from app.src.algebra.algebra_errors import DimensionMismatchError, ExpressionParseError
from app.src.algebra.efb import (
    P,
    PQ,
    Q,
    QP,
    EfbElement,
    EfbMultivector,
    EfbSymbol,
    all_elements,
    all_signatures,
    efb_basis_product,
    mv_product,
    naive_product,
    random_efb,
    slot_product,
    slot_table,
    unique_partner,
)
from app.src.algebra.scalar import MultiplicationCounter
from app.src.algebra.transform import efb_to_gamma, gamma_to_efb
from app.src.algebra.gamma import GammaMultivector, random_gamma
import pytest


# left factor, right factor, product (None for zero)
SLOT_PRODUCTS = [
    (QP, QP, QP), (QP, PQ, None), (QP, P, None), (QP, Q, Q),
    (PQ, QP, None), (PQ, PQ, PQ), (PQ, P, P), (PQ, Q, None),
    (P, QP, P), (P, PQ, None), (P, P, None), (P, Q, PQ),
    (Q, QP, None), (Q, PQ, Q), (Q, P, QP), (Q, Q, None),
]


@pytest.mark.parametrize("left, right, expected", SLOT_PRODUCTS)
def test_slot_table_entries(left, right, expected):
    assert slot_product(left, right) == expected


def test_slot_table_shape():
    table = slot_table()
    assert len(table) == 4 and all(len(row) == 4 for row in table)
    assert sum(entry is None for row in table for entry in row) == 8


def test_symbol_tokens_and_parity():
    assert [s.token for s in EfbSymbol] == ["qp", "pq", "p", "q"]
    assert EfbSymbol.from_token("QP") is QP
    assert [s.parity for s in EfbSymbol] == [1, 1, -1, -1]
    with pytest.raises(ExpressionParseError):
        EfbSymbol.from_token("pp")


def test_element_round_trip():
    psi = EfbElement.from_tokens("q qp p")
    assert psi.slots == (Q, QP, P)
    assert psi.signature == (-1, 1, -1)
    assert str(psi) == "q qp p"
    assert EfbElement.from_slots(psi.slots) == psi


def test_sign_from_moving_odd_slots():
    # (p_1 qp_2)(q_1 q_2): q_1 only passes the even qp_2
    psi = EfbElement.from_tokens("p qp")
    phi = EfbElement.from_tokens("q q")
    assert efb_basis_product(psi, phi) == (1, EfbElement.from_tokens("pq q"))
    # (qp_1 q_2)(q_1 pq_2): q_1 moves left past the odd q_2
    psi = EfbElement.from_tokens("qp q")
    phi = EfbElement.from_tokens("q pq")
    assert efb_basis_product(psi, phi) == (-1, EfbElement.from_tokens("q q"))


def test_basis_product_agrees_with_gamma_oracle():
    m = 2
    for psi in all_elements(m):
        for phi in all_elements(m):
            a = EfbMultivector.from_element(psi)
            b = EfbMultivector.from_element(phi)
            assert efb_to_gamma(a * b) == efb_to_gamma(a) * efb_to_gamma(b)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_unique_partner_per_signature(m):
    for psi in all_elements(m):
        nonzero = [phi for phi in all_elements(m) if efb_basis_product(psi, phi) is not None]
        assert len(nonzero) == 1 << m
        assert len({phi.signature for phi in nonzero}) == 1 << m
        for signature in all_signatures(m):
            partner = unique_partner(psi, signature)
            assert partner.signature == signature
            assert efb_basis_product(psi, partner) is not None


@pytest.mark.parametrize("m", [1, 2, 3])
def test_idempotents_and_nilpotents(m):
    idempotents = []
    for psi in all_elements(m):
        square = efb_basis_product(psi, psi)
        if psi.signature == (1,) * m:
            assert square == (1, psi)
            idempotents.append(psi)
        else:
            assert square is None
    assert len(idempotents) == 1 << m
    for a in idempotents:
        for b in idempotents:
            assert efb_basis_product(a, b) == efb_basis_product(b, a)


def test_identity_is_neutral(rng):
    m = 2
    a = random_efb(m, rng, 0.4)
    one = EfbMultivector.identity(m)
    assert one * a == a
    assert a * one == a


def test_identity_matches_gamma_one():
    for m in (1, 2, 3):
        assert gamma_to_efb(GammaMultivector.identity(m)) == EfbMultivector.identity(m)


def test_parse_and_format(efb):
    a = efb("1*q qp + -3/4*p pq", 2)
    assert str(a) == "-3/4*p pq + 1*q qp"
    assert a.coefficient(EfbElement.from_tokens("q qp").code) == 1
    with pytest.raises(ExpressionParseError):
        efb("1*q", 2)
    with pytest.raises(ExpressionParseError):
        efb("1*q x", 2)


def test_signature_part_splits_the_algebra(rng):
    m = 2
    a = random_efb(m, rng, 0.8)
    parts = [a.signature_part(r) for r in all_signatures(m)]
    total = EfbMultivector.zero(m)
    for part in parts:
        total = total + part
        assert len({EfbElement(m, code).signature for code, _ in part}) <= 1
    assert total == a


def test_involute_matches_gamma_involution(rng):
    for m in (1, 2, 3):
        x = random_gamma(m, rng, 0.5)
        assert gamma_to_efb(x.involute()) == gamma_to_efb(x).involute()


@pytest.mark.parametrize("m", [1, 2, 3])
def test_dense_product_costs_eight_to_the_m(rng, m):
    a, b = random_efb(m, rng, 1.0), random_efb(m, rng, 1.0)
    fast, slow = MultiplicationCounter(), MultiplicationCounter()
    assert mv_product(a, b, fast) == naive_product(a, b, slow)
    assert fast.count == slow.count == 1 << (3 * m)


def test_sparse_products_agree(rng):
    for _ in range(50):
        a, b = random_efb(3, rng, 0.1), random_efb(3, rng, 0.1)
        assert mv_product(a, b) == naive_product(a, b)


def test_elements_and_mismatch(efb):
    a = efb("1*q + 1*p", 1)
    assert [str(e) for e in a.elements()] == ["p", "q"]
    with pytest.raises(DimensionMismatchError):
        mv_product(a, efb("1*q q", 2))
    with pytest.raises(DimensionMismatchError):
        efb_basis_product(EfbElement.from_tokens("q"), EfbElement.from_tokens("q q"))
