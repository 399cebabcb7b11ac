from app.src.algebra.algebra_errors import ExpressionParseError
from app.src.algebra.scalar import HALF, ONE, ZERO, MultiplicationCounter, Scalar, coerce, mul
import pytest


def test_canonical_form_keeps_numerator_odd():
    s = Scalar(12, -3)
    assert (s.numerator, s.exponent) == (3, -1)
    assert Scalar(6, -1) == Scalar(3)
    assert Scalar(0, -5).exponent == 0


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3", Scalar(3)),
        ("-5", Scalar(-5)),
        ("1/2", HALF),
        ("-3/8", Scalar(-3, -3)),
        ("7/2^4", Scalar(7, -4)),
        ("4/2", Scalar(2)),
        (" 0 ", ZERO),
    ],
)
def test_parse(text, expected):
    assert Scalar.parse(text) == expected


@pytest.mark.parametrize("text", ["1/3", "1/0", "x", "1.5", "2^3", ""])
def test_parse_rejects_non_dyadic(text):
    with pytest.raises(ExpressionParseError):
        Scalar.parse(text)


def test_str():
    assert str(Scalar(3)) == "3"
    assert str(Scalar(-3, -2)) == "-3/4"
    assert str(Scalar(1, 3)) == "8"
    assert str(ZERO) == "0"


def test_arithmetic_is_exact():
    assert HALF + HALF == ONE
    assert Scalar(3, -2) - Scalar(1, -2) == HALF
    assert Scalar(3, -2) * Scalar(5, -1) == Scalar(15, -3)
    assert -HALF + 1 == HALF
    assert 1 - HALF == HALF
    assert 2 * HALF == 1
    assert (HALF - HALF).is_zero()
    assert not (HALF - HALF)


def test_comparisons_and_sign():
    assert Scalar(-1, -4) < ZERO < Scalar(1, -10)
    assert Scalar(3, -1) >= Scalar(1)
    assert Scalar(-7).sign() == -1
    assert ZERO.sign() == 0
    assert abs(Scalar(-3, -1)) == Scalar(3, -1)


def test_float_and_scale2():
    assert float(Scalar(3, -2)) == 0.75
    assert HALF.scale2(3) == Scalar(4)
    assert Scalar(5).scale2(-1) == Scalar(5, -1)


def test_hash_agrees_with_int():
    assert hash(Scalar(4)) == hash(4)
    assert {Scalar(2): "a"}[2] == "a"


def test_immutable():
    with pytest.raises(AttributeError):
        HALF._numerator = 3


def test_coerce_modes():
    assert coerce(3) == Scalar(3)
    assert coerce(HALF, "float") == 0.5
    with pytest.raises(TypeError):
        coerce(0.5, "exact")
    with pytest.raises(ValueError):
        coerce(1, "decimal")


def test_counter_tallies_only_when_enabled():
    counter = MultiplicationCounter()
    assert mul(HALF, Scalar(3), counter) == Scalar(3, -1)
    mul(ONE, ONE, counter)
    assert counter.count == 2

    off = MultiplicationCounter(enabled=False)
    mul(ONE, ONE, off)
    assert off.count == 0

    assert counter.merge(off).count == 2
    counter.reset()
    assert counter.count == 0
