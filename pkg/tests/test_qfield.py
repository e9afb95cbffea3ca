"""Exact arithmetic in Q(q): canonical forms, field axioms, specialization."""

import random
from fractions import Fraction

import pytest

from quantmat.errors import DivisionByZero, EvaluationPole, InvalidSpec
from quantmat.qfield import (
    ONE,
    P_ONE,
    Q,
    Q_INV,
    QMode,
    QRat,
    SYMBOLIC,
    ZERO,
    pgcd,
    pmul,
    pstrip,
)


def test_constants():
    assert Q.num == (0, 1) and Q.den == (1,)
    assert Q_INV.num == (1,) and Q_INV.den == (0, 1)
    assert ZERO.is_zero() and ONE.is_one()
    assert Q * Q_INV == ONE


def test_sum_of_q_and_inverse():
    s = Q + Q_INV
    assert s.num == (1, 0, 1)  # q^2 + 1
    assert s.den == (0, 1)  # q


def test_product_cancels_common_factor():
    # (q^2-1)/q * q/(q-1) = q+1
    left = QRat((-1, 0, 1), (0, 1))
    right = QRat((0, 1), (-1, 1))
    assert left * right == QRat((1, 1))


def test_inverse_swaps_and_normalizes():
    c = QRat((-1, 0, 1), (0, 1))
    assert c.inv() == QRat((0, 1), (-1, 0, 1))
    assert (c * c.inv()).is_one()


def test_inverse_makes_denominator_monic():
    inv = QRat((2,)).inv()
    assert inv == QRat((Fraction(1, 2),))
    assert inv.den == P_ONE


def test_q_power():
    assert QRat.q_power(3).num == (0, 0, 0, 1)
    assert QRat.q_power(-2) == Q_INV * Q_INV
    assert QRat.q_power(0).is_one()


def test_non_canonical_inputs_reduce():
    assert QRat((2, 2), (2,)) == QRat((1, 1))
    # q(q-1)/q^2(q-1) = 1/q
    assert QRat((0, -1, 1), (0, 0, -1, 1)) == Q_INV
    assert QRat((0, 0, 2), (0, 4)) == QRat((0, 1), (2,))


def test_zero_denominator_rejected():
    with pytest.raises(DivisionByZero):
        QRat((1,), ())
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    with pytest.raises(DivisionByZero):
        ZERO.inv()


def test_specialize():
    c = QRat((-1, 0, 1), (0, 1))  # (q^2-1)/q
    assert c.specialize(QMode.numeric(2)) == QRat((Fraction(3, 2),))
    assert c.specialize(QMode.numeric(1)).is_zero()
    assert c.specialize(SYMBOLIC) is c
    pole = Q / (Q - QRat.from_rational(2))
    with pytest.raises(EvaluationPole):
        pole.specialize(QMode.numeric(2))


def test_qmode_rejects_zero():
    with pytest.raises(InvalidSpec):
        QMode.numeric(0)
    assert QMode.numeric("3/2").value == Fraction(3, 2)
    assert SYMBOLIC.is_symbolic


def test_sign():
    assert Q.sign() == 1
    assert (-Q).sign() == -1
    assert ZERO.sign() == 0
    assert QRat((1, -2)).sign() == -1  # leading coefficient is -2


def test_pow():
    base = Q + ONE
    assert base ** 3 == base * base * base
    assert base ** 0 == ONE
    assert base ** -2 == (base.inv()) ** 2


def _rand_qrat(rng, allow_zero=False):
    while True:
        num = tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 4)))
        den = tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, 4)))
        if not any(den):
            continue
        c = QRat(num, den)
        if allow_zero or not c.is_zero():
            return c


def test_field_axioms_sampled():
    rng = random.Random(0)
    for _ in range(300):
        a = _rand_qrat(rng, allow_zero=True)
        b = _rand_qrat(rng, allow_zero=True)
        c = _rand_qrat(rng, allow_zero=True)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO
        if not b.is_zero():
            assert (a / b) * b == a
            assert b * b.inv() == ONE


def test_canonical_equality_and_hash():
    rng = random.Random(1)
    for _ in range(200):
        a = _rand_qrat(rng)
        scale = tuple(rng.randint(-3, 3) for _ in range(rng.randint(1, 3)))
        if not any(scale):
            continue
        b = QRat(pmul(a.num, scale), pmul(a.den, scale))
        assert a == b
        assert hash(a) == hash(b)


def test_gcd_is_monic_and_divides():
    rng = random.Random(2)
    for _ in range(100):
        a = pstrip(tuple(rng.randint(-3, 3) for _ in range(rng.randint(1, 4))))
        b = pstrip(tuple(rng.randint(-3, 3) for _ in range(rng.randint(1, 4))))
        if not a or not b:
            continue
        g = pgcd(a, b)
        assert g[-1] == 1  # monic
        # common factors survive: gcd(ac, bc) is divisible by the monic c
        c = (1, 1)
        gg = pgcd(pmul(a, c), pmul(b, c))
        assert QRat(gg, pmul(g, c)).den == P_ONE  # (g*c) | gg


def test_arithmetic_results_stay_reduced():
    rng = random.Random(3)
    for _ in range(150):
        a = _rand_qrat(rng)
        b = _rand_qrat(rng)
        for c in (a * b, a + b, a / b):
            if c.is_zero():
                assert c.num == () and c.den == P_ONE
                continue
            assert pgcd(c.num, c.den) == P_ONE
            assert c.den[-1] == 1


def test_int_and_fraction_coefficients_mix():
    a = QRat((Fraction(1, 2),))
    b = QRat((1,), (2,))
    assert a == b
    assert hash(a) == hash(b)
    assert (a + b) == QRat((1,))


def test_specialize_string_rational():
    c = (Q * Q - ONE) / Q
    v = c.specialize(QMode.numeric(Fraction(1, 2)))
    assert v == QRat((Fraction(-3, 2),))
