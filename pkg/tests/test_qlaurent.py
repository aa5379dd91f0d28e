import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import laurent, nonzero_laurent
from qmatrix_gsb.qlaurent import (
    GENERIC,
    ONE,
    Q,
    Q_INV,
    QUANTUM_CORRECTION,
    ZERO,
    LaurentPoly,
    QMode,
    lp_add,
    lp_eval,
    lp_gcd,
    lp_mul,
)


def test_add_examples():
    assert lp_add(Q, -Q) == ZERO
    assert lp_add(Q - Q_INV, Q_INV) == Q
    assert lp_add(Q - Q_INV, Q - Q_INV) == LaurentPoly({1: 2, -1: -2})


def test_mul_examples():
    assert lp_mul(Q, Q_INV) == ONE
    assert lp_mul(Q - Q_INV, Q + Q_INV) == LaurentPoly({2: 1, -2: -1})
    assert lp_mul(Q - Q_INV, Q) == LaurentPoly({2: 1, 0: -1})


def test_bracket_from_the_ad_case_vanishes():
    # q^2 - q(q - q^-1) - 1
    assert Q * Q - Q * QUANTUM_CORRECTION - 1 == ZERO


def test_eval_examples():
    assert lp_eval(QUANTUM_CORRECTION, QMode.numeric(1)) == ZERO
    assert lp_eval(Q, GENERIC) == Q
    assert lp_eval(QUANTUM_CORRECTION, QMode.numeric(2)) == LaurentPoly.const(Fraction(3, 2))


def test_eval_at_zero_rejected():
    with pytest.raises(ValueError):
        QMode.numeric(0)
    with pytest.raises(ValueError):
        Q.evaluate(0)
    with pytest.raises(ValueError):
        QMode.parse("0")


def test_qmode_parse():
    assert QMode.parse("generic").generic
    assert QMode.parse("3/2").value == Fraction(3, 2)
    with pytest.raises(ValueError):
        QMode.parse("banana")


def test_zero_coefficients_dropped():
    p = LaurentPoly({0: 0, 3: Fraction(0), 1: 2})
    assert p.terms == {1: 2}
    assert not LaurentPoly({5: 0})


def test_big_integers_stay_exact():
    big = LaurentPoly.const(10**40 + 1)
    assert (big * big - big * big) == ZERO
    assert (big * big).constant_value() == (10**40 + 1) ** 2


@pytest.mark.parametrize(
    "poly, text",
    [
        (QUANTUM_CORRECTION, "q - q^-1"),
        (Q_INV, "q^-1"),
        (LaurentPoly({2: Fraction(3, 2)}), "(3/2)*q^2"),
        (LaurentPoly({0: Fraction(-3, 2)}), "-3/2"),
        (LaurentPoly({1: -2, -1: 2}), "-2*q + 2*q^-1"),
        (ZERO, "0"),
    ],
)
def test_render(poly, text):
    assert str(poly) == text


def test_ring_axioms_sampled():
    rng = random.Random(7)

    def rnd():
        return LaurentPoly({rng.randint(-3, 3): Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)})

    for _ in range(1000):
        a, b, c = rnd(), rnd(), rnd()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


@given(laurent, laurent)
def test_eval_is_a_ring_homomorphism(a, b):
    for v in (Fraction(2), Fraction(-1, 3), Fraction(1)):
        m = QMode.numeric(v)
        assert lp_eval(a * b, m) == lp_eval(a, m) * lp_eval(b, m)
        assert lp_eval(a + b, m) == lp_eval(a, m) + lp_eval(b, m)


@given(nonzero_laurent, nonzero_laurent)
def test_exact_division_inverts_multiplication(a, b):
    assert (a * b).divmod_exact(b) == a


@given(nonzero_laurent, nonzero_laurent, nonzero_laurent)
def test_gcd_divides_and_picks_up_common_factor(a, b, c):
    g = lp_gcd(a * c, b * c)
    (a * c).divmod_exact(g)
    (b * c).divmod_exact(g)
    g.divmod_exact(lp_gcd(c, c))


def test_gcd_examples():
    assert lp_gcd(Q * Q - 1, Q - 1) == Q - 1
    assert lp_gcd(Q, Q_INV) == ONE
    assert lp_gcd(ZERO, ZERO) == ZERO
    with pytest.raises(ArithmeticError):
        (Q + 1).divmod_exact(Q - 1)


def test_negative_power_only_for_monomials():
    assert Q ** -2 == LaurentPoly({-2: 1})
    assert (LaurentPoly({1: 2})) ** -1 == LaurentPoly({-1: Fraction(1, 2)})
    with pytest.raises(ZeroDivisionError):
        QUANTUM_CORRECTION ** -1
