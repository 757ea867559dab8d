from fractions import Fraction

import pytest

from torickit.exactalg.cyclotomic import Cyc
from torickit.exactalg.laurent import LaurentPoly, exp_apply


def mono(q, c=1):
    return LaurentPoly.monomial(len(q), q, c)


def test_ring_basics():
    x = mono((1, 0))
    y = mono((0, 1))
    p = (x + y) * (x - y)
    assert p == mono((2, 0)) - mono((0, 2))
    assert (x - x).is_zero()
    assert x * LaurentPoly.one(2) == x


def test_fractional_exponents():
    h = mono((Fraction(1, 2),))
    assert h * h == mono((1,))
    assert (h * mono((Fraction(-1, 2),))) == LaurentPoly.one(1)


def test_cyclotomic_coefficients_cancel():
    z = Cyc.root_of_unity(Fraction(1, 3))
    p = mono((1,), z) + mono((1,), z * z) + mono((1,))
    assert p.is_zero()  # sum of all cube roots


def test_apply_matrix():
    p = mono((1, 0)) + mono((0, 1))
    q = p.apply_matrix([[1], [1]])
    assert q == mono((1,), 2)
    assert exp_apply([[1], [1]], (Fraction(2), Fraction(3))) == (Fraction(5),)


def test_divide_exact():
    x = mono((1,))
    num = (LaurentPoly.one(1) - x) * (LaurentPoly.one(1) + x)
    q = num.divide_exact(LaurentPoly.one(1) - x)
    assert q == LaurentPoly.one(1) + x
    # (1 - x^2)/(1 - x^3) is not a Laurent polynomial
    assert num.divide_exact(LaurentPoly.one(1) - mono((3,)), max_steps=500) is None


def test_divide_exact_laurent_quotient():
    x = mono((1,))
    num = LaurentPoly.one(1) - mono((2,))
    q = num.divide_exact(mono((1,)) - mono((2,)))  # (1 - x^2)/(x - x^2) = 1/x + 1
    assert q == mono((-1,)) + LaurentPoly.one(1)
    assert q * (mono((1,)) - mono((2,))) == num


def test_truncate_by():
    p = mono((1, 0)) + mono((2, 1)) + mono((0, 0))
    t = p.truncate_by(lambda q: sum(q), 1)
    assert t == mono((1, 0)) + mono((0, 0))


def test_canonical_str():
    p = mono((1, Fraction(-1, 2)), Fraction(3, 2)) + LaurentPoly.one(2)
    assert str(p) == "1 + 3/2*e[1,-1/2]"
    assert str(LaurentPoly.zero(2)) == "0"


def test_mixing_tori_rejected():
    with pytest.raises(ValueError):
        mono((1,)) + mono((1, 0))
