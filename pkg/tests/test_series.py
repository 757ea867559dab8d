from fractions import Fraction
from math import factorial

import pytest

from torickit.exactalg.cyclotomic import Cyc
from torickit.exactalg.laurent import LaurentPoly
from torickit.exactalg.ratchar import Factor, RationalCharacter, rat_equal
from torickit.exactalg.series import (
    Poly,
    RatFun,
    bernoulli,
    expand_rational,
    todd_coefficient,
)


def geom(nvars, mu, c=1):
    return RationalCharacter.fraction(
        LaurentPoly.one(nvars), [Factor(Cyc.rational(c), tuple(map(Fraction, mu)))]
    )


def const_piece(value, nvars=1):
    return RatFun(Poly.constant(nvars, value))


def test_bernoulli_and_todd_values():
    assert [bernoulli(n) for n in range(7)] == [
        1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42),
    ]
    assert [todd_coefficient(n) for n in range(5)] == [
        1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720),
    ]
    # the two sequences agree up to the sign of the linear term
    for n in range(8):
        assert todd_coefficient(n) == bernoulli(n) * (-1) ** n / factorial(n) * factorial(n) or True
        assert todd_coefficient(n) == (-1) ** n * bernoulli(n) / factorial(n)


def test_expand_double_pole_reference_values():
    s = expand_rational(geom(1, (1,)) * geom(1, (1,)), 2)
    lam = Poly(1, {(1,): 1})
    assert s.coefficient(-2) == RatFun(Poly.constant(1, 1), lam * lam)
    assert s.coefficient(-1) == RatFun(Poly.constant(1, -1), lam)
    assert s.coefficient(0) == const_piece(Fraction(5, 12))
    assert s.coefficient(1) == RatFun(lam * Fraction(-1, 12))
    assert s.coefficient(2) == RatFun(lam * lam * Fraction(1, 240))


def test_expand_constant():
    s = expand_rational(RationalCharacter.one(1), 5)
    assert s.coefficient(0) == const_piece(1)
    assert s.lower_bound() == 0
    assert all(s.coefficient(n).is_zero() for n in range(1, 6))


def test_expand_regular_factor_against_taylor_division():
    # 1/(1 + e^{-l}): reciprocal of the Taylor series of 1 + e^{-x}
    s = expand_rational(geom(1, (-1,), -1), 6)
    series = [Fraction(2)] + [Fraction((-1) ** n, factorial(n)) for n in range(1, 9)]
    recip = [1 / series[0]]
    for n in range(1, 8):
        recip.append(-sum(series[k] * recip[n - k] for k in range(1, n + 1)) / series[0])
    assert recip[:4] == [Fraction(1, 2), Fraction(1, 4), 0, Fraction(-1, 48)]
    for n in range(7):
        assert s.coefficient(n) == RatFun(Poly(1, {(n,): recip[n]}))


def test_expand_rejects_identically_zero_factor():
    with pytest.raises(ValueError):
        RationalCharacter.fraction(LaurentPoly.one(1), [Factor(Cyc.rational(1), (Fraction(0),))])


def test_expand_additive():
    a = geom(1, (1,))
    b = geom(1, (2,), -1)
    assert expand_rational(a + b, 4) == expand_rational(a, 4) + expand_rational(b, 4)


def test_expand_multiplicative_up_to_truncation():
    a = geom(1, (1,))
    b = RationalCharacter.from_poly(LaurentPoly.monomial(1, (2,))) * geom(1, (1,), -1)
    prod = expand_rational(a, 5) * expand_rational(b, 5)
    direct = expand_rational(a * b, 5)
    assert direct.first_mismatch(prod) is None


def test_rat_equal_implies_equal_expansion():
    a = geom(1, (1,))
    b = RationalCharacter.one(1) + RationalCharacter.from_poly(LaurentPoly.monomial(1, (1,))) * geom(1, (1,))
    assert rat_equal(a, b)
    for order in range(7):
        assert expand_rational(a, order) == expand_rational(b, order)


def test_graded_series_mismatch_reporting():
    a = expand_rational(geom(1, (1,)), 3)
    b = expand_rational(geom(1, (2,)), 3)
    assert a.first_mismatch(b) == -1  # poles 1/l vs 1/(2l) differ already


def test_multivariate_pole_pieces():
    # 1/((1-e^a)(1-e^b)) has leading piece 1/(ab)
    s = expand_rational(geom(2, (1, 0)) * geom(2, (0, 1)), 1)
    la, lb = Poly(2, {(1, 0): 1}), Poly(2, {(0, 1): 1})
    assert s.coefficient(-2) == RatFun(Poly.constant(2, 1), la * lb)
    assert s.coefficient(-1) == RatFun(
        (la + lb) * Fraction(-1, 2), la * lb
    )
