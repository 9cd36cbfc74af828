import random
from fractions import Fraction
from typing import List

import pytest

from .._poly import leading_term, poly_add, poly_mul, poly_scale, Polynomial
from .._ring import Monomial
from .._util import DimensionError, InvalidElementError, ZeroPolynomialError
from .helpers import mono, poly, z


def test_canonical_form() -> None:
    f = Polynomial(2, [(z(2, 1), 1), (z(2, 2), 2), (z(2, 1), -1)])
    assert f == Polynomial(2, {z(2, 2): 2})
    assert len(f) == 1
    assert Polynomial(2, [(z(2, 1), 0)]).is_zero()
    assert not Polynomial.zero(2)
    assert Polynomial.constant(2, 5).terms() == [(Monomial(2), Fraction(5))]
    assert Polynomial.from_monomial(z(2, 1)).is_monomial()
    assert not Polynomial.from_monomial(z(2, 1), 2).is_monomial()
    with pytest.raises(DimensionError):
        Polynomial(2, [(z(3, 1), 1)])


def test_str() -> None:
    assert str(Polynomial.zero(2)) == "0"
    assert str(poly("z{1}*z{2} - z{}*z{1,2}", 2)) == "z{1}*z{2} - z{}*z{1,2}"
    f = Polynomial(2, {z(2, 1): Fraction(3, 2), Monomial(2): -1})
    assert str(f) == "3/2*z{1} - 1"
    assert str(-f) == "-3/2*z{1} + 1"


def test_add_and_scale() -> None:
    f = poly("z{1}*z{2} - z{}*z{1,2}", 2)
    assert (f + poly_scale(f, -1)).is_zero()
    assert (f - f).is_zero()
    assert poly_add(f, f) == 2 * f == f * 2
    assert poly_scale(f, 0).is_zero()
    half = poly_scale(f, Fraction(1, 2))
    assert half.coefficient(z(2, 1) * z(2, 2)) == Fraction(1, 2)
    with pytest.raises(DimensionError):
        f + poly("z{1}", 3)


def test_mul() -> None:
    f = poly("z{1}*z{2} - z{}*z{1,2}", 2)
    assert poly_mul(f, Polynomial.from_monomial(z(2, 1))) == poly(
        "z{1}^2*z{2} - z{}*z{1}*z{1,2}", 2
    )
    assert f * z(2, 1) == z(2, 1) * f == f.mul_term(z(2, 1))

    cube = poly("z{1} + z{2}", 2) ** 3
    assert len(cube) == 4
    assert [c for _, c in cube.terms()] == [1, 3, 3, 1]
    assert cube.monomials() == [
        z(2, 1, exp=3),
        z(2, 1, exp=2) * z(2, 2),
        z(2, 1) * z(2, 2, exp=2),
        z(2, 2, exp=3),
    ]
    assert f**0 == Polynomial.constant(2)
    with pytest.raises(InvalidElementError):
        Polynomial.constant(2, 3) ** -1


def test_leading_term() -> None:
    f = poly("-z{2}^4 - z{}*z{1}^2*z{1,2}", 2)
    assert leading_term(f) == (z(2, 2, exp=4), -1)
    assert f.leading_monomial() == z(2, 2, exp=4)
    assert f.monic() == poly("z{2}^4 + z{}*z{1}^2*z{1,2}", 2)

    assert leading_term(Polynomial.constant(3, 5)) == (Monomial(3), 5)
    assert leading_term(poly("z{1}^2 + z{2}^2", 2)) == (mono("z{1}^2", 2), 1)

    with pytest.raises(ZeroPolynomialError):
        leading_term(Polynomial.zero(2))


def random_polynomial(rng: random.Random, n: int) -> Polynomial:
    masks = range(1 << n)
    terms = []
    for _ in range(rng.randint(0, 4)):
        m = Monomial(n, {rng.choice(masks): rng.randint(1, 2) for _ in range(2)})
        terms.append((m, Fraction(rng.randint(-3, 3), rng.randint(1, 3))))
    return Polynomial(n, terms)


def test_ring_axioms() -> None:
    rng = random.Random(2)
    zero, one = Polynomial.zero(2), Polynomial.constant(2)
    samples: List[Polynomial] = [random_polynomial(rng, 2) for _ in range(20)]
    for _ in range(200):
        f, g, h = (rng.choice(samples) for _ in range(3))
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + zero == f
        assert f * one == f
        assert (f * zero).is_zero()
        assert hash(f + g) == hash(g + f)
