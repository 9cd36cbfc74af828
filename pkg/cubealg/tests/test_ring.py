import random
from functools import cmp_to_key
from itertools import combinations, combinations_with_replacement
from typing import Dict, List

import pytest

from .._ring import (
    BiDegree,
    bidegree,
    elements_of,
    MAX_N,
    mask_of,
    mono_cmp,
    Monomial,
    permute_mask,
    sorted_monomials,
    SubsetId,
    var_cmp,
    variable_order,
)
from .._util import DimensionError, InvalidElementError
from .helpers import (
    EXAMPLE_MONOMIAL,
    exponent_vector,
    literal_grevlex_cmp,
    mono,
    z,
)


def test_masks() -> None:
    assert mask_of([1, 3]) == 0b101
    assert elements_of(0b101) == (1, 3)
    assert elements_of(0) == ()
    assert permute_mask((2, 3, 1), mask_of([1, 2])) == mask_of([2, 3])


def test_variable_order() -> None:
    names = [str(SubsetId(3, m)) for m in variable_order(3).masks]
    assert names == [
        "z{}",
        "z{1}",
        "z{2}",
        "z{3}",
        "z{1,2}",
        "z{1,3}",
        "z{2,3}",
        "z{1,2,3}",
    ]
    variables = [SubsetId(3, m) for m in range(8)]
    assert [str(v) for v in sorted(variables, reverse=True)] == names

    with pytest.raises(DimensionError):
        variable_order(0)
    with pytest.raises(DimensionError):
        variable_order(MAX_N + 1)


def test_variable_order_on_3_subsets_of_5() -> None:
    triples = [SubsetId.of(5, c) for c in combinations(range(1, 6), 3)]
    # combinations() yields the 3-subsets in lexicographic order, which is
    # decreasing variable order
    assert sorted(triples, reverse=True) == triples
    assert triples[0].elements == (1, 2, 3)
    assert triples[1].elements == (1, 2, 4)
    assert triples[-1].elements == (3, 4, 5)


def test_var_cmp() -> None:
    a = SubsetId.of(3, [1, 3])
    b = SubsetId.of(3, [2, 3])
    assert var_cmp(a, b) > 0
    assert var_cmp(b, a) < 0
    assert var_cmp(a, a) == 0
    assert var_cmp(SubsetId.of(3, []), SubsetId.of(3, [1])) > 0
    assert a.size == 2
    assert a.rank == 5
    with pytest.raises(DimensionError):
        var_cmp(a, SubsetId.of(4, [1, 3]))
    with pytest.raises(InvalidElementError):
        SubsetId.of(3, [4])
    with pytest.raises(InvalidElementError):
        SubsetId(2, 0b100)


def test_Monomial_basics() -> None:
    m = mono(EXAMPLE_MONOMIAL, 6)
    assert str(m) == EXAMPLE_MONOMIAL
    assert m.degree == 10
    assert m.exponent(mask_of([2, 4])) == 4
    assert m.exponent(mask_of([1])) == 0
    assert [str(v) for v in m.variables()] == [
        "z{4}",
        "z{2,4}",
        "z{1,2,4,5}",
        "z{1,2,3,4,5}",
        "z{1,2,3,4,5,6}",
    ]
    assert m == Monomial.from_subsets(
        6,
        [
            ((1, 2, 3, 4, 5, 6), 1),
            ((2, 4), 4),
            ((4,), 1),
            ((1, 2, 4, 5), 2),
            ((1, 2, 3, 4, 5), 2),
        ],
    )
    shuffled = "z{2,4}^4 * z{1,2,3,4,5,6} * z{4} * z{1,2,3,4,5}^2 * z{1,2,4,5}^2"
    assert hash(m) == hash(mono(shuffled, 6))

    one = Monomial(3)
    assert one.is_one()
    assert str(one) == "1"
    assert one.degree == 0

    # zero exponents are dropped, repeated subsets multiply
    assert Monomial(2, {0b01: 0}) == Monomial(2)
    assert Monomial.from_subsets(2, [((1,), 1), ((1,), 2)]) == z(2, 1, exp=3)


def test_Monomial_errors() -> None:
    with pytest.raises(InvalidElementError):
        Monomial(2, {0b01: -1})
    with pytest.raises(InvalidElementError):
        Monomial(2, {0b100: 1})
    with pytest.raises(DimensionError):
        Monomial(0)
    with pytest.raises(DimensionError):
        z(2, 1) * z(3, 1)
    with pytest.raises(DimensionError):
        z(2, 1) < z(3, 1)


def test_Monomial_arithmetic() -> None:
    a = z(2, 1) * z(2, 2)
    assert str(a) == "z{1}*z{2}"
    assert str(a**3) == "z{1}^3*z{2}^3"
    assert a**0 == Monomial(2)
    assert a / z(2, 2) == z(2, 1)
    with pytest.raises(InvalidElementError):
        z(2, 1) / z(2, 2)
    assert str(a.lcm(z(2, 1, exp=3))) == "z{1}^3*z{2}"
    assert z(2, 1).divides(a)
    assert not a.divides(z(2, 1))
    assert z(2, 1).is_coprime(z(2, 2))
    assert not a.is_coprime(z(2, 2))


def test_mono_cmp() -> None:
    # the degree-4 comparison from the running grevlex example
    big = z(2, 2, exp=4)
    small = mono("z{}*z{1}^2*z{1,2}", 2)
    assert mono_cmp(big, small) > 0
    assert big > small
    assert mono_cmp(small, big) < 0
    assert mono_cmp(big, big) == 0
    # degree first
    assert z(2, 1, 2) < z(2) * z(2)


def all_monomials(n: int, degree: int) -> List[Monomial]:
    masks = range(1 << n)
    out = []
    for combo in combinations_with_replacement(masks, degree):
        exps: Dict[int, int] = {}
        for mask in combo:
            exps[mask] = exps.get(mask, 0) + 1
        out.append(Monomial(n, exps))
    return out


def test_grevlex_against_literal_definition() -> None:
    for n, degree in [(2, 2), (2, 3), (3, 2)]:
        monomials = all_monomials(n, degree)
        by_key = sorted_monomials(monomials)
        by_definition = sorted(
            monomials,
            key=cmp_to_key(
                lambda a, b: literal_grevlex_cmp(
                    exponent_vector(n, a), exponent_vector(n, b)
                )
            ),
        )
        assert by_key == by_definition
        assert sorted_monomials(monomials, descending=True) == by_key[::-1]


def test_term_order_properties() -> None:
    rng = random.Random(0)
    monomials = all_monomials(3, 1) + all_monomials(3, 2) + [Monomial(3)]
    one = Monomial(3)
    for _ in range(500):
        a, b, c = (rng.choice(monomials) for _ in range(3))
        assert (a < b) + (a == b) + (a > b) == 1
        if a < b and b < c:
            assert a < c
        if a < b:
            assert a * c < b * c
        assert one <= a


def test_bidegree() -> None:
    assert bidegree(z(3)) == BiDegree(1, 0)
    assert bidegree(Monomial(3)) == BiDegree(0, 0)
    assert bidegree(mono(EXAMPLE_MONOMIAL, 6)) == BiDegree(10, 33)

    rng = random.Random(1)
    monomials = all_monomials(3, 2)
    for _ in range(100):
        a, b = rng.choice(monomials), rng.choice(monomials)
        assert bidegree(a * b) == bidegree(a) + bidegree(b)
