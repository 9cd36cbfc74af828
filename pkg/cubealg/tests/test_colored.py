from collections import Counter
from itertools import permutations, product

import pytest

from .._colored import (
    ColoredLetter,
    ColoredPermutation,
    compose,
    decompose,
    des_a,
    descent_set,
    dimension,
    enumerate_group,
    enumerate_pairs,
    inverse,
    is_increasing,
    letter_cmp,
    major_a,
    major_index,
    ndes,
    ndes_multiset,
    nmajor,
    nneg,
    recompose,
    SigmaXPair,
)
from .._util import (
    DimensionError,
    EnumerationLimitError,
    InvalidElementError,
    InvalidMultisetError,
    ParseError,
)
from .helpers import (
    EXAMPLE_INCREASING,
    EXAMPLE_INVERSE,
    EXAMPLE_R,
    EXAMPLE_SIGMA,
    EXAMPLE_WINDOW,
    EXAMPLE_X,
    example_element,
    example_pair,
)


def test_window_notation() -> None:
    g = example_element()
    assert g.r == 4
    assert g.n == 6
    assert g.values == (2, 6, 4, 1, 5, 3)
    assert g.colors == (1, 3, 3, 0, 2, 0)
    assert str(g) == EXAMPLE_WINDOW
    assert g.window[0] == ColoredLetter(2, 1)
    assert ColoredPermutation(4, g.window) == g

    # extra whitespace is fine, the printer normalizes it
    assert str(ColoredPermutation.parse("[ 2^1  1^0 ]", 2)) == "[2^1 1^0]"


@pytest.mark.parametrize(
    "text,r,error",
    [
        ("[2 1]", 2, ParseError),
        ("2^1 1^0", 2, ParseError),
        ("[]", 2, ParseError),
        ("[2^1 3^0]", 2, InvalidElementError),
        ("[1^0 1^0]", 2, InvalidElementError),
        ("[2^2 1^0]", 2, InvalidElementError),
        ("[1^0]", 0, DimensionError),
    ],
)
def test_window_errors(text: str, r: int, error: type) -> None:
    with pytest.raises(error):
        ColoredPermutation.parse(text, r)


def test_constructors() -> None:
    assert str(ColoredPermutation.identity(3, 3)) == "[1^0 2^0 3^0]"
    assert str(ColoredPermutation.from_permutation([3, 1, 2], 2)) == "[3^0 1^0 2^0]"
    with pytest.raises(InvalidElementError):
        ColoredPermutation.from_permutation([1, 3])
    with pytest.raises(DimensionError):
        ColoredPermutation.identity(2, 0)
    for window in [[(1,)], [(1, 0, 0)], [(1, 0), ()]]:
        with pytest.raises(InvalidElementError):
            ColoredPermutation(2, window)  # type: ignore


def test_letter_cmp() -> None:
    assert letter_cmp(ColoredLetter(2, 1), ColoredLetter(6, 3)) > 0
    assert letter_cmp(ColoredLetter(6, 3), ColoredLetter(2, 1)) < 0
    assert letter_cmp(ColoredLetter(3, 2), ColoredLetter(3, 2)) == 0
    assert letter_cmp(ColoredLetter(1, 0), ColoredLetter(2, 0)) < 0

    alphabet = [ColoredLetter(v, c) for v in range(1, 5) for c in range(2)]
    assert [str(a) for a in sorted(alphabet)] == [
        "1^1",
        "2^1",
        "3^1",
        "4^1",
        "1^0",
        "2^0",
        "3^0",
        "4^0",
    ]
    for a in alphabet:
        for b in alphabet:
            assert letter_cmp(a, b) == -letter_cmp(b, a)
            assert (letter_cmp(a, b) < 0) == (a < b)


def test_compose() -> None:
    rho = ColoredPermutation.parse(EXAMPLE_INCREASING, EXAMPLE_R)
    sigma = ColoredPermutation.parse("[4^0 2^0 1^0 5^0 3^0 6^0]", EXAMPLE_R)
    assert compose(rho, sigma) == example_element()

    g = example_element()
    e = ColoredPermutation.identity(EXAMPLE_R, 6)
    assert compose(e, g) == g
    assert compose(g, e) == g

    with pytest.raises(DimensionError):
        compose(g, ColoredPermutation.identity(3, 6))
    with pytest.raises(DimensionError):
        compose(g, ColoredPermutation.identity(EXAMPLE_R, 5))


def test_group_axioms() -> None:
    for r, n in [(2, 2), (1, 3), (3, 2), (2, 3)]:
        group = list(enumerate_group(r, n))
        e = ColoredPermutation.identity(r, n)
        for g in group:
            assert compose(g, inverse(g)) == e
            assert compose(inverse(g), g) == e
            assert inverse(inverse(g)) == g
    group = list(enumerate_group(2, 2))
    for a, b, c in product(group, repeat=3):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_inverse() -> None:
    assert str(inverse(example_element())) == EXAMPLE_INVERSE
    e = ColoredPermutation.identity(3, 4)
    assert inverse(e) == e
    for g in enumerate_group(3, 3):
        assert inverse(inverse(g)) == g


def test_descent_statistics() -> None:
    g = example_element()
    assert des_a(g) == (1, 2, 4)
    assert major_a(g) == 7
    assert nneg(inverse(g)) == EXAMPLE_X
    assert ndes_multiset(g) == (1, 2, 2, 2, 2, 4, 4, 5, 5, 6)
    assert ndes(g) == 10
    assert nmajor(g) == 33
    assert not is_increasing(g)
    assert is_increasing(ColoredPermutation.parse(EXAMPLE_INCREASING, EXAMPLE_R))


def test_uncolored_statistics() -> None:
    for perm in permutations(range(1, 5)):
        g = ColoredPermutation.from_permutation(perm, 3)
        assert des_a(g) == descent_set(perm)
        assert nneg(inverse(g)) == ()
        assert ndes(g) == len(descent_set(perm))
        assert nmajor(g) == major_index(perm)


def test_statistics_of_Z2_wr_S2() -> None:
    counts = Counter((ndes(g), nmajor(g)) for g in enumerate_group(2, 2))
    assert sum(counts.values()) == 8
    assert counts == {(0, 0): 1, (1, 1): 2, (1, 2): 1, (2, 2): 1, (2, 3): 2, (3, 4): 1}


def test_plain_descents() -> None:
    assert descent_set((4, 2, 1, 5, 3, 6)) == (1, 2, 4)
    assert major_index((4, 2, 1, 5, 3, 6)) == 7
    assert descent_set((1, 2, 3)) == ()
    assert major_index((3, 2, 1)) == 3


def test_SigmaXPair() -> None:
    p = example_pair()
    assert p.n == 6
    assert p.multiplicities() == (0, 3, 0, 1, 2, 1)
    assert str(p) == "(421536, {2,2,2,4,5,5,6})"
    # X is stored sorted
    assert SigmaXPair(EXAMPLE_SIGMA, reversed(EXAMPLE_X)) == p

    p.check_multiplicities(4)
    with pytest.raises(InvalidMultisetError):
        p.check_multiplicities(3)
    with pytest.raises(InvalidMultisetError):
        SigmaXPair((1, 2), (3,))
    with pytest.raises(InvalidElementError):
        SigmaXPair((1, 1), ())

    long = SigmaXPair(tuple(range(10, 0, -1)), ())
    assert str(long) == "(10,9,8,7,6,5,4,3,2,1, {})"


def test_decompose() -> None:
    assert decompose(example_element()) == example_pair()
    for perm in permutations(range(1, 4)):
        g = ColoredPermutation.from_permutation(perm, 2)
        assert decompose(g) == SigmaXPair(perm, ())


def test_recompose() -> None:
    assert recompose(example_pair(), EXAMPLE_R) == example_element()
    assert recompose(example_pair(), EXAMPLE_R, 6) == example_element()

    # with sigma the identity, recompose returns the increasing part itself
    increasing = recompose(SigmaXPair(range(1, 7), EXAMPLE_X), EXAMPLE_R)
    assert str(increasing) == EXAMPLE_INCREASING
    assert is_increasing(increasing)

    assert recompose(SigmaXPair((1, 2, 3)), 3) == ColoredPermutation.identity(3, 3)

    with pytest.raises(InvalidMultisetError):
        recompose(example_pair(), 3)
    with pytest.raises(DimensionError):
        recompose(example_pair(), EXAMPLE_R, 5)


def test_decompose_recompose_bijection() -> None:
    for r, n in [(1, 3), (2, 3), (3, 3), (3, 2)]:
        pairs = list(enumerate_pairs(r, n))
        assert len(pairs) == dimension(r, n)
        for p in pairs:
            g = recompose(p, r)
            assert decompose(g) == p
            assert is_increasing(recompose(SigmaXPair(range(1, n + 1), p.x), r))
        for g in enumerate_group(r, n):
            assert recompose(decompose(g), r) == g

    images = {recompose(p, 2) for p in enumerate_pairs(2, 4)}
    assert len(images) == 2**4 * 24


def test_nneg_inverse_is_constant_on_cosets() -> None:
    for r in (1, 2, 3):
        for n in (1, 2, 3):
            for g in enumerate_group(r, n):
                for perm in permutations(range(1, n + 1)):
                    sigma = ColoredPermutation.from_permutation(perm, r)
                    assert nneg(inverse(compose(g, sigma))) == nneg(inverse(g))


def test_enumerate_group() -> None:
    assert len(list(enumerate_group(1, 3))) == 6
    assert len(list(enumerate_group(3, 2))) == 18
    assert len(list(enumerate_group(2, 3))) == 48
    for r in (1, 2, 3):
        for n in (1, 2, 3, 4):
            group = list(enumerate_group(r, n))
            assert len(group) == len(set(group)) == dimension(r, n)


def test_enumeration_limit() -> None:
    assert dimension(3, 2) == 18
    # the check happens at call time, before anything is generated
    with pytest.raises(EnumerationLimitError):
        enumerate_group(3, 2, limit=17)
    with pytest.raises(EnumerationLimitError):
        enumerate_pairs(3, 4, limit=1000)
    assert len(list(enumerate_group(3, 2, limit=18))) == 18
    with pytest.raises(DimensionError):
        enumerate_group(0, 2)
