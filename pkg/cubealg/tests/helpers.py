from typing import List, Sequence

from .._codec import parse_monomial, parse_polynomial
from .._colored import ColoredPermutation, SigmaXPair
from .._poly import Polynomial
from .._ring import Monomial

# The running example: an element of Z_4 wr S_6 and everything derived from
# it.
EXAMPLE_R = 4
EXAMPLE_WINDOW = "[2^1 6^3 4^3 1^0 5^2 3^0]"
EXAMPLE_INVERSE = "[4^0 1^3 6^0 3^1 5^2 2^1]"
EXAMPLE_INCREASING = "[4^3 6^3 5^2 2^1 1^0 3^0]"
EXAMPLE_SIGMA = (4, 2, 1, 5, 3, 6)
EXAMPLE_X = (2, 2, 2, 4, 5, 5, 6)
EXAMPLE_MONOMIAL = "z{4}*z{2,4}^4*z{1,2,4,5}^2*z{1,2,3,4,5}^2*z{1,2,3,4,5,6}"

# (r, n) small enough for every test run
SMALL_PARAMS = [(1, 1), (1, 2), (1, 3), (2, 2), (3, 2), (4, 2), (2, 3)]


def example_element() -> ColoredPermutation:
    return ColoredPermutation.parse(EXAMPLE_WINDOW, EXAMPLE_R)


def example_pair() -> SigmaXPair:
    return SigmaXPair(EXAMPLE_SIGMA, EXAMPLE_X)


def z(n: int, *elements: int, exp: int = 1) -> Monomial:
    """The variable z_A (or a power of it) in T_n."""
    return Monomial.var(n, elements, exp)


def mono(text: str, n: int) -> Monomial:
    return parse_monomial(text, n)


def poly(text: str, n: int) -> Polynomial:
    return parse_polynomial(text, n)


def exponent_vector(n: int, m: Monomial) -> List[int]:
    """Exponents of ``m`` over all 2^n variables, largest variable first,
    straight from the definition of the variable order: smaller subsets
    first, equal sizes by sorted element tuple."""
    subsets = sorted(
        (
            tuple(i for i in range(1, n + 1) if mask >> (i - 1) & 1)
            for mask in range(1 << n)
        ),
        key=lambda s: (len(s), s),
    )
    return [m.exponent(sum(1 << (i - 1) for i in s)) for s in subsets]


def literal_grevlex_cmp(a: Sequence[int], b: Sequence[int]) -> int:
    """Graded reverse lexicographic comparison of two exponent vectors
    (largest variable first): total degree, then the rightmost nonzero entry
    of a - b is negative iff a > b."""
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    for x, y in reversed(list(zip(a, b))):
        if x != y:
            return 1 if x < y else -1
    return 0
