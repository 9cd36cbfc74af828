# The ambient polynomial ring T_n: one variable z_A for every subset A of
# [n], ordered so that smaller subsets are larger variables, and the graded
# reverse lexicographic term order on top of that.
#
# Subsets are bitmasks (bit i-1 <=> element i). For each n we sort all 2^n
# masks once, largest variable first, and after that a variable is known by
# its rank in that list. Monomials are sparse {mask: exponent} dicts that
# carry a precomputed sort key, so comparing two monomials is a tuple
# comparison and never touches the order table again.
#
# How the key works: list the nonzero exponents from the smallest variable
# (highest rank) upward, as flattened pairs (-rank, -exp), and put the total
# degree in front. Two monomials of equal degree first differ at some entry
# of that list; if the ranks differ there, the monomial holding the higher
# rank has a positive exponent on a smaller variable where the other has
# none, so it is the smaller one, and its -rank is the smaller number. If
# the ranks agree, the smaller exponent wins, and -exp is the larger number.
# Either way plain tuple comparison gives grevlex. (One list can't be a
# proper prefix of the other, because that would make the degrees differ.)

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from ._util import DimensionError, InvalidElementError

__all__ = [
    "MAX_N",
    "VariableOrder",
    "variable_order",
    "SubsetId",
    "Monomial",
    "BiDegree",
    "var_cmp",
    "mono_cmp",
    "bidegree",
    "mask_of",
    "elements_of",
    "permute_mask",
    "sorted_monomials",
]

# Masks are small ints, but 2^16 variables is already far past anything the
# Groebner code can touch; the bound mostly keeps the rank table sane.
MAX_N = 16

_MonomialKey = Tuple[int, Tuple[int, ...]]


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for i in elements:
        mask |= 1 << (i - 1)
    return mask


def elements_of(mask: int) -> Tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def permute_mask(perm: Sequence[int], mask: int) -> int:
    """The image {perm(i) : i in A} of the subset A under a permutation
    given in one-line notation."""
    image = 0
    for i in elements_of(mask):
        image |= 1 << (perm[i - 1] - 1)
    return image


class VariableOrder:
    """The variables of T_n, sorted from largest to smallest.

    ``masks[k]`` is the subset with rank k, and ``rank[mask]`` inverts that;
    ``sizes[mask]`` is ``|A|``. Build these with :func:`variable_order`,
    which caches one instance per n.

    """

    __slots__ = ("n", "masks", "rank", "sizes")

    def __init__(self, n: int) -> None:
        self.n = n
        self.sizes: List[int] = [bin(m).count("1") for m in range(1 << n)]
        # Equal-size subsets compare by their sorted element tuples, which is
        # exactly "A comes first if its least element outside B beats every
        # element of B outside A".
        self.masks: List[int] = sorted(
            range(1 << n), key=lambda m: (self.sizes[m], elements_of(m))
        )
        self.rank: List[int] = [0] * (1 << n)
        for k, m in enumerate(self.masks):
            self.rank[m] = k


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise DimensionError(
            "n must be an integer in 1..{}, not {!r}".format(MAX_N, n)
        )


@lru_cache(maxsize=None)
def _variable_order(n: int) -> VariableOrder:
    return VariableOrder(n)


def variable_order(n: int) -> VariableOrder:
    _check_n(n)
    return _variable_order(n)


def _check_mask(n: int, mask: int) -> None:
    if not isinstance(mask, int) or not 0 <= mask < (1 << n):
        raise InvalidElementError("mask {!r} is not a subset of [{}]".format(mask, n))


@total_ordering
@dataclass(frozen=True)
class SubsetId:
    """The variable z_A, for A a subset of [n] stored as a bitmask.

    Ordering is the variable order: ``SubsetId.of(3, ()) > SubsetId.of(3,
    (1,)) > ... > SubsetId.of(3, (1, 2, 3))``.

    """

    __slots__ = ("n", "mask")

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        _check_mask(self.n, self.mask)

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "SubsetId":
        elements = tuple(elements)
        for i in elements:
            if not isinstance(i, int) or not 1 <= i <= n:
                raise InvalidElementError(
                    "subset element {!r} is outside 1..{}".format(i, n)
                )
        return cls(n, mask_of(elements))

    @property
    def elements(self) -> Tuple[int, ...]:
        return elements_of(self.mask)

    @property
    def size(self) -> int:
        return variable_order(self.n).sizes[self.mask]

    @property
    def rank(self) -> int:
        return variable_order(self.n).rank[self.mask]

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, SubsetId):
            return NotImplemented
        return var_cmp(self, other) < 0

    def __str__(self) -> str:
        return "z{{{}}}".format(",".join(map(str, self.elements)))


def var_cmp(a: SubsetId, b: SubsetId) -> int:
    """Positive if ``z_a > z_b``, zero if equal, negative otherwise."""
    if a.n != b.n:
        raise DimensionError("variables of T_{} and T_{}".format(a.n, b.n))
    ra, rb = a.rank, b.rank
    return (ra < rb) - (ra > rb)


class Monomial:
    """A monomial of T_n, as a sparse map from subset masks to positive
    exponents.

    Monomials are immutable and hashable, and compare with ``<``/``>``
    under graded reverse lexicographic order. ``Monomial(n)`` is 1.

    Raises:
        DimensionError: if n is out of range.
        InvalidElementError: for masks outside [n] or negative exponents.

    """

    __slots__ = ("n", "_exps", "_key", "_hash")

    n: int
    _exps: Dict[int, int]
    _key: _MonomialKey
    _hash: int

    def __init__(self, n: int, exps: Mapping[int, int] = {}) -> None:
        _check_n(n)
        clean = {}
        for mask, e in exps.items():
            _check_mask(n, mask)
            if not isinstance(e, int) or e < 0:
                raise InvalidElementError(
                    "exponent {!r} is not a natural number".format(e)
                )
            if e:
                clean[mask] = e
        self._setup(n, clean)

    def _setup(self, n: int, exps: Dict[int, int]) -> None:
        rank = _variable_order(n).rank
        ranked = sorted(((rank[m], e) for m, e in exps.items()), reverse=True)
        flat = tuple(x for k, e in ranked for x in (-k, -e))
        self.n = n
        self._exps = exps
        self._key = (sum(exps.values()), flat)
        self._hash = hash((n, self._key))

    @classmethod
    def _make(cls, n: int, exps: Dict[int, int]) -> "Monomial":
        # Trusted constructor: exps has no zero entries and valid masks.
        self = object.__new__(cls)
        self._setup(n, exps)
        return self

    @classmethod
    def from_subsets(
        cls, n: int, factors: Iterable[Tuple[Iterable[int], int]]
    ) -> "Monomial":
        """Build from ``(elements, exponent)`` pairs, e.g.
        ``Monomial.from_subsets(6, [((4,), 1), ((2, 4), 4)])``. Repeated
        subsets multiply."""
        exps: Dict[int, int] = {}
        for elements, e in factors:
            mask = SubsetId.of(n, elements).mask
            exps[mask] = exps.get(mask, 0) + e
        return cls(n, exps)

    @classmethod
    def var(cls, n: int, elements: Iterable[int], exp: int = 1) -> "Monomial":
        return cls.from_subsets(n, [(elements, exp)])

    @property
    def key(self) -> _MonomialKey:
        return self._key

    @property
    def degree(self) -> int:
        return self._key[0]

    def is_one(self) -> bool:
        return not self._exps

    def exponent(self, mask: int) -> int:
        return self._exps.get(mask, 0)

    def exponents(self) -> Dict[int, int]:
        return dict(self._exps)

    def items(self) -> Iterator[Tuple[int, int]]:
        """(mask, exponent) pairs, largest variable first."""
        rank = _variable_order(self.n).rank
        for mask in sorted(self._exps, key=rank.__getitem__):
            yield mask, self._exps[mask]

    def support(self) -> Tuple[int, ...]:
        return tuple(mask for mask, _ in self.items())

    def variables(self) -> Tuple[SubsetId, ...]:
        return tuple(SubsetId(self.n, mask) for mask in self.support())

    def _check_same_ring(self, other: "Monomial") -> None:
        if self.n != other.n:
            raise DimensionError(
                "monomials of T_{} and T_{}".format(self.n, other.n)
            )

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_same_ring(other)
        exps = dict(self._exps)
        for mask, e in other._exps.items():
            exps[mask] = exps.get(mask, 0) + e
        return Monomial._make(self.n, exps)

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise InvalidElementError("negative power of a monomial")
        if k == 0:
            return Monomial._make(self.n, {})
        return Monomial._make(self.n, {m: e * k for m, e in self._exps.items()})

    def divides_exponents(self, exps: Mapping[int, int]) -> bool:
        """Whether self divides the monomial with exponent map ``exps``."""
        for mask, e in self._exps.items():
            if exps.get(mask, 0) < e:
                return False
        return True

    def divides(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        if len(self._exps) > len(other._exps):
            return False
        oexps = other._exps
        for mask, e in self._exps.items():
            if oexps.get(mask, 0) < e:
                return False
        return True

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact quotient; raises :exc:`InvalidElementError` unless ``other``
        divides ``self``."""
        if not other.divides(self):
            raise InvalidElementError("{} does not divide {}".format(other, self))
        exps = dict(self._exps)
        for mask, e in other._exps.items():
            left = exps[mask] - e
            if left:
                exps[mask] = left
            else:
                del exps[mask]
        return Monomial._make(self.n, exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_same_ring(other)
        exps = dict(self._exps)
        for mask, e in other._exps.items():
            if exps.get(mask, 0) < e:
                exps[mask] = e
        return Monomial._make(self.n, exps)

    def is_coprime(self, other: "Monomial") -> bool:
        return not (self._exps.keys() & other._exps.keys())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.n == other.n and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return self._key < other._key

    def __le__(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return self._key <= other._key

    def __gt__(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return self._key > other._key

    def __ge__(self, other: "Monomial") -> bool:
        self._check_same_ring(other)
        return self._key >= other._key

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        factors = []
        for mask, e in self.items():
            var = "z{{{}}}".format(",".join(map(str, elements_of(mask))))
            factors.append(var if e == 1 else "{}^{}".format(var, e))
        return "*".join(factors)

    def __repr__(self) -> str:
        return "Monomial({}, {!r})".format(self.n, str(self))


def mono_cmp(a: Monomial, b: Monomial) -> int:
    """Three-way grevlex comparison: positive if ``a > b``."""
    return (a > b) - (a < b)


@dataclass(frozen=True)
class BiDegree:
    """Degree under the grading ``deg(z_A) = t q^|A|``."""

    __slots__ = ("tdeg", "qdeg")

    tdeg: int
    qdeg: int

    def __add__(self, other: "BiDegree") -> "BiDegree":
        return BiDegree(self.tdeg + other.tdeg, self.qdeg + other.qdeg)


def bidegree(m: Monomial) -> BiDegree:
    sizes = _variable_order(m.n).sizes
    return BiDegree(m.degree, sum(e * sizes[mask] for mask, e in m._exps.items()))


def sorted_monomials(
    monomials: Iterable[Monomial], descending: bool = False
) -> List[Monomial]:
    return sorted(monomials, key=lambda m: m.key, reverse=descending)