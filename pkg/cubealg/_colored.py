# Colored permutations: the elements of the wreath product Z_r wr S_n, their
# group law, their descent statistics, and the bijection with (sigma, X)
# pairs.
#
# A colored permutation is stored as two parallel tuples (the underlying
# permutation and the color exponents c_i in [0, r)) rather than as a list
# of letter objects, since almost every operation wants to index one or the
# other. Colors are plain integers: the root of unity omega never shows up,
# all we ever do with it is add exponents mod r.

import re
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from itertools import permutations, product
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

from ._abnf import colored_letter, window
from ._util import (
    DimensionError,
    EnumerationLimitError,
    InvalidElementError,
    InvalidMultisetError,
    validate,
)

__all__ = [
    "DEFAULT_ENUMERATION_LIMIT",
    "ColoredLetter",
    "ColoredPermutation",
    "SigmaXPair",
    "letter_cmp",
    "compose",
    "inverse",
    "des_a",
    "major_a",
    "nneg",
    "ndes_multiset",
    "ndes",
    "nmajor",
    "decompose",
    "recompose",
    "is_increasing",
    "enumerate_group",
    "enumerate_pairs",
    "descent_set",
    "major_index",
    "dimension",
    "check_enumeration_limit",
]

# r^n * n! for (r, n) = (4, 8) is a little over 2.6 billion, which nobody
# wants to enumerate in pure Python by accident.
DEFAULT_ENUMERATION_LIMIT = 10**7

window_re = re.compile(window)
colored_letter_re = re.compile(colored_letter)


def _check_permutation(perm: Sequence[int], what: str) -> Tuple[int, ...]:
    perm = tuple(perm)
    if not perm:
        raise InvalidElementError("{} must have length n >= 1".format(what))
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise InvalidElementError(
            "{} {!r} is not a permutation of 1..{}".format(what, perm, len(perm))
        )
    return perm


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise DimensionError(
            "color modulus r must be a positive integer, not {!r}".format(r)
        )


@total_ordering
@dataclass(frozen=True)
class ColoredLetter:
    """A letter ``value^color`` of the colored alphabet.

    Letters are totally ordered: a letter with a *higher* color is smaller,
    and letters of the same color compare by value. So for r = 2 the values
    1..4 sort as ``1^1 < 2^1 < 3^1 < 4^1 < 1^0 < 2^0 < 3^0 < 4^0``.

    """

    __slots__ = ("value", "color")

    value: int
    color: int

    def sort_key(self) -> Tuple[int, int]:
        return (-self.color, self.value)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ColoredLetter):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "{}^{}".format(self.value, self.color)


def letter_cmp(a: ColoredLetter, b: ColoredLetter) -> int:
    """Three-way comparison of colored letters: negative, zero or positive as
    ``a`` is smaller than, equal to or larger than ``b``."""
    ka, kb = a.sort_key(), b.sort_key()
    return (ka > kb) - (ka < kb)


@dataclass(init=False, frozen=True)
class ColoredPermutation:
    """An element of Z_r wr S_n, written in window notation.

    Fields:

    .. attribute:: r

       The color modulus, a positive integer. ``r = 1`` is the plain
       symmetric group.

    .. attribute:: values

       The underlying permutation ``(pi(1), ..., pi(n))``.

    .. attribute:: colors

       The color exponents ``(c_1, ..., c_n)``, each in ``range(r)``. The
       color sits at a *position*, so ``colors[i - 1]`` belongs to the letter
       ``pi(i)``.

    The constructor takes the window as an iterable of ``(value, color)``
    pairs (or :class:`ColoredLetter` objects) and raises
    :exc:`InvalidElementError` if it is not a colored permutation.

    """

    __slots__ = ("r", "values", "colors")

    r: int
    values: Tuple[int, ...]
    colors: Tuple[int, ...]

    def __init__(
        self,
        r: int,
        window: Iterable[Union[ColoredLetter, Tuple[int, int]]],
        *,
        _validated: bool = False,
    ) -> None:
        pairs = [
            (w.value, w.color) if isinstance(w, ColoredLetter) else tuple(w)
            for w in window
        ]
        for p in pairs:
            if len(p) != 2:
                raise InvalidElementError(
                    "window entry {!r} is not a (value, color) pair".format(p)
                )
        values = tuple(p[0] for p in pairs)
        colors = tuple(p[1] for p in pairs)
        if not _validated:
            _check_r(r)
            values = _check_permutation(values, "window")
            for c in colors:
                if not isinstance(c, int) or not 0 <= c < r:
                    raise InvalidElementError(
                        "color {!r} is outside range(0, {})".format(c, r)
                    )
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "colors", colors)

    @classmethod
    def _make(
        cls, r: int, values: Sequence[int], colors: Sequence[int]
    ) -> "ColoredPermutation":
        return cls(r, zip(values, colors), _validated=True)

    @classmethod
    def identity(cls, r: int, n: int) -> "ColoredPermutation":
        _check_r(r)
        if n < 1:
            raise DimensionError("n must be >= 1, not {}".format(n))
        return cls._make(r, range(1, n + 1), (0,) * n)

    @classmethod
    def from_permutation(
        cls, perm: Sequence[int], r: int = 1
    ) -> "ColoredPermutation":
        """The uncolored element ``(perm, 1...1)`` of Z_r wr S_n."""
        _check_r(r)
        perm = _check_permutation(perm, "permutation")
        return cls._make(r, perm, (0,) * len(perm))

    @classmethod
    def parse(cls, text: str, r: int) -> "ColoredPermutation":
        """Read window notation like ``[2^1 6^3 4^3 1^0 5^2 3^0]``."""
        validate(window_re, text, "malformed window {!r}", text)
        return cls(
            r,
            (
                (int(m.group("value")), int(m.group("color")))
                for m in colored_letter_re.finditer(text)
            ),
        )

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def window(self) -> Tuple[ColoredLetter, ...]:
        return tuple(ColoredLetter(v, c) for v, c in zip(self.values, self.colors))

    def __str__(self) -> str:
        return "[{}]".format(
            " ".join("{}^{}".format(v, c) for v, c in zip(self.values, self.colors))
        )


@dataclass(init=False, frozen=True)
class SigmaXPair:
    """A plain permutation ``sigma`` together with a multiset ``x`` over
    [n], stored as a nondecreasing tuple.

    The bound on multiplicities (at most r - 1) depends on the color modulus,
    which the pair doesn't carry; :meth:`check_multiplicities` enforces it
    whenever an r comes into play.

    """

    __slots__ = ("sigma", "x")

    sigma: Tuple[int, ...]
    x: Tuple[int, ...]

    def __init__(self, sigma: Sequence[int], x: Iterable[int] = ()) -> None:
        sigma = _check_permutation(sigma, "sigma")
        xs = tuple(sorted(x))
        for j in xs:
            if not 1 <= j <= len(sigma):
                raise InvalidMultisetError(
                    "multiset element {} is outside 1..{}".format(j, len(sigma))
                )
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "x", xs)

    @property
    def n(self) -> int:
        return len(self.sigma)

    def multiplicities(self) -> Tuple[int, ...]:
        counts = Counter(self.x)
        return tuple(counts[j] for j in range(1, self.n + 1))

    def check_multiplicities(self, r: int) -> None:
        for j, m in enumerate(self.multiplicities(), 1):
            if m >= r:
                raise InvalidMultisetError(
                    "{} appears {} times in X, but r = {} allows at most {}".format(
                        j, m, r, r - 1
                    )
                )

    def __str__(self) -> str:
        if self.n < 10:
            sigma = "".join(map(str, self.sigma))
        else:
            sigma = ",".join(map(str, self.sigma))
        return "({}, {{{}}})".format(sigma, ",".join(map(str, self.x)))


def _same_group(a: ColoredPermutation, b: ColoredPermutation) -> None:
    if a.r != b.r or a.n != b.n:
        raise DimensionError(
            "can't combine elements of Z_{} wr S_{} and Z_{} wr S_{}".format(
                a.r, a.n, b.r, b.n
            )
        )


def compose(outer: ColoredPermutation, inner: ColoredPermutation) -> ColoredPermutation:
    """``outer o inner``: position i gets ``outer.pi(inner.pi(i))`` with color
    ``inner.c_i + outer.c_{inner.pi(i)}`` mod r."""
    _same_group(outer, inner)
    r = outer.r
    values = []
    colors = []
    for v, c in zip(inner.values, inner.colors):
        values.append(outer.values[v - 1])
        colors.append((c + outer.colors[v - 1]) % r)
    return ColoredPermutation._make(r, values, colors)


def inverse(g: ColoredPermutation) -> ColoredPermutation:
    # Position pi(i) of the inverse holds i with the negated color.
    values = [0] * g.n
    colors = [0] * g.n
    for i, (v, c) in enumerate(zip(g.values, g.colors), 1):
        values[v - 1] = i
        colors[v - 1] = (-c) % g.r
    return ColoredPermutation._make(g.r, values, colors)


def des_a(g: ColoredPermutation) -> Tuple[int, ...]:
    """The type-A descent set: positions i in [n-1] where the letter at i is
    larger than the letter at i+1 in the colored order."""
    keys = [(-c, v) for v, c in zip(g.values, g.colors)]
    return tuple(i for i in range(1, g.n) if keys[i - 1] > keys[i])


def major_a(g: ColoredPermutation) -> int:
    return sum(des_a(g))


def nneg(g: ColoredPermutation) -> Tuple[int, ...]:
    """The multiset with each position i repeated c_i times."""
    return tuple(i for i, c in enumerate(g.colors, 1) for _ in range(c))


def ndes_multiset(g: ColoredPermutation) -> Tuple[int, ...]:
    # Multiset union: a position can show up both as a descent and in NNeg.
    return tuple(sorted(des_a(g) + nneg(inverse(g))))


def ndes(g: ColoredPermutation) -> int:
    return len(ndes_multiset(g))


def nmajor(g: ColoredPermutation) -> int:
    return sum(ndes_multiset(g))


def is_increasing(g: ColoredPermutation) -> bool:
    return not des_a(g)


def decompose(g: ColoredPermutation) -> SigmaXPair:
    """Split ``g = (rho, delta) o sigma`` with ``(rho, delta)`` increasing.

    The increasing part lists g's letters in increasing order, so sigma(i)
    is just the rank of g's i-th letter; X is NNeg of the inverse.

    """
    keys = [(-c, v) for v, c in zip(g.values, g.colors)]
    rank = {key: i for i, key in enumerate(sorted(keys), 1)}
    sigma = tuple(rank[key] for key in keys)
    return SigmaXPair(sigma, nneg(inverse(g)))


def recompose(p: SigmaXPair, r: int, n: Optional[int] = None) -> ColoredPermutation:
    """Inverse of :func:`decompose`.

    Raises:
        InvalidMultisetError: if some multiplicity in ``p.x`` is >= r.
        DimensionError: if ``n`` is given and disagrees with ``p``.

    """
    _check_r(r)
    if n is not None and n != p.n:
        raise DimensionError("pair has n = {}, expected {}".format(p.n, n))
    p.check_multiplicities(r)
    colors = [(-m) % r for m in p.multiplicities()]
    letters = sorted(range(1, p.n + 1), key=lambda j: (-colors[j - 1], j))
    rho = ColoredPermutation._make(r, letters, [colors[j - 1] for j in letters])
    return compose(rho, ColoredPermutation._make(r, p.sigma, (0,) * p.n))


def dimension(r: int, n: int) -> int:
    """``r^n * n!``, the order of Z_r wr S_n."""
    return r**n * factorial(n)


def check_enumeration_limit(r: int, n: int, limit: int) -> None:
    """Raise EnumerationLimitError if Z_r wr S_n has more than ``limit``
    elements. Callers use this before any work whose size is r^n * n!."""
    _check_r(r)
    if n < 1:
        raise DimensionError("n must be >= 1, not {}".format(n))
    if dimension(r, n) > limit:
        raise EnumerationLimitError(
            "Z_{} wr S_{} has {} elements, more than the limit of {}".format(
                r, n, dimension(r, n), limit
            )
        )


def enumerate_group(
    r: int, n: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[ColoredPermutation]:
    """Yield every element of Z_r wr S_n exactly once: permutations in
    lexicographic order, and for each one every color vector.

    Raises:
        EnumerationLimitError: if ``r^n * n!`` exceeds ``limit``. This is
            checked before anything is yielded.

    """
    check_enumeration_limit(r, n, limit)
    return _enumerate_group(r, n)


def _enumerate_group(r: int, n: int) -> Iterator[ColoredPermutation]:
    for perm in permutations(range(1, n + 1)):
        for colors in product(range(r), repeat=n):
            yield ColoredPermutation._make(r, perm, colors)


def enumerate_pairs(
    r: int, n: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[SigmaXPair]:
    """Yield every ``(sigma, X)`` pair with multiplicities below r."""
    check_enumeration_limit(r, n, limit)
    return _enumerate_pairs(r, n)


def _enumerate_pairs(r: int, n: int) -> Iterator[SigmaXPair]:
    for sigma in permutations(range(1, n + 1)):
        for mults in product(range(r), repeat=n):
            x = [j for j, m in enumerate(mults, 1) for _ in range(m)]
            yield SigmaXPair(sigma, x)


def descent_set(perm: Sequence[int]) -> Tuple[int, ...]:
    """Classical descents of a plain permutation in one-line notation."""
    return tuple(i for i in range(1, len(perm)) if perm[i - 1] > perm[i])


def major_index(perm: Sequence[int]) -> int:
    return sum(descent_set(perm))
