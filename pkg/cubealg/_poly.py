# Sparse polynomials over the rationals in T_n.
#
# A Polynomial is a {Monomial: Fraction} dict with no zero coefficients.
# Every generator we build has leading coefficient +-1, so the rationals
# never actually grow denominators; Fraction keeps it honest anyway.

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from ._ring import Monomial
from ._util import DimensionError, InvalidElementError, ZeroPolynomialError

__all__ = [
    "Coefficient",
    "Polynomial",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "leading_term",
]

Coefficient = Union[int, Fraction]


class Polynomial:
    """An element of T_n with exact rational coefficients.

    Construct one from a mapping or an iterable of ``(monomial, coefficient)``
    pairs; repeated monomials are summed and zero coefficients dropped, so
    two polynomials are equal exactly when they have the same terms.

    Polynomials support ``+``, ``-``, ``*`` (by polynomials, monomials and
    scalars), and are immutable and hashable.

    """

    __slots__ = ("n", "_terms")

    n: int
    _terms: Dict[Monomial, Fraction]

    def __init__(
        self,
        n: int,
        terms: Union[
            Mapping[Monomial, Coefficient], Iterable[Tuple[Monomial, Coefficient]]
        ] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Monomial, Fraction] = {}
        for m, c in items:
            if m.n != n:
                raise DimensionError("monomial of T_{} in T_{}".format(m.n, n))
            acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
        self.n = n
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def _make(cls, n: int, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # Trusted constructor: terms already canonical.
        self = object.__new__(cls)
        self.n = n
        self._terms = terms
        return self

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._make(n, {})

    @classmethod
    def constant(cls, n: int, c: Coefficient = 1) -> "Polynomial":
        return cls(n, [(Monomial(n), c)])

    @classmethod
    def from_monomial(cls, m: Monomial, c: Coefficient = 1) -> "Polynomial":
        return cls(m.n, [(m, c)])

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def terms(self) -> List[Tuple[Monomial, Fraction]]:
        """All terms, largest monomial first."""
        return sorted(self._terms.items(), key=lambda t: t[0].key, reverse=True)

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.terms()]

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.terms())

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        m = max(self._terms, key=lambda m: m.key)
        return m, self._terms[m]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def monic(self) -> "Polynomial":
        return self.scale(1 / self.leading_coefficient())

    def _check_same_ring(self, other: "Polynomial") -> None:
        if self.n != other.n:
            raise DimensionError(
                "polynomials of T_{} and T_{}".format(self.n, other.n)
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_ring(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                del terms[m]
        return Polynomial._make(self.n, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial._make(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coefficient) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial._make(self.n, {})
        return Polynomial._make(self.n, {m: c * a for m, a in self._terms.items()})

    def mul_term(self, m: Monomial, c: Coefficient = 1) -> "Polynomial":
        """``c * m * self``."""
        if m.n != self.n:
            raise DimensionError("monomial of T_{} in T_{}".format(m.n, self.n))
        c = Fraction(c)
        if not c:
            return Polynomial._make(self.n, {})
        return Polynomial._make(
            self.n, {m * t: c * a for t, a in self._terms.items()}
        )

    def __mul__(
        self, other: Union["Polynomial", Monomial, Coefficient]
    ) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_same_ring(other)
            terms: Dict[Monomial, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = m1 * m2
                    s = terms.get(m, 0) + c1 * c2
                    if s:
                        terms[m] = s
                    else:
                        del terms[m]
            return Polynomial._make(self.n, terms)
        if isinstance(other, Monomial):
            return self.mul_term(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Union[Monomial, Coefficient]) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise InvalidElementError("negative power of a polynomial")
        result = Polynomial.constant(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (m, c) in enumerate(self.terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if m.is_one():
                body = str(a)
            elif a == 1:
                body = str(m)
            else:
                body = "{}*{}".format(a, m)
            if i == 0:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append("{} {}".format(sign, body))
        return " ".join(pieces)

    def __repr__(self) -> str:
        return "Polynomial({}, {!r})".format(self.n, str(self))


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def poly_scale(f: Polynomial, c: Coefficient) -> Polynomial:
    return f.scale(c)


def leading_term(f: Polynomial) -> Tuple[Monomial, Fraction]:
    """The largest monomial of ``f`` with its coefficient.

    Raises:
        ZeroPolynomialError: if ``f`` is zero.

    """
    return f.leading_term()
