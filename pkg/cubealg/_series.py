# Bigraded Hilbert series data and the Euler-Mahonian identities they
# satisfy.
#
# A BiSeries is a polynomial in t and q, possibly truncated in t: it stores
# every coefficient with t-degree <= trunc exactly, and says nothing about
# higher t-degrees. trunc=None means "this is an honest polynomial". The
# q-degree is never truncated. Multiplying a truncated series by anything
# keeps the smaller truncation, so a numerator polynomial times the
# expansion of 1/denominator mod t^{K+1} is exact through t^K.
#
# The identities checked here all have the shape
#
#     sum_k LHS_k(q) t^k  =  numerator(t, q) / prod (1 - t^a q^b)
#
# and verify_identity compares both sides coefficient by coefficient up to
# t^K. A mismatch is reported, not raised.

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import (
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Type,
    Union,
)

from ._colored import (
    DEFAULT_ENUMERATION_LIMIT,
    descent_set,
    enumerate_group,
    ndes,
    nmajor,
)
from ._groebner import buchberger, lt_ideal, standard_monomials
from ._ideals import combined_ideal
from ._poly import Coefficient
from ._ring import Monomial, bidegree
from ._util import DimensionError, InvalidElementError, Sentinel

__all__ = [
    "DEFAULT_TRUNCATION",
    "CARLITZ",
    "BAGNO",
    "EULER",
    "BiSeries",
    "Mismatch",
    "IdentityReport",
    "q_integer",
    "lhs_series",
    "power_sum_series",
    "eulerian_polynomial",
    "colored_eulerian_polynomial",
    "numerator_negative",
    "basis_numerator",
    "hilbert_numerator",
    "denominator_factors",
    "denominator_polynomial",
    "denominator_expansion",
    "verify_identity",
]

logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION = 8


# sum [k+1]_q^n t^k = (sum over S_n of t^des q^maj) / prod_{j=0}^{n} (1 - t q^j)
class CARLITZ(Sentinel, metaclass=Sentinel):
    pass


# sum [k+1]_q^n t^k = (sum over Z_r wr S_n of t^ndes q^nmajor)
#                     / ((1 - t) prod_{j=1}^{n} (1 - t^r q^{rj}))
class BAGNO(Sentinel, metaclass=Sentinel):
    pass


# sum (k+1)^n t^k = A_n(t) (1 + t + ... + t^{r-1})^n / ((1 - t)(1 - t^r)^n),
# which for r = 1 is Euler's (1 - t)^{n+1}.
class EULER(Sentinel, metaclass=Sentinel):
    pass


_KINDS = {CARLITZ: "carlitz", BAGNO: "bagno", EULER: "euler"}

_Key = Tuple[int, int]


class BiSeries:
    """A polynomial in (t, q) with exact rational coefficients, known
    through t-degree ``trunc`` (or exactly, if ``trunc`` is None).

    Coefficients are keyed by ``(tdeg, qdeg)``. Zero coefficients and terms
    beyond the truncation are dropped on construction.

    """

    __slots__ = ("trunc", "_coeffs")

    trunc: Optional[int]
    _coeffs: Dict[_Key, Fraction]

    def __init__(
        self,
        coeffs: Union[
            Mapping[_Key, Coefficient], Iterable[Tuple[_Key, Coefficient]]
        ] = (),
        trunc: Optional[int] = None,
    ) -> None:
        if trunc is not None and trunc < 0:
            raise InvalidElementError(
                "truncation order must be >= 0, not {}".format(trunc)
            )
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: Dict[_Key, Fraction] = {}
        for (t, q), c in items:
            if t < 0 or q < 0:
                raise InvalidElementError("negative degree t^{} q^{}".format(t, q))
            if trunc is not None and t > trunc:
                continue
            acc[(t, q)] = acc.get((t, q), Fraction(0)) + Fraction(c)
        self.trunc = trunc
        self._coeffs = {k: c for k, c in acc.items() if c}

    @classmethod
    def one(cls) -> "BiSeries":
        return cls({(0, 0): 1})

    def coefficient(self, t: int, q: int) -> Fraction:
        return self._coeffs.get((t, q), Fraction(0))

    def items(self) -> List[Tuple[_Key, Fraction]]:
        return sorted(self._coeffs.items())

    def keys(self) -> List[_Key]:
        return sorted(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def t_coefficient(self, k: int) -> Dict[int, Fraction]:
        """The coefficient of t^k, as a {qdeg: coefficient} polynomial."""
        return {q: c for (t, q), c in sorted(self._coeffs.items()) if t == k}

    def at_q_one(self) -> Dict[int, Fraction]:
        """Specialize q = 1, giving a {tdeg: coefficient} polynomial."""
        out: Dict[int, Fraction] = {}
        for (t, _), c in self._coeffs.items():
            out[t] = out.get(t, Fraction(0)) + c
        return {t: c for t, c in sorted(out.items()) if c}

    def at_one(self) -> Fraction:
        return sum(self._coeffs.values(), Fraction(0))

    def truncate(self, k: int) -> "BiSeries":
        trunc = k if self.trunc is None else min(k, self.trunc)
        return BiSeries(self._coeffs, trunc=trunc)

    def _result_trunc(self, other: "BiSeries") -> Optional[int]:
        if self.trunc is None:
            return other.trunc
        if other.trunc is None:
            return self.trunc
        return min(self.trunc, other.trunc)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        merged = list(self._coeffs.items()) + list(other._coeffs.items())
        return BiSeries(merged, trunc=self._result_trunc(other))

    def __neg__(self) -> "BiSeries":
        return BiSeries({k: -c for k, c in self._coeffs.items()}, trunc=self.trunc)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        trunc = self._result_trunc(other)
        acc: Dict[_Key, Fraction] = {}
        for (t1, q1), c1 in self._coeffs.items():
            for (t2, q2), c2 in other._coeffs.items():
                t = t1 + t2
                if trunc is not None and t > trunc:
                    continue
                key = (t, q1 + q2)
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return BiSeries(acc, trunc=trunc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.trunc == other.trunc and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        terms = " + ".join(
            "{}*t^{}*q^{}".format(c, t, q) for (t, q), c in self.items()
        )
        return "BiSeries({}, trunc={})".format(terms or "0", self.trunc)


def q_integer(k: int) -> BiSeries:
    """``[k]_q = 1 + q + ... + q^{k-1}``, with no t."""
    return BiSeries({(0, i): 1 for i in range(k)})


def lhs_series(n: int, trunc: int = DEFAULT_TRUNCATION) -> BiSeries:
    """``sum_{k=0}^{trunc} [k+1]_q^n t^k``."""
    if n < 0 or trunc < 0:
        raise InvalidElementError("need n >= 0 and trunc >= 0")
    coeffs: Dict[_Key, int] = {}
    for k in range(trunc + 1):
        # [k+1]_q^n by repeated convolution with 1 + q + ... + q^k
        poly = [1]
        for _ in range(n):
            grown = [0] * (len(poly) + k)
            for i, a in enumerate(poly):
                for j in range(k + 1):
                    grown[i + j] += a
            poly = grown
        for q, c in enumerate(poly):
            coeffs[(k, q)] = c
    return BiSeries(coeffs, trunc=trunc)


def power_sum_series(n: int, trunc: int = DEFAULT_TRUNCATION) -> BiSeries:
    """``sum_{k=0}^{trunc} (k+1)^n t^k``, the q = 1 shadow of
    :func:`lhs_series`."""
    return BiSeries({(k, 0): (k + 1) ** n for k in range(trunc + 1)}, trunc=trunc)


def eulerian_polynomial(n: int) -> Tuple[int, ...]:
    """Coefficients of ``A_n(t) = sum over S_n of t^des``, lowest first."""
    if n < 1:
        raise DimensionError("n must be >= 1, not {}".format(n))
    counts = Counter(len(descent_set(p)) for p in permutations(range(1, n + 1)))
    return tuple(counts[d] for d in range(max(counts) + 1))


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def colored_eulerian_polynomial(r: int, n: int) -> Tuple[int, ...]:
    """``A_n(t) (1 + t + ... + t^{r-1})^n``, the q = 1 specialization of
    :func:`numerator_negative`."""
    if r < 1:
        raise DimensionError("r must be >= 1, not {}".format(r))
    poly = list(eulerian_polynomial(n))
    for _ in range(n):
        poly = _poly_mul(poly, [1] * r)
    return tuple(poly)


def numerator_negative(
    r: int, n: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> BiSeries:
    """``sum over Z_r wr S_n of t^ndes q^nmajor``, as an exact polynomial.

    For r = 1 this is the Euler-Mahonian ``sum over S_n of t^des q^maj``.

    Raises:
        EnumerationLimitError: if the group has more than ``limit``
            elements.

    """
    counts = Counter((ndes(g), nmajor(g)) for g in enumerate_group(r, n, limit))
    return BiSeries(counts)


def basis_numerator(monomials: Iterable[Monomial]) -> BiSeries:
    """``sum t^tdeg q^qdeg`` over a list of monomials."""
    counts: "Counter[_Key]" = Counter()
    for m in monomials:
        d = bidegree(m)
        counts[(d.tdeg, d.qdeg)] += 1
    return BiSeries(counts)


def hilbert_numerator(r: int, n: int, *, use_criteria: bool = True) -> BiSeries:
    """The Hilbert series numerator of the quotient by the combined ideal,
    computed from the Groebner side: bidegrees of the standard monomials of
    the actual leading-term ideal."""
    gb = buchberger(combined_ideal(r, n), use_criteria=use_criteria)
    return basis_numerator(standard_monomials(lt_ideal(gb)))


def denominator_factors(
    kind: Type[Sentinel], n: int, r: int = 1
) -> List[Tuple[int, int]]:
    """The denominator as a list of ``(a, b)``, one per factor
    ``1 - t^a q^b``."""
    if kind is CARLITZ:
        return [(1, j) for j in range(n + 1)]
    if kind is BAGNO:
        return [(1, 0)] + [(r, r * j) for j in range(1, n + 1)]
    if kind is EULER:
        return [(1, 0)] + [(r, 0)] * n
    raise InvalidElementError("unknown identity {!r}".format(kind))


def denominator_polynomial(kind: Type[Sentinel], n: int, r: int = 1) -> BiSeries:
    result = BiSeries.one()
    for a, b in denominator_factors(kind, n, r):
        result = result * BiSeries({(0, 0): 1, (a, b): -1})
    return result


def denominator_expansion(
    kind: Type[Sentinel], n: int, trunc: int = DEFAULT_TRUNCATION, r: int = 1
) -> BiSeries:
    """The reciprocal of the denominator, expanded mod ``t^{trunc+1}`` as a
    product of geometric series."""
    if trunc < 0:
        raise InvalidElementError(
            "truncation order must be >= 0, not {}".format(trunc)
        )
    result = BiSeries.one().truncate(trunc)
    for a, b in denominator_factors(kind, n, r):
        geometric = BiSeries(
            {(a * i, b * i): 1 for i in range(trunc // a + 1)}, trunc=trunc
        )
        result = result * geometric
    return result


@dataclass(frozen=True)
class Mismatch:
    t: int
    q: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class IdentityReport:
    """The outcome of :func:`verify_identity`: the identity checked, its
    parameters, the truncation order, and every coefficient where the two
    sides disagree."""

    identity: str
    params: Dict[str, int]
    trunc: int
    mismatches: Tuple[Mismatch, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return not self.mismatches


def _check_kind_params(kind: Type[Sentinel], n: int, r: int) -> Dict[str, int]:
    if kind not in _KINDS:
        raise InvalidElementError("unknown identity {!r}".format(kind))
    if n < 1:
        raise DimensionError("n must be >= 1, not {}".format(n))
    if r < 1:
        raise DimensionError("r must be >= 1, not {}".format(r))
    if kind is CARLITZ:
        if r != 1:
            raise DimensionError("the Carlitz identity has no colors; use r = 1")
        return {"n": n}
    return {"r": r, "n": n}


def verify_identity(
    kind: Type[Sentinel],
    n: int,
    trunc: int = DEFAULT_TRUNCATION,
    r: int = 1,
    *,
    numerator: Optional[BiSeries] = None,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> IdentityReport:
    """Check ``lhs == numerator * (1 / denominator)`` through ``t^trunc``.

    Args:
        kind: :data:`CARLITZ`, :data:`BAGNO` or :data:`EULER`.
        n: The number of letters.
        trunc: The t-order to check through.
        r: The color modulus (must be 1 for :data:`CARLITZ`).
        numerator: Use this numerator instead of the one computed from the
            group statistics, such as one read off a Groebner basis.
        limit: Enumeration limit for computing the numerator.

    Returns:
        An :class:`IdentityReport`; ``report.holds`` is True iff no
        coefficient differs.

    """
    params = _check_kind_params(kind, n, r)
    if trunc < 0:
        raise InvalidElementError(
            "truncation order must be >= 0, not {}".format(trunc)
        )
    if kind is EULER:
        lhs = power_sum_series(n, trunc)
        if numerator is None:
            b_rn = colored_eulerian_polynomial(r, n)
            numerator = BiSeries({(t, 0): c for t, c in enumerate(b_rn)})
        else:
            # The power-sum side carries no q; compare at q = 1.
            numerator = BiSeries({(t, 0): c for t, c in numerator.at_q_one().items()})
    else:
        lhs = lhs_series(n, trunc)
        if numerator is None:
            numerator = numerator_negative(r, n, limit)
    rhs = numerator * denominator_expansion(kind, n, trunc, r)
    mismatches = []
    for t, q in sorted(set(lhs.keys()) | set(rhs.keys())):
        a, b = lhs.coefficient(t, q), rhs.coefficient(t, q)
        if a != b:
            mismatches.append(Mismatch(t, q, a, b))
    report = IdentityReport(_KINDS[kind], params, trunc, tuple(mismatches))
    logger.debug(
        "%s identity %s through t^%d: %d mismatches",
        report.identity,
        params,
        trunc,
        len(mismatches),
    )
    return report
