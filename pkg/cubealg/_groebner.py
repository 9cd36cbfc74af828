# Division, S-polynomials and Buchberger's algorithm, specialized to T_n with
# its grevlex order.
#
# The Buchberger class holds the mutable state of one run (the growing
# basis, the queue of critical pairs, the counters) and everything handed
# out of it is immutable. A run goes:
#
#   1. every input generator joins the basis (made monic), and every pair of
#      basis elements goes into the queue;
#   2. pairs come off the queue smallest-lcm first (ties in insertion order);
#      a pair is skipped if its leading monomials are coprime, or if some
#      third element's leading monomial divides the lcm while both of its
#      pairs with the current two are already done (the chain criterion);
#   3. every other pair has its S-polynomial fully reduced, and a nonzero
#      remainder joins the basis, queueing pairs with everything before it;
#   4. at the end, redundant elements are dropped and the rest are
#      tail-reduced against each other, which gives the unique reduced basis.
#
# Both skipping rules can be switched off, which is slow but makes a handy
# cross-check that they never change the answer.

import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

from ._ideals import GeneratorSet, MonomialIdeal
from ._poly import Polynomial
from ._ring import Monomial, variable_order
from ._util import DimensionError, InfiniteQuotientError, InvalidElementError

__all__ = [
    "DivisionResult",
    "GroebnerStats",
    "GroebnerBasis",
    "Buchberger",
    "divide",
    "s_polynomial",
    "buchberger",
    "lt_ideal",
    "standard_monomials",
    "ideal_member",
    "is_groebner_basis",
]

logger = logging.getLogger(__name__)

_Terms = Dict[Monomial, Fraction]


def _leading(terms: _Terms) -> Monomial:
    return max(terms, key=lambda m: m.key)


def _pair(i: int, j: int) -> Tuple[int, int]:
    return (i, j) if i < j else (j, i)


def _subtract_multiple(
    p: _Terms, c: Fraction, q: Monomial, divisor: Iterable[Tuple[Monomial, Fraction]]
) -> None:
    # p -= c * q * divisor, in place
    for t, a in divisor:
        m = q * t
        s = p.get(m, 0) - c * a
        if s:
            p[m] = s
        else:
            del p[m]


@dataclass(frozen=True)
class DivisionResult:
    """The outcome of dividing f by an ordered list of divisors:
    ``f == sum(q * g for q, g in zip(quotients, divisors)) + remainder``,
    and no term of the remainder is divisible by a divisor's leading
    monomial."""

    quotients: Tuple[Polynomial, ...]
    remainder: Polynomial


def _check_divisors(n: int, divisors: Sequence[Polynomial]) -> None:
    for g in divisors:
        if g.n != n:
            raise DimensionError("divisor of T_{} for T_{}".format(g.n, n))
        # Raises ZeroPolynomialError for a zero divisor.
        g.leading_term()


def divide(f: Polynomial, divisors: Sequence[Polynomial]) -> DivisionResult:
    """Multivariate division. At each step the leading term of what's left
    is cancelled by the *first* divisor whose leading monomial divides it,
    or moved to the remainder if there is none."""
    _check_divisors(f.n, divisors)
    leads = [g.leading_term() for g in divisors]
    divisor_terms = [g.terms() for g in divisors]
    quotients: List[_Terms] = [{} for _ in divisors]
    remainder: _Terms = {}
    p = dict(f.terms())
    while p:
        m = _leading(p)
        c = p[m]
        for i, (lm, lc) in enumerate(leads):
            if lm.divides(m):
                q = m / lm
                qc = c / lc
                quotients[i][q] = quotients[i].get(q, Fraction(0)) + qc
                _subtract_multiple(p, qc, q, divisor_terms[i])
                break
        else:
            remainder[m] = c
            del p[m]
    return DivisionResult(
        tuple(Polynomial(f.n, q) for q in quotients), Polynomial(f.n, remainder)
    )


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """``(x^gamma / LT(f)) f - (x^gamma / LT(g)) g``, x^gamma the lcm of the
    leading monomials.

    Raises:
        ZeroPolynomialError: if either input is zero.

    """
    if f.n != g.n:
        raise DimensionError("polynomials of T_{} and T_{}".format(f.n, g.n))
    lm_f, lc_f = f.leading_term()
    lm_g, lc_g = g.leading_term()
    lcm = lm_f.lcm(lm_g)
    return f.mul_term(lcm / lm_f, 1 / lc_f) - g.mul_term(lcm / lm_g, 1 / lc_g)


@dataclass(frozen=True)
class GroebnerStats:
    """Counters from one Buchberger run. ``criterion1_skips`` counts pairs
    dropped for coprime leading monomials, ``criterion2_skips`` those
    dropped by the chain criterion."""

    pairs_considered: int = 0
    criterion1_skips: int = 0
    criterion2_skips: int = 0
    reductions_to_zero: int = 0

    def as_dict(self) -> Dict[str, int]:
        return {
            "pairs_considered": self.pairs_considered,
            "criterion1_skips": self.criterion1_skips,
            "criterion2_skips": self.criterion2_skips,
            "reductions_to_zero": self.reductions_to_zero,
        }


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: every element has leading coefficient 1,
    no term of any element is divisible by another element's leading
    monomial, and elements are listed largest leading monomial first.

    ``r`` is None when the basis came from a bare list of polynomials
    rather than a :class:`GeneratorSet`.

    """

    n: int
    r: Optional[int]
    basis: Tuple[Polynomial, ...]
    stats: GroebnerStats

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.basis)

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial() for g in self.basis]


class _Reducer:
    # Full reduction modulo a list of monic polynomials, with the divisors
    # bucketed by one variable of their leading monomial so a lookup only
    # looks at divisors that could possibly divide.

    def __init__(self) -> None:
        self.polys: List[List[Tuple[Monomial, Fraction]]] = []
        self.leads: List[Monomial] = []
        self._buckets: Dict[int, List[int]] = {}

    def add(self, g: Polynomial) -> int:
        lm = g.leading_monomial()
        index = len(self.polys)
        self.polys.append(g.terms())
        self.leads.append(lm)
        bucket = lm.support()[0] if not lm.is_one() else -1
        self._buckets.setdefault(bucket, []).append(index)
        return index

    def find_divisor(self, m: Monomial) -> Optional[int]:
        best = None
        if -1 in self._buckets:
            best = self._buckets[-1][0]
        for mask in m.support():
            for k in self._buckets.get(mask, ()):
                if best is not None and k >= best:
                    break
                if self.leads[k].divides(m):
                    best = k
                    break
        return best

    def reduce(self, p: _Terms) -> _Terms:
        # Consumes p.
        remainder: _Terms = {}
        while p:
            m = _leading(p)
            k = self.find_divisor(m)
            if k is None:
                remainder[m] = p.pop(m)
            else:
                _subtract_multiple(p, p[m], m / self.leads[k], self.polys[k])
        return remainder


class Buchberger:
    """One run of Buchberger's algorithm.

    Most people want :func:`buchberger`, which builds one of these, calls
    :meth:`run`, and hands back the result. Driving it by hand with
    :meth:`step` is useful for watching the basis grow.

    Args:
        gens: The input generators, all in the same T_n.
        use_criteria: Whether to skip pairs by the coprime and chain
            criteria. Turning this off never changes the result.

    """

    def __init__(
        self, gens: Sequence[Polynomial], *, use_criteria: bool = True
    ) -> None:
        gens = [g for g in gens]
        if not gens:
            raise InvalidElementError("Buchberger needs at least one generator")
        self.n = gens[0].n
        _check_divisors(self.n, gens)
        self.use_criteria = use_criteria
        self.basis: List[Polynomial] = []
        self._reducer = _Reducer()
        self._queue: List[Tuple[Tuple[int, Tuple[int, ...]], int, int, int]] = []
        self._pending: Set[Tuple[int, int]] = set()
        self._counter = 0
        self._pairs_considered = 0
        self._coprime_skips = 0
        self._chain_skips = 0
        self._zero_reductions = 0
        logger.debug("Buchberger on %d generators in T_%d", len(gens), self.n)
        for g in gens:
            self._add(g.monic())

    @property
    def stats(self) -> GroebnerStats:
        return GroebnerStats(
            pairs_considered=self._pairs_considered,
            criterion1_skips=self._coprime_skips,
            criterion2_skips=self._chain_skips,
            reductions_to_zero=self._zero_reductions,
        )

    @property
    def pending_pairs(self) -> int:
        return len(self._pending)

    def _add(self, g: Polynomial) -> None:
        t = self._reducer.add(g)
        self.basis.append(g)
        lm = self._reducer.leads[t]
        for i in range(t):
            lcm = self._reducer.leads[i].lcm(lm)
            heapq.heappush(self._queue, (lcm.key, self._counter, i, t))
            self._counter += 1
            self._pending.add((i, t))

    def _chain_criterion(self, i: int, j: int, lcm: Monomial) -> bool:
        leads = self._reducer.leads
        pending = self._pending
        for k in range(len(leads)):
            if k == i or k == j:
                continue
            if _pair(i, k) in pending or _pair(j, k) in pending:
                continue
            if leads[k].divides(lcm):
                return True
        return False

    def step(self) -> bool:
        """Process one critical pair. Returns False once the queue is empty."""
        if not self._queue:
            return False
        _, _, i, j = heapq.heappop(self._queue)
        self._pending.discard((i, j))
        self._pairs_considered += 1
        lm_i = self._reducer.leads[i]
        lm_j = self._reducer.leads[j]
        lcm = lm_i.lcm(lm_j)
        if self.use_criteria:
            if lm_i.is_coprime(lm_j):
                self._coprime_skips += 1
                return True
            if self._chain_criterion(i, j, lcm):
                self._chain_skips += 1
                return True
        s = s_polynomial(self.basis[i], self.basis[j])
        remainder = self._reducer.reduce(dict(s.terms()))
        if not remainder:
            self._zero_reductions += 1
            return True
        h = Polynomial(self.n, remainder).monic()
        self._add(h)
        logger.debug(
            "basis element %d from pair (%d, %d): leading monomial %s",
            len(self.basis) - 1,
            i,
            j,
            h.leading_monomial(),
        )
        return True

    def reduced_basis(self) -> List[Polynomial]:
        """Minimalize and interreduce the current basis."""
        by_lead = sorted(self.basis, key=lambda g: g.leading_monomial().key)
        minimal: List[Polynomial] = []
        for g in by_lead:
            lm = g.leading_monomial()
            if not any(h.leading_monomial().divides(lm) for h in minimal):
                minimal.append(g)
        reducer = _Reducer()
        for g in minimal:
            reducer.add(g)
        # Terms below a leading monomial can't be divisible by it, so the
        # element's own leading monomial never fires while reducing its tail.
        reduced = []
        for g in minimal:
            (lm, lc), *tail = g.terms()
            terms = reducer.reduce(dict(tail))
            terms[lm] = lc
            reduced.append(Polynomial(self.n, terms))
        reduced.sort(key=lambda g: g.leading_monomial().key, reverse=True)
        return reduced

    def run(self, r: Optional[int] = None) -> GroebnerBasis:
        while self.step():
            pass
        basis = self.reduced_basis()
        stats = self.stats
        logger.debug(
            "Buchberger done: %d elements (reduced from %d), %s",
            len(basis),
            len(self.basis),
            stats.as_dict(),
        )
        return GroebnerBasis(self.n, r, tuple(basis), stats)


def buchberger(
    gens: Union[GeneratorSet, Sequence[Polynomial]], *, use_criteria: bool = True
) -> GroebnerBasis:
    """Compute the reduced Groebner basis of the ideal generated by ``gens``.

    Raises:
        InvalidElementError: if there are no generators.
        ZeroPolynomialError: if a generator is zero.

    """
    if isinstance(gens, GeneratorSet):
        return Buchberger(gens.gens, use_criteria=use_criteria).run(gens.r)
    return Buchberger(gens, use_criteria=use_criteria).run()


def lt_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(gb.n, gb.leading_monomials())


def ideal_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    return divide(f, gb.basis).remainder.is_zero()


def is_groebner_basis(polys: Sequence[Polynomial]) -> bool:
    """Whether every S-polynomial of ``polys`` reduces to 0 modulo
    ``polys``."""
    if not polys:
        return True
    reducer = _Reducer()
    for g in polys:
        reducer.add(g.monic())
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j])
            if reducer.reduce(dict(s.terms())):
                return False
    return True


def standard_monomials(ideal: MonomialIdeal) -> List[Monomial]:
    """Every monomial outside ``ideal``, smallest first.

    The search walks the variables largest first, choosing an exponent below
    the variable's pure-power cap for each, and abandons a branch as soon as
    the partial monomial is divisible by a generator, since raising the
    exponent further can only keep it divisible.

    Raises:
        InfiniteQuotientError: if some variable has no pure power in the
            ideal, so there are infinitely many standard monomials.

    """
    n = ideal.n
    masks = variable_order(n).masks
    caps = ideal.pure_power_caps()
    for mask in masks:
        if mask not in caps:
            raise InfiniteQuotientError(
                "no power of z{{{}}} lies in the ideal".format(
                    ",".join(str(i) for i in range(1, n + 1) if mask >> (i - 1) & 1)
                )
            )
    position = {mask: k for k, mask in enumerate(masks)}
    # Each generator is checked once, right after the last of its variables
    # gets its exponent.
    buckets: List[List[Monomial]] = [[] for _ in masks]
    for g in ideal.min_gens:
        buckets[max(position[mask] for mask in g.support())].append(g)

    found: List[Monomial] = []
    exps: Dict[int, int] = {}

    def search(k: int) -> None:
        if k == len(masks):
            found.append(Monomial._make(n, dict(exps)))
            return
        mask = masks[k]
        search(k + 1)
        for e in range(1, caps[mask]):
            exps[mask] = e
            if any(g.divides_exponents(exps) for g in buckets[k]):
                break
            search(k + 1)
        exps.pop(mask, None)

    search(0)
    found.sort(key=lambda m: m.key)
    return found
