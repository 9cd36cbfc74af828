# Generator sets for the ideals of T_n we care about:
#
#   TORIC         the toric ideal of the unit cube, one binomial
#                 z_A z_B - z_{A&B} z_{A|B} per pair of incomparable subsets
#   INVARIANT     z_empty and the power sums sum_{|A|=k} z_A^r (for r = 1,
#                 the plain sums for k = 0..n)
#   COMBINED      the two together, whose quotient is the algebra we study
#   PREDICTED_LT  the closed-form monomial ideal that the leading terms of
#                 COMBINED are supposed to generate
#
# plus monomial ideals in general (always kept minimal), and the action of
# Z_r wr S_n on T_n, z_A -> (prod_{i in A} eps_i) z_{pi(A)}. The roots of
# unity eps_i never appear as numbers; the action on a monomial returns the
# total exponent of omega mod r.

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Type

from ._colored import ColoredPermutation
from ._poly import Polynomial
from ._ring import Monomial, elements_of, permute_mask, variable_order
from ._util import DimensionError, InvalidElementError, Sentinel

__all__ = [
    "TORIC",
    "INVARIANT",
    "COMBINED",
    "PREDICTED_LT",
    "GeneratorSet",
    "MonomialIdeal",
    "toric_generators",
    "invariant_generators",
    "combined_ideal",
    "predicted_lt_ideal",
    "predicted_generator_set",
    "monomial_ideal_equal",
    "monomial_ideal_contains",
    "sperner_pairs",
    "act_on_monomial",
    "is_invariant",
    "permute_polynomial",
]


class TORIC(Sentinel, metaclass=Sentinel):
    pass


class INVARIANT(Sentinel, metaclass=Sentinel):
    pass


class COMBINED(Sentinel, metaclass=Sentinel):
    pass


class PREDICTED_LT(Sentinel, metaclass=Sentinel):
    pass


_LABELS = (TORIC, INVARIANT, COMBINED, PREDICTED_LT)


@dataclass(init=False, frozen=True)
class GeneratorSet:
    """A labelled list of generators of an ideal of T_n.

    Fields:

    .. attribute:: n

    .. attribute:: r

       The color modulus the ideal was built for (toric ideals don't depend
       on it, and carry whatever the caller passed, default 1).

    .. attribute:: gens

       A tuple of nonzero :class:`Polynomial` objects of T_n.

    .. attribute:: label

       One of :data:`TORIC`, :data:`INVARIANT`, :data:`COMBINED`,
       :data:`PREDICTED_LT`.

    """

    __slots__ = ("n", "r", "gens", "label")

    n: int
    r: int
    gens: Tuple[Polynomial, ...]
    label: Type[Sentinel]

    def __init__(
        self, n: int, r: int, gens: Iterable[Polynomial], label: Type[Sentinel]
    ) -> None:
        variable_order(n)
        if r < 1:
            raise DimensionError("r must be >= 1, not {}".format(r))
        if label not in _LABELS:
            raise InvalidElementError(
                "unknown generator set label {!r}".format(label)
            )
        gens = tuple(gens)
        for g in gens:
            if g.n != n:
                raise DimensionError("generator of T_{} in T_{}".format(g.n, n))
            if g.is_zero():
                raise InvalidElementError("generator sets can't contain 0")
        if label is PREDICTED_LT and not all(g.is_monomial() for g in gens):
            raise InvalidElementError("predicted leading terms must be monomials")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "label", label)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.gens)


@dataclass(init=False, frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Whatever generators you pass in, only the minimal ones are kept (none
    divides another), sorted largest first. If ``families`` is given it is a
    parallel iterable of integer tags; a surviving generator keeps the
    smallest tag among its duplicates.

    """

    __slots__ = ("n", "min_gens", "families")

    n: int
    min_gens: Tuple[Monomial, ...]
    families: Optional[Tuple[int, ...]]

    def __init__(
        self,
        n: int,
        gens: Iterable[Monomial],
        families: Optional[Iterable[int]] = None,
    ) -> None:
        variable_order(n)
        gens = list(gens)
        for m in gens:
            if m.n != n:
                raise DimensionError("monomial of T_{} in T_{}".format(m.n, n))
        tags = list(families) if families is not None else [0] * len(gens)
        if len(tags) != len(gens):
            raise InvalidElementError("one family tag per generator, please")
        # A divisor is never larger than its multiple, so walking up the term
        # order sees every divisor before the monomials it kills.
        kept: List[Tuple[Monomial, int]] = []
        for m, tag in sorted(zip(gens, tags), key=lambda mt: (mt[0].key, mt[1])):
            if not any(k.divides(m) for k, _ in kept):
                kept.append((m, tag))
        kept.reverse()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "min_gens", tuple(m for m, _ in kept))
        object.__setattr__(
            self,
            "families",
            tuple(t for _, t in kept) if families is not None else None,
        )

    def __len__(self) -> int:
        return len(self.min_gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.min_gens)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.min_gens)

    def family_of(self, m: Monomial) -> Optional[int]:
        if self.families is None:
            return None
        for g, tag in zip(self.min_gens, self.families):
            if g == m:
                return tag
        return None

    def pure_power_caps(self) -> Dict[int, int]:
        """{mask: e} for every generator of the form z_A^e."""
        caps = {}
        for g in self.min_gens:
            support = g.support()
            if len(support) == 1:
                caps[support[0]] = g.exponent(support[0])
        return caps


def monomial_ideal_equal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    if a.n != b.n:
        raise DimensionError("monomial ideals of T_{} and T_{}".format(a.n, b.n))
    return set(a.min_gens) == set(b.min_gens)


def _var(n: int, mask: int, exp: int = 1) -> Monomial:
    return Monomial._make(n, {mask: exp})


def sperner_pairs(n: int) -> List[Tuple[int, int]]:
    """Unordered pairs of incomparable subsets of [n], as masks, listed in
    variable order."""
    masks = variable_order(n).masks
    pairs = []
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            common = a & b
            if common != a and common != b:
                pairs.append((a, b))
    return pairs


def toric_generators(n: int, r: int = 1) -> GeneratorSet:
    gens = []
    for a, b in sperner_pairs(n):
        ab = _var(n, a) * _var(n, b)
        meet_join = _var(n, a & b) * _var(n, a | b)
        gens.append(Polynomial(n, {ab: 1, meet_join: -1}))
    return GeneratorSet(n, r, gens, TORIC)


def _power_sum(n: int, size: int, r: int) -> Polynomial:
    order = variable_order(n)
    return Polynomial(
        n, [(_var(n, m, r), 1) for m in order.masks if order.sizes[m] == size]
    )


def invariant_generators(r: int, n: int) -> GeneratorSet:
    if r < 1:
        raise DimensionError("r must be >= 1, not {}".format(r))
    variable_order(n)
    if r == 1:
        gens = [_power_sum(n, k, 1) for k in range(n + 1)]
    else:
        gens = [Polynomial.from_monomial(_var(n, 0))]
        gens += [_power_sum(n, k, r) for k in range(1, n + 1)]
    return GeneratorSet(n, r, gens, INVARIANT)


def combined_ideal(r: int, n: int) -> GeneratorSet:
    gens: List[Polynomial] = []
    seen = set()
    for g in toric_generators(n, r).gens + invariant_generators(r, n).gens:
        if g not in seen:
            seen.add(g)
            gens.append(g)
    return GeneratorSet(n, r, gens, COMBINED)


def _low(mask: int) -> int:
    return (mask & -mask).bit_length()


def _high(mask: int) -> int:
    return mask.bit_length()


def _strict_supersets(mask: int, full: int) -> Iterator[int]:
    free = full & ~mask
    sub = free
    while sub:
        yield mask | sub
        sub = (sub - 1) & free


def _predicted_generators(r: int, n: int) -> Iterator[Tuple[Monomial, int]]:
    # Yields (monomial, family) for the seven families, before minimization.
    # Every subset below is nonempty: z_empty (family 1) divides anything
    # that mentions it.
    order = variable_order(n)
    full = (1 << n) - 1
    prefixes = {(1 << k) - 1 for k in range(1, n + 1)}
    nonempty = [m for m in order.masks if m]
    non_prefix = [m for m in nonempty if m not in prefixes]

    yield _var(n, 0), 1
    for k in range(1, n + 1):
        yield _var(n, (1 << k) - 1, r), 2
    for a in non_prefix:
        yield _var(n, a, r + 1), 3
    for a, b in sperner_pairs(n):
        yield _var(n, a) * _var(n, b), 4
    for a in non_prefix:
        for b in _strict_supersets(a, full):
            if _low(b & ~a) > _high(a):
                yield _var(n, a, r) * _var(n, b), 5
    for b in non_prefix:
        for a in nonempty:
            if a & b != a or a == b:
                continue
            for ell in range(1, n + 1):
                prefix = (1 << ell) - 1
                if prefix & ~a and not prefix & ~b and not (b & ~a) & ~prefix:
                    yield _var(n, a) * _var(n, b, r), 6
                    break
    for a2 in non_prefix:
        for a1 in nonempty:
            if a1 & a2 != a1 or a1 == a2:
                continue
            for a3 in _strict_supersets(a2, full):
                if _high(a2 & ~a1) < _low(a3 & ~a2):
                    yield _var(n, a1) * _var(n, a2, r) * _var(n, a3), 7


def predicted_lt_ideal(r: int, n: int) -> MonomialIdeal:
    """The monomial ideal the leading terms of :func:`combined_ideal` are
    predicted to generate, with each minimal generator tagged by the family
    (1-7) that produced it."""
    if r < 1:
        raise DimensionError("r must be >= 1, not {}".format(r))
    pairs = list(_predicted_generators(r, n))
    return MonomialIdeal(n, (m for m, _ in pairs), (f for _, f in pairs))


def predicted_generator_set(r: int, n: int) -> GeneratorSet:
    ideal = predicted_lt_ideal(r, n)
    return GeneratorSet(
        n, r, (Polynomial.from_monomial(m) for m in ideal.min_gens), PREDICTED_LT
    )


def act_on_monomial(g: ColoredPermutation, m: Monomial) -> Tuple[int, Monomial]:
    """Apply ``g`` to ``m``; returns ``(k, m')`` with ``g . m = omega^k m'``."""
    if g.n != m.n:
        raise DimensionError("Z_{} wr S_{} acting on T_{}".format(g.r, g.n, m.n))
    weight = 0
    exps = {}
    for mask, e in m.items():
        weight += e * sum(g.colors[i - 1] for i in elements_of(mask))
        exps[permute_mask(g.values, mask)] = e
    return weight % g.r, Monomial._make(m.n, exps)


def is_invariant(f: Polynomial, g: ColoredPermutation) -> bool:
    # The action permutes monomials, so no two terms can merge: f is fixed
    # iff every term keeps a trivial root-of-unity weight and the permuted
    # polynomial is f again.
    image = {}
    for m, c in f.terms():
        k, m2 = act_on_monomial(g, m)
        if k:
            return False
        image[m2] = c
    return Polynomial._make(f.n, image) == f


def permute_polynomial(sigma: Sequence[int], f: Polynomial) -> Polynomial:
    """The S_n action z_A -> z_{sigma(A)}."""
    if len(sigma) != f.n:
        raise DimensionError("S_{} acting on T_{}".format(len(sigma), f.n))
    terms = {}
    for m, c in f.terms():
        image = {permute_mask(sigma, k): e for k, e in m.items()}
        terms[Monomial._make(f.n, image)] = c
    return Polynomial._make(f.n, terms)


def monomial_ideal_contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    if ideal.n != m.n:
        raise DimensionError(
            "monomial of T_{} and ideal of T_{}".format(m.n, ideal.n)
        )
    return ideal.contains(m)
