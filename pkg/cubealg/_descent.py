# The descent basis of the quotient T_n / J_{r,n}.
#
# A plain permutation pi gives the monomial
#
#     a_pi = prod_{j in Des(pi)} z_{pi(1..j)}
#
# (one prefix-set variable per descent), and a pair (sigma, X) gives a_sigma
# times one more prefix-set variable z_{sigma(1..j)} for each j in X. These
# are exactly the standard monomials of the predicted leading-term ideal,
# and decode() goes back the other way.
#
# decode reads a monomial z_{B_1}^{b_1} ... z_{B_s}^{b_s} whose support must
# be a chain B_1 < ... < B_s:
#
#   - the permutation lists each block B_i - B_{i-1} in increasing order,
#     then the elements missing from B_s (if any) in increasing order;
#   - each B_i contributes b_i - 1 copies of |B_i| to X (b_s copies when
#     B_s = [n], which is never a descent position);
#   - a block boundary that is *not* a descent (last of block i smaller than
#     first of what follows) means z_{B_i} was not a descent factor after
#     all, so it moves to m_fail and |B_i| gets one more copy in X.

import collections
from dataclasses import dataclass
from typing import Counter, List, Optional, Sequence, Tuple

from ._colored import (
    DEFAULT_ENUMERATION_LIMIT,
    SigmaXPair,
    descent_set,
    enumerate_pairs,
    ndes,
    nmajor,
    recompose,
)
from ._ring import Monomial, elements_of, permute_mask, variable_order
from ._util import InvalidElementError, InvalidMultisetError, NotStandardError

__all__ = [
    "XMonomial",
    "DecodeTrace",
    "gs_element",
    "nd_element",
    "decode",
    "decode_trace",
    "coinvariant_image",
    "classical_gs_exponents",
    "permute_exponents",
    "permute_monomial",
    "descent_basis",
]


@dataclass(frozen=True)
class XMonomial:
    """A descent-basis monomial together with the pair it was built from."""

    monomial: Monomial
    pair: Optional[SigmaXPair]
    r: int

    def statistics(self) -> Tuple[int, int]:
        """``(ndes, nmajor)`` of the colored permutation behind the pair."""
        if self.pair is None:
            raise InvalidElementError("this monomial has no provenance pair")
        g = recompose(self.pair, self.r)
        return ndes(g), nmajor(g)


def _prefix_mask(perm: Sequence[int], j: int) -> int:
    mask = 0
    for v in perm[:j]:
        mask |= 1 << (v - 1)
    return mask


def _check_plain(perm: Sequence[int]) -> Tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)) or not perm:
        raise InvalidElementError("{!r} is not a permutation".format(perm))
    return perm


def _descent_factors(perm: Sequence[int]) -> Counter[int]:
    return collections.Counter(_prefix_mask(perm, j) for j in descent_set(perm))


def gs_element(pi: Sequence[int]) -> Monomial:
    pi = _check_plain(pi)
    return Monomial(len(pi), _descent_factors(pi))


def nd_element(p: SigmaXPair, r: int) -> Monomial:
    """``a_sigma * prod_{j in X} z_{sigma(1..j)}``.

    Raises:
        InvalidMultisetError: if X repeats an element r or more times.

    """
    p.check_multiplicities(r)
    exps = _descent_factors(p.sigma)
    exps.update(_prefix_mask(p.sigma, j) for j in p.x)
    return Monomial(p.n, exps)


@dataclass(frozen=True)
class DecodeTrace:
    """Everything :func:`decode` worked out on the way to its answer.

    ``chain`` lists the support B_1 < ... < B_s as element tuples,
    ``support_permutation`` is sigma, ``x_tilde`` is X before the
    non-descent boundaries were added back, and ``m_fail`` is the product of
    the chain variables at those boundaries.

    """

    pair: SigmaXPair
    chain: Tuple[Tuple[int, ...], ...]
    support_permutation: Tuple[int, ...]
    x_tilde: Tuple[int, ...]
    m_fail: Monomial


def decode_trace(m: Monomial, r: int) -> DecodeTrace:
    """Decode a standard monomial, keeping the intermediate data.

    Raises:
        NotStandardError: if ``m`` is not a standard monomial of the
            predicted ideal for this r.

    """
    n = m.n
    order = variable_order(n)
    full = (1 << n) - 1
    chain = sorted(m.support(), key=lambda mask: order.sizes[mask])
    if 0 in chain:
        raise NotStandardError("{} involves z{{}}".format(m))
    for below, above in zip(chain, chain[1:]):
        if below & above != below:
            raise NotStandardError("the support of {} is not a chain".format(m))
    prefixes = {(1 << k) - 1 for k in range(1, n + 1)}
    for mask in chain:
        cap = r - 1 if mask in prefixes else r
        if m.exponent(mask) > cap:
            raise NotStandardError(
                "{} has z{{{}}} to a power above {}".format(
                    m, ",".join(map(str, elements_of(mask))), cap
                )
            )

    blocks: List[Tuple[int, ...]] = []
    previous = 0
    for mask in chain:
        blocks.append(elements_of(mask & ~previous))
        previous = mask
    gamma = elements_of(full & ~previous)
    sigma = tuple(v for block in blocks for v in block) + gamma

    ends_full = bool(chain) and chain[-1] == full
    x_tilde: List[int] = []
    for k, mask in enumerate(chain):
        b = m.exponent(mask)
        copies = b if ends_full and k == len(chain) - 1 else b - 1
        x_tilde += [order.sizes[mask]] * copies

    fails = {}
    checked = len(chain) - 1 if ends_full else len(chain)
    for k in range(checked):
        following = blocks[k + 1][0] if k + 1 < len(chain) else gamma[0]
        if blocks[k][-1] < following:
            fails[chain[k]] = 1
    x = x_tilde + [order.sizes[mask] for mask in fails]

    try:
        pair = SigmaXPair(sigma, x)
        rebuilt = nd_element(pair, r)
    except InvalidMultisetError:
        raise NotStandardError("{} is not a standard monomial".format(m)) from None
    if rebuilt != m:
        raise NotStandardError("{} is not a standard monomial".format(m))
    return DecodeTrace(
        pair=pair,
        chain=tuple(elements_of(mask) for mask in chain),
        support_permutation=sigma,
        x_tilde=tuple(sorted(x_tilde)),
        m_fail=Monomial(n, fails),
    )


def decode(m: Monomial, r: int) -> SigmaXPair:
    """The pair ``(sigma, X)`` with ``nd_element((sigma, X), r) == m``."""
    return decode_trace(m, r).pair


def coinvariant_image(m: Monomial) -> Tuple[int, ...]:
    """Exponent vector over x_1..x_n of the image of ``m`` under
    ``z_A -> prod_{i in A} x_i``."""
    exps = [0] * m.n
    for mask, e in m.items():
        for i in elements_of(mask):
            exps[i - 1] += e
    return tuple(exps)


def classical_gs_exponents(pi: Sequence[int]) -> Tuple[int, ...]:
    """Exponent vector of ``prod_{j in Des(pi)} x_{pi(1)} ... x_{pi(j)}``."""
    pi = _check_plain(pi)
    exps = [0] * len(pi)
    for j in descent_set(pi):
        for v in pi[:j]:
            exps[v - 1] += 1
    return tuple(exps)


def permute_exponents(sigma: Sequence[int], exps: Sequence[int]) -> Tuple[int, ...]:
    """The S_n action on exponent vectors, x_i -> x_{sigma(i)}."""
    out = [0] * len(exps)
    for i, e in enumerate(exps, 1):
        out[sigma[i - 1] - 1] = e
    return tuple(out)


def permute_monomial(sigma: Sequence[int], m: Monomial) -> Monomial:
    return Monomial(m.n, {permute_mask(sigma, mask): e for mask, e in m.items()})


def descent_basis(
    r: int, n: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> List[XMonomial]:
    """``nd_element`` of every (sigma, X) pair, in enumeration order."""
    return [XMonomial(nd_element(p, r), p, r) for p in enumerate_pairs(r, n, limit)]
