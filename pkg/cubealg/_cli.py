# The command-line interface: one subcommand per computation, all sharing
# the same flags. run() does the work and returns the exit code; main() only
# parses argv and sets up logging, so tests can drive run() with a RunConfig
# and a StringIO.
#
# Exit codes: 0 when the command succeeded (for verify-* commands: the
# statement checked out), 1 when a verification found a discrepancy, 2 for
# bad arguments or any CubeAlgError raised on the way.

import argparse
import json
import logging
import random
import sys
from dataclasses import dataclass
from itertools import permutations
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

from ._codec import (
    format_table,
    groebner_to_json,
    monomial_ideal_to_json,
    monomial_to_json,
    report_to_json,
)
from ._colored import (
    DEFAULT_ENUMERATION_LIMIT,
    check_enumeration_limit,
    decompose,
    dimension,
    enumerate_group,
    ndes,
    nmajor,
)
from ._descent import (
    classical_gs_exponents,
    coinvariant_image,
    decode,
    descent_basis,
    gs_element,
    nd_element,
)
from ._groebner import Buchberger, GroebnerBasis, lt_ideal, standard_monomials
from ._ideals import combined_ideal, monomial_ideal_equal, predicted_lt_ideal
from ._poly import Polynomial
from ._ring import MAX_N, bidegree
from ._series import (
    BAGNO,
    CARLITZ,
    DEFAULT_TRUNCATION,
    EULER,
    hilbert_numerator,
    verify_identity,
)
from ._util import CubeAlgError, DimensionError, InvalidElementError, NotStandardError
from ._version import __version__

__all__ = ["COMMANDS", "RunConfig", "run", "main"]

logger = logging.getLogger(__name__)

COMMANDS = ("stats", "gb", "verify-lt", "verify-basis", "verify-hilbert", "dim", "phi")
FORMATS = ("text", "json")
_IDENTITIES = {"carlitz": CARLITZ, "bagno": BAGNO, "euler": EULER}
_NUMERATORS = ("stats", "groebner")


@dataclass(init=False, frozen=True)
class RunConfig:
    """Everything one invocation needs.

    ``identity`` and ``numerator`` only matter for ``verify-hilbert``;
    ``identity=None`` picks carlitz for r = 1 and bagno otherwise.
    ``seed`` shuffles the generators before Buchberger runs.

    Raises:
        DimensionError: for r < 1 or n outside [1, MAX_N].
        InvalidElementError: for any other bad value.

    """

    __slots__ = (
        "command",
        "r",
        "n",
        "trunc",
        "format",
        "limit",
        "use_criteria",
        "seed",
        "identity",
        "numerator",
    )

    command: str
    r: int
    n: int
    trunc: int
    format: str
    limit: int
    use_criteria: bool
    seed: Optional[int]
    identity: Optional[str]
    numerator: str

    def __init__(
        self,
        command: str,
        r: int = 1,
        n: int = 2,
        *,
        trunc: int = DEFAULT_TRUNCATION,
        format: str = "text",
        limit: int = DEFAULT_ENUMERATION_LIMIT,
        use_criteria: bool = True,
        seed: Optional[int] = None,
        identity: Optional[str] = None,
        numerator: str = "stats",
    ) -> None:
        if command not in COMMANDS:
            raise InvalidElementError("unknown command {!r}".format(command))
        if r < 1:
            raise DimensionError("r must be >= 1, not {}".format(r))
        if not 1 <= n <= MAX_N:
            raise DimensionError("n must be in [1, {}], not {}".format(MAX_N, n))
        if trunc < 0:
            raise InvalidElementError("--trunc must be >= 0, not {}".format(trunc))
        if limit < 1:
            raise InvalidElementError("--limit must be >= 1, not {}".format(limit))
        if format not in FORMATS:
            raise InvalidElementError("unknown output format {!r}".format(format))
        if identity is not None and identity not in _IDENTITIES:
            raise InvalidElementError("unknown identity {!r}".format(identity))
        if numerator not in _NUMERATORS:
            raise InvalidElementError("unknown numerator source {!r}".format(numerator))
        object.__setattr__(self, "command", command)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "format", format)
        object.__setattr__(self, "limit", limit)
        object.__setattr__(self, "use_criteria", use_criteria)
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "identity", identity)
        object.__setattr__(self, "numerator", numerator)

    @property
    def identity_name(self) -> str:
        if self.identity is not None:
            return self.identity
        return "carlitz" if self.r == 1 else "bagno"


def _emit(config: RunConfig, out: TextIO, data: Any, text: str) -> None:
    if config.format == "json":
        out.write(json.dumps(data, indent=2))
    else:
        out.write(text)
    out.write("\n")


def _params(config: RunConfig) -> Dict[str, int]:
    return {"r": config.r, "n": config.n}


def _groebner(config: RunConfig) -> GroebnerBasis:
    gens: List[Polynomial] = list(combined_ideal(config.r, config.n).gens)
    if config.seed is not None:
        random.Random(config.seed).shuffle(gens)
        logger.debug("shuffled %d generators with seed %d", len(gens), config.seed)
    return Buchberger(gens, use_criteria=config.use_criteria).run(config.r)


def _exponent_vector(exps: Sequence[int]) -> str:
    factors = [
        "x{}".format(i) if e == 1 else "x{}^{}".format(i, e)
        for i, e in enumerate(exps, 1)
        if e
    ]
    return "*".join(factors) or "1"


def _cmd_stats(config: RunConfig, out: TextIO) -> int:
    rows: List[Tuple[Any, ...]] = []
    records = []
    for g in enumerate_group(config.r, config.n, config.limit):
        pair = decompose(g)
        m = nd_element(pair, config.r)
        d = bidegree(m)
        rows.append(
            (g, pair, m, (d.tdeg, d.qdeg), (ndes(g), nmajor(g))),
        )
        records.append(
            {
                "window": str(g),
                "sigma": list(pair.sigma),
                "x": list(pair.x),
                "monomial": monomial_to_json(m),
                "bidegree": [d.tdeg, d.qdeg],
                "ndes": ndes(g),
                "nmajor": nmajor(g),
            }
        )
    table = format_table(
        ["window", "(sigma, X)", "monomial", "(tdeg, qdeg)", "(ndes, nmajor)"],
        rows,
    )
    _emit(config, out, {"params": _params(config), "elements": records}, table)
    return 0


def _cmd_gb(config: RunConfig, out: TextIO) -> int:
    gb = _groebner(config)
    lines = [str(g) for g in gb.basis]
    lines.append("")
    lines += ["{}: {}".format(k, v) for k, v in gb.stats.as_dict().items()]
    _emit(config, out, groebner_to_json(gb), "\n".join(lines))
    return 0


def _cmd_verify_lt(config: RunConfig, out: TextIO) -> int:
    actual = lt_ideal(_groebner(config))
    predicted = predicted_lt_ideal(config.r, config.n)
    holds = monomial_ideal_equal(actual, predicted)
    found, wanted = set(actual.min_gens), set(predicted.min_gens)
    missing = [m for m in predicted.min_gens if m not in found]
    extra = [m for m in actual.min_gens if m not in wanted]
    if holds:
        text = "leading-term ideal matches the prediction"
        text += ": {} minimal generators".format(len(predicted))
    else:
        lines = ["leading-term ideal differs from the prediction"]
        lines += ["  predicted, not found: {}".format(m) for m in missing]
        lines += ["  found, not predicted: {}".format(m) for m in extra]
        text = "\n".join(lines)
    data = {
        "params": _params(config),
        "holds": holds,
        "generators": monomial_ideal_to_json(predicted),
        "missing": [monomial_to_json(m) for m in missing],
        "extra": [monomial_to_json(m) for m in extra],
    }
    _emit(config, out, data, text)
    return 0 if holds else 1


def _cmd_verify_basis(config: RunConfig, out: TextIO) -> int:
    r, n = config.r, config.n
    check_enumeration_limit(r, n, config.limit)
    standard = standard_monomials(lt_ideal(_groebner(config)))
    basis = descent_basis(r, n, config.limit)
    problems: List[str] = []
    expected = dimension(r, n)
    if len(standard) != expected:
        problems.append(
            "{} standard monomials, expected {}".format(len(standard), expected)
        )
    built = {b.monomial for b in basis}
    if len(built) != len(basis):
        problems.append("two pairs give the same monomial")
    for m in sorted(set(standard) - built, key=lambda m: m.key):
        problems.append("standard but not in the descent basis: {}".format(m))
    for m in sorted(built - set(standard), key=lambda m: m.key):
        problems.append("in the descent basis but not standard: {}".format(m))
    for b in basis:
        try:
            if decode(b.monomial, r) != b.pair:
                problems.append("{} decodes to the wrong pair".format(b.monomial))
        except NotStandardError as exc:
            problems.append(str(exc))
        d = bidegree(b.monomial)
        if (d.tdeg, d.qdeg) != b.statistics():
            problems.append(
                "{} has bidegree {} but statistics {}".format(
                    b.monomial, (d.tdeg, d.qdeg), b.statistics()
                )
            )
    holds = not problems
    if holds:
        text = "descent basis = standard monomials: {} elements".format(len(basis))
    else:
        text = "\n".join(["descent basis check failed"] + problems)
    data = {
        "params": _params(config),
        "holds": holds,
        "count": len(standard),
        "expected": expected,
        "problems": problems,
    }
    _emit(config, out, data, text)
    return 0 if holds else 1


def _cmd_verify_hilbert(config: RunConfig, out: TextIO) -> int:
    kind = _IDENTITIES[config.identity_name]
    numerator = None
    if config.numerator == "groebner":
        check_enumeration_limit(config.r, config.n, config.limit)
        numerator = hilbert_numerator(
            config.r, config.n, use_criteria=config.use_criteria
        )
    report = verify_identity(
        kind, config.n, config.trunc, config.r, numerator=numerator, limit=config.limit
    )
    if report.holds:
        text = "{} identity holds for {} through t^{}".format(
            report.identity, report.params, report.trunc
        )
    else:
        rows = [(m.t, m.q, m.lhs, m.rhs) for m in report.mismatches]
        text = "{} identity fails for {} through t^{}\n{}".format(
            report.identity,
            report.params,
            report.trunc,
            format_table(["t", "q", "lhs", "rhs"], rows),
        )
    _emit(config, out, report_to_json(report), text)
    return 0 if report.holds else 1


def _cmd_dim(config: RunConfig, out: TextIO) -> int:
    check_enumeration_limit(config.r, config.n, config.limit)
    count = len(standard_monomials(lt_ideal(_groebner(config))))
    expected = dimension(config.r, config.n)
    holds = count == expected
    text = str(count)
    if not holds:
        text += " (expected {})".format(expected)
    data = {
        "params": _params(config),
        "dimension": count,
        "expected": expected,
        "holds": holds,
    }
    _emit(config, out, data, text)
    return 0 if holds else 1


def _cmd_phi(config: RunConfig, out: TextIO) -> int:
    # one row per plain permutation
    check_enumeration_limit(1, config.n, config.limit)
    rows = []
    records = []
    holds = True
    for pi in permutations(range(1, config.n + 1)):
        m = gs_element(pi)
        image = coinvariant_image(m)
        classical = classical_gs_exponents(pi)
        match = image == classical
        holds = holds and match
        word = "".join(map(str, pi)) if config.n < 10 else ",".join(map(str, pi))
        rows.append((word, m, _exponent_vector(image), _exponent_vector(classical)))
        records.append(
            {
                "pi": list(pi),
                "monomial": monomial_to_json(m),
                "image": list(image),
                "classical": list(classical),
                "match": match,
            }
        )
    table = format_table(["pi", "monomial", "image", "classical"], rows)
    data = {"params": {"n": config.n}, "holds": holds, "rows": records}
    _emit(config, out, data, table)
    return 0 if holds else 1


_DISPATCH = {
    "stats": _cmd_stats,
    "gb": _cmd_gb,
    "verify-lt": _cmd_verify_lt,
    "verify-basis": _cmd_verify_basis,
    "verify-hilbert": _cmd_verify_hilbert,
    "dim": _cmd_dim,
    "phi": _cmd_phi,
}


def run(config: RunConfig, out: Optional[TextIO] = None) -> int:
    """Run one command, writing its output to ``out`` (default stdout).

    CubeAlgErrors are reported on stderr and turn into exit code 2.

    """
    if out is None:
        out = sys.stdout
    logger.info("running %s with r=%d n=%d", config.command, config.r, config.n)
    try:
        return _DISPATCH[config.command](config, out)
    except CubeAlgError as exc:
        print("cubealg {}: error: {}".format(config.command, exc), file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, default=1, help="color modulus (default 1)")
    common.add_argument(
        "--n", type=int, default=2, help="number of letters (default 2)"
    )
    common.add_argument(
        "--trunc",
        type=int,
        default=DEFAULT_TRUNCATION,
        help="check series through t^TRUNC (default %(default)s)",
    )
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument(
        "--limit",
        type=int,
        default=DEFAULT_ENUMERATION_LIMIT,
        help="refuse to enumerate groups larger than this (default %(default)s)",
    )
    common.add_argument(
        "--no-criteria",
        dest="use_criteria",
        action="store_false",
        help="consider every S-pair in Buchberger's algorithm",
    )
    common.add_argument(
        "--seed", type=int, default=None, help="shuffle the generators first"
    )
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(
        prog="cubealg",
        description="Groebner bases and descent bases of unit-cube quotient algebras.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)
    helps = {
        "stats": "table of group elements and their statistics",
        "gb": "reduced Groebner basis of the combined ideal",
        "verify-lt": "compare the leading-term ideal with the prediction",
        "verify-basis": "compare the standard monomials with the descent basis",
        "verify-hilbert": "check an Euler-Mahonian identity through t^TRUNC",
        "dim": "count the standard monomials",
        "phi": "images of the descent monomials in the coinvariant algebra",
    }
    for command in COMMANDS:
        p = sub.add_parser(command, parents=[common], help=helps[command])
        if command == "verify-hilbert":
            p.add_argument("--identity", choices=sorted(_IDENTITIES), default=None)
            p.add_argument(
                "--numerator",
                choices=_NUMERATORS,
                default="stats",
                help="take the numerator from the group statistics or from the "
                "standard monomials of the computed Groebner basis",
            )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = RunConfig(
            args.command,
            args.r,
            args.n,
            trunc=args.trunc,
            format=args.format,
            limit=args.limit,
            use_criteria=args.use_criteria,
            seed=args.seed,
            identity=getattr(args, "identity", None),
            numerator=getattr(args, "numerator", "stats"),
        )
    except CubeAlgError as exc:
        parser.print_usage(sys.stderr)
        print("cubealg: error: {}".format(exc), file=sys.stderr)
        return 2
    return run(config)
