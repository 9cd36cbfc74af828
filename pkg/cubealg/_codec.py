# Reading and writing the text and JSON formats.
#
# Text: monomials look like z{2,4}^4*z{4} (z{} is the empty-set variable, 1
# the empty monomial), polynomials are signed sums of terms with optional
# p/q coefficients: "z{1}*z{2} - z{}*z{1,2}". The canonical spelling is
# whatever str() produces; the readers also accept any factor order and
# extra whitespace.
#
# JSON: a monomial is a list of {"subset": [...], "exp": e}, a polynomial a
# list of {"coeff": "p/q", "mono": <monomial>}. The *_to_json functions
# return plain lists and dicts, ready for json.dumps; the *_from_json ones
# take what json.loads gives back.
#
# Every reader raises ParseError on input that doesn't fit the format.

import re
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from ._abnf import (
    factor,
    monomial,
    polynomial,
    signed_coefficient,
    signed_term,
    variable,
)
from ._groebner import GroebnerBasis
from ._ideals import (
    COMBINED,
    INVARIANT,
    PREDICTED_LT,
    TORIC,
    GeneratorSet,
    MonomialIdeal,
)
from ._poly import Coefficient, Polynomial
from ._ring import Monomial, SubsetId, elements_of
from ._series import IdentityReport
from ._util import ParseError, validate

__all__ = [
    "parse_subset",
    "parse_monomial",
    "parse_polynomial",
    "format_monomial",
    "format_polynomial",
    "monomial_to_json",
    "monomial_from_json",
    "polynomial_to_json",
    "polynomial_from_json",
    "generators_to_json",
    "monomial_ideal_to_json",
    "groebner_to_json",
    "report_to_json",
    "format_table",
]

factor_re = re.compile(factor)
monomial_re = re.compile(monomial)
polynomial_re = re.compile(polynomial)
signed_term_re = re.compile(signed_term)
signed_coefficient_re = re.compile(signed_coefficient)
variable_re = re.compile(variable)

_LABEL_NAMES = {
    TORIC: "toric",
    INVARIANT: "invariant",
    COMBINED: "combined",
    PREDICTED_LT: "predicted-lt",
}


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError("zero denominator in {!r}".format(text)) from None


def _elements(inner: str) -> List[int]:
    elements = [int(x) for x in inner.split(",")] if inner.strip() else []
    if len(set(elements)) != len(elements):
        raise ParseError("repeated element in subset {{{}}}".format(inner))
    return elements


def parse_subset(text: str, n: int) -> SubsetId:
    """Read a single variable, e.g. ``parse_subset("z{1,2}", 3)``."""
    text = text.strip()
    validate(variable_re, text, "malformed variable {!r}", text)
    return SubsetId.of(n, _elements(text[2:-1]))


def _monomial_body(text: str, n: int) -> Monomial:
    if text.strip() == "1":
        return Monomial(n)
    factors = []
    for match in factor_re.finditer(text):
        elements = _elements(match.group("elements"))
        exp = match.group("exp")
        factors.append((elements, int(exp) if exp is not None else 1))
    return Monomial.from_subsets(n, factors)


def parse_monomial(text: str, n: int) -> Monomial:
    """Read a monomial of T_n, e.g. ``parse_monomial("z{2,4}^4*z{4}", 6)``."""
    validate(monomial_re, text.strip(), "malformed monomial {!r}", text)
    return _monomial_body(text, n)


def parse_polynomial(text: str, n: int) -> Polynomial:
    validate(polynomial_re, text, "malformed polynomial {!r}", text)
    if text.strip() == "0":
        return Polynomial.zero(n)
    terms: List[Tuple[Monomial, Coefficient]] = []
    for match in signed_term_re.finditer(text):
        sign = -1 if match.group("sign") == "-" else 1
        coeff = match.group("coeff")
        if coeff is None:
            terms.append((_monomial_body(match.group("bare"), n), sign))
            continue
        mono = match.group("mono")
        m = _monomial_body(mono, n) if mono is not None else Monomial(n)
        terms.append((m, sign * _fraction(coeff)))
    return Polynomial(n, terms)


def format_monomial(m: Monomial) -> str:
    return str(m)


def format_polynomial(f: Polynomial) -> str:
    return str(f)


def monomial_to_json(m: Monomial) -> List[Dict[str, Any]]:
    return [{"subset": list(elements_of(mask)), "exp": e} for mask, e in m.items()]


def monomial_from_json(data: Any, n: int) -> Monomial:
    if not isinstance(data, list):
        raise ParseError("a monomial is a list of factors, not {!r}".format(data))
    factors = []
    for item in data:
        if (
            not isinstance(item, dict)
            or set(item) != {"subset", "exp"}
            or not isinstance(item["subset"], list)
            or not all(type(i) is int for i in item["subset"])
            or type(item["exp"]) is not int
        ):
            raise ParseError("malformed monomial factor {!r}".format(item))
        factors.append((item["subset"], item["exp"]))
    return Monomial.from_subsets(n, factors)


def polynomial_to_json(f: Polynomial) -> List[Dict[str, Any]]:
    return [{"coeff": str(c), "mono": monomial_to_json(m)} for m, c in f.terms()]


def polynomial_from_json(data: Any, n: int) -> Polynomial:
    if not isinstance(data, list):
        raise ParseError("a polynomial is a list of terms, not {!r}".format(data))
    terms: List[Tuple[Monomial, Coefficient]] = []
    for item in data:
        if not isinstance(item, dict) or set(item) != {"coeff", "mono"}:
            raise ParseError("malformed polynomial term {!r}".format(item))
        coeff = item["coeff"]
        if not isinstance(coeff, str):
            raise ParseError("coefficients are strings, not {!r}".format(coeff))
        validate(signed_coefficient_re, coeff, "malformed coefficient {!r}", coeff)
        terms.append((monomial_from_json(item["mono"], n), _fraction(coeff)))
    return Polynomial(n, terms)


def generators_to_json(gens: GeneratorSet) -> Dict[str, Any]:
    return {
        "params": {"r": gens.r, "n": gens.n},
        "label": _LABEL_NAMES[gens.label],
        "gens": [polynomial_to_json(g) for g in gens.gens],
    }


def monomial_ideal_to_json(ideal: MonomialIdeal) -> List[Dict[str, Any]]:
    """Minimal generators, each with its family tag when the ideal has
    them."""
    out = []
    for k, m in enumerate(ideal.min_gens):
        entry: Dict[str, Any] = {"mono": monomial_to_json(m)}
        if ideal.families is not None:
            entry["family"] = ideal.families[k]
        out.append(entry)
    return out


def groebner_to_json(gb: GroebnerBasis) -> Dict[str, Any]:
    return {
        "params": {"r": gb.r, "n": gb.n},
        "basis": [polynomial_to_json(g) for g in gb.basis],
        "stats": gb.stats.as_dict(),
    }


def report_to_json(report: IdentityReport) -> Dict[str, Any]:
    return {
        "identity": report.identity,
        "params": dict(report.params),
        "K": report.trunc,
        "holds": report.holds,
        "mismatches": [
            {"t": m.t, "q": m.q, "lhs": str(m.lhs), "rhs": str(m.rhs)}
            for m in report.mismatches
        ],
    }


def format_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Left-aligned columns separated by two spaces, with a rule under the
    header."""
    cells = [list(map(str, headers))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(headers))]
    lines = [
        "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells
    ]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
