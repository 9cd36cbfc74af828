# Exact computer algebra for the quotients of the unit-cube semigroup algebra
# by the toric ideal plus the invariants of the colored permutation group
# Z_r wr S_n: Groebner bases by Buchberger's algorithm, the descent basis of
# standard monomials indexed by colored permutations, and the bigraded
# Hilbert series identities those standard monomials satisfy. Everything is
# computed exactly over the rationals; there is no floating point anywhere.

from cubealg._cli import main, run, RunConfig
from cubealg._codec import (
    format_monomial,
    format_polynomial,
    format_table,
    generators_to_json,
    groebner_to_json,
    monomial_from_json,
    monomial_ideal_to_json,
    monomial_to_json,
    parse_monomial,
    parse_polynomial,
    parse_subset,
    polynomial_from_json,
    polynomial_to_json,
    report_to_json,
)
from cubealg._colored import (
    check_enumeration_limit,
    ColoredLetter,
    ColoredPermutation,
    compose,
    decompose,
    DEFAULT_ENUMERATION_LIMIT,
    des_a,
    descent_set,
    dimension,
    enumerate_group,
    enumerate_pairs,
    inverse,
    is_increasing,
    letter_cmp,
    major_a,
    major_index,
    ndes,
    ndes_multiset,
    nmajor,
    nneg,
    recompose,
    SigmaXPair,
)
from cubealg._descent import (
    classical_gs_exponents,
    coinvariant_image,
    decode,
    decode_trace,
    DecodeTrace,
    descent_basis,
    gs_element,
    nd_element,
    permute_exponents,
    permute_monomial,
    XMonomial,
)
from cubealg._groebner import (
    Buchberger,
    buchberger,
    divide,
    DivisionResult,
    GroebnerBasis,
    GroebnerStats,
    ideal_member,
    is_groebner_basis,
    lt_ideal,
    s_polynomial,
    standard_monomials,
)
from cubealg._ideals import (
    act_on_monomial,
    COMBINED,
    combined_ideal,
    GeneratorSet,
    INVARIANT,
    invariant_generators,
    is_invariant,
    monomial_ideal_contains,
    monomial_ideal_equal,
    MonomialIdeal,
    permute_polynomial,
    PREDICTED_LT,
    predicted_generator_set,
    predicted_lt_ideal,
    sperner_pairs,
    TORIC,
    toric_generators,
)
from cubealg._poly import (
    Coefficient,
    leading_term,
    poly_add,
    poly_mul,
    poly_scale,
    Polynomial,
)
from cubealg._ring import (
    BiDegree,
    bidegree,
    MAX_N,
    mono_cmp,
    Monomial,
    sorted_monomials,
    SubsetId,
    var_cmp,
    variable_order,
    VariableOrder,
)
from cubealg._series import (
    BAGNO,
    basis_numerator,
    BiSeries,
    CARLITZ,
    colored_eulerian_polynomial,
    DEFAULT_TRUNCATION,
    denominator_expansion,
    denominator_factors,
    denominator_polynomial,
    EULER,
    eulerian_polynomial,
    hilbert_numerator,
    IdentityReport,
    lhs_series,
    Mismatch,
    numerator_negative,
    power_sum_series,
    q_integer,
    verify_identity,
)
from cubealg._util import (
    CubeAlgError,
    DimensionError,
    EnumerationLimitError,
    InfiniteQuotientError,
    InvalidElementError,
    InvalidMultisetError,
    NotStandardError,
    ParseError,
    ZeroPolynomialError,
)
from cubealg._version import __version__

PRODUCT_ID = "cubealg/" + __version__


__all__ = (
    "BAGNO",
    "BiDegree",
    "BiSeries",
    "Buchberger",
    "CARLITZ",
    "COMBINED",
    "Coefficient",
    "ColoredLetter",
    "ColoredPermutation",
    "CubeAlgError",
    "DEFAULT_ENUMERATION_LIMIT",
    "DEFAULT_TRUNCATION",
    "DecodeTrace",
    "DimensionError",
    "DivisionResult",
    "EULER",
    "EnumerationLimitError",
    "GeneratorSet",
    "GroebnerBasis",
    "GroebnerStats",
    "INVARIANT",
    "IdentityReport",
    "InfiniteQuotientError",
    "InvalidElementError",
    "InvalidMultisetError",
    "MAX_N",
    "Mismatch",
    "Monomial",
    "MonomialIdeal",
    "NotStandardError",
    "PREDICTED_LT",
    "PRODUCT_ID",
    "ParseError",
    "Polynomial",
    "RunConfig",
    "SigmaXPair",
    "SubsetId",
    "TORIC",
    "VariableOrder",
    "XMonomial",
    "ZeroPolynomialError",
    "act_on_monomial",
    "basis_numerator",
    "bidegree",
    "buchberger",
    "check_enumeration_limit",
    "classical_gs_exponents",
    "coinvariant_image",
    "colored_eulerian_polynomial",
    "combined_ideal",
    "compose",
    "decode",
    "decode_trace",
    "decompose",
    "denominator_expansion",
    "denominator_factors",
    "denominator_polynomial",
    "des_a",
    "descent_basis",
    "descent_set",
    "dimension",
    "divide",
    "enumerate_group",
    "enumerate_pairs",
    "eulerian_polynomial",
    "format_monomial",
    "format_polynomial",
    "format_table",
    "generators_to_json",
    "groebner_to_json",
    "gs_element",
    "hilbert_numerator",
    "ideal_member",
    "invariant_generators",
    "inverse",
    "is_groebner_basis",
    "is_increasing",
    "is_invariant",
    "leading_term",
    "letter_cmp",
    "lhs_series",
    "lt_ideal",
    "main",
    "major_a",
    "major_index",
    "mono_cmp",
    "monomial_from_json",
    "monomial_ideal_contains",
    "monomial_ideal_equal",
    "monomial_ideal_to_json",
    "monomial_to_json",
    "nd_element",
    "ndes",
    "ndes_multiset",
    "nmajor",
    "nneg",
    "numerator_negative",
    "parse_monomial",
    "parse_polynomial",
    "parse_subset",
    "permute_exponents",
    "permute_monomial",
    "permute_polynomial",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "polynomial_from_json",
    "polynomial_to_json",
    "power_sum_series",
    "predicted_generator_set",
    "predicted_lt_ideal",
    "q_integer",
    "recompose",
    "report_to_json",
    "run",
    "s_polynomial",
    "sorted_monomials",
    "sperner_pairs",
    "standard_monomials",
    "toric_generators",
    "var_cmp",
    "variable_order",
    "verify_identity",
)
