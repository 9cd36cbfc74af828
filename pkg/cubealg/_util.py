from typing import Any, Dict, Pattern, Tuple, Type, TypeVar

__all__ = [
    "CubeAlgError",
    "DimensionError",
    "InvalidElementError",
    "InvalidMultisetError",
    "ZeroPolynomialError",
    "NotStandardError",
    "InfiniteQuotientError",
    "EnumerationLimitError",
    "ParseError",
    "validate",
    "Sentinel",
]


class CubeAlgError(Exception):
    """Exception indicating that cubealg was asked to do something that makes
    no sense mathematically.

    This is an abstract base class; every error raised by the library on bad
    input is one of its concrete subclasses, so callers who don't care about
    the details can catch :exc:`CubeAlgError` and move on. Verification
    failures are *not* errors: they come back as data, in the reports.

    """

    def __init__(self, msg: str) -> None:
        if type(self) is CubeAlgError:
            raise TypeError("tried to directly instantiate CubeAlgError")
        Exception.__init__(self, msg)


class DimensionError(CubeAlgError):
    """Operands disagree on n or r, or n/r lie outside the supported range."""


class InvalidElementError(CubeAlgError):
    """A value that cannot be an element of the structure it claims to be."""


class InvalidMultisetError(CubeAlgError):
    """A multiset X with an element outside [n] or a multiplicity >= r."""


class ZeroPolynomialError(CubeAlgError):
    """An operation that needs a leading term was handed the zero polynomial."""


class NotStandardError(CubeAlgError):
    """The monomial is not a standard monomial of the predicted ideal."""


class InfiniteQuotientError(CubeAlgError):
    """The monomial ideal misses a pure power of some variable, so its
    quotient is infinite dimensional and has no finite list of standard
    monomials."""


class EnumerationLimitError(CubeAlgError):
    """The requested enumeration exceeds the configured element limit."""


class ParseError(CubeAlgError):
    """Text or JSON input that doesn't follow the documented formats."""


def validate(
    regex: Pattern[str], data: str, msg: str = "malformed data", *format_args: Any
) -> Dict[str, str]:
    match = regex.fullmatch(data)
    if not match:
        if format_args:
            msg = msg.format(*format_args)
        raise ParseError(msg)
    return match.groupdict()


# Sentinel values
#
# - Inherit identity-based comparison and hashing from object
# - Have a nice repr
# - Have a *bonus property*: type(sentinel) is sentinel
#
# The bonus property makes them usable as dict keys for dispatch tables
# (generator-set labels, identity kinds) without any extra enum machinery.

_T_Sentinel = TypeVar("_T_Sentinel", bound="Sentinel")


class Sentinel(type):
    def __new__(
        cls: Type[_T_Sentinel],
        name: str,
        bases: Tuple[type, ...],
        namespace: Dict[str, Any],
        **kwds: Any
    ) -> _T_Sentinel:
        assert bases == (Sentinel,)
        v = super().__new__(cls, name, bases, namespace, **kwds)
        v.__class__ = v  # type: ignore
        return v

    def __repr__(self) -> str:
        return self.__name__
