import re
from typing import Type

import pytest

from .._ideals import TORIC
from .._series import CARLITZ
from .._util import (
    CubeAlgError,
    DimensionError,
    EnumerationLimitError,
    InfiniteQuotientError,
    InvalidElementError,
    InvalidMultisetError,
    NotStandardError,
    ParseError,
    Sentinel,
    validate,
    ZeroPolynomialError,
)


def test_CubeAlgError() -> None:
    with pytest.raises(TypeError):
        CubeAlgError("abstract base class")


@pytest.mark.parametrize(
    "cls",
    [
        DimensionError,
        InvalidElementError,
        InvalidMultisetError,
        ZeroPolynomialError,
        NotStandardError,
        InfiniteQuotientError,
        EnumerationLimitError,
        ParseError,
    ],
)
def test_concrete_errors(cls: Type[CubeAlgError]) -> None:
    try:
        raise cls("n must be >= 1")
    except CubeAlgError as e:
        assert type(e) is cls
        assert str(e) == "n must be >= 1"
        assert e.args == ("n must be >= 1",)


def test_validate() -> None:
    my_re = re.compile(r"z\{(?P<first>[0-9]+),(?P<second>[0-9]+)\}")
    with pytest.raises(ParseError):
        validate(my_re, "z{1,}")

    groups = validate(my_re, "z{1,2}")
    assert groups == {"first": "1", "second": "2"}

    # a prefix match is not enough
    with pytest.raises(ParseError):
        validate(my_re, "z{1,2}^2")
    with pytest.raises(ParseError):
        validate(my_re, "z{1,2}\n")


def test_validate_formatting() -> None:
    my_re = re.compile(r"z")

    with pytest.raises(ParseError) as excinfo:
        validate(my_re, "", "oops")
    assert "oops" in str(excinfo.value)

    with pytest.raises(ParseError) as excinfo:
        validate(my_re, "", "oops {}")
    assert "oops {}" in str(excinfo.value)

    with pytest.raises(ParseError) as excinfo:
        validate(my_re, "x", "bad variable {!r}", "x")
    assert "bad variable 'x'" in str(excinfo.value)


def test_make_sentinel() -> None:
    class S(Sentinel, metaclass=Sentinel):
        pass

    assert repr(S) == "S"
    assert S == S
    assert S in {S}
    assert type(S) is S

    assert repr(TORIC) == "TORIC"
    assert repr(CARLITZ) == "CARLITZ"
    assert TORIC != CARLITZ
    assert {TORIC: "toric"}[type(TORIC)] == "toric"
