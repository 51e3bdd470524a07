# pylint: disable=redefined-outer-name

"""
Tests PingPongUnits built-in exceptions.
"""


import pytest

import PingPongUnits.exceptions


@pytest.fixture
def not_square_free_exception():
    """
    A NotSquareFree error for 12.
    """
    return PingPongUnits.exceptions.NotSquareFree(12)


def test_not_square_free_exception(not_square_free_exception):
    """
    Ensures that the NotSquareFree exception functions properly.
    """
    assert isinstance(not_square_free_exception, PingPongUnits.exceptions.InvalidInput)
    assert isinstance(not_square_free_exception, PingPongUnits.exceptions.PingPongUnitsError)
    assert not_square_free_exception.n == 12
    assert "12" in str(not_square_free_exception)


@pytest.mark.parametrize(
    "exception",
    [
        PingPongUnits.exceptions.InvalidPellDiscriminant(1),
        PingPongUnits.exceptions.MismatchedField(2, 3),
        PingPongUnits.exceptions.SlotCollision(("i", "i")),
        PingPongUnits.exceptions.NormMinusOne(2),
        PingPongUnits.exceptions.NonIntegral("1/2", 3),
        PingPongUnits.exceptions.NonUnit(4),
        PingPongUnits.exceptions.PreconditionViolated("x > 2"),
        PingPongUnits.exceptions.ArityMismatch(1, 2),
        PingPongUnits.exceptions.MalformedNumber("1/0"),
        PingPongUnits.exceptions.MalformedWord("g1 g3", "g3"),
        PingPongUnits.exceptions.InvalidTableFile("table.yml", "no such file"),
        PingPongUnits.exceptions.InvalidCustomRecipe("w9"),
        PingPongUnits.exceptions.InvalidDocument("bad"),
    ],
)
def test_input_exceptions(exception):
    """
    Ensures that every caller mistake derives from InvalidInput.
    """
    assert isinstance(exception, PingPongUnits.exceptions.InvalidInput)
    assert str(exception)


def test_quad_division_by_zero_exception():
    """
    Ensures that QuadDivisionByZero is a ZeroDivisionError and not an input
    error.
    """
    exception = PingPongUnits.exceptions.QuadDivisionByZero("1+sqrt(2)")

    assert isinstance(exception, ZeroDivisionError)
    assert isinstance(exception, PingPongUnits.exceptions.PingPongUnitsError)
    assert not isinstance(exception, PingPongUnits.exceptions.InvalidInput)
    assert "1+sqrt(2)" in str(exception)
