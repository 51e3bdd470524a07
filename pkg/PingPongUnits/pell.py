"""
Pell's equation x**2 - d*y**2 = +-1 by continued fractions, and the
fundamental units of Q(sqrt(d)) built from it.
"""


import logging
import math
import typing

import PingPongUnits.exactnum
import PingPongUnits.exceptions


module_logger = logging.getLogger(__name__)

# Powers of the Q(sqrt(2d)) unit inspected for an odd rational part
PELL3_SEARCH_BOUND = 16


class PellSolution:
    """
    A solution x + y*sqrt(d) of x**2 - d*y**2 = norm with x, y > 0.
    """

    x: int
    y: int
    d: int
    norm: int

    def __init__(self, x: int, y: int, d: typing.Union[int, PingPongUnits.exactnum.SquareFreeD], norm: int):
        """
        Records a solution, asserting the Pell relation.

        :param x: The rational coefficient.
        :param y: The coefficient of sqrt(d).
        :param d: The square-free radicand.
        :param norm: +1 or -1.

        :type x: int
        :type y: int
        :type d: int or SquareFreeD
        :type norm: int
        """
        assert isinstance(x, int) and x > 0
        assert isinstance(y, int) and y > 0
        assert norm in (1, -1)

        d = PingPongUnits.exactnum.as_d(d)
        assert x * x - d * y * y == norm

        self.x = x
        self.y = y
        self.d = d
        self.norm = norm

    def to_quad(self) -> PingPongUnits.exactnum.QuadElem:
        """
        The unit x + y*sqrt(d) as an exact real number.
        """
        return PingPongUnits.exactnum.QuadElem(self.x, self.y, self.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PellSolution):
            return NotImplemented
        return (self.x, self.y, self.d, self.norm) == (other.x, other.y, other.d, other.norm)

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.d, self.norm))

    def __repr__(self):
        return "<{}.{} object at {} x={} y={} d={} norm={}>".format(
            self.__class__.__module__,
            self.__class__.__name__,
            hex(id(self)),
            self.x,
            self.y,
            self.d,
            self.norm,
        )


class FundUnit(PellSolution):
    """
    The minimal positive solution, i.e. the fundamental unit of Z[sqrt(d)].
    """


class Pell3Solution:
    """
    A pair (x, y) with (2x - 1)**2 - 2d*y**2 = 1, taken from the power of the
    fundamental unit of Q(sqrt(2d)) that first has norm +1.
    """

    x: int
    y: int
    d: int
    power: int

    def __init__(self, x: int, y: int, d: int, power: int):
        assert (2 * x - 1) ** 2 - 2 * d * y * y == 1
        assert power >= 1

        self.x = x
        self.y = y
        self.d = d
        self.power = power

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pell3Solution):
            return NotImplemented
        return (self.x, self.y, self.d, self.power) == (
            other.x,
            other.y,
            other.d,
            other.power,
        )

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.d, self.power))

    def __repr__(self):
        return "<{}.{} object at {} x={} y={} d={} power={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.x,
            self.y,
            self.d,
            self.power,
        )


def continued_fraction_sqrt(d: int) -> typing.Tuple[int, typing.List[int]]:
    """
    The periodic continued fraction of sqrt(d).

    :param d: A positive non-square integer.

    :type d: int

    :return: The leading term a0 and the repeating block, whose last entry is 2*a0.
    :rtype: tuple
    """
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise PingPongUnits.exceptions.InvalidPellDiscriminant(d)

    period = []
    m, q, a = 0, 1, a0
    while a != 2 * a0:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)

    return a0, period


def pell_fundamental(d: typing.Union[int, PingPongUnits.exactnum.SquareFreeD]) -> FundUnit:
    """
    The fundamental solution of x**2 - d*y**2 = +-1.

    It is the convergent just before the end of the first period; its norm is
    -1 exactly when the period length is odd.

    :param d: A square-free integer >= 2.

    :type d: int or SquareFreeD

    :return: The fundamental unit.
    :rtype: FundUnit
    """
    d = PingPongUnits.exactnum.as_d(d)
    if d == 1:
        raise PingPongUnits.exceptions.InvalidPellDiscriminant(d)

    a0, period = continued_fraction_sqrt(d)

    # Convergent recurrence seeded with h(-1) = 1, k(-1) = 0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    for a in period[:-1]:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev

    norm = -1 if len(period) % 2 else 1

    module_logger.debug("Fundamental unit for d=%r: x=%r y=%r norm=%r", d, h, k, norm)

    return FundUnit(h, k, d, norm)


def unit_power(unit: PellSolution, n: int) -> PellSolution:
    """
    (x + y*sqrt(d))**n as a new solution, with norm**n.
    """
    assert isinstance(n, int)
    if n < 1:
        raise PingPongUnits.exceptions.PreconditionViolated(
            f"Unit powers need n >= 1, got { n }"
        )

    power = unit.to_quad() ** n

    return PellSolution(
        power.a.numerator,
        power.b.numerator,
        unit.d,
        unit.norm ** n,
    )


def pell_fundamental_2d(
    d: typing.Union[int, PingPongUnits.exactnum.SquareFreeD]
) -> typing.Optional[Pell3Solution]:
    """
    Looks for a unit (2x - 1) + y*sqrt(2d) of norm +1 among the first powers
    of the fundamental unit of Q(sqrt(2d)).

    :param d: A square-free integer with 2d square-free.

    :type d: int or SquareFreeD

    :return: The (x, y) pair and the power it came from, or None if no power
        within the search bound qualifies.
    :rtype: Pell3Solution or None
    """
    d = PingPongUnits.exactnum.as_d(d)
    field = PingPongUnits.exactnum.SquareFreeD(2 * d).d

    fundamental = pell_fundamental(field)

    for power in range(1, PELL3_SEARCH_BOUND + 1):
        candidate = unit_power(fundamental, power)

        if candidate.norm == 1 and candidate.x % 2 == 1:
            module_logger.debug(
                "Pell 3-unit data for d=%r from power %r of %r",
                d,
                power,
                fundamental,
            )
            return Pell3Solution((candidate.x + 1) // 2, candidate.y, d, power)

    module_logger.debug("No Pell 3-unit data for d=%r within %r powers", d, PELL3_SEARCH_BOUND)

    return None
