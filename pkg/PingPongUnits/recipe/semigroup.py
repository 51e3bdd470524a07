"""
Data for the invariant-set criterion: two maps, an invariant set U and a
point x0 outside U fixed by the first map and sent into U by the second.
"""


import abc
import logging
import typing

import PingPongUnits.exactnum
import PingPongUnits.exceptions
import PingPongUnits.mobius
import PingPongUnits.models
import PingPongUnits.pell
import PingPongUnits.quaternion
import PingPongUnits.recipe.table


module_logger = logging.getLogger(__name__)

Arc = PingPongUnits.mobius.Arc
ArcSet = PingPongUnits.mobius.ArcSet
ExtPoint = PingPongUnits.mobius.ExtPoint
Generator = PingPongUnits.models.Generator
QuadElem = PingPongUnits.exactnum.QuadElem
WKind = PingPongUnits.quaternion.WKind


class AbstractSemigroupRecipe(abc.ABC):
    """
    An abstract class for use in implementing semigroup recipes.
    """

    name: str
    d: int

    @abc.abstractmethod
    def generators(self) -> typing.List[Generator]:
        """
        phi1 (fixing the base point) and phi2 (sending it into U), in order.
        """

    @abc.abstractmethod
    def invariant_set(self) -> ArcSet:
        """
        The set U both maps must preserve.
        """

    @abc.abstractmethod
    def base_point(self) -> ExtPoint:
        """
        The point x0 outside U.
        """

    def __repr__(self):
        return "<{}.{} object at {} name={} d={}>".format(
            self.__class__.__module__,
            self.__class__.__name__,
            hex(id(self)),
            self.name,
            self.d,
        )


class PlusOneSemigroupRecipe(AbstractSemigroupRecipe):
    """
    Norm +1: phi1 = rho*z from u, U = ]0, oo[ and x0 = 0. phi2 is the w-map
    for W1 and its inverse for W2 and W3.
    """

    def __init__(self, d, kind: WKind):
        self.d = PingPongUnits.exactnum.as_d(d)
        self.kind = WKind(kind)
        self.name = f"semigroup-{ self.kind.value }"

        self.fund = PingPongUnits.pell.pell_fundamental(self.d)
        if self.fund.norm != 1:
            raise PingPongUnits.exceptions.NormMinusOne(self.d)

    def generators(self) -> typing.List[Generator]:
        u = PingPongUnits.quaternion.u_unit(self.fund)
        w = PingPongUnits.quaternion.w_unit(self.fund, self.kind)

        phi1 = PingPongUnits.recipe.table.unit_generator("u", u)

        if self.kind is WKind.W1:
            phi2 = PingPongUnits.recipe.table.unit_generator("w", w)
        else:
            phi2 = PingPongUnits.recipe.table.unit_generator(
                "w^-1", PingPongUnits.quaternion.quat_inverse(w)
            )

        return [phi1, phi2]

    def invariant_set(self) -> ArcSet:
        return ArcSet(
            [Arc.open(ExtPoint(QuadElem.rational(0, self.d)), ExtPoint.infinity(self.d))]
        )

    def base_point(self) -> ExtPoint:
        return ExtPoint(QuadElem.rational(0, self.d))


class MinusOneSemigroupRecipe(AbstractSemigroupRecipe):
    """
    Norm -1, W1 only. rho is negative, so ]0, oo[ is not preserved by the
    homothety. Instead U = ]-1, 1[ and x0 = 1, with the w-map fixing x0 and
    the homothety sending it to rho in U.
    """

    def __init__(self, d):
        self.d = PingPongUnits.exactnum.as_d(d)
        self.kind = WKind.W1
        self.name = "semigroup-w1"

        self.fund = PingPongUnits.pell.pell_fundamental(self.d)
        if self.fund.norm != -1:
            raise PingPongUnits.exceptions.PreconditionViolated(
                f"This recipe needs a fundamental unit of norm -1, d={ self.d } has norm +1"
            )

    def generators(self) -> typing.List[Generator]:
        return [
            PingPongUnits.recipe.table.unit_generator(
                "w", PingPongUnits.quaternion.w_unit(self.fund, WKind.W1)
            ),
            PingPongUnits.recipe.table.unit_generator(
                "u", PingPongUnits.quaternion.u_unit(self.fund)
            ),
        ]

    def invariant_set(self) -> ArcSet:
        return ArcSet(
            [
                Arc.open(
                    ExtPoint(QuadElem.rational(-1, self.d)),
                    ExtPoint(QuadElem.rational(1, self.d)),
                )
            ]
        )

    def base_point(self) -> ExtPoint:
        return ExtPoint(QuadElem.rational(1, self.d))


def semigroup_recipe_for(d, kind: WKind) -> AbstractSemigroupRecipe:
    """
    Picks the recipe by the norm of the fundamental unit. W2 and W3 need
    norm +1.
    """
    d = PingPongUnits.exactnum.as_d(d)
    kind = WKind(kind)
    fund = PingPongUnits.pell.pell_fundamental(d)

    if fund.norm == -1:
        if kind is not WKind.W1:
            raise PingPongUnits.exceptions.NormMinusOne(d)
        return MinusOneSemigroupRecipe(d)

    return PlusOneSemigroupRecipe(d, kind)
