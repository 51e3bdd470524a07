"""
Built-in ping-pong table recipes and their abstract class.

Every recipe produces the generators h1, h2 as Mobius maps (with the units
inducing them) and a table A(i, +1), A(i, -1) meant to satisfy the
Ping-Pong Lemma: h_i^e maps the complement of A(i, e) into A(i, -e).
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


module_logger = logging.getLogger(__name__)

Arc = PingPongUnits.mobius.Arc
ArcSet = PingPongUnits.mobius.ArcSet
ExtPoint = PingPongUnits.mobius.ExtPoint
MobiusMap = PingPongUnits.mobius.MobiusMap
QuadElem = PingPongUnits.exactnum.QuadElem
InequalityCheck = PingPongUnits.models.InequalityCheck
WKind = PingPongUnits.quaternion.WKind


def homothety_ratio(fund: PingPongUnits.pell.PellSolution) -> QuadElem:
    """
    rho = (x - y*sqrt(d)) / (x + y*sqrt(d)), the ratio of the homothety
    induced by u = x + y*sqrt(-d)*i.
    """
    s = QuadElem(0, fund.y, fund.d)
    return (fund.x - s) / (fund.x + s)


def unit_generator(label: str, unit: PingPongUnits.quaternion.QuatElem) -> PingPongUnits.models.Generator:
    return PingPongUnits.models.Generator(
        label, PingPongUnits.mobius.mobius_from_unit(unit), unit
    )


class AbstractTableRecipe(abc.ABC):
    """
    An abstract class for use in implementing table recipes.
    """

    name: str
    d: int

    @abc.abstractmethod
    def generators(self) -> typing.List[PingPongUnits.models.Generator]:
        """
        The generators h1, h2 in table slot order.

        :return: A list of generators.
        :rtype: typing.List[Generator]
        """

    @abc.abstractmethod
    def table(self) -> PingPongUnits.models.PingPongTable:
        """
        The ping-pong table for the generators.

        :return: A table with one slot per generator.
        :rtype: PingPongTable
        """

    def interval_checks(self) -> typing.List[InequalityCheck]:
        """
        The endpoint inequalities behind the table, stated one by one.
        """
        return []

    def __repr__(self):
        return "<{}.{} object at {} name={} d={}>".format(
            self.__class__.__module__,
            self.__class__.__name__,
            hex(id(self)),
            self.name,
            self.d,
        )


class EndpointTableRecipe(AbstractTableRecipe):
    """
    The common shape of every table built from a w-map h1 and a homothety
    h2: four reals a2 < a1 < 0 < b1 < b2 give

        A(1, +1) = [a2, a1],  A(1, -1) = [b1, b2]   (swapped when flagged)
        A(2, +1) = ]b2, a2[ through oo,  A(2, -1) = ]a1, b1[
    """

    swapped: bool = False

    @abc.abstractmethod
    def endpoints(self) -> typing.Tuple[QuadElem, QuadElem, QuadElem, QuadElem]:
        """
        The reals (a2, a1, b1, b2).
        """

    def table(self) -> PingPongUnits.models.PingPongTable:
        a2, a1, b1, b2 = (ExtPoint(value) for value in self.endpoints())

        negative_side = ArcSet([Arc.closed(a2, a1)])
        positive_side = ArcSet([Arc.closed(b1, b2)])

        if self.swapped:
            first = (positive_side, negative_side)
        else:
            first = (negative_side, positive_side)

        table = PingPongUnits.models.PingPongTable.from_pairs(
            [
                first,
                (ArcSet([Arc.open(b2, a2)]), ArcSet([Arc.open(a1, b1)])),
            ]
        )

        module_logger.debug("Table for %r: %r", self, table)

        return table

    def interval_checks(self) -> typing.List[InequalityCheck]:
        a2, a1, b1, b2 = self.endpoints()
        h1, h2 = (generator.mobius for generator in self.generators())

        if self.swapped:
            h1_in, h1_out = (b1, b2), (a2, a1)
        else:
            h1_in, h1_out = (a2, a1), (b1, b2)

        checks = [
            InequalityCheck("a2 < a1", a2, a1),
            InequalityCheck("a1 < 0", a1, QuadElem.rational(0, self.d)),
            InequalityCheck("0 < b1", QuadElem.rational(0, self.d), b1),
            InequalityCheck("b1 < b2", b1, b2),
        ]

        # The complement of a closed [lo, hi] is the open arc from hi to lo
        checks += _bounded_image_checks("h1", h1, h1_in[1], h1_in[0], h1_out)
        checks += _bounded_image_checks("h1^-1", h1.inverse(), h1_out[1], h1_out[0], h1_in)
        checks += _bounded_image_checks("h2", h2, a2, b2, (a1, b1))
        checks += _wrapping_image_checks("h2^-1", h2.inverse(), b1, a1, (b2, a2))

        return checks


def _finite(label: str, point: ExtPoint) -> QuadElem:
    if point.is_infinite():
        raise PingPongUnits.exceptions.PreconditionViolated(f"{ label } is infinite")
    return point.value


def _image_ends(h: MobiusMap, start: QuadElem, end: QuadElem, label: str):
    first = _finite(f"{ label }({ start })", h(ExtPoint(start)))
    last = _finite(f"{ label }({ end })", h(ExtPoint(end)))
    if h.orientation() > 0:
        return first, last
    return last, first


def _bounded_image_checks(label, h, start, end, target) -> typing.List[InequalityCheck]:
    """
    The image of the arc from start to end lies inside the bounded target
    [lo, hi] and does not pass through oo.
    """
    image_start, image_end = _image_ends(h, start, end, label)
    lo, hi = target
    return [
        InequalityCheck(f"{ label } image start >= { lo }", lo, image_start, strict=False),
        InequalityCheck(f"{ label } image end <= { hi }", image_end, hi, strict=False),
        InequalityCheck(f"{ label } image is bounded", image_start, image_end),
    ]


def _wrapping_image_checks(label, h, start, end, target) -> typing.List[InequalityCheck]:
    """
    The image of the arc from start to end lies inside the target arc
    ]lo, hi[ that runs through oo.
    """
    image_start, image_end = _image_ends(h, start, end, label)
    lo, hi = target
    return [
        InequalityCheck(f"{ label } image start > { lo }", lo, image_start),
        InequalityCheck(f"{ label } image end < { hi }", image_end, hi),
        InequalityCheck(f"{ label } image passes through oo", image_end, image_start),
    ]


class PellTableRecipe(EndpointTableRecipe):
    """
    Tables for the pair (u, w) built from the fundamental unit of Q(sqrt(d)).
    """

    kind: WKind
    fund: PingPongUnits.pell.FundUnit

    def __init__(self, d: typing.Union[int, PingPongUnits.exactnum.SquareFreeD]):
        self.d = PingPongUnits.exactnum.as_d(d)
        self.fund = PingPongUnits.pell.pell_fundamental(self.d)
        self._generators = None

    def generators(self) -> typing.List[PingPongUnits.models.Generator]:
        if self._generators is None:
            w = PingPongUnits.quaternion.w_unit(self.fund, self.kind)
            u = PingPongUnits.quaternion.u_unit(self.fund)
            self._generators = [unit_generator("w", w), unit_generator("u", u)]
        return self._generators

    def _require_norm_plus_one(self):
        if self.fund.norm != 1:
            raise PingPongUnits.exceptions.NormMinusOne(self.d)

    def s(self) -> QuadElem:
        return QuadElem(0, self.fund.y, self.d)


class W1TableRecipe(PellTableRecipe):
    """
    w = y*sqrt(-d) + x*k, with a2 = -b2 = (3/2)z0 and a1 = -b1 = (1/2)zp.
    """

    name = "w1"
    kind = WKind.W1

    def __init__(self, d):
        super().__init__(d)
        self._require_norm_plus_one()

    def endpoints(self):
        h1 = self.generators()[0].mobius
        z0 = h1.zero().value
        zp = h1.pole().value
        return (z0 * 3 / 2, zp / 2, -zp / 2, -z0 * 3 / 2)

    def interval_checks(self) -> typing.List[InequalityCheck]:
        x = self.fund.x
        s = self.s()
        rho = homothety_ratio(self.fund)
        five = QuadElem.rational(5, self.d)
        return super().interval_checks() + [
            InequalityCheck("3x^2/(y^2 d) < 5", QuadElem.rational(3 * x * x, self.d) / (s * s), five),
            InequalityCheck("5 < 1/rho", five, rho.invert()),
        ]


class InverseEndpointRecipe(PellTableRecipe):
    """
    The W2 and W3 layout: a2 = 3z'p, a1 = z'0/2, b1 = z0/2, b2 = 3zp, where
    the primed points belong to h1^-1, and A(1, +1) is the positive side.
    """

    swapped = True

    def endpoints(self):
        h1 = self.generators()[0].mobius
        h1_inverse = h1.inverse()
        return (
            h1_inverse.pole().value * 3,
            h1_inverse.zero().value / 2,
            h1.zero().value / 2,
            h1.pole().value * 3,
        )


class W2TableRecipe(InverseEndpointRecipe):
    """
    w = (x+1)/2 - (y/2)sqrt(-d)*i + ((x-1)/2)*j + (y/2)sqrt(-d)*k. Needs x > 2.
    """

    name = "w2"
    kind = WKind.W2

    def __init__(self, d):
        super().__init__(d)
        self._require_norm_plus_one()

        if self.fund.x <= 2:
            raise PingPongUnits.exceptions.PreconditionViolated(
                f"The w2 table needs x > 2, the fundamental unit for d={ self.d } has x={ self.fund.x }"
            )

    def interval_checks(self) -> typing.List[InequalityCheck]:
        x = self.fund.x
        return super().interval_checks() + [
            InequalityCheck(
                "(5x+7)/(7x+5) < y*sqrt(d)/x",
                QuadElem.rational(PingPongUnits.exactnum.Rational(5 * x + 7, 7 * x + 5), self.d),
                self.s() / x,
            )
        ]


class W3TableRecipe(InverseEndpointRecipe):
    """
    w = x^2 - xy*sqrt(-d)*i - y^2*d*j + xy*sqrt(-d)*k.
    """

    name = "w3"
    kind = WKind.W3

    def __init__(self, d):
        super().__init__(d)
        self._require_norm_plus_one()


class CorollaryTableRecipe(PellTableRecipe):
    """
    The W1 pair for a fundamental unit of norm -1, with the ratios swapped:
    -a2 = b2 = (3/2)y*sqrt(d)/x and -a1 = b1 = (1/2)x/(y*sqrt(d)).

    The construction needs x != 1. With require_x_guard off the table is
    still built for x = 1, so its certificate can show the failure.
    """

    name = "corollary"
    kind = WKind.W1

    def __init__(self, d, require_x_guard: bool = True):
        super().__init__(d)

        if self.fund.norm != -1:
            raise PingPongUnits.exceptions.PreconditionViolated(
                f"The corollary table needs a fundamental unit of norm -1, d={ self.d } has norm +1"
            )
        if require_x_guard and self.fund.x == 1:
            raise PingPongUnits.exceptions.PreconditionViolated(
                f"The corollary table needs x != 1, d={ self.d } has x=1"
            )

    def endpoints(self):
        h1 = self.generators()[0].mobius
        zp = h1.pole().value
        z0 = h1.zero().value
        return (zp * 3 / 2, z0 / 2, -z0 / 2, -zp * 3 / 2)


class D2SpecialTableRecipe(EndpointTableRecipe):
    """
    d = 2 with u = 1 + sqrt(-2)*i and w = sqrt(-2) + k. The table
    -a2 = b2 = 2*sqrt(2), -a1 = b1 = 1/(2*sqrt(2)) certifies (u^2, w).
    With square_u off the same table is paired with u itself.
    """

    name = "d2special"

    def __init__(self, square_u: bool = True):
        self.d = 2
        self.square_u = square_u
        self.fund = PingPongUnits.pell.pell_fundamental(2)
        self._generators = None

    def generators(self) -> typing.List[PingPongUnits.models.Generator]:
        if self._generators is None:
            w = PingPongUnits.quaternion.w_unit(self.fund, WKind.W1)
            u = PingPongUnits.quaternion.u_unit(self.fund)
            u_generator = unit_generator("u", u)
            if self.square_u:
                u_generator = u_generator.power(2)
            self._generators = [unit_generator("w", w), u_generator]
        return self._generators

    def endpoints(self):
        b2 = QuadElem(0, 2, 2)
        b1 = QuadElem(0, PingPongUnits.exactnum.Rational(1, 4), 2)
        return (-b2, -b1, b1, b2)


class TheoremOneTableRecipe(AbstractTableRecipe):
    """
    d = 1 with h1 = z/(2z + 1), h2 = z + 2 and the table
    ]-1, 0[, [0, 1], [oo, -1], ]1, oo[.
    """

    name = "theorem1"

    def __init__(self):
        self.d = 1

    def generators(self) -> typing.List[PingPongUnits.models.Generator]:
        return [
            PingPongUnits.models.Generator("h1", MobiusMap(1, 0, 2, 1, 1)),
            PingPongUnits.models.Generator("h2", MobiusMap(1, 2, 0, 1, 1)),
        ]

    def table(self) -> PingPongUnits.models.PingPongTable:
        return PingPongUnits.models.PingPongTable.from_pairs(
            [
                (ArcSet.parse("]-1, 0[", 1), ArcSet.parse("[0, 1]", 1)),
                (ArcSet.parse("[inf, -1]", 1), ArcSet.parse("]1, inf[", 1)),
            ]
        )

    def interval_checks(self) -> typing.List[InequalityCheck]:
        h1, h2 = (generator.mobius for generator in self.generators())
        one = QuadElem.rational(1, 1)
        return [
            InequalityCheck("h1(-1) <= 1", _finite("h1(-1)", h1(ExtPoint(-one))), one, strict=False),
            InequalityCheck("h1(oo) < 1", _finite("h1(oo)", h1(ExtPoint.infinity(1))), one),
            InequalityCheck("h2(-1) <= 1", _finite("h2(-1)", h2(ExtPoint(-one))), one, strict=False),
        ]


class CustomTableRecipe(AbstractTableRecipe):
    """
    Establishes a table recipe from a definition dictionary.
    """

    _recipe: AbstractTableRecipe
    _table: typing.Optional[PingPongUnits.models.PingPongTable]

    def __init__(self, recipe: dict):
        """
        Provided a recipe definition, selects the pair and optionally
        replaces its table.

        Example recipes:

        {
            "type": "w1",
            "d": 7
        }

        {
            "type": "corollary",
            "d": 5,
            "table": [(1, 1, ArcSet), (1, -1, ArcSet), ...]
        }

        :param recipe: A recipe definition.

        :type recipe: dict
        """
        assert isinstance(recipe, dict)

        recipe_type = str(recipe.get("type", "")).lower()

        if recipe_type == "w1":
            self._recipe = W1TableRecipe(recipe["d"])
        elif recipe_type == "w2":
            self._recipe = W2TableRecipe(recipe["d"])
        elif recipe_type == "w3":
            self._recipe = W3TableRecipe(recipe["d"])
        elif recipe_type == "corollary":
            self._recipe = CorollaryTableRecipe(recipe["d"], recipe.get("require_x_guard", True))
        elif recipe_type == "d2special":
            self._recipe = D2SpecialTableRecipe(recipe.get("square_u", True))
        elif recipe_type == "theorem1":
            self._recipe = TheoremOneTableRecipe()
        else:
            raise PingPongUnits.exceptions.InvalidCustomRecipe(recipe_type)

        self.name = self._recipe.name
        self.d = self._recipe.d
        self._table = None

        entries = recipe.get("table")
        if entries is not None:
            sets = {}
            for slot, sign, arcs in entries:
                if (slot, sign) in sets:
                    sets[(slot, sign)] = sets[(slot, sign)].union(arcs)
                else:
                    sets[(slot, sign)] = arcs
            self._table = PingPongUnits.models.PingPongTable(sets)
            self.name = f"{ self._recipe.name }+table"

    def generators(self) -> typing.List[PingPongUnits.models.Generator]:
        return self._recipe.generators()

    def table(self) -> PingPongUnits.models.PingPongTable:
        if self._table is not None:
            return self._table
        return self._recipe.table()

    def interval_checks(self) -> typing.List[InequalityCheck]:
        if self._table is not None:
            return []
        return self._recipe.interval_checks()


def table_recipe_for(
    d: typing.Union[int, PingPongUnits.exactnum.SquareFreeD], kind: WKind
) -> AbstractTableRecipe:
    """
    The recipe for the pair (u, w) of a kind. A W1 pair over a norm -1 unit
    goes to the corollary table, unguarded, so that d = 2 yields a failing
    certificate rather than an input error.
    """
    d = PingPongUnits.exactnum.as_d(d)
    fund = PingPongUnits.pell.pell_fundamental(d)

    if fund.norm == -1:
        if kind is WKind.W1:
            return CorollaryTableRecipe(d, require_x_guard=False)
        raise PingPongUnits.exceptions.NormMinusOne(d)

    return {
        WKind.W1: W1TableRecipe,
        WKind.W2: W2TableRecipe,
        WKind.W3: W3TableRecipe,
    }[kind](d)
