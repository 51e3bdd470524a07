"""
Record types shared by the certification, oracle and document modules.
"""


import typing
import logging

import PingPongUnits.exactnum
import PingPongUnits.exceptions
import PingPongUnits.mobius
import PingPongUnits.quaternion


module_logger = logging.getLogger(__name__)

WKind = PingPongUnits.quaternion.WKind

ArcSet = PingPongUnits.mobius.ArcSet
ExtPoint = PingPongUnits.mobius.ExtPoint
MobiusMap = PingPongUnits.mobius.MobiusMap
QuatElem = PingPongUnits.quaternion.QuatElem
QuadElem = PingPongUnits.exactnum.QuadElem


class Generator:
    """
    A generator of the group under test, seen both as a quaternion unit and
    as the Mobius map it induces.
    """

    label: str
    mobius: MobiusMap
    unit: typing.Optional[QuatElem]
    root: typing.Optional[QuatElem]
    exponent: int

    def __init__(
        self,
        label: str,
        mobius: MobiusMap,
        unit: typing.Optional[QuatElem] = None,
        root: typing.Optional[QuatElem] = None,
        exponent: int = 1,
    ):
        """
        A basic constructor for assigning instance object parameters.

        :param label: A short display name such as "u" or "w^-1".
        :param mobius: The map acting on the circle.
        :param unit: The quaternion inducing the map, if any. The d = 1
                     maps are given directly and carry none.
        :param root: A unit whose power this generator is.
        :param exponent: The exponent with unit = root**exponent.

        :type label: str
        :type mobius: MobiusMap
        :type unit: QuatElem or None
        :type root: QuatElem or None
        :type exponent: int
        """
        assert isinstance(label, str)
        assert isinstance(mobius, MobiusMap)
        assert isinstance(exponent, int) and exponent >= 1

        self.label = label
        self.mobius = mobius
        self.unit = unit
        self.root = root if root is not None else unit
        self.exponent = exponent

    def power(self, n: int) -> "Generator":
        """
        The generator raised to the n-th power, remembering the root.
        """
        unit = None if self.unit is None else PingPongUnits.quaternion.quat_pow(self.unit, n)
        label = self.label if n == 1 else f"{ self.label }^{ n }"
        return Generator(label, self.mobius.power(n), unit, self.root, self.exponent * n)

    def __repr__(self):
        return "<{}.{} object at {} label={} unit={} mobius={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.label,
            self.unit,
            self.mobius,
        )


class PingPongTable:
    """
    For each generator slot i the two sets A(i, +1) and A(i, -1).
    """

    sets: typing.Dict[typing.Tuple[int, int], ArcSet]

    def __init__(self, sets: typing.Dict[typing.Tuple[int, int], ArcSet]):
        """
        :param sets: Keys are (slot, sign) with slots numbered from 1 and
                     sign in {1, -1}; every slot needs both signs.

        :type sets: dict
        """
        slots = {slot for slot, _ in sets}
        rank = max(slots) if slots else 0

        expected = {(slot, sign) for slot in range(1, rank + 1) for sign in (1, -1)}
        if set(sets) != expected:
            raise PingPongUnits.exceptions.PreconditionViolated(
                f"Table keys { sorted(sets) } do not cover slots 1..{ rank } with both signs"
            )

        self.sets = dict(sets)

    @classmethod
    def from_pairs(cls, pairs: typing.Sequence[typing.Tuple[ArcSet, ArcSet]]) -> "PingPongTable":
        """
        Builds a table from [(A(1, +1), A(1, -1)), (A(2, +1), A(2, -1)), ...].
        """
        sets = {}
        for slot, (positive, negative) in enumerate(pairs, start=1):
            sets[(slot, 1)] = positive
            sets[(slot, -1)] = negative
        return cls(sets)

    @property
    def rank(self) -> int:
        return len(self.sets) // 2

    @property
    def d(self) -> int:
        return next(iter(self.sets.values())).d

    def get(self, slot: int, sign: int) -> ArcSet:
        return self.sets[(slot, sign)]

    def keys(self) -> typing.List[typing.Tuple[int, int]]:
        """
        The (slot, sign) keys in canonical order: by slot, +1 before -1.
        """
        return sorted(self.sets, key=lambda key: (key[0], -key[1]))

    def __repr__(self):
        return "<{}.{} object at {} sets={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            {key: str(self.sets[key]) for key in self.keys()},
        )


class Condition:
    """
    One checked statement of a certificate. Most conditions are
    containments lhs <= rhs; those that are not leave lhs and rhs empty.
    """

    id: str
    description: str
    holds: bool
    lhs: typing.Optional[ArcSet]
    rhs: typing.Optional[ArcSet]
    witness: typing.Optional[ExtPoint]
    boundary_only: bool

    def __init__(
        self,
        id: str,  # pylint: disable=redefined-builtin
        description: str,
        holds: bool,
        lhs: typing.Optional[ArcSet] = None,
        rhs: typing.Optional[ArcSet] = None,
        witness: typing.Optional[ExtPoint] = None,
        boundary_only: bool = False,
    ):
        self.id = id
        self.description = description
        self.holds = holds
        self.lhs = lhs
        self.rhs = rhs
        self.witness = witness
        self.boundary_only = boundary_only

    @classmethod
    def containment(cls, id: str, description: str, lhs: ArcSet, rhs: ArcSet) -> "Condition":  # pylint: disable=redefined-builtin
        """
        Decides lhs <= rhs exactly. On failure the first offending piece of
        lhs supplies the witness, and the failure is boundary-only when every
        offending piece is a single point.
        """
        violations = lhs.violations(rhs)
        if not violations:
            return cls(id, description, True, lhs, rhs)

        return cls(
            id,
            description,
            False,
            lhs,
            rhs,
            witness=violations[0].sample,
            boundary_only=all(piece.is_point for piece in violations),
        )

    def __repr__(self):
        return "<{}.{} object at {} id={} holds={} witness={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.id,
            self.holds,
            self.witness,
        )


class Certificate:
    """
    The outcome of checking the Ping-Pong Lemma for a list of generators.
    """

    recipe: str
    d: int
    generators: typing.List[Generator]
    table: PingPongTable
    conditions: typing.List[Condition]

    def __init__(
        self,
        recipe: str,
        d: int,
        generators: typing.List[Generator],
        table: PingPongTable,
        conditions: typing.List[Condition],
    ):
        self.recipe = recipe
        self.d = d
        self.generators = list(generators)
        self.table = table
        self.conditions = list(conditions)

    @property
    def passed(self) -> bool:
        return all(condition.holds for condition in self.conditions)

    def failures(self) -> typing.List[Condition]:
        return [condition for condition in self.conditions if not condition.holds]

    def __repr__(self):
        return "<{}.{} object at {} recipe={} d={} passed={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.recipe,
            self.d,
            self.passed,
        )


class SemigroupCertificate:
    """
    The outcome of the invariant-set criterion for two Mobius maps: an
    invariant set U, a point x0 outside it fixed by the first map and sent
    into U by the second.
    """

    recipe: str
    d: int
    generators: typing.List[Generator]
    invariant_set: ArcSet
    base_point: ExtPoint
    conditions: typing.List[Condition]

    def __init__(
        self,
        recipe: str,
        d: int,
        generators: typing.List[Generator],
        invariant_set: ArcSet,
        base_point: ExtPoint,
        conditions: typing.List[Condition],
    ):
        self.recipe = recipe
        self.d = d
        self.generators = list(generators)
        self.invariant_set = invariant_set
        self.base_point = base_point
        self.conditions = list(conditions)

    @property
    def passed(self) -> bool:
        return all(condition.holds for condition in self.conditions)

    def failures(self) -> typing.List[Condition]:
        return [condition for condition in self.conditions if not condition.holds]

    def __repr__(self):
        return "<{}.{} object at {} recipe={} d={} passed={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.recipe,
            self.d,
            self.passed,
        )


class PowerVerdict:
    """
    Whether the pair of n-th powers is known to be free, and why.
    """

    FREE = "free"
    UNDECIDED = "undecided"

    n: int
    status: str
    reason: str
    certificate: typing.Optional[Certificate]

    def __init__(self, n: int, status: str, reason: str, certificate: typing.Optional[Certificate] = None):
        assert status in (self.FREE, self.UNDECIDED)

        self.n = n
        self.status = status
        self.reason = reason
        self.certificate = certificate

    @property
    def free(self) -> bool:
        return self.status == self.FREE

    def __repr__(self):
        return "<{}.{} object at {} n={} status={} reason={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.n,
            self.status,
            self.reason,
        )


class InequalityCheck:
    """
    A single exact comparison lhs < rhs (or lhs <= rhs).
    """

    label: str
    lhs: QuadElem
    rhs: QuadElem
    strict: bool

    def __init__(self, label: str, lhs: QuadElem, rhs: QuadElem, strict: bool = True):
        self.label = label
        self.lhs = lhs
        self.rhs = rhs
        self.strict = strict

    @property
    def holds(self) -> bool:
        sign = (self.lhs - self.rhs).sign()
        return sign < 0 if self.strict else sign <= 0

    def __str__(self) -> str:
        return "{}: {} {} {}".format(self.label, self.lhs, "<" if self.strict else "<=", self.rhs)

    def __repr__(self):
        return "<{}.{} object at {} check={} holds={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self,
            self.holds,
        )


class LemmaReport:
    """
    The displayed interval inclusions behind one table recipe.
    """

    recipe: str
    d: int
    checks: typing.List[InequalityCheck]

    def __init__(self, recipe: str, d: int, checks: typing.List[InequalityCheck]):
        self.recipe = recipe
        self.d = d
        self.checks = list(checks)

    @property
    def all_hold(self) -> bool:
        return all(check.holds for check in self.checks)

    def __repr__(self):
        return "<{}.{} object at {} recipe={} d={} all_hold={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.recipe,
            self.d,
            self.all_hold,
        )


class InfeasibilityReport:
    """
    Sampled falsification of the constrained d = 2 table family plus the
    exact check of its reduced two-inequality system.
    """

    LABEL = "sampled falsification of the constrained family plus exact check of the reduced system"

    resolution: int
    reduced_samples: int
    reduced_satisfying: typing.List[typing.Tuple[QuadElem, QuadElem]]
    table_samples: int
    table_passes: typing.List[typing.Tuple[QuadElem, QuadElem]]

    def __init__(
        self,
        resolution: int,
        reduced_samples: int,
        reduced_satisfying: typing.List[typing.Tuple[QuadElem, QuadElem]],
        table_samples: int,
        table_passes: typing.List[typing.Tuple[QuadElem, QuadElem]],
    ):
        self.resolution = resolution
        self.reduced_samples = reduced_samples
        self.reduced_satisfying = list(reduced_satisfying)
        self.table_samples = table_samples
        self.table_passes = list(table_passes)

    @property
    def infeasible(self) -> bool:
        return not self.reduced_satisfying and not self.table_passes

    def __repr__(self):
        return "<{}.{} object at {} resolution={} reduced_satisfying={} table_passes={}>".format(
            __class__.__module__,
            __class__.__name__,
            hex(id(self)),
            self.resolution,
            len(self.reduced_satisfying),
            len(self.table_passes),
        )
