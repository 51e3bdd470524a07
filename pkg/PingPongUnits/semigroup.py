"""
The invariant-set criterion for free semigroups.

Let phi1, phi2 be injective maps of infinite order on a set V and U a
subset with phi1(U) and phi2(U) inside U. If some x0 outside U is fixed by
phi1 and sent into U by phi2, then phi1 and phi2 generate a free semigroup.
"""


import logging
import typing

import PingPongUnits.exceptions
import PingPongUnits.mobius
import PingPongUnits.models
import PingPongUnits.quaternion
import PingPongUnits.recipe.semigroup


module_logger = logging.getLogger(__name__)

Arc = PingPongUnits.mobius.Arc
ArcSet = PingPongUnits.mobius.ArcSet
ExtPoint = PingPongUnits.mobius.ExtPoint
MobiusMap = PingPongUnits.mobius.MobiusMap
Condition = PingPongUnits.models.Condition
Generator = PingPongUnits.models.Generator


def check_semigroup_criterion(
    phi1: MobiusMap,
    phi2: MobiusMap,
    invariant_set: typing.Union[Arc, ArcSet],
    x0: ExtPoint,
    recipe: str = "custom",
    generators: typing.Optional[typing.Sequence[Generator]] = None,
) -> PingPongUnits.models.SemigroupCertificate:
    """
    Checks each hypothesis of the criterion exactly.

    :param phi1: The map that must fix x0.
    :param phi2: The map that must send x0 into U.
    :param invariant_set: U, a proper nonempty subset of the circle.
    :param x0: The base point.
    :param recipe: A name recorded in the certificate.
    :param generators: Descriptions of the maps, recorded as given.

    :type phi1: MobiusMap
    :type phi2: MobiusMap
    :type invariant_set: Arc or ArcSet
    :type x0: ExtPoint
    :type recipe: str
    :type generators: typing.Sequence[Generator] or None

    :return: The certificate.
    :rtype: SemigroupCertificate
    """
    if isinstance(invariant_set, Arc):
        invariant_set = ArcSet([invariant_set], invariant_set.d)

    if invariant_set.is_empty() or invariant_set.is_full():
        raise PingPongUnits.exceptions.DegenerateArc(invariant_set)

    if generators is None:
        generators = [Generator("phi1", phi1), Generator("phi2", phi2)]

    image = phi2(x0)

    conditions = [
        Condition(
            "x0-outside-U",
            f"x0 = { x0 } is not in U",
            not invariant_set.contains(x0),
            rhs=invariant_set,
            witness=None if not invariant_set.contains(x0) else x0,
        ),
        Condition(
            "phi1-fixes-x0",
            f"phi1({ x0 }) = { x0 }",
            phi1(x0) == x0,
            witness=None if phi1(x0) == x0 else phi1(x0),
        ),
        Condition(
            "phi2-x0-in-U",
            f"phi2({ x0 }) = { image } is in U",
            invariant_set.contains(image),
            rhs=invariant_set,
            witness=None if invariant_set.contains(image) else image,
        ),
        Condition.containment("phi1-preserves-U", "phi1(U) is contained in U", invariant_set.image(phi1), invariant_set),
        Condition.containment("phi2-preserves-U", "phi2(U) is contained in U", invariant_set.image(phi2), invariant_set),
        Condition(
            "phi1-infinite-order",
            f"phi1^k is not the identity for k <= { PingPongUnits.quaternion.TORSION_BOUND }",
            not phi1.has_finite_order(),
        ),
        Condition(
            "phi2-infinite-order",
            f"phi2^k is not the identity for k <= { PingPongUnits.quaternion.TORSION_BOUND }",
            not phi2.has_finite_order(),
        ),
    ]

    for condition in conditions:
        module_logger.debug("Condition %r holds: %r", condition.id, condition.holds)

    return PingPongUnits.models.SemigroupCertificate(
        recipe, invariant_set.d, generators, invariant_set, x0, conditions
    )


def standard_semigroup_data(d, kind) -> typing.Tuple[MobiusMap, MobiusMap, ArcSet, ExtPoint]:
    """
    (phi1, phi2, U, x0) for the pair (u, w) of a W-kind.
    """
    recipe = PingPongUnits.recipe.semigroup.semigroup_recipe_for(d, kind)
    phi1, phi2 = (generator.mobius for generator in recipe.generators())
    return phi1, phi2, recipe.invariant_set(), recipe.base_point()


def certify_semigroup(d, kind) -> PingPongUnits.models.SemigroupCertificate:
    """
    Runs the criterion on the standard data of a W-kind.

    :param d: A square-free integer >= 2.
    :param kind: The W-kind; W2 and W3 need a norm +1 fundamental unit.

    :type d: int
    :type kind: WKind

    :return: The certificate.
    :rtype: SemigroupCertificate
    """
    recipe = PingPongUnits.recipe.semigroup.semigroup_recipe_for(d, kind)
    generators = recipe.generators()

    module_logger.info("Certifying %r", recipe)

    certificate = check_semigroup_criterion(
        generators[0].mobius,
        generators[1].mobius,
        recipe.invariant_set(),
        recipe.base_point(),
        recipe.name,
        generators,
    )

    if not certificate.passed:
        module_logger.warning(
            "Semigroup certificate %r for d=%r failed: %r",
            recipe.name,
            recipe.d,
            [condition.id for condition in certificate.failures()],
        )

    return certificate


def check_set_criterion(
    phi1: typing.Callable,
    phi2: typing.Callable,
    contains: typing.Callable[[typing.Any], bool],
    x0,
    sample: typing.Iterable,
) -> typing.List[Condition]:
    """
    The same criterion for arbitrary maps on an arbitrary set, with U given
    by its membership test. Invariance and injectivity can only be checked
    on a finite sample of points.

    :param phi1: The map that must fix x0.
    :param phi2: The map that must send x0 into U.
    :param contains: Membership in U.
    :param x0: The base point.
    :param sample: Points of V to test invariance and injectivity on.

    :type phi1: typing.Callable
    :type phi2: typing.Callable
    :type contains: typing.Callable
    :type sample: typing.Iterable

    :return: One condition per hypothesis.
    :rtype: typing.List[Condition]
    """
    sample = list(sample)
    inside = [point for point in sample if contains(point)]

    def first_escape(phi):
        return next((point for point in inside if not contains(phi(point))), None)

    def first_collision(phi):
        seen = {}
        for point in sample:
            value = phi(point)
            if value in seen and seen[value] != point:
                return point
            seen[value] = point
        return None

    conditions = [
        Condition("x0-outside-U", "x0 is not in U", not contains(x0)),
        Condition("phi1-fixes-x0", "phi1(x0) = x0", phi1(x0) == x0),
        Condition("phi2-x0-in-U", "phi2(x0) is in U", contains(phi2(x0))),
    ]

    for name, phi in (("phi1", phi1), ("phi2", phi2)):
        escape = first_escape(phi)
        conditions.append(
            Condition(f"{ name }-preserves-U", f"{ name } maps sampled points of U into U", escape is None, witness=escape)
        )
        collision = first_collision(phi)
        conditions.append(
            Condition(f"{ name }-injective", f"{ name } is injective on the sample", collision is None, witness=collision)
        )

    return conditions
