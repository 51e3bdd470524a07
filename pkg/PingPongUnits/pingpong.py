"""
Exact verification of the Ping-Pong Lemma for Mobius maps on R u {oo}.

For maps h1, ..., hr and pairwise disjoint nonempty sets A(i, +1), A(i, -1),
the maps generate a free group of rank r as soon as

    h_i^e(complement of A(i, e)) is contained in A(i, -e)

for every slot i and sign e. Every comparison is made in Q(sqrt(d)).
"""


import itertools
import logging
import typing

import PingPongUnits.exactnum
import PingPongUnits.exceptions
import PingPongUnits.mobius
import PingPongUnits.models
import PingPongUnits.quaternion
import PingPongUnits.recipe.table


module_logger = logging.getLogger(__name__)

Arc = PingPongUnits.mobius.Arc
ArcSet = PingPongUnits.mobius.ArcSet
ExtPoint = PingPongUnits.mobius.ExtPoint
MobiusMap = PingPongUnits.mobius.MobiusMap
QuadElem = PingPongUnits.exactnum.QuadElem
Rational = PingPongUnits.exactnum.Rational
Certificate = PingPongUnits.models.Certificate
Condition = PingPongUnits.models.Condition
Generator = PingPongUnits.models.Generator
PingPongTable = PingPongUnits.models.PingPongTable
WKind = PingPongUnits.quaternion.WKind

# (1 - sqrt(2))/(1 + sqrt(2)), the factor of the d = 2 homothety z -> rho*z of u
D2_HOMOTHETY_RATIO = QuadElem(-3, 2, 2)


def set_label(slot: int, sign: int) -> str:
    return f"A({ slot },{ sign:+d})"


def check_ping_pong(
    maps: typing.Sequence[MobiusMap],
    table: PingPongTable,
    recipe: str = "custom",
    generators: typing.Optional[typing.Sequence[Generator]] = None,
) -> Certificate:
    """
    Checks every hypothesis of the Ping-Pong Lemma exactly.

    :param maps: h1, ..., hr in slot order.
    :param table: The sets A(i, +1), A(i, -1) for i = 1..r.
    :param recipe: A name recorded in the certificate.
    :param generators: Descriptions of the maps, recorded as given. Bare
                       generators named h1, ..., hr are used when omitted.

    :type maps: typing.Sequence[MobiusMap]
    :type table: PingPongTable
    :type recipe: str
    :type generators: typing.Sequence[Generator] or None

    :return: The certificate with one condition per check, in a fixed order.
    :rtype: Certificate
    """
    maps = list(maps)
    if len(maps) != table.rank:
        raise PingPongUnits.exceptions.ArityMismatch(len(maps), table.rank)

    if generators is None:
        generators = [Generator(f"h{ slot }", h) for slot, h in enumerate(maps, start=1)]

    conditions = []
    keys = table.keys()

    for slot, sign in keys:
        arcs = table.get(slot, sign)
        conditions.append(
            Condition(
                f"nonempty:{ set_label(slot, sign) }",
                f"{ set_label(slot, sign) } is not empty",
                not arcs.is_empty(),
                lhs=arcs,
            )
        )

    for (slot, sign), (other_slot, other_sign) in itertools.combinations(keys, 2):
        first = set_label(slot, sign)
        second = set_label(other_slot, other_sign)
        conditions.append(
            Condition.containment(
                f"disjoint:{ first }|{ second }",
                f"{ first } and { second } are disjoint",
                table.get(slot, sign),
                table.get(other_slot, other_sign).complement(),
            )
        )

    for slot, h in enumerate(maps, start=1):
        for sign, power in ((1, h), (-1, h.inverse())):
            source = table.get(slot, sign).complement()
            target = table.get(slot, -sign)
            conditions.append(
                Condition.containment(
                    f"h{ slot }^{ sign:+d}",
                    f"h{ slot }^{ sign:+d} maps the complement of { set_label(slot, sign) } "
                    f"into { set_label(slot, -sign) }",
                    source.image(power),
                    target,
                )
            )

    for condition in conditions:
        if condition.holds:
            module_logger.debug("Condition %r holds", condition.id)
        else:
            module_logger.debug(
                "Condition %r fails at %s (boundary only: %r)",
                condition.id,
                condition.witness,
                condition.boundary_only,
            )

    return Certificate(recipe, table.d, generators, table, conditions)


def certify_pair(recipe: PingPongUnits.recipe.table.AbstractTableRecipe) -> Certificate:
    """
    Runs check_ping_pong on the generators and table of a recipe.
    """
    generators = recipe.generators()

    module_logger.info("Certifying %r", recipe)

    certificate = check_ping_pong(
        [generator.mobius for generator in generators],
        recipe.table(),
        recipe.name,
        generators,
    )

    if certificate.passed:
        module_logger.info("Certificate %r passed", recipe.name)
    else:
        module_logger.warning(
            "Certificate %r for d=%r failed: %r",
            recipe.name,
            recipe.d,
            [condition.id for condition in certificate.failures()],
        )

    return certificate


_STANDARD_RECIPES = {
    WKind.W1: PingPongUnits.recipe.table.W1TableRecipe,
    WKind.W2: PingPongUnits.recipe.table.W2TableRecipe,
    WKind.W3: PingPongUnits.recipe.table.W3TableRecipe,
}


def standard_table(d, kind: WKind) -> typing.Tuple[typing.List[Generator], PingPongTable]:
    """
    The generators (h1 from w, h2 the homothety from u) and the table of a
    W-kind. Needs a fundamental unit of norm +1, and x > 2 for W2.
    """
    recipe = _STANDARD_RECIPES[WKind(kind)](d)
    return recipe.generators(), recipe.table()


def corollary_table(d, require_x_guard: bool = True) -> typing.Tuple[typing.List[Generator], PingPongTable]:
    """
    The W1 table for a fundamental unit of norm -1 and x != 1.
    """
    recipe = PingPongUnits.recipe.table.CorollaryTableRecipe(d, require_x_guard)
    return recipe.generators(), recipe.table()


def d2_special_table(square_u: bool = True) -> typing.Tuple[typing.List[Generator], PingPongTable]:
    """
    The d = 2 table for the pair (u^2, w), or (u, w) with square_u off.
    """
    recipe = PingPongUnits.recipe.table.D2SpecialTableRecipe(square_u)
    return recipe.generators(), recipe.table()


def verify_interval_lemmas(d, kind: WKind) -> PingPongUnits.models.LemmaReport:
    """
    Checks the endpoint inequalities behind the W-kind table one by one.

    :param d: A square-free integer >= 2 with a norm +1 fundamental unit.
    :param kind: The W-kind.

    :type d: int
    :type kind: WKind

    :return: The report, one check per inequality.
    :rtype: LemmaReport
    """
    recipe = _STANDARD_RECIPES[WKind(kind)](d)
    report = PingPongUnits.models.LemmaReport(recipe.name, recipe.d, recipe.interval_checks())

    for check in report.checks:
        module_logger.debug("%s -> %r", check, check.holds)

    return report


def _d2_maps() -> typing.Tuple[MobiusMap, MobiusMap]:
    generators, _ = d2_special_table(square_u=False)
    return generators[0].mobius, generators[1].mobius


def reduced_system_holds(a1: QuadElem, a2: QuadElem) -> bool:
    """
    The two inequalities a symmetric d = 2 table for (u, w) must meet,

        rho * a2 < h1(a1)   and   h1(a2) < a1 / rho,

    with h1(z) = (sqrt(2)z + 1)/(z + sqrt(2)) and rho = (1 - sqrt(2))/(1 + sqrt(2)).

    :param a1: A value in ]-1/sqrt(2), 0[.
    :param a2: A value below -sqrt(2).

    :type a1: QuadElem
    :type a2: QuadElem

    :return: Whether both inequalities hold.
    :rtype: bool
    """
    h1, _ = _d2_maps()
    rho = D2_HOMOTHETY_RATIO

    h1_a1 = h1(ExtPoint(a1))
    h1_a2 = h1(ExtPoint(a2))
    if h1_a1.is_infinite() or h1_a2.is_infinite():
        return False

    return (rho * a2 < h1_a1.value) and (h1_a2.value < a1 / rho)


def infeasibility_grid(resolution: int) -> typing.Iterator[typing.Tuple[QuadElem, QuadElem]]:
    """
    Rational samples (a1, a2) with a2 = -3/2 - 6(k-1)/resolution and
    a1 = -(7/10) * m/resolution for k, m = 1..resolution.
    """
    for k in range(1, resolution + 1):
        a2 = QuadElem.rational(Rational(-3, 2) - Rational(6 * (k - 1), resolution), 2)
        for m in range(1, resolution + 1):
            a1 = QuadElem.rational(Rational(-7, 10) * Rational(m, resolution), 2)
            yield a1, a2


def symmetric_table(a1: QuadElem, a2: QuadElem) -> PingPongTable:
    """
    The table -a2 = b2, -a1 = b1 in the W1 layout.
    """
    left_outer, left_inner = ExtPoint(a2), ExtPoint(a1)
    right_inner, right_outer = ExtPoint(-a1), ExtPoint(-a2)
    return PingPongTable.from_pairs(
        [
            (ArcSet([Arc.closed(left_outer, left_inner)]), ArcSet([Arc.closed(right_inner, right_outer)])),
            (ArcSet([Arc.open(right_outer, left_outer)]), ArcSet([Arc.open(left_inner, right_inner)])),
        ]
    )


def infeasibility_sweep(resolution: int) -> PingPongUnits.models.InfeasibilityReport:
    """
    Samples the constrained family of symmetric d = 2 tables for the pair
    u = 1 + sqrt(-2)*i, w = sqrt(-2) + k. On every grid point the reduced
    system is evaluated exactly and the full table is checked.

    :param resolution: Grid points per axis.

    :type resolution: int

    :return: The sampled pairs that satisfy the reduced system or pass the
        full check; both lists are empty when the family is infeasible.
    :rtype: InfeasibilityReport
    """
    assert isinstance(resolution, int)
    if resolution < 1:
        raise PingPongUnits.exceptions.PreconditionViolated(
            f"The grid resolution must be positive, got { resolution }"
        )

    module_logger.info("Infeasibility sweep at resolution %r", resolution)

    h1, h2 = _d2_maps()

    reduced_samples = 0
    reduced_satisfying = []
    table_samples = 0
    table_passes = []

    for a1, a2 in infeasibility_grid(resolution):
        reduced_samples += 1
        if reduced_system_holds(a1, a2):
            module_logger.warning("Reduced system holds at a1=%s a2=%s", a1, a2)
            reduced_satisfying.append((a1, a2))

        table_samples += 1
        certificate = check_ping_pong([h1, h2], symmetric_table(a1, a2), "d2-sample")
        if certificate.passed:
            module_logger.warning("Sampled table passes at a1=%s a2=%s", a1, a2)
            table_passes.append((a1, a2))

    report = PingPongUnits.models.InfeasibilityReport(
        resolution, reduced_samples, reduced_satisfying, table_samples, table_passes
    )

    module_logger.info("Infeasibility sweep finished: %r", report)

    return report


def power_certificate(certificate: Certificate, n: int) -> PingPongUnits.models.PowerVerdict:
    """
    Decides whether the n-th powers of the root units are known to generate
    a free group.

    When n is a multiple of every generator's exponent, each root**n is a
    power of a free generator and the subgroup they generate is free.
    Otherwise the maps of root**n are checked against the same table.

    :param certificate: A certificate whose generators carry root units.
    :param n: The power, n >= 1.

    :type certificate: Certificate
    :type n: int

    :return: The verdict.
    :rtype: PowerVerdict
    """
    assert isinstance(n, int)
    if n < 1:
        raise PingPongUnits.exceptions.PreconditionViolated(f"Powers need n >= 1, got { n }")

    verdict = PingPongUnits.models.PowerVerdict

    if not certificate.passed:
        return verdict(n, verdict.UNDECIDED, "the base certificate fails")

    if all(n % generator.exponent == 0 for generator in certificate.generators):
        return verdict(
            n,
            verdict.FREE,
            "every n-th root power is a power of a free generator of the certified group",
            certificate,
        )

    if any(generator.root is None for generator in certificate.generators):
        return verdict(n, verdict.UNDECIDED, "the generators carry no root units to re-check")

    powered = []
    for generator in certificate.generators:
        unit = PingPongUnits.quaternion.quat_pow(generator.root, n)
        powered.append(
            Generator(
                f"{ generator.label.split('^')[0] }^{ n }",
                PingPongUnits.mobius.mobius_from_unit(unit),
                unit,
                generator.root,
                n,
            )
        )

    rerun = check_ping_pong(
        [generator.mobius for generator in powered],
        certificate.table,
        f"{ certificate.recipe }^{ n }",
        powered,
    )

    if rerun.passed:
        return verdict(n, verdict.FREE, "the n-th root powers satisfy the base table", rerun)

    return verdict(n, verdict.UNDECIDED, "the n-th root powers fail the base table", rerun)
