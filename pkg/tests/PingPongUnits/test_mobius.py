# pylint: disable=redefined-outer-name

"""
Tests the Mobius maps, the quaternion embedding and the arc algebra present
in PingPongUnits.mobius
"""


import fractions

import hypothesis
import hypothesis.strategies
import pytest

import PingPongUnits.exactnum
import PingPongUnits.exceptions
import PingPongUnits.mobius
import PingPongUnits.pell
import PingPongUnits.quaternion


Arc = PingPongUnits.mobius.Arc
ArcSet = PingPongUnits.mobius.ArcSet
ArcKind = PingPongUnits.mobius.ArcKind
ComplexQuad = PingPongUnits.exactnum.ComplexQuad
ExtPoint = PingPongUnits.mobius.ExtPoint
ImagQuad = PingPongUnits.quaternion.ImagQuad
MobiusMap = PingPongUnits.mobius.MobiusMap
QuadElem = PingPongUnits.exactnum.QuadElem
QuatElem = PingPongUnits.quaternion.QuatElem
WKind = PingPongUnits.quaternion.WKind

small = hypothesis.strategies.integers(min_value=-5, max_value=5)


@hypothesis.strategies.composite
def quaternions(draw, d=3):
    return QuatElem(*(ImagQuad(draw(small), draw(small), d) for _ in range(4)))


def point(value, d=3):
    return ExtPoint(QuadElem.rational(value, d))


@hypothesis.strategies.composite
def circle_points(draw, d=3):
    if draw(hypothesis.strategies.integers(min_value=0, max_value=9)) == 0:
        return ExtPoint.infinity(d)
    denominator = draw(hypothesis.strategies.integers(min_value=1, max_value=4))
    return ExtPoint(QuadElem(fractions.Fraction(draw(small), denominator), draw(small), d))


@hypothesis.strategies.composite
def mobius_maps(draw, d=3):
    entries = [QuadElem(draw(small), draw(small), d) for _ in range(4)]
    m11, m12, m21, m22 = entries
    hypothesis.assume(m11 * m22 - m12 * m21)
    return MobiusMap(*entries)


@hypothesis.strategies.composite
def proper_arcs(draw, d=3):
    start = draw(circle_points(d))
    end = draw(circle_points(d))
    hypothesis.assume(start != end)
    return Arc(start, end, draw(hypothesis.strategies.booleans()), draw(hypothesis.strategies.booleans()))


@pytest.fixture
def fund_three():
    """
    The fundamental unit 2 + sqrt(3).
    """
    return PingPongUnits.pell.pell_fundamental(3)


@pytest.fixture
def w1_map(fund_three):
    """
    The Mobius map of the W1 unit for d = 3.
    """
    return PingPongUnits.mobius.mobius_from_unit(PingPongUnits.quaternion.w_unit(fund_three, WKind.W1))


def test_parse_quad():
    """
    Ensures that every exact text form parses back to the value it came from.
    """
    parse = PingPongUnits.mobius.parse_quad

    assert parse("3/2+1/2*sqrt(7)") == QuadElem(fractions.Fraction(3, 2), fractions.Fraction(1, 2), 7)
    assert parse("-1/4*sqrt(3)") == QuadElem(0, fractions.Fraction(-1, 4), 3)
    assert parse("sqrt(2)") == QuadElem(0, 1, 2)
    assert parse("-5", 3) == QuadElem(-5, 0, 3)
    assert parse("2 - 3*sqrt(7)") == QuadElem(2, -3, 7)

    for value in (QuadElem(fractions.Fraction(-7, 3), fractions.Fraction(5, 11), 13), QuadElem(0, -1, 2)):
        assert parse(str(value)) == value

    for bad in ("", "abc", "1/0", "2sqrt(3)", "sqrt(x)"):
        with pytest.raises(PingPongUnits.exceptions.MalformedNumber):
            parse(bad)

    with pytest.raises(PingPongUnits.exceptions.MismatchedField):
        parse("sqrt(3)", 5)


def test_psi_of_homothety_unit(fund_three):
    """
    Ensures that psi(x + y*sqrt(-d)i) = diag(x - y*sqrt(d), x + y*sqrt(d)).
    """
    u = PingPongUnits.quaternion.u_unit(fund_three)
    matrix = PingPongUnits.mobius.psi(u)
    zero = ComplexQuad(QuadElem(0, 0, 3))

    assert matrix.entries == (
        ComplexQuad(QuadElem(2, -1, 3)),
        zero,
        zero,
        ComplexQuad(QuadElem(2, 1, 3)),
    )

    m = PingPongUnits.mobius.to_real_mobius(matrix)
    assert m == PingPongUnits.mobius.homothety(QuadElem(2, -1, 3) / QuadElem(2, 1, 3))
    assert m.pole().is_infinite()
    assert m.zero() == point(0)


def test_psi_of_w1_unit(fund_three, w1_map):
    """
    Ensures that psi(y*sqrt(-d) + xk) is purely imaginary and gives the map
    (y*sqrt(d)z + x)/(xz + y*sqrt(d)).
    """
    w = PingPongUnits.quaternion.w_unit(fund_three, WKind.W1)
    matrix = PingPongUnits.mobius.psi(w)

    assert all(entry.is_imaginary() for entry in matrix.entries)
    assert w1_map == MobiusMap(QuadElem(0, 1, 3), 2, 2, QuadElem(0, 1, 3))

    # pole -y*sqrt(d)/x and zero -x/(y*sqrt(d))
    assert w1_map.pole() == ExtPoint(QuadElem(0, fractions.Fraction(-1, 2), 3))
    assert w1_map.zero() == ExtPoint(QuadElem(0, fractions.Fraction(-2, 3), 3))
    assert w1_map(point(0)) == ExtPoint(QuadElem(0, fractions.Fraction(2, 3), 3))
    assert w1_map(w1_map.pole()).is_infinite()


def test_psi_of_mixed_unit():
    """
    Ensures that 1 + i has no real Mobius map.
    """
    q = QuatElem(ImagQuad(1, 0, 3), ImagQuad(1, 0, 3), ImagQuad(0, 0, 3), ImagQuad(0, 0, 3))

    with pytest.raises(PingPongUnits.exceptions.NotRealProjective):
        PingPongUnits.mobius.mobius_from_unit(q)


@hypothesis.settings(max_examples=10 ** 3, deadline=None)
@hypothesis.given(quaternions(), quaternions())
def test_psi_is_multiplicative(p, q):
    """
    Ensures that psi(pq) = psi(p)psi(q).
    """
    assert PingPongUnits.mobius.psi(p * q) == PingPongUnits.mobius.psi(p) * PingPongUnits.mobius.psi(q)


@hypothesis.settings(max_examples=10 ** 3, deadline=None)
@hypothesis.given(quaternions())
def test_psi_determinant_is_norm(q):
    """
    Ensures that det(psi(q)) is the reduced norm under the coefficient
    embedding.
    """
    assert PingPongUnits.mobius.psi(q).determinant() == PingPongUnits.mobius.embed(q.norm())


def test_mobius_apply_infinity():
    """
    Ensures that oo goes to m11/m21, or stays at oo when m21 = 0.
    """
    m = MobiusMap(1, 2, 3, 4)
    assert m(ExtPoint.infinity()) == ExtPoint(QuadElem(fractions.Fraction(1, 3)))
    assert m(ExtPoint(QuadElem(fractions.Fraction(-4, 3)))).is_infinite()
    assert PingPongUnits.mobius.homothety(QuadElem(3, 0, 1))(ExtPoint.infinity()).is_infinite()


def test_singular_map():
    """
    Ensures that a zero determinant is refused.
    """
    with pytest.raises(PingPongUnits.exceptions.PreconditionViolated):
        MobiusMap(1, 2, 2, 4)


def test_compose_and_inverse(fund_three, w1_map):
    """
    Ensures that composition is the pointwise composite and that a map
    composed with its inverse is the identity.
    """
    u_map = PingPongUnits.mobius.mobius_from_unit(PingPongUnits.quaternion.u_unit(fund_three))
    product = PingPongUnits.mobius.compose(u_map, w1_map)

    for value in (0, 1, -2, fractions.Fraction(7, 3), 11):
        z = point(value)
        assert product(z) == u_map(w1_map(z))

    assert PingPongUnits.mobius.compose(w1_map, PingPongUnits.mobius.inverse(w1_map)).is_identity()

    w = PingPongUnits.quaternion.w_unit(fund_three, WKind.W1)
    u = PingPongUnits.quaternion.u_unit(fund_three)
    assert PingPongUnits.mobius.mobius_from_unit(u * w) == product


def test_w2_inverse_matches_closed_form():
    """
    Ensures that the inverse W2 map is
    (-(y*sqrt(d) - (x+1))z + (y*sqrt(d) - (x-1))) / ((y*sqrt(d) + (x-1))z + (y*sqrt(d) + (x+1))).
    """
    fund = PingPongUnits.pell.pell_fundamental(7)
    s = QuadElem(0, fund.y, 7)
    x = fund.x

    w2_map = PingPongUnits.mobius.mobius_from_unit(PingPongUnits.quaternion.w_unit(fund, WKind.W2))
    expected = MobiusMap(-(s - (x + 1)), s - (x - 1), s + (x - 1), s + (x + 1))

    assert w2_map.inverse() == expected


def test_power_and_finite_order():
    """
    Ensures that z -> -1/z has order 2 and a homothety has infinite order.
    """
    flip = MobiusMap(0, -1, 1, 0)
    assert flip.power(2).is_identity()
    assert flip.has_finite_order()

    rho = QuadElem(7, -4, 3)
    assert not PingPongUnits.mobius.homothety(rho).has_finite_order()
    assert PingPongUnits.mobius.homothety(rho).power(-2) == PingPongUnits.mobius.homothety(rho * rho).inverse()


def test_arc_parse_and_str():
    """
    Ensures the textual arc forms, including the ones through oo.
    """
    for text in ("[-1, 0]", "]-1, 0[", "[0, 1[", "]1, inf]", "{2}", "omega", "{}"):
        assert str(Arc.parse(text)) == text

    arc = Arc.parse("]1/2*sqrt(2), inf[")
    assert arc.d == 2
    assert arc.kind is ArcKind.PROPER
    assert not arc.start_closed

    with pytest.raises(PingPongUnits.exceptions.DegenerateArc):
        Arc.parse("[1, 1]")

    with pytest.raises(PingPongUnits.exceptions.MalformedNumber):
        Arc.parse("(0, 1)")


def test_arc_contains_through_infinity():
    """
    Ensures that [1, -1] runs through oo and skips 0.
    """
    arc = Arc.parse("[1, -1]")

    assert arc.contains(ExtPoint.infinity())
    assert arc.contains(ExtPoint(QuadElem(5)))
    assert arc.contains(ExtPoint(QuadElem(-1)))
    assert not arc.contains(ExtPoint(QuadElem(0)))


def test_arc_complement():
    """
    Ensures that the complement swaps endpoint roles and inclusion.
    """
    assert Arc.parse("[-1, 0[").complement() == Arc.parse("[0, -1[")
    assert Arc.parse("omega").complement() == Arc.empty()
    assert Arc.parse("{3}").complement() == Arc.punctured(ExtPoint(QuadElem(3)))


def test_arc_image():
    """
    Ensures the images of arcs under orientation preserving and reversing
    maps, and an arc through the pole mapping through oo.
    """
    negate = MobiusMap(-1, 0, 0, 1)
    assert PingPongUnits.mobius.arc_image(negate, Arc.parse("[0, 1]")) == Arc.parse("[-1, 0]")

    identity = MobiusMap.identity()
    assert PingPongUnits.mobius.arc_image(identity, Arc.parse("]2, 3]")) == Arc.parse("]2, 3]")

    shrink = PingPongUnits.mobius.homothety(QuadElem(fractions.Fraction(1, 3)))
    positive = Arc.parse("]0, inf[")
    assert positive.image(shrink) == positive

    reciprocal = MobiusMap(0, 1, 1, 0)
    image = Arc.parse("[-1, 1]").image(reciprocal)
    assert image.contains(ExtPoint.infinity())
    assert image == Arc.parse("[1, -1]")


@hypothesis.settings(max_examples=10 ** 3, deadline=None)
@hypothesis.given(mobius_maps(), mobius_maps(), proper_arcs())
def test_arc_image_respects_composition(m, n, arc):
    """
    Ensures that the image under m after n is the image under n, then m.
    """
    assert PingPongUnits.mobius.arc_image(m.compose(n), arc) == PingPongUnits.mobius.arc_image(
        m, PingPongUnits.mobius.arc_image(n, arc)
    )


@hypothesis.settings(max_examples=10 ** 3, deadline=None)
@hypothesis.given(mobius_maps(), proper_arcs(), circle_points())
def test_arc_image_carries_membership(m, arc, z):
    """
    Ensures that z lies in an arc exactly when m(z) lies in its image.
    """
    image = PingPongUnits.mobius.arc_image(m, arc)

    assert arc.contains(z) == image.contains(PingPongUnits.mobius.mobius_apply(m, z))


def test_arcset_algebra():
    """
    Ensures union, intersection, difference and complement on the circle.
    """
    left = ArcSet.parse("[-2, 0]")
    right = ArcSet.parse("[-1, 1]")

    assert left.union(right) == ArcSet.parse("[-2, 1]")
    assert left.intersection(right) == ArcSet.parse("[-1, 0]")
    assert left.difference(right) == ArcSet.parse("[-2, -1[")
    assert left.complement() == ArcSet.parse("]0, -2[")
    assert left.union(left.complement()).is_full()
    assert left.intersection(left.complement()).is_empty()

    assert str(ArcSet.parse("[-1, 0] U [0, 1]")) == "[-1, 1]"
    assert str(ArcSet.parse("]1, inf] U [inf, -1[")) == "]1, -1["


def test_arcset_violations():
    """
    Ensures that violations name the offending pieces, and that an endpoint
    contact is a point piece.
    """
    inner = ArcSet.parse("[0, 1]")
    outer = ArcSet.parse("]0, 2]")

    pieces = inner.violations(outer)
    assert len(pieces) == 1
    assert pieces[0].is_point
    assert pieces[0].sample == ExtPoint(QuadElem(0))

    assert ArcSet.parse("]0, 1]").issubset(outer)
    assert not all(piece.is_point for piece in ArcSet.parse("[3, 4]").violations(outer))
    assert ArcSet.parse("[3, 4]").isdisjoint(outer)


def test_arcset_image():
    """
    Ensures that the image of a union is the union of images.
    """
    arcs = ArcSet.parse("[-2, -1] U [1, 2]")
    negate = MobiusMap(-1, 0, 0, 1)

    assert arcs.image(negate) == arcs
    assert negate.image(ArcSet.parse("[1, 2]")) == ArcSet.parse("[-2, -1]")
