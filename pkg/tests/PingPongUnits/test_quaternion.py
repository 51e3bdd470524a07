# pylint: disable=redefined-outer-name

"""
Tests the quaternion algebra and unit constructions present in
PingPongUnits.quaternion
"""


import fractions

import hypothesis
import hypothesis.strategies
import pytest

import PingPongUnits.exactnum
import PingPongUnits.exceptions
import PingPongUnits.pell
import PingPongUnits.quaternion


BasisSlot = PingPongUnits.quaternion.BasisSlot
ImagQuad = PingPongUnits.quaternion.ImagQuad
QuatElem = PingPongUnits.quaternion.QuatElem
WKind = PingPongUnits.quaternion.WKind

small = hypothesis.strategies.integers(min_value=-6, max_value=6)


@hypothesis.strategies.composite
def quaternions(draw, d=7):
    return QuatElem(*(ImagQuad(draw(small), draw(small), d) for _ in range(4)))


def basis(slot, d=7):
    return QuatElem.from_slots(d, {slot: ImagQuad(1, 0, d)})


@pytest.fixture
def fund_seven():
    """
    The fundamental unit 8 + 3*sqrt(7).
    """
    return PingPongUnits.pell.pell_fundamental(7)


@pytest.fixture
def fund_three():
    """
    The fundamental unit 2 + sqrt(3).
    """
    return PingPongUnits.pell.pell_fundamental(3)


def test_defining_relations():
    """
    Ensures that i^2 = j^2 = -1 and ij = k = -ji.
    """
    i, j, k = basis(BasisSlot.I), basis(BasisSlot.J), basis(BasisSlot.K)
    one = QuatElem.one(7)

    assert i * i == -one
    assert j * j == -one
    assert i * j == k
    assert j * i == -k
    assert PingPongUnits.quaternion.quat_mul(j, k) == i


@hypothesis.settings(max_examples=10 ** 3, deadline=None)
@hypothesis.given(quaternions(), quaternions())
def test_norm_is_multiplicative(p, q):
    """
    Ensures that norm(pq) = norm(p) norm(q) and q conj(q) = norm(q).
    """
    assert (p * q).norm() == p.norm() * q.norm()
    assert p * p.conjugate() == QuatElem.scalar(p.norm(), 7)


@hypothesis.settings(max_examples=10 ** 3, deadline=None)
@hypothesis.given(quaternions(), quaternions(), quaternions())
def test_multiplication_is_associative(p, q, r):
    """
    Ensures that the Hamilton product is associative.
    """
    assert (p * q) * r == p * (q * r)


def test_inverse_of_non_unit():
    """
    Ensures that inverting an element of norm other than +-1 raises NonUnit.
    """
    two = QuatElem.scalar(2, 7)

    with pytest.raises(PingPongUnits.exceptions.NonUnit):
        PingPongUnits.quaternion.quat_inverse(two)

    with pytest.raises(PingPongUnits.exceptions.NonUnit):
        PingPongUnits.quaternion.quat_pow(two, -1)


def test_pell2_unit(fund_seven):
    """
    Ensures the Pell 2-units 3*sqrt(-7) + 8i and sqrt(-2) + k.
    """
    unit = PingPongUnits.quaternion.pell2_unit(fund_seven, BasisSlot.ONE, BasisSlot.I)
    assert unit == QuatElem(ImagQuad(0, 3, 7), ImagQuad(8, 0, 7), ImagQuad(0, 0, 7), ImagQuad(0, 0, 7))
    assert unit.norm() == 1

    unit = PingPongUnits.quaternion.pell2_unit(PingPongUnits.pell.pell_fundamental(2), BasisSlot.ONE, BasisSlot.K)
    assert str(unit) == "sqrt(-2) + k"
    assert unit.norm() == -1
    assert unit.is_unit()

    with pytest.raises(PingPongUnits.exceptions.SlotCollision):
        PingPongUnits.quaternion.pell2_unit(fund_seven, BasisSlot.I, BasisSlot.I)


def test_pell4_unit(fund_three):
    """
    Ensures the Pell 4-unit norm, the integrality guard and the norm -1
    exclusion.
    """
    slots = (BasisSlot.ONE, BasisSlot.I, BasisSlot.J, BasisSlot.K)

    unit = PingPongUnits.quaternion.pell4_unit(fund_three, *slots, require_integral=False)
    assert unit.norm() == 1
    assert unit.ci == ImagQuad(0, fractions.Fraction(1, 2), 3)

    flipped = PingPongUnits.quaternion.pell4_unit(fund_three, *slots, sign=-1, require_integral=False)
    assert flipped.cj == unit.ck
    assert flipped.ck == unit.cj
    assert flipped.norm() == 1

    with pytest.raises(PingPongUnits.exceptions.NonIntegral):
        PingPongUnits.quaternion.pell4_unit(fund_three, *slots)

    integral = PingPongUnits.quaternion.pell4_unit(PingPongUnits.pell.pell_fundamental(6), *slots)
    assert integral.in_order()
    assert integral.norm() == 1

    with pytest.raises(PingPongUnits.exceptions.NormMinusOne):
        PingPongUnits.quaternion.pell4_unit(PingPongUnits.pell.pell_fundamental(2), *slots)


def test_pell4_unit_from_square(fund_seven):
    """
    Ensures 24*sqrt(-7) + 24*sqrt(-7)i + 64j + 63k for d = 7 and that an even
    y is refused.
    """
    unit = PingPongUnits.quaternion.pell4_unit_from_square(fund_seven)
    assert unit.coefficients == (
        ImagQuad(0, 24, 7),
        ImagQuad(0, 24, 7),
        ImagQuad(64, 0, 7),
        ImagQuad(63, 0, 7),
    )
    assert unit.norm() == 1

    with pytest.raises(PingPongUnits.exceptions.PreconditionViolated):
        PingPongUnits.quaternion.pell4_unit_from_square(PingPongUnits.pell.pell_fundamental(6))


def test_pell3_unit():
    """
    Ensures 2*sqrt(-3) + 3i - 2j from 5 + 2*sqrt(6) and the Pell check.
    """
    solution = PingPongUnits.pell.pell_fundamental_2d(3)
    unit = PingPongUnits.quaternion.pell3_unit(solution, BasisSlot.ONE, BasisSlot.I, BasisSlot.J)

    assert unit.coefficients == (ImagQuad(0, 2, 3), ImagQuad(3, 0, 3), ImagQuad(-2, 0, 3), ImagQuad(0, 0, 3))
    assert unit.norm() == 1

    with pytest.raises(PingPongUnits.exceptions.SlotCollision):
        PingPongUnits.quaternion.pell3_unit(solution, BasisSlot.ONE, BasisSlot.ONE, BasisSlot.J)


@pytest.mark.parametrize(
    "n, expected",
    [(0, (0, 0, 0)), (1, (0, 0, 1)), (7, None), (28, None), (29, (2, 3, 4)), (6, (1, 1, 2))],
)
def test_three_squares(n, expected):
    """
    Ensures the first decomposition, and None exactly for 4**a(8b + 7).
    """
    assert PingPongUnits.quaternion.three_squares(n) == expected


def test_three_squares_exclusion():
    """
    Ensures that None is returned exactly for the excluded form, for every
    n up to 10**4.
    """
    for n in range(10 ** 4 + 1):
        m = n
        while m and m % 4 == 0:
            m //= 4
        excluded = n > 0 and m % 8 == 7

        found = PingPongUnits.quaternion.three_squares(n)
        assert (found is None) == excluded
        if found is not None:
            assert sum(part * part for part in found) == n


def test_gauss_unit():
    """
    Ensures the Gauss units 2*sqrt(-7) + 2i + 3j + 4k, sqrt(-2) + k and
    sqrt(-7) + i + j + 2k.
    """
    unit = PingPongUnits.quaternion.gauss_unit(7, 2, 1)
    assert str(unit) == "2*sqrt(-7) + 2*i + 3*j + 4*k"
    assert unit.norm() == 1

    unit = PingPongUnits.quaternion.gauss_unit(2, 1, -1)
    assert str(unit) == "sqrt(-2) + k"
    assert unit.norm() == -1

    unit = PingPongUnits.quaternion.gauss_unit(7, 1, -1)
    assert str(unit) == "sqrt(-7) + i + j + 2*k"

    with pytest.raises(PingPongUnits.exceptions.PreconditionViolated):
        PingPongUnits.quaternion.gauss_unit(7, 0, 1)


def test_prop_pp1_units(fund_three):
    """
    Ensures the four norm +1 units for d = 3.
    """
    u, w1, w2, w3 = PingPongUnits.quaternion.prop_pp1_units(fund_three)

    assert str(u) == "2 + sqrt(-3)*i"
    assert str(w1) == "sqrt(-3) + 2*k"
    assert str(w3) == "4 - 2*sqrt(-3)*i - 3*j + 2*sqrt(-3)*k"
    assert w2.c1 == fractions.Fraction(3, 2)

    for unit in (u, w1, w2, w3):
        assert unit.norm() == 1

    with pytest.raises(PingPongUnits.exceptions.NonIntegral):
        PingPongUnits.quaternion.prop_pp1_units(fund_three, require_integral=True)

    with pytest.raises(PingPongUnits.exceptions.NormMinusOne):
        PingPongUnits.quaternion.prop_pp1_units(PingPongUnits.pell.pell_fundamental(2))


def test_w_unit_kinds(fund_seven):
    """
    Ensures that W1 exists for either norm and W2, W3 need norm +1.
    """
    assert str(PingPongUnits.quaternion.w_unit(fund_seven, WKind.W1)) == "3*sqrt(-7) + 8*k"
    assert PingPongUnits.quaternion.w_unit(PingPongUnits.pell.pell_fundamental(2), WKind.W1).norm() == -1

    for kind in (WKind.W2, WKind.W3):
        with pytest.raises(PingPongUnits.exceptions.NormMinusOne):
            PingPongUnits.quaternion.w_unit(PingPongUnits.pell.pell_fundamental(2), kind)


def test_quat_pow_matches_unit_power(fund_three):
    """
    Ensures that u(eps)**n = u(eps**n) for the homothety unit.
    """
    u = PingPongUnits.quaternion.u_unit(fund_three)

    assert PingPongUnits.quaternion.quat_pow(u, 2) == QuatElem(
        ImagQuad(7, 0, 3), ImagQuad(0, 4, 3), ImagQuad(0, 0, 3), ImagQuad(0, 0, 3)
    )

    for n in range(1, 6):
        expected = PingPongUnits.quaternion.u_unit(PingPongUnits.pell.unit_power(fund_three, n))
        assert PingPongUnits.quaternion.quat_pow(u, n) == expected

    assert PingPongUnits.quaternion.quat_pow(u, 1) == u
    assert PingPongUnits.quaternion.quat_pow(u, -1) * u == QuatElem.one(3)


def test_pell2_power_identity():
    """
    Ensures that (x + y*sqrt(-d)*xi)**n is the 2-unit of eps**n for every
    square-free d up to 50, n up to 10 and each slot xi.
    """
    for d in range(2, 51):
        if not PingPongUnits.exactnum.is_square_free(d):
            continue

        fund = PingPongUnits.pell.pell_fundamental(d)
        for xi in (BasisSlot.I, BasisSlot.J, BasisSlot.K):
            unit = PingPongUnits.quaternion.pell2_unit(fund, xi, BasisSlot.ONE)

            for n in range(1, 11):
                expected = PingPongUnits.quaternion.pell2_unit(PingPongUnits.pell.unit_power(fund, n), xi, BasisSlot.ONE)
                assert PingPongUnits.quaternion.quat_pow(unit, n) == expected, (d, xi, n)


def test_is_torsion(fund_seven):
    """
    Ensures that i and units without a scalar part are torsion, and that the
    homothety unit is not.
    """
    assert PingPongUnits.quaternion.is_torsion(basis(BasisSlot.I))

    no_scalar = QuatElem.from_slots(7, {BasisSlot.I: ImagQuad(0, 3, 7), BasisSlot.J: ImagQuad(8, 0, 7)})
    assert PingPongUnits.quaternion.is_torsion(no_scalar)

    assert not PingPongUnits.quaternion.is_torsion(PingPongUnits.quaternion.u_unit(fund_seven))

    with pytest.raises(PingPongUnits.exceptions.NonUnit):
        PingPongUnits.quaternion.is_torsion(QuatElem.scalar(3, 7))


def test_in_order_half_integers():
    """
    Ensures that half-integers are integral for d = 3 (mod 4) only when both
    parts are halves.
    """
    assert ImagQuad(fractions.Fraction(1, 2), fractions.Fraction(1, 2), 3).in_ring()
    assert not ImagQuad(fractions.Fraction(1, 2), 0, 3).in_ring()
    assert not ImagQuad(fractions.Fraction(1, 2), fractions.Fraction(1, 2), 5).in_ring()
