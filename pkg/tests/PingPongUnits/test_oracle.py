# pylint: disable=redefined-outer-name

"""
Tests the brute-force word oracle present in PingPongUnits.oracle
"""


import fractions
import re

import pytest

import PingPongUnits.exceptions
import PingPongUnits.mobius
import PingPongUnits.oracle
import PingPongUnits.pell
import PingPongUnits.quaternion


BasisSlot = PingPongUnits.quaternion.BasisSlot
ImagQuad = PingPongUnits.quaternion.ImagQuad
QuatElem = PingPongUnits.quaternion.QuatElem
WKind = PingPongUnits.quaternion.WKind


def basis(slot, d=7):
    return QuatElem.from_slots(d, {slot: ImagQuad(1, 0, d)})


@pytest.fixture
def pair_seven():
    """
    The u and W1 units for d = 7.
    """
    fund = PingPongUnits.pell.pell_fundamental(7)
    return PingPongUnits.quaternion.u_unit(fund), PingPongUnits.quaternion.w_unit(fund, WKind.W1)


def test_format_and_parse_word():
    """
    Ensures the "g1 g2^-1" text format and that the empty word is "1".
    """
    word = ((1, 1), (2, -1), (1, 1))

    assert PingPongUnits.oracle.format_word(word) == "g1 g2^-1 g1"
    assert PingPongUnits.oracle.format_word(()) == "1"
    assert PingPongUnits.oracle.parse_word("g1 g2^-1 g1") == word
    assert PingPongUnits.oracle.parse_word("g2^1") == ((2, 1),)

    for bad, token in (("g3", "g3"), ("g1 g1^2", "g1^2"), ("g2 h1", "h1")):
        with pytest.raises(PingPongUnits.exceptions.MalformedWord, match=re.escape(repr(token))):
            PingPongUnits.oracle.parse_word(bad)


def test_is_reduced():
    """
    Ensures that a letter next to its own inverse makes a word unreduced.
    """
    assert PingPongUnits.oracle.is_reduced(((1, 1), (2, 1), (1, -1)))
    assert PingPongUnits.oracle.is_reduced(((1, 1), (1, 1)))
    assert not PingPongUnits.oracle.is_reduced(((1, 1), (2, 1), (2, -1)))
    assert PingPongUnits.oracle.is_reduced(())


def test_evaluate_word_matches_mobius(pair_seven):
    """
    Ensures that evaluating a word on units and on their maps agree.
    """
    u, w = pair_seven
    word = PingPongUnits.oracle.parse_word("g1 g2^-1 g1 g2")

    product = PingPongUnits.oracle.evaluate_word(word, [u, w])
    maps = [PingPongUnits.mobius.mobius_from_unit(unit) for unit in (u, w)]

    assert PingPongUnits.oracle.evaluate_word_mobius(word, maps) == PingPongUnits.mobius.mobius_from_unit(product)
    assert product.norm() == 1


def test_group_check_finds_torsion_relation():
    """
    Ensures that (i, j) yields "g1 g1 g1 g1" at length 4 and reports i^2 = -1
    as a torsion witness.
    """
    report = PingPongUnits.oracle.free_group_word_check(basis(BasisSlot.I), basis(BasisSlot.J), 6)

    assert report.relation_found
    assert not report.clean
    assert PingPongUnits.oracle.format_word(report.counterexample) == "g1 g1 g1 g1"
    assert max(report.counts) == 4
    assert ((1, 1), (1, 1)) in report.torsion_witnesses


def test_semigroup_check_finds_collision():
    """
    Ensures that (i, j) collides at length 2, i^2 = j^2 = -1.
    """
    report = PingPongUnits.oracle.free_semigroup_word_check(basis(BasisSlot.I), basis(BasisSlot.J), 6)

    assert report.collision == (((1, 1), (1, 1)), ((2, 1), (2, 1)))
    assert report.counts == {1: 2, 2: 4}


def test_degenerate_pairs(pair_seven):
    """
    Ensures that u = w is flagged: the group check stops at once, the
    semigroup check collides at length 1.
    """
    u, _ = pair_seven

    report = PingPongUnits.oracle.free_group_word_check(u, u, 4)
    assert report.degenerate == ["g1 = g2"]
    assert report.counterexample is None
    assert report.words_examined == 0
    assert not report.clean

    report = PingPongUnits.oracle.free_semigroup_word_check(u, u, 4)
    assert report.degenerate == ["g1 = g2"]
    assert report.collision == (((1, 1),), ((2, 1),))

    flags = PingPongUnits.oracle.degenerate_flags(u, PingPongUnits.quaternion.quat_inverse(u))
    assert flags == ["g1 = g2^-1"]

    flags = PingPongUnits.oracle.degenerate_flags(-QuatElem.one(7), u)
    assert flags == ["g1 is central"]


def test_commuting_pair_is_enumerated(pair_seven):
    """
    Ensures that a commuting pair u, u^2 carries no flag and that the group
    check finds u u u^-2 by enumeration.
    """
    u, _ = pair_seven
    w = u * u

    assert PingPongUnits.oracle.degenerate_flags(u, w) == []

    report = PingPongUnits.oracle.free_group_word_check(u, w, 4)
    assert report.degenerate == []
    assert PingPongUnits.oracle.format_word(report.counterexample) == "g1 g1 g2^-1"


def test_group_check_clean_pair(pair_seven):
    """
    Ensures that the d = 7 pair has no relation up to length 4 and the
    reduced word counts 4 * 3**(n-1).
    """
    u, w = pair_seven
    report = PingPongUnits.oracle.free_group_word_check(u, w, 4)

    assert report.clean
    assert report.counts == {1: 4, 2: 12, 3: 36, 4: 108}
    assert report.words_examined == 160
    assert report.torsion_witnesses == []


def test_semigroup_check_clean_pair(pair_seven):
    """
    Ensures that the d = 7 pair has 2**n distinct positive words per length.
    """
    u, w = pair_seven
    report = PingPongUnits.oracle.free_semigroup_word_check(u, w, 6)

    assert report.clean
    assert report.counts == {n: 2 ** n for n in range(1, 7)}


def test_group_check_rejects_non_units(pair_seven):
    """
    Ensures that a non-unit raises NonUnit and a bad depth is refused.
    """
    u, _ = pair_seven

    with pytest.raises(PingPongUnits.exceptions.NonUnit):
        PingPongUnits.oracle.free_group_word_check(u, QuatElem.scalar(2, 7), 3)

    with pytest.raises(PingPongUnits.exceptions.PreconditionViolated):
        PingPongUnits.oracle.free_group_word_check(u, u, 0)


def test_power_word_check():
    """
    Ensures that the squares of the d = 2 pair are clean in both modes.
    """
    fund = PingPongUnits.pell.pell_fundamental(2)
    u = PingPongUnits.quaternion.u_unit(fund)
    w = PingPongUnits.quaternion.w_unit(fund, WKind.W1)

    assert PingPongUnits.oracle.power_word_check(u, w, 2, 4).clean
    assert PingPongUnits.oracle.power_word_check(u, w, 2, 6, semigroup=True).clean

    with pytest.raises(PingPongUnits.exceptions.PreconditionViolated):
        PingPongUnits.oracle.power_word_check(u, w, 0)


@pytest.mark.parametrize("workers", [1, 2])
def test_group_check_is_the_same_for_any_worker_count(workers):
    """
    Ensures that (i, j) gives the same report in-process and in a pool:
    the first word equal to 1 sits first in level 4.
    """
    report = PingPongUnits.oracle.free_group_word_check(basis(BasisSlot.I), basis(BasisSlot.J), 6, workers)

    assert PingPongUnits.oracle.format_word(report.counterexample) == "g1 g1 g1 g1"
    assert report.counts == {1: 4, 2: 12, 3: 36, 4: 1}
    assert [PingPongUnits.oracle.format_word(word) for word in report.torsion_witnesses] == [
        "g1 g1",
        "g1^-1 g1^-1",
        "g2 g2",
        "g2^-1 g2^-1",
    ]


@pytest.mark.parametrize("workers", [1, 2])
def test_group_check_takes_the_shortest_relation_across_blocks(pair_seven, workers):
    """
    Ensures that with w of order 3 the relation g2 g2 g2 wins over the longer
    g1 g2 g2 g2 g1^-1 found first in the g1 block.
    """
    u, _ = pair_seven
    half = fractions.Fraction(1, 2)
    w = QuatElem(ImagQuad(-half, 0, 7), ImagQuad(half, 0, 7), ImagQuad(half, 0, 7), ImagQuad(half, 0, 7))

    report = PingPongUnits.oracle.free_group_word_check(u, w, 6, workers)

    assert PingPongUnits.oracle.format_word(report.counterexample) == "g2 g2 g2"
    assert report.counts == {1: 4, 2: 12, 3: 27}
    assert report.torsion_witnesses == []


def test_group_check_in_a_pool_matches_in_process(pair_seven):
    """
    Ensures that a clean pair gives identical counts for one and two
    workers.
    """
    u, w = pair_seven
    single = PingPongUnits.oracle.free_group_word_check(u, w, 4)
    pooled = PingPongUnits.oracle.free_group_word_check(u, w, 4, workers=2)

    assert pooled.clean
    assert pooled.counts == single.counts
