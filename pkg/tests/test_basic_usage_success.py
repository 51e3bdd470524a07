"""
End to end: from d to a passing certificate and its document.
"""


import json

import PingPongUnits.document
import PingPongUnits.oracle
import PingPongUnits.pell
import PingPongUnits.pingpong
import PingPongUnits.quaternion
import PingPongUnits.recipe.table
import PingPongUnits.semigroup


def test_basic_group_certificate_success():
    """
    Tests PingPongUnits.pingpong.certify_pair() on the W1 pair for d = 7
    """
    fund = PingPongUnits.pell.pell_fundamental(7)
    u = PingPongUnits.quaternion.u_unit(fund)
    w = PingPongUnits.quaternion.w_unit(fund, PingPongUnits.quaternion.WKind.W1)

    assert str(u) == "8 + 3*sqrt(-7)*i"
    assert str(w) == "3*sqrt(-7) + 8*k"

    certificate = PingPongUnits.pingpong.certify_pair(PingPongUnits.recipe.table.W1TableRecipe(7))

    assert certificate.passed
    assert [generator.unit for generator in certificate.generators] == [w, u]

    report = PingPongUnits.oracle.free_group_word_check(u, w, 5)

    assert report.clean

    text = PingPongUnits.document.CertificateDocument.from_certificate(
        "certify group", {"d": 7, "w_kind": "w1"}, certificate, report
    ).serialize()

    assert json.loads(text)["certificate"]["passed"] is True


def test_basic_semigroup_certificate_success():
    """
    Tests PingPongUnits.semigroup.certify_semigroup() for d = 2, where no
    group certificate of (u, w) is known
    """
    certificate = PingPongUnits.semigroup.certify_semigroup(2, PingPongUnits.quaternion.WKind.W1)

    assert certificate.passed

    phi1, phi2 = (generator.unit for generator in certificate.generators)
    assert PingPongUnits.oracle.free_semigroup_word_check(phi1, phi2, 10).clean


def test_basic_power_certificate_success():
    """
    Tests PingPongUnits.pingpong.power_certificate() on the d = 2 special pair
    """
    certificate = PingPongUnits.pingpong.certify_pair(PingPongUnits.recipe.table.D2SpecialTableRecipe())

    assert certificate.passed
    assert PingPongUnits.pingpong.power_certificate(certificate, 4).free
