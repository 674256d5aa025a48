import math
import os
from unittest.mock import patch

import pytest

from src.galoiscover.core import CosetOverflowError, InvalidArgumentError, VerificationMismatchError
from src.galoiscover.cosets import Strategy, todd_coxeter
from src.galoiscover.monodromy import full_factorization
from src.galoiscover.van_kampen import presentation_G, presentation_G1
from src.galoiscover.verification import negative_control, verify_simply_connected

SKIP_SLOW = os.environ.get('GALOISCOVER_SLOW_TESTS') is None

REPORT_FIELDS = {
    "schema_version", "k", "d", "m", "factor_count", "relator_count", "exponent_sum", "g1_order",
    "expected_order", "hom_verified", "surjective", "pi1_trivial", "c1_squared", "classification",
    "max_cosets_used", "runtime_ms",
}


def test_four_planes():
    report = verify_simply_connected(4)
    assert report.g1_order == 24
    assert report.pi1_trivial is True
    assert report.isomorphic is True
    assert (report.factor_count, report.relator_count, report.exponent_sum) == (15, 16, 27)
    assert report.c1_squared == 0
    assert report.classification == 'not_determined'
    assert report.hom_verified and report.surjective


def test_five_planes():
    report = verify_simply_connected(5)
    assert report.g1_order == 120
    assert report.c1_squared == 120
    assert report.pi1_trivial


def test_five_planes_felsch():
    assert verify_simply_connected(5, strategy=Strategy.FELSCH).g1_order == 120


def test_four_planes_raw():
    report = verify_simply_connected(4, raw=True)
    assert report.g1_order == 24
    assert report.max_cosets_used >= 24


def test_six_planes():
    report = verify_simply_connected(6)
    assert report.g1_order == 720
    assert report.c1_squared == 2880
    assert report.classification == 'general_type'
    assert (report.factor_count, report.relator_count, report.exponent_sum) == (45, 46, 89)
    assert report.pi1_trivial


def test_overflow_carries_partial_report():
    with pytest.raises(CosetOverflowError) as err:
        verify_simply_connected(6, max_cosets=10)
    report = err.value.report
    assert report.g1_order is None
    assert report.pi1_trivial is None
    assert report.hom_verified
    assert report.to_dict()['g1_order'] is None


def test_needs_four_planes():
    with pytest.raises(InvalidArgumentError):
        verify_simply_connected(3)


def test_report_to_dict():
    payload = verify_simply_connected(4).to_dict()
    assert payload['schema_version'] == 1
    assert payload['g1_order'] == '24'
    assert payload['expected_order'] == '24'
    assert payload['c1_squared'] == '0'
    assert payload['pi1_trivial'] is True
    assert isinstance(payload['runtime_ms'], int)


def test_report_keys_are_frozen():
    assert set(verify_simply_connected(4).to_dict()) == REPORT_FIELDS


def test_raw_run_enumerates_every_relator():
    with patch("src.galoiscover.verification.shortest_relators") as shortcut:
        assert verify_simply_connected(4, raw=True).g1_order == 24
    assert not shortcut.called


def test_mismatch_carries_the_report():
    with patch("src.galoiscover.verification.group_order", return_value=(12, 12)):
        with pytest.raises(VerificationMismatchError) as err:
            verify_simply_connected(4)
    report = err.value.report
    assert report.g1_order == 12
    assert report.pi1_trivial is False
    assert report.to_dict()["g1_order"] == "12"


def test_negative_control():
    control = negative_control(4, max_cosets=2000)
    assert control.dropped == 'projective'
    assert control.relators_dropped == 1
    assert control.overflowed or control.order >= 24


def test_negative_control_without_a_cusp_family():
    control = negative_control(5, drop="M4:cusp", max_cosets=5000)
    assert control.dropped == "M4:cusp"
    assert control.relators_dropped == 3
    assert control.overflowed or control.order >= 120


def test_strategies_agree_on_the_raw_presentation():
    for k in (4, 5, 6):
        g1 = presentation_G1(presentation_G(full_factorization(k)))
        hlt = todd_coxeter(g1, strategy=Strategy.HLT)
        felsch = todd_coxeter(g1, strategy=Strategy.FELSCH)
        assert hlt.order == felsch.order == math.factorial(k)


def test_negative_control_unknown_tag():
    with pytest.raises(InvalidArgumentError):
        negative_control(4, drop='no-such-tag')


def test_seven_planes():
    assert verify_simply_connected(7).g1_order == 5040


@pytest.mark.skipif(SKIP_SLOW, reason="set GALOISCOVER_SLOW_TESTS to run")
def test_eight_planes():
    assert verify_simply_connected(8).g1_order == 40320


@pytest.mark.skipif(SKIP_SLOW, reason="set GALOISCOVER_SLOW_TESTS to run")
def test_strategies_agree():
    for k in range(4, 9):
        hlt = verify_simply_connected(k, strategy=Strategy.HLT)
        felsch = verify_simply_connected(k, strategy=Strategy.FELSCH)
        assert hlt.g1_order == felsch.g1_order == hlt.expected_order
