import json

import pytest

from src.galoiscover.braids import ActionConvention
from src.galoiscover.core import InvalidArgumentError
from src.galoiscover.fp_groups import edge_homomorphism, verify_homomorphism
from src.galoiscover.free_groups import FreeWord, format_word, paper_equal, parse_word
from src.galoiscover.monodromy import Factorization, branch, full_factorization
from src.galoiscover.van_kampen import (
    GroupPresentation, PROJECTIVE_TAG, SQUARE_TAG, Stage, calibrate, format_presentation, parse_relation, presentation_G,
    presentation_G1, presentation_to_dict, presentation_to_json, projective_relator, relation_families,
    relators_of_factor, unmatched_relators,
)


def relators_tagged(p, tag):
    return [relator for relator, provenance in zip(p.relators, p.provenance) if provenance == tag]


def test_branch_relator():
    f = full_factorization(4)
    assert [format_word(r) for r in relators_of_factor(f[0])] == ["1 1'^-1"]


def test_cusp_relators_of_M5():
    p = presentation_G(full_factorization(6))
    cusps = relators_tagged(p, "M5:cusp")
    assert len(cusps) == 3
    for text in ("<4,5>", "<4',5>", "<4^{-1}4'4,5>"):
        expected = parse_relation(text, ambient_lines=5)
        assert any(paper_equal(expected, relator) for relator in cusps)


def test_projective_relator():
    assert format_word(projective_relator(5)) == "5' 5 4' 4 3' 3 2' 2 1' 1"
    assert projective_relator(1).letters == (2, 1)
    with pytest.raises(InvalidArgumentError):
        projective_relator(0)


def test_single_factor_presentation():
    p = presentation_G(Factorization([branch("1", "1'", 1)], ambient_lines=1))
    assert format_presentation(p) == "gens: 1 1'\n1 1'^-1\n1' 1\n"
    assert p.provenance == ('branch', PROJECTIVE_TAG)


def test_presentation_sizes():
    p4 = presentation_G(full_factorization(4))
    assert p4.generator_count == 6
    assert len(p4) == 16
    p6 = presentation_G(full_factorization(6))
    assert p6.generator_names == ["1", "1'", "2", "2'", "3", "3'", "4", "4'", "5", "5'"]
    assert len(p6) == 46
    assert p6.provenance[-1] == PROJECTIVE_TAG


def test_relators_are_cyclically_reduced():
    for relator in presentation_G(full_factorization(6)).relators:
        letters = relator.letters
        assert letters
        assert letters[0] != -letters[-1]


def test_presentation_G1():
    p = presentation_G(full_factorization(6))
    g1 = presentation_G1(p)
    assert g1.stage is Stage.G1
    assert len(g1) == len(p) + 10
    assert g1.relators[-1] == FreeWord((10, 10))
    assert g1.provenance[-10:] == (SQUARE_TAG,) * 10
    with pytest.raises(InvalidArgumentError):
        presentation_G1(g1)


def test_calibration_matches_every_family():
    results = calibrate(presentation_G(full_factorization(6)))
    assert list(results) == list(relation_families(6))
    assert all(results.values())


def test_every_generated_relator_is_printed():
    p = presentation_G(full_factorization(6))
    assert unmatched_relators(p) == []
    extra = GroupPresentation(p.generators, list(p.relators) + [FreeWord((1, 3))], p.stage, list(p.provenance) + ["extra"])
    assert [(index, tag) for index, tag, _ in unmatched_relators(extra)] == [(len(p), "extra")]


def test_default_convention_misses_the_cusp():
    p = presentation_G(full_factorization(6), ActionConvention.DEFAULT)
    assert not calibrate(p)['cusp_M5']


def test_relation_families_only_for_six_planes():
    with pytest.raises(InvalidArgumentError):
        relation_families(5)


def test_parse_relation():
    assert parse_relation("[3,5]") == FreeWord((5, 9, -5, -9))
    assert parse_relation("<4,5>") == FreeWord((7, 9, 7, -9, -7, -9))
    assert parse_relation("1=1'") == FreeWord((1, -2))
    assert parse_relation("5'54'43'32'21'1") == projective_relator(5)
    assert parse_relation("[4'434^{-1}{4'}^{-1},5^{-1}5'5]") == parse_relation("[4'434^{-1}{4'}^{-1}, 5^{-1}5'5]")


def test_parse_relation_needs_two_words():
    with pytest.raises(InvalidArgumentError):
        parse_relation("[3 5]")


def test_json_export():
    p = presentation_G1(presentation_G(full_factorization(4)))
    payload = json.loads(presentation_to_json(p))
    assert payload == presentation_to_dict(p)
    assert payload['stage'] == 'G1'
    assert payload['gens'] == ["1", "1'", "2", "2'", "3", "3'"]
    assert payload['relators'][0] == {'tag': 'vertex:branch', 'word': "1 1'^-1"}
    assert payload['relators'][-1] == {'tag': SQUARE_TAG, 'word': "3' 3'"}


def test_relators_map_to_identity_under_edge_homomorphism():
    for k in range(4, 11):
        p = presentation_G1(presentation_G(full_factorization(k)))
        check = verify_homomorphism(p, edge_homomorphism(k))
        assert check.ok, check.failures


def test_parse_word_inside_relation():
    assert parse_relation("4^{-1}4'4") == parse_word("4^-1 4' 4")
