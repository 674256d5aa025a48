import random

import pytest

from src.galoiscover.core import AmbientMismatchError, InvalidArgumentError
from src.galoiscover.free_groups import (
    FreeWord, GeneratorSymbol, canonical_cyclic, commutator, cyclically_reduce, format_word,
    free_reduce, identify_pairs, paper_equal, parse_word, substitute, triple,
)


def random_letters(rng, generators, length):
    return [rng.choice([1, -1]) * rng.randint(1, generators) for _ in range(length)]


def test_generator_positions():
    assert GeneratorSymbol(1).position == 1
    assert GeneratorSymbol(1, True).position == 2
    assert GeneratorSymbol(5, True).position == 10
    assert GeneratorSymbol.from_position(7) == GeneratorSymbol(4)
    assert GeneratorSymbol.from_position(8).name == "4'"


def test_generator_index_starts_at_one():
    with pytest.raises(InvalidArgumentError):
        GeneratorSymbol(0)


def test_multiply_by_inverse_is_empty():
    u = parse_word("2'21'")
    assert len(u * ~u) == 0
    assert not (u * ~u)


def test_multiply_empty_word():
    v = parse_word("4 5^-1")
    assert FreeWord() * v == v


def test_multiply_cancels():
    assert parse_word("2'21'") * parse_word("1'^-1") == parse_word("2'2")


def test_multiply_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        FreeWord((1,), ambient_lines=1) * FreeWord((1,), ambient_lines=2)


def test_word_outside_ambient_lines():
    with pytest.raises(InvalidArgumentError):
        FreeWord((5,), ambient_lines=2)


def test_substitute_identity():
    w = parse_word("54'454^{-1}{4'}^{-1}5^{-1}")
    assert substitute(w, {}) == w


def test_substitute_conjugate():
    phi = {GeneratorSymbol(3): parse_word("434^{-1}")}
    assert substitute(parse_word("3"), phi) == parse_word("4 3 4^-1")


def test_substitute_cancelling_word():
    phi = {GeneratorSymbol(3): parse_word("434^{-1}")}
    assert len(substitute(FreeWord((5, -5)), phi)) == 0


def test_substitute_is_a_homomorphism():
    rng = random.Random(7)
    for _ in range(50):
        phi = {position: FreeWord(random_letters(rng, 6, 3)) for position in range(1, 7)}
        u = FreeWord(random_letters(rng, 6, 8))
        v = FreeWord(random_letters(rng, 6, 8))
        assert substitute(u * v, phi) == substitute(u, phi) * substitute(v, phi)


def test_reduction_is_confluent():
    rng = random.Random(11)
    for _ in range(50):
        base = free_reduce(random_letters(rng, 8, 12))
        letters = list(base)
        for _ in range(6):
            position = rng.randint(0, len(letters))
            letter = rng.choice([1, -1]) * rng.randint(1, 8)
            letters[position:position] = [letter, -letter]
        assert free_reduce(letters) == base


def test_cyclically_reduce():
    assert cyclically_reduce(FreeWord((1, 3, -1))) == FreeWord((3,))
    assert cyclically_reduce(FreeWord()) == FreeWord()


def test_cyclically_reduce_is_idempotent():
    rng = random.Random(3)
    for _ in range(50):
        w = FreeWord(random_letters(rng, 4, 10))
        once = cyclically_reduce(w)
        assert cyclically_reduce(once) == once
        assert len(once) <= len(w)


def test_conjugated_relator_keeps_its_cyclic_class():
    relator = triple(parse_word("4"), parse_word("5"))
    x = parse_word("4")
    assert paper_equal(x * relator * ~x, relator)


def test_paper_equal_up_to_inversion():
    relator = parse_word("5'54'43'32'21'1")
    assert paper_equal(relator, ~relator)
    assert not paper_equal(relator, parse_word("5 5'"))


def test_canonical_cyclic_of_rotations():
    letters = (1, 3, -5, 7)
    assert canonical_cyclic(letters) == canonical_cyclic(letters[2:] + letters[:2])


def test_identify_pairs():
    assert identify_pairs(parse_word("1'2 3'^-1")) == FreeWord((1, 3, -5))
    assert paper_equal(parse_word("1'2"), parse_word("1 2"), identified=True)
    assert not paper_equal(parse_word("1'2"), parse_word("1 2"))


def test_commutator_and_triple():
    a, b = parse_word("1"), parse_word("2")
    assert commutator(a, b) == FreeWord((1, 3, -1, -3))
    assert triple(a, b) == FreeWord((1, 3, 1, -3, -1, -3))


def test_format_word():
    assert format_word(parse_word("4 5^-1 4'")) == "4 5^-1 4'"
    assert format_word(FreeWord()) == ""


def test_parse_compact_form():
    assert parse_word("5'54'43'32'21'1").letters == (10, 9, 8, 7, 6, 5, 4, 3, 2, 1)
    assert parse_word("4^{-1}4'4").letters == (-7, 8, 7)
    assert parse_word("{4'}^{-1}").letters == (-8,)


def test_parse_single_generator_with_two_digits():
    assert parse_word("10").letters == (19,)
    assert parse_word("12'^-1").letters == (-24,)
    assert parse_word(format_word(FreeWord((19,)))) == FreeWord((19,))
    assert parse_word("12", ambient_lines=5).letters == (1, 3)


def test_parse_identity():
    assert parse_word("e") == FreeWord()
    assert parse_word("") == FreeWord()


def test_parse_rejects_garbage():
    with pytest.raises(InvalidArgumentError):
        parse_word("4 x")
