import random

import pytest
from sympy.combinatorics import Permutation

from src.galoiscover.braids import (
    ActionConvention, BraidWord, HalfTwistLetter, Side, StrandLabel, action, act_on_word, conjugate,
    half_twist, invert, parse_braid_word, parse_letter, power, underlying_permutation,
)
from src.galoiscover.core import AmbientMismatchError, InvalidArgumentError
from src.galoiscover.free_groups import FreeWord, parse_word
from src.galoiscover.monodromy import pair_twist


def random_braid(rng, lines, length):
    letters = []
    for _ in range(length):
        a, b = rng.sample(range(1, 2 * lines + 1), 2)
        side = Side.ABOVE if rng.random() < 0.2 else Side.BELOW
        letters.append(HalfTwistLetter(StrandLabel.from_position(a), StrandLabel.from_position(b), side, rng.choice([1, -1])))
    return BraidWord(letters, ambient_lines=lines)


def test_half_twist_adjacent_pair():
    word = half_twist("1", "1'")
    assert len(word) == 1
    letter = word.letters[0]
    assert (letter.p, letter.q, letter.side, letter.sign) == (1, 2, Side.BELOW, 1)


def test_half_twist_normalizes_operands():
    letter = half_twist("5", "4").letters[0]
    assert letter.a == StrandLabel(4) and letter.b == StrandLabel(5)
    assert str(letter) == "Z(4,5)"


def test_half_twist_above():
    letter = half_twist("4'", "5", side='above').letters[0]
    assert letter.side is Side.ABOVE
    assert str(letter) == "Zbar(4',5)"


def test_half_twist_errors():
    with pytest.raises(InvalidArgumentError):
        half_twist("3", "3")
    with pytest.raises(InvalidArgumentError):
        half_twist("4", "5", ambient_lines=3)


def test_parse_letter():
    assert parse_letter("Z(4',5)^-1") == HalfTwistLetter(StrandLabel(4, True), StrandLabel(5), Side.BELOW, -1)
    assert parse_letter("Zbar(1,5')").side is Side.ABOVE
    with pytest.raises(InvalidArgumentError):
        parse_letter("Y(1,2)")


def test_parse_braid_word():
    word = parse_braid_word("Z(4',5),Z(4',5),Z(4,5),Z(4,5)", ambient_lines=5)
    assert word == pair_twist("5", 4, ambient_lines=5)
    assert parse_braid_word("e", ambient_lines=5) == BraidWord((), ambient_lines=5)


def test_conjugate_trivial_cases():
    rng = random.Random(1)
    w = random_braid(rng, 3, 5)
    empty = BraidWord((), ambient_lines=3)
    assert conjugate(w, empty) == w
    assert conjugate(empty, w) == empty


def test_conjugate_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        conjugate(half_twist("1", "2", ambient_lines=2), half_twist("1", "2", ambient_lines=3))


def test_invert_and_power():
    rng = random.Random(2)
    w = random_braid(rng, 4, 6)
    assert invert(invert(w)) == w
    z = half_twist("4", "5")
    assert power(z, 3).letters == z.letters * 3
    assert power(w, 0) == BraidWord((), ambient_lines=4)
    assert power(w, 2).exponent_sum() == 2 * w.exponent_sum()


def test_action_of_empty_braid():
    assert action(BraidWord((), ambient_lines=4)).is_identity()


def test_action_then_inverse_is_identity():
    rng = random.Random(5)
    for _ in range(40):
        c = random_braid(rng, rng.randint(1, 4), rng.randint(1, 6))
        assert action(c).then(action(invert(c))).is_identity()
        assert action(c).inverse() == action(invert(c))


def test_action_is_a_homomorphism():
    rng = random.Random(6)
    for _ in range(30):
        c1 = random_braid(rng, 3, 4)
        c2 = random_braid(rng, 3, 4)
        assert action(c1 * c2) == action(c1).then(action(c2))


def test_default_convention_inverts_too():
    rng = random.Random(8)
    for _ in range(20):
        c = random_braid(rng, 3, 5)
        phi = action(c, ActionConvention.DEFAULT)
        assert phi.then(action(invert(c), ActionConvention.DEFAULT)).is_identity()


def test_images_are_conjugates_of_generators():
    rng = random.Random(9)
    for _ in range(30):
        c = random_braid(rng, 3, 6)
        phi = action(c)
        for position in range(1, 7):
            w, y = phi.conjugated_generator(position)
            assert phi[position] == w * FreeWord((y,)) * ~w


def test_underlying_permutation_matches_action():
    rng = random.Random(10)
    for _ in range(40):
        lines = rng.randint(1, 4)
        c = random_braid(rng, lines, rng.randint(0, 8))
        assert underlying_permutation(c) == action(c).permutation()


def test_underlying_permutation_examples():
    assert underlying_permutation(BraidWord((), ambient_lines=2)).is_Identity
    assert underlying_permutation(half_twist("1", "1'")) == Permutation([[0, 1]], size=2)
    assert underlying_permutation(pair_twist("5", 4, ambient_lines=5)).is_Identity


def test_half_twist_fixes_outside_generators():
    for convention in ActionConvention:
        phi = action(half_twist("2", "3'", ambient_lines=4), convention)
        for position in (1, 2, 7, 8):
            assert phi[position] == FreeWord((position,))


def test_full_twist_around_pair_conjugates():
    phi = action(pair_twist("5", 4, ambient_lines=5))
    assert phi[9] == parse_word("54'454^{-1}{4'}^{-1}5^{-1}")
    assert phi[10] == FreeWord((10,))
    for position in range(1, 7):
        assert phi[position] == FreeWord((position,))


def test_square_acts_by_conjugation():
    phi = action(power(half_twist("2", "3"), 2))
    conjugator = FreeWord((5, 3))
    assert phi[3] == conjugator * FreeWord((3,)) * ~conjugator
    assert phi[5] == conjugator * FreeWord((5,)) * ~conjugator


def test_act_on_word():
    w = act_on_word(half_twist("4", "4'", ambient_lines=5), parse_word("4 5"))
    assert w == parse_word("4' 5")


def test_by_name():
    names = action(half_twist("1", "1'")).by_name()
    assert names == {"1": "1'", "1'": "1' 1 1'^-1"}
