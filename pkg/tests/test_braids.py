import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zvkpair.braids import (BraidWord, artin_action, artin_images, braids_equal, conjugate, shift, writhe)
from zvkpair.errors import IndexRangeError, SchemaError, StrandMismatchError
from zvkpair.monodromy import FIXTURE_NAMES, load_fixture
from zvkpair.words import Word

from conftest import braid_letters, words


def test_generator_action():
    s1 = BraidWord(3, (1,))
    assert artin_action(s1, Word((1,))).letters == (2,)
    assert artin_action(s1, Word((2,))).letters == (2, 1, -2)
    assert artin_action(s1, Word((3,))).letters == (3,)
    inv = s1.inverse()
    assert artin_action(inv, Word((1,))).letters == (-1, 2, 1)
    assert artin_action(inv, Word((2,))).letters == (1,)


def test_relations_and_inequality():
    assert braids_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert braids_equal(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))
    assert not braids_equal(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))
    assert not braids_equal(BraidWord(2, (1, 1)), BraidWord(2))


def test_errors():
    with pytest.raises(IndexRangeError):
        BraidWord(3, (3,))
    with pytest.raises(IndexRangeError):
        BraidWord(1)
    with pytest.raises(StrandMismatchError):
        BraidWord(3) * BraidWord(4)
    with pytest.raises(IndexRangeError):
        artin_action(BraidWord(3, (1,)), Word((4,)))
    with pytest.raises(SchemaError):
        BraidWord.from_json({"strands": 3})


def test_shift():
    assert shift(BraidWord(4, (1, -3)), 1, 6).letters == (2, -4)
    with pytest.raises(IndexRangeError):
        shift(BraidWord(4, (3,)), 2, 5)


def _insert(letters, pos, piece):
    pos = pos % (len(letters) + 1)
    return tuple(letters[:pos]) + piece + tuple(letters[pos:])


@settings(max_examples=1000)
@given(braid_letters(5), st.integers(0, 20), st.integers(1, 3), st.sampled_from(["braid", "far", "free"]))
def test_braid_relations_act_trivially(letters, pos, i, kind):
    # inserting a relator of B_5 never changes the automorphism
    if kind == "braid":
        piece = (i, i + 1, i, -(i + 1), -i, -(i + 1))
    elif kind == "far":
        piece = (i, i + 2, -i, -(i + 2)) if i + 2 <= 4 else (1, 4, -1, -4)
    else:
        piece = (i, -i)
    a = BraidWord(5, tuple(letters))
    b = BraidWord(5, _insert(letters, pos, piece))
    assert braids_equal(a, b)


@settings(max_examples=1000)
@given(braid_letters(5))
def test_descending_product_fixed(letters):
    b = BraidWord(5, tuple(letters))
    top = Word((5, 4, 3, 2, 1))
    assert artin_action(b, top) == top


@settings(max_examples=1000)
@given(braid_letters(4, 6), braid_letters(4, 6), words(4, 8))
def test_action_is_a_right_action(x, y, w):
    a, b, w = BraidWord(4, tuple(x)), BraidWord(4, tuple(y)), Word(tuple(w))
    assert artin_action(a * b, w) == artin_action(b, artin_action(a, w))


@settings(max_examples=1000)
@given(braid_letters(4, 8), st.sampled_from([n for n in FIXTURE_NAMES]), st.integers(0, 5))
def test_writhe_conjugation_invariant(letters, name, j):
    mp = load_fixture(name)
    target = mp.braids[j % len(mp.braids)]
    c = BraidWord(mp.strands, tuple(x for x in letters if abs(x) < mp.strands))
    assert writhe(conjugate(c, target)) == writhe(target)


def test_images_are_automorphisms_of_small_words():
    b = BraidWord(4, (1, -2, 3, 3))
    back = b.inverse()
    for i in range(1, 5):
        assert artin_action(back, Word(artin_images(b)[i - 1])) == Word((i,))
