# encoding: utf-8


from __future__ import division, print_function

import pytest as pt
from hypothesis import given
from hypothesis import strategies as st

from sysgeom.words import (HomotopyWord, cyclic_reduce, free_reduce,
                           is_admissible)


letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12)


def test_reductions():
    assert free_reduce([1, -1]) == []
    assert free_reduce([1, 2, -2, 2]) == [1, 2]
    assert cyclic_reduce([2, 1, 3, -2]) == [1, 3]
    assert cyclic_reduce([1, -1, 2]) == [2]


def test_last_letter_substitution():
    assert HomotopyWord([3], 3).letters == (-2, -1)
    assert HomotopyWord([-3], 3).letters == (1, 2)
    assert HomotopyWord([4, 1, 2, 3], 4).is_trivial
    with pt.raises(ValueError):
        HomotopyWord([4], 3)
    with pt.raises(ValueError):
        HomotopyWord([0], 3)


def test_equality_up_to_rotation():
    w = HomotopyWord([1, -2, 1], 3)
    assert w == HomotopyWord([-2, 1, 1], 3)
    assert hash(w) == hash(HomotopyWord([1, 1, -2], 3))
    assert w != HomotopyWord([1, -2, 1], 4)
    assert w.canonical() == (-2, 1, 1)
    assert str(HomotopyWord([1, -2], 3)) == 'a1 a2^-1'
    assert str(HomotopyWord([], 3)) == '1'


@pt.mark.parametrize('letters, k, admissible', [
    ([], 3, False),
    ([1], 3, False),
    ([-2, -2], 3, False),
    ([3], 3, False),
    ([1, 2], 3, False),
    ([2, 1], 3, False),
    ([1, 2, 1, 2], 3, False),
    ([-2, -1], 3, False),
    ([1, -2], 3, True),
    ([1, 2, -1, -2], 3, True),
    ([1, 1, 2], 3, True),
    ([1, 2], 4, True),
    ([4], 4, False),
    ([1, 2, 3], 4, False),
    ([1, -3], 4, True),
])
def test_admissible(letters, k, admissible):
    assert is_admissible(HomotopyWord(letters, k)) == admissible


@given(letters=letters)
def test_inverse(letters):
    w = HomotopyWord(letters, 3)
    assert w.inverse().inverse() == w
    assert is_admissible(w) == is_admissible(w.inverse())
    product = HomotopyWord(list(w.letters) + list(w.inverse().letters), 3)
    assert product.is_trivial


@given(letters=letters, shift=st.integers(min_value=0, max_value=12))
def test_rotation_invariance(letters, shift):
    w = HomotopyWord(letters, 4)
    n = max(len(w.letters), 1)
    rotated = w.letters[shift % n:] + w.letters[:shift % n]
    assert HomotopyWord(rotated, 4) == w
