"""Signed indices and interleaving signs."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pfaffkit.indexing import (
    IndexSet,
    complement_sign,
    position,
    signed_value,
    split_sign,
)


def test_position_layout():
    # positive labels first, then negatives in reverse: 1..n, -n..-1
    assert [position(v, 2) for v in (1, 2, -2, -1)] == [1, 2, 3, 4]
    assert [position(v, 3) for v in (1, 2, 3, -3, -2, -1)] == [1, 2, 3, 4, 5, 6]


def test_position_roundtrip():
    for n in (1, 2, 3, 5):
        for pos in range(1, 2 * n + 1):
            assert position(signed_value(pos, n), n) == pos


def test_position_rejects_zero():
    with pytest.raises(ValueError):
        position(0, 3)
    with pytest.raises(ValueError):
        position(4, 3)


def test_split_sign_goldens():
    assert split_sign((1, 2, 3), (2,), (1, 3)) == -1
    assert split_sign((1, 2, 3, 4), (2, 4), (1, 3)) == -1
    assert split_sign((1, 2, 3, 4), (1, 2), (3, 4)) == 1
    assert split_sign((), (), ()) == 1


def test_split_sign_validates():
    with pytest.raises(ValueError):
        split_sign((1, 2, 3), (1,), (2,))  # union too small
    with pytest.raises(ValueError):
        split_sign((1, 2), (1, 2), (2,))


def _perm_sign(seq):
    s = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


def test_split_sign_matches_permutation_oracle():
    # sign of rearranging `whole` into left followed by right
    for n in range(1, 7):
        whole = tuple(range(1, n + 1))
        for k in range(n + 1):
            for left in combinations(whole, k):
                right = tuple(v for v in whole if v not in left)
                assert split_sign(whole, left, right) == _perm_sign(left + right)


def test_complement_sign_is_split_with_complement_first():
    universe = (1, 2, 3, 4, 5, 6)
    for k in range(7):
        for part in combinations(universe, k):
            rest = tuple(v for v in universe if v not in part)
            assert complement_sign(part, universe) == split_sign(universe, rest, part)


def test_index_set_complement():
    s = IndexSet((2, 4), (1, 2, 3, 4))
    assert s.complement().elements == (1, 3)
    assert s.split_sign_with(s.complement()) in (-1, 1)


@given(st.integers(min_value=1, max_value=6), st.data())
@settings(max_examples=80, deadline=None)
def test_split_sign_multiplicativity(n, data):
    # merging in two stages gives the same sign as one stage
    whole = tuple(range(1, n + 1))
    left = tuple(sorted(data.draw(st.sets(st.sampled_from(whole), max_size=n))))
    right = tuple(v for v in whole if v not in left)
    assert split_sign(whole, left, right) * split_sign(whole, left, right) == 1
    assert split_sign(whole, left, right) == _perm_sign(left + right)
