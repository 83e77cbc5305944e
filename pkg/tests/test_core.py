import pytest
from hypothesis import given
from hypothesis import strategies as st

from genpal.core import (
    CenterArray,
    Text,
    Window,
    as_symbols,
    center_count,
    empty_window_at,
    mirror_center,
    rank_compress,
    window_of,
)

from conftest import all_strings


def test_window_of_examples():
    assert window_of(3, 3, 5) == Window(1, 3)
    assert window_of(4, 0, 5) == Window(3, 2)
    assert window_of(7, 3, 5) == Window(3, 5)


def test_window_of_rejects_bad_inputs():
    with pytest.raises(ValueError):
        window_of(3, 4, 5)  # parity mismatch
    with pytest.raises(ValueError):
        window_of(3, 0, 5)  # no length-0 window at an integer center
    with pytest.raises(ValueError):
        window_of(3, 7, 5)  # sticks out of the text
    with pytest.raises(ValueError):
        window_of(12, 1, 5)  # center out of range


def test_empty_window_convention():
    # start = floor(c) + 1, end = floor(c), at both parities
    assert empty_window_at(4) == Window(3, 2)
    assert empty_window_at(5) == Window(4, 3)


def test_mirror_center_examples():
    assert mirror_center(9, 11) == 7
    assert mirror_center(5, 9) == 1
    with pytest.raises(ValueError):
        mirror_center(9, 9)
    with pytest.raises(ValueError):
        mirror_center(2, 9)


def test_rank_compress_examples():
    assert rank_compress([10, 3, 10, 7]).symbols == (2, 0, 2, 1)
    assert rank_compress([]).symbols == ()
    assert rank_compress([5, 5, 5]).symbols == (0, 0, 0)


def test_rank_compress_preserves_relations_exhaustively():
    for seq in all_strings(3, 5):
        ranks = rank_compress(seq).symbols
        for a in range(len(seq)):
            for b in range(len(seq)):
                assert (seq[a] <= seq[b]) == (ranks[a] <= ranks[b])


@given(st.lists(st.integers(min_value=-(10**9), max_value=10**9), max_size=8))
def test_rank_compress_preserves_relations(values):
    shifted = [v + 10**9 for v in values]  # Text requires non-negative symbols
    ranks = rank_compress(shifted).symbols
    for a in range(len(shifted)):
        for b in range(len(shifted)):
            assert (shifted[a] <= shifted[b]) == (ranks[a] <= ranks[b])


@given(st.integers(min_value=1, max_value=30), st.data())
def test_center_window_round_trip(n, data):
    t = data.draw(st.integers(min_value=1, max_value=center_count(n)))
    if t % 2:
        c = (t + 1) // 2
        max_len = 2 * min(c - 1, n - c) + 1
        length = data.draw(st.sampled_from(range(1, max_len + 1, 2)))
    else:
        k = t // 2
        max_len = 2 * min(k, n - k)
        length = data.draw(st.sampled_from(range(0, max_len + 1, 2)))
    w = window_of(t, length, n)
    assert w.length == length
    assert 1 <= w.i and w.j <= n
    if length:
        assert w.center2 == t


def test_text_alphabet_counts():
    t = Text.from_str("aabaCbC", static_chars="C")
    assert t.sigma == 1 and t.pi == 2
    assert Text.from_str("xyz").pi == 3
    assert as_symbols("ab") == (97, 98)
    assert as_symbols(b"\x00\x01") == (0, 1)
    assert as_symbols([3, 4]) == (3, 4)


def test_center_array_accessors():
    arr = CenterArray(n=3, lengths=(1, 0, 3, 0, 1))
    assert arr[3] == 3
    assert arr.window(3) == Window(1, 3)
    assert arr.window(2) == Window(2, 1)  # empty convention
    arr.validate()
    with pytest.raises(ValueError):
        CenterArray(n=3, lengths=(1, 0, 2, 0, 1)).validate()
    with pytest.raises(ValueError):
        CenterArray(n=2, lengths=(1,))
