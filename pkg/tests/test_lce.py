import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genpal.core import Text
from genpal.encodings import ComplementMap
from genpal.lce import (
    LceIndex,
    OutwardLce,
    _BlockRmq,
    _suffix_array_doubling,
    _suffix_array_small,
    outward_lce_theta,
)


def _naive_lce(seq, p, q):
    n = len(seq)
    k = 0
    while p + k <= n and q + k <= n and seq[p + k - 1] == seq[q + k - 1]:
        k += 1
    return k


def test_banana_suffix_order():
    idx = LceIndex.build(map(ord, "banana"))
    # a, ana, anana, banana, na, nana
    assert idx.suffix_array == [5, 3, 1, 0, 4, 2]
    assert idx.lce(2, 4) == 3
    assert idx.lce(1, 2) == 0
    assert idx.lce(3, 3) == 4


def test_empty_index_answers_zero():
    idx = LceIndex.build([])
    assert idx.lce(1, 1) == 0
    assert idx.lce(3, 9) == 0


def test_lce_out_of_range_raises():
    idx = LceIndex.build([1, 2, 3])
    with pytest.raises(IndexError):
        idx.lce(0, 2)
    with pytest.raises(IndexError):
        idx.lce(1, 4)


def test_unary_lcp_array():
    idx = LceIndex.build(map(ord, "aaaa"))
    assert idx.lcp_array == [0, 1, 2, 3]


@given(st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=60), st.data())
def test_lce_matches_naive_scan(seq, data):
    idx = LceIndex.build(seq)
    p = data.draw(st.integers(min_value=1, max_value=len(seq)))
    q = data.draw(st.integers(min_value=1, max_value=len(seq)))
    assert idx.lce(p, q) == _naive_lce(seq, p, q)


@settings(max_examples=30)
@given(st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=200))
def test_doubling_suffix_array_matches_sort(seq):
    assert _suffix_array_doubling(seq) == _suffix_array_small(seq)


def test_lce_random_large_text():
    rng = np.random.default_rng(12345)
    seq = rng.integers(0, 4, size=10_000).tolist()
    idx = LceIndex.build(seq)
    for p, q in rng.integers(1, 10_001, size=(10_000, 2)).tolist():
        assert idx.lce(p, q) == _naive_lce(seq, p, q)


@given(
    st.lists(st.integers(min_value=0, max_value=100), min_size=1, max_size=300),
    st.data(),
)
def test_block_rmq_matches_min(data_list, data):
    rmq = _BlockRmq(data_list)
    a = data.draw(st.integers(min_value=0, max_value=len(data_list) - 1))
    b = data.draw(st.integers(min_value=a, max_value=len(data_list) - 1))
    assert rmq.query(a, b) == min(data_list[a : b + 1])


def test_build_parts_blocks_cross_part_matches():
    idx, offsets = LceIndex.build_parts([1, 2, 3], [1, 2, 3])
    assert offsets == [1, 5]
    # identical content, but the separators stop any common extension at 3
    assert idx.lce(offsets[0], offsets[1]) == 3
    assert idx.lce(offsets[0] + 1, offsets[1] + 1) == 2


def test_outward_lce_theta_paper_example(wk_map):
    text = Text.from_str("ATTGAAT")
    assert outward_lce_theta(text, wk_map, 7) == 3  # integer center 4, length 7


def test_outward_lce_theta_half_center(wk_map):
    # f(rev("AC")) = "GT": the whole string pairs around center 2.5
    assert outward_lce_theta(Text.from_str("ACGT"), wk_map, 4) == 2


@given(st.text(alphabet="ab", max_size=32))
def test_outward_identity_reduces_to_exact(s):
    text = Text.from_str(s)
    n = len(s)
    identity = OutwardLce(text, None)
    theta_id = OutwardLce(text, ComplementMap.identity())
    for t in range(1, 2 * n):
        arm = identity.arm(t)
        assert arm == theta_id.arm(t)
        # maximality: matching up to arm, mismatch or boundary after
        if t % 2:
            c = (t + 1) // 2
            left, right = c - 1, c + 1
        else:
            left, right = t // 2, t // 2 + 1
        for r in range(1, arm + 1):
            assert s[left - r] == s[right + r - 2]
        if left - arm >= 1 and right + arm <= n:
            assert s[left - arm - 1] != s[right + arm - 1]
