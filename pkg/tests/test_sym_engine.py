import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genpal.core import Text
from genpal.encodings import ComplementMap, lpal, op_code, parent_distance, prev_encoding
from genpal.oracle import maximal_array_bruteforce, scsttr_equal
from genpal.rev_engine import scan_rev
from genpal.sym_engine import scan_sym, scan_sym_ct_inward, tokenizer_for

from conftest import SYM_COMBOS, complement_for_alphabet


def test_theta_sym_attgaat(wk_map):
    res = scan_sym(Text.from_str("ATTGAAT"), "theta", complement=wk_map)
    assert res.lengths[7] == 7
    assert res.direction == "outward"


def test_param_sym_cacb():
    res = scan_sym(Text.from_str("CACB"), "param")
    assert res.lengths.lengths == (1, 2, 3, 4, 3, 2, 1)


def test_op_sym_three_distinct():
    # one-symbol arms always order-preserving match
    assert scan_sym(Text.from_str("xyz"), "op").lengths[3] == 3


def test_ct_inward_outward_baaabb():
    text = Text.from_str("baaabb")
    assert scan_sym_ct_inward(text).lengths[6] == 2
    assert scan_sym(text, "ct", "outward").lengths[6] == 6
    assert scan_sym(text, "ct", "inward").lengths.lengths == scan_sym_ct_inward(
        text
    ).lengths.lengths


def test_direction_validation():
    with pytest.raises(ValueError):
        scan_sym(Text.from_str("ab"), "param", "inward")
    with pytest.raises(ValueError):
        scan_sym(Text.from_str("ab"), "exact", "sideways")
    with pytest.raises(ValueError):
        scan_sym(Text.from_str("ab"), "nope")


def _stream(tok, symbols):
    return [tok.append(s) for s in symbols]


def test_tokenizer_streams_match_encodings():
    param_text = Text.from_str("aabaCbC", static_chars="C")
    tok = tokenizer_for("param", param_text)
    assert tuple(_stream(tok, param_text.symbols)) == prev_encoding(param_text).values

    ct_text = Text.from_str("cabdcf")
    assert tuple(_stream(tokenizer_for("ct", ct_text), ct_text.symbols)) == (
        parent_distance(ct_text).values
    )

    pal_text = Text.from_str("aabacdca")
    assert tuple(_stream(tokenizer_for("palstruct", pal_text), pal_text.symbols)) == (
        lpal(pal_text).values
    )

    op_text = Text.from_str("cecag")
    assert tuple(_stream(tokenizer_for("op", op_text), op_text.symbols)) == (
        op_code(op_text).pairs
    )


def test_theta_tokenizer_sides(wk_map):
    text = Text.from_str("ACGT")
    left = tokenizer_for("theta", text, complement=wk_map, side="left")
    right = tokenizer_for("theta", text, complement=wk_map, side="right")
    assert _stream(left, text.symbols) == list(map(ord, "TGCA"))
    assert _stream(right, text.symbols) == list(text.symbols)


@settings(max_examples=80)
@given(
    st.sampled_from(("param", "op", "ct", "palstruct")),
    st.lists(st.integers(min_value=0, max_value=3), min_size=0, max_size=12),
    st.lists(st.integers(min_value=0, max_value=3), min_size=0, max_size=12),
)
def test_tokenizer_soundness(model, a, b):
    """Pointwise token equality after k appends iff the k-prefixes match."""
    a, b = tuple(a), tuple(b)
    k = min(len(a), len(b))
    ta = tokenizer_for(model, Text.from_tokens(a))
    tb = tokenizer_for(model, Text.from_tokens(b))
    agree = 0
    while agree < k and ta.append(a[agree]) == tb.append(b[agree]):
        agree += 1
    for prefix in range(k + 1):
        assert scsttr_equal(a[:prefix], b[:prefix], model) == (prefix <= agree)


@given(st.lists(st.integers(min_value=0, max_value=3), max_size=48))
def test_exact_sym_equals_exact_rev(seq):
    text = Text.from_tokens(seq)
    assert scan_sym(text, "exact").lengths.lengths == scan_rev(text, "exact").lengths


@settings(max_examples=100)
@given(
    st.sampled_from(SYM_COMBOS),
    st.integers(min_value=1, max_value=4),
    st.lists(st.integers(min_value=0, max_value=25), max_size=16),
)
def test_scan_sym_matches_oracle(combo, alphabet, seq):
    model, direction = combo
    seq = tuple(v % alphabet for v in seq)
    cmap = complement_for_alphabet(alphabet) if model == "theta" else None
    kwargs = {"complement": cmap} if cmap else {}
    res = scan_sym(Text.from_tokens(seq), model, direction, complement=cmap)
    assert list(res.lengths.lengths) == maximal_array_bruteforce(
        seq, model, "sym", direction, **kwargs
    )


@settings(max_examples=60)
@given(st.lists(st.integers(min_value=0, max_value=2), max_size=14))
def test_rev_dominated_by_sym(seq):
    """A rev-palindrome window is a sym-palindrome too (inward form for ct)."""
    text = Text.from_tokens(seq)
    cmap = complement_for_alphabet(3)
    for model, direction in SYM_COMBOS:
        if model == "ct" and direction == "outward":
            continue
        cm = cmap if model == "theta" else None
        rev = scan_rev(text, model, complement=cm).lengths
        sym = scan_sym(text, model, direction, complement=cm).lengths.lengths
        assert all(r <= s for r, s in zip(rev, sym)), (model, direction)


def test_boundary_clamps():
    res = scan_sym(Text.from_str("ab"), "param")
    assert res.lengths.lengths == (1, 2, 1)
    assert scan_sym(Text.from_str(""), "ct", "inward").lengths.lengths == ()
    assert scan_sym(Text.from_str("z"), "palstruct").lengths.lengths == (1,)
