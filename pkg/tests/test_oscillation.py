import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cantorpairs.oscillation import (
    SuffAssignment,
    SuffPreconditionError,
    exhaustive_check,
    invariant_i,
    invariant_table,
    osc,
    q_words_upto,
    suff_check,
)
from cantorpairs.words import q_normalize

q_words = st.one_of(st.just(""), st.text(alphabet="01", max_size=14).map(lambda w: w + "1"))


def test_base_values():
    assert invariant_i("", "") == 0
    assert invariant_i("", "1") == 1
    assert invariant_i("1", "01") == 2
    assert invariant_i("101", "111") == 3
    assert invariant_i("01", "101") == 3
    assert invariant_i("01", "111") == 3


def test_ladder_display_value_is_three_not_two():
    # The even-rung ladder pair (1101, 101) is sometimes quoted with value 2;
    # the recursion, the oscillation count, and the interleaving family (odd
    # case, one-bit blocks) all pin it to 3.
    assert invariant_i("1101", "101") == 3
    assert osc("1101", "101") == 3
    assert invariant_i(q_normalize("101"), q_normalize("1101")) == 3


def test_alternating_prefix_families():
    for k in range(0, 12):
        assert invariant_i(q_normalize("10" * k), q_normalize("01" * k)) == 2 * k
        assert invariant_i(q_normalize("01" * k), q_normalize("10" * (k + 1))) == 2 * k + 1


def test_interleaving_block_families():
    blocks = ["1", "11", "01", "101"]
    for t0, t1, t2, t3, t4 in itertools.product(blocks, repeat=5):
        z_even = q_normalize(t0 + t1)
        t_even = q_normalize(t0 + "0" * len(t1) + t2)
        assert invariant_i(z_even, t_even) == 2
        z_odd = q_normalize(t0 + "0" * len(t1) + t2)
        t_odd = q_normalize(t0 + t1 + "0" * len(t2) + t3)
        assert invariant_i(z_odd, t_odd) == 3
        z4 = q_normalize(t0 + t1 + "0" * len(t2) + t3)
        t4w = q_normalize(t0 + "0" * len(t1) + t2 + "0" * len(t3) + t4)
        assert invariant_i(z4, t4w) == 4


def test_symmetry_exhaustive_small():
    ws = q_words_upto(8)
    for a in ws:
        for b in ws:
            assert invariant_i(a, b) == invariant_i(b, a)


def test_positivity_on_distinct_pairs():
    ws = q_words_upto(8)
    values = {invariant_i(a, b) for a in ws for b in ws if a != b}
    assert min(values) == 1  # never zero off the diagonal, and one is attained


@given(q_words, q_words)
def test_symmetry_and_memo_consistency(z, t):
    shared = invariant_i(z, t)
    assert shared == invariant_i(t, z)
    assert shared == invariant_i(z, t, memo={})


def test_rejects_non_q_words():
    with pytest.raises(ValueError):
        invariant_i("10", "1")
    with pytest.raises(ValueError):
        invariant_i("1", "0")


def test_osc_examples():
    assert osc("101", "101") == 0
    assert osc("1", "01") == 2
    assert osc("1", "11") == 1


@given(st.text(alphabet="01", max_size=16), st.text(alphabet="01", max_size=16))
def test_osc_symmetric_and_zero_on_diagonal(z, t):
    assert osc(z, t) == osc(t, z)
    assert osc(z, z) == 0


def test_exhaustive_check_small():
    report = exhaustive_check(9)
    assert report.word_count == 256 * 2
    assert report.single_case
    assert report.symmetric
    assert report.min_distinct == 1


def test_batch_table_agrees_with_recursion_completely():
    # full agreement of the compiled sweep and the plain recursion on all
    # 65536 ordered pairs of q-words up to 8 bits
    ws, table = invariant_table(8)
    memo: dict = {}
    for i, a in enumerate(ws):
        for j, b in enumerate(ws):
            assert table[i, j] == invariant_i(a, b, memo=memo), (a, b)


def test_batch_table_agrees_with_recursion_sampled_deeper():
    ws, table = invariant_table(11)
    index = {w: i for i, w in enumerate(ws)}
    rng = random.Random(11)
    for _ in range(1500):
        a, b = rng.choice(ws), rng.choice(ws)
        assert table[index[a], index[b]] == invariant_i(a, b, memo={})


def test_q_words_upto_counts():
    assert len(q_words_upto(0)) == 1
    assert len(q_words_upto(3)) == 8
    assert len(q_words_upto(12)) == 4096
    ws = q_words_upto(5)
    assert ws == sorted(ws, key=lambda w: (len(w), w))


# ---------------------------------------------------------------------------
# substitution tables

def test_suff_check_passes_on_good_table():
    table = {"": "", "1": "1", "01": "011", "11": "1011"}
    assert suff_check(SuffAssignment(2, table)) is None


def test_suff_check_identity_table_precondition():
    table = {"": "", "1": "1", "01": "01", "11": "11"}
    with pytest.raises(SuffPreconditionError) as err:
        suff_check(SuffAssignment(2, table))
    assert err.value.clause == "a"


def test_suff_check_broken_prefix_precondition():
    table = {"": "", "1": "01", "01": "1011", "11": "00111"}
    with pytest.raises(SuffPreconditionError) as err:
        suff_check(SuffAssignment(2, table))
    assert err.value.clause == "b"


def test_suff_check_missing_entry_precondition():
    with pytest.raises(SuffPreconditionError):
        suff_check(SuffAssignment(2, {"": "", "1": "1"}))


def test_suff_check_reports_counterexample_on_sneaky_table():
    # Satisfies both declared invariants yet changes the invariant of (1, 01):
    # the declared conditions alone do not force preservation.
    table = {"": "1", "1": "101", "01": "1101", "11": "10101"}
    counter = suff_check(SuffAssignment(2, table))
    assert counter is not None
    assert (counter.z, counter.t) == ("1", "01")
    assert (counter.value, counter.substituted_value) == (2, 3)


def test_suff_check_passes_on_embedding_table():
    from cantorpairs.embed import build_embedding, h_preset

    scheme = build_embedding(h_preset("pf"), 3)
    assert suff_check(SuffAssignment(3, dict(scheme.s))) is None
