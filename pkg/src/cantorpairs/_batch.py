"""Compiled bulk evaluation of the pair invariant over all short q-words.

Words are encoded as integers with the first bit at position 15, so any word
of up to 16 bits fits a machine word and the first-disagreement tests become
xor/mask/table-lookup arithmetic.  The kernel mirrors the case dispatcher in
`oscillation._dispatch` step for step and counts pairs where the number of
matching cases differs from one.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

from .oscillation import q_words_upto
from .words import is_q

# bit_length of every 16-bit value, for O(1) first-disagreement positions
_BIT_LENGTH = np.zeros(1 << 16, dtype=np.uint8)
for _v in range(1, 1 << 16):
    _BIT_LENGTH[_v] = _v.bit_length()


def _word_arrays(max_len: int):
    words = q_words_upto(max_len)
    index = {w: i for i, w in enumerate(words)}

    def pred_id(w: str) -> int:
        for l in range(len(w) - 1, -1, -1):
            if is_q(w[:l]):
                return index[w[:l]]
        return -1

    lengths = np.array([len(w) for w in words], dtype=np.int64)
    preds = np.array([pred_id(w) if w else -1 for w in words], dtype=np.int64)
    bits = np.array(
        [sum(1 << (15 - i) for i, c in enumerate(w) if c == "1") for w in words],
        dtype=np.int64,
    )
    starts = np.zeros(max_len + 2, dtype=np.int64)
    for m in range(max_len + 2):
        starts[m] = next((i for i, w in enumerate(words) if len(w) >= m), len(words))
    return lengths, preds, bits, starts


@njit(cache=True, inline="always")
def _first_low(bits_a, len_a, bits_b, len_b, blt):
    """(disagreement below min length exists, a-bit is 0 there)."""
    min_len = len_a if len_a < len_b else len_b
    if min_len <= 0:
        return False, False
    x = (bits_a ^ bits_b) & (0xFFFF & ~((1 << (16 - min_len)) - 1))
    if x == 0:
        return False, False
    top = blt[x]
    return True, (bits_a >> (top - 1)) & 1 == 0


@njit(cache=True, inline="always")
def _lex_less(bits_a, len_a, bits_b, len_b, blt):
    has, a_low = _first_low(bits_a, len_a, bits_b, len_b, blt)
    if has:
        return a_low
    return len_a < len_b


@njit(cache=True, inline="always")
def _step(a, b, lengths, preds, bits, blt):
    """(match count, reduced a, reduced b, increment) for distinct word ids."""
    la = lengths[a]
    lb = lengths[b]
    pa = preds[a]
    pb = preds[b]
    n = 0
    ra = np.int64(-1)
    rb = np.int64(-1)
    inc = np.int64(0)
    if pb >= 0:
        lpb = lengths[pb]
        _, perp = _first_low(bits[a], la, bits[pb], lpb, blt)
        if la < lpb or (la == lpb and perp):
            n += 1
            ra, rb, inc = a, pb, np.int64(0)
        if (la < lb and la > lpb) or (la == lpb and not perp):
            n += 1
            ra, rb, inc = a, pb, np.int64(1)
    if pa >= 0:
        lpa = lengths[pa]
        _, perp = _first_low(bits[b], lb, bits[pa], lpa, blt)
        if lb < lpa or (lb == lpa and perp):
            n += 1
            ra, rb, inc = pa, b, np.int64(0)
        if (lb < la and lb > lpa) or (lb == lpa and not perp):
            n += 1
            ra, rb, inc = pa, b, np.int64(1)
    if pa >= 0 and pb >= 0 and la == lb:
        lpa = lengths[pa]
        lpb = lengths[pb]
        pa_less = _lex_less(bits[pa], lpa, bits[pb], lpb, blt)
        pb_less = _lex_less(bits[pb], lpb, bits[pa], lpa, blt)
        if (lpa < lpb and pb_less) or (lpb < lpa and pa_less):
            n += 1
            ra, rb, inc = pa, pb, np.int64(1)
        if ((lpa < lpb and pa_less) or (lpb < lpa and pb_less)
                or (lpa == lpb and pa != pb)):
            n += 1
            ra, rb, inc = pa, pb, np.int64(2)
    return n, ra, rb, inc


@njit(cache=True, parallel=True)
def _sweep(lengths, preds, bits, starts, blt):
    n_words = lengths.shape[0]
    values = np.zeros((n_words, n_words), dtype=np.int8)
    bad = np.int64(0)
    max_len = starts.shape[0] - 2
    for m in range(1, max_len + 1):
        lo = starts[m]
        hi = starts[m + 1]
        # pairs whose longer word has length exactly m; shorter-max pairs are done
        for a in prange(hi):
            col_lo = np.int64(0) if a >= lo else lo
            for bcol in range(col_lo, hi):
                if a == bcol:
                    continue
                cnt, ra, rb, inc = _step(np.int64(a), np.int64(bcol),
                                         lengths, preds, bits, blt)
                if cnt != 1:
                    bad += 1
                else:
                    values[a, bcol] = values[ra, rb] + np.int8(inc)
    return values, bad


@njit(cache=True)
def _stats(values):
    """(symmetric, min off-diagonal value, max value) in one compiled pass."""
    n = values.shape[0]
    sym = True
    min_off = np.int64(127)
    max_val = np.int64(0)
    for a in range(n):
        row = values[a]
        for b in range(n):
            v = row[b]
            if v != values[b, a]:
                sym = False
            if a != b and v < min_off:
                min_off = v
            if v > max_val:
                max_val = v
    return sym, min_off, max_val


def sweep_values(max_len: int):
    """Invariant values for every ordered pair of q-words up to max_len bits.

    Returns (matrix, bad) where bad counts pairs whose dispatch was not
    single-case (always 0; a nonzero count is a defect).
    """
    if not 0 <= max_len <= 16:
        raise ValueError("bulk sweep supports word lengths up to 16 bits")
    lengths, preds, bits, starts = _word_arrays(max_len)
    values, bad = _sweep(lengths, preds, bits, starts, _BIT_LENGTH)
    return values, int(bad)


def sweep_report(max_len: int):
    """(values, bad, symmetric, min off-diagonal, max) for the full sweep."""
    values, bad = sweep_values(max_len)
    sym, min_off, max_val = _stats(values)
    return values, bad, bool(sym), int(min_off), int(max_val)
