"""Finite binary words and eventually periodic points of the binary sequence space.

Words are plain strings over {'0','1'}.  A *q-word* is the canonical finite
name of an eventually-zero sequence: the empty word, or a word ending in '1'.
Points (infinite sequences) are kept in a canonical prefix/period form so that
equality, cylinder membership and the eventually-zero test are all decidable.

Everything here is immutable and side-effect free; values can be shared
freely between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm

WORD_CAP = 4096

PF = "Pf"
PINFTY = "Pinfty"

_POINT_RE = re.compile(r"^(e|[01]*)\(([01]+)\)$")


class WordCapExceeded(ValueError):
    """A word operation would produce more than WORD_CAP bits."""


def check_word(w: str) -> str:
    """Validate a word: only '0'/'1' characters, length within the cap."""
    if not isinstance(w, str) or (w and w.strip("01")):
        raise ValueError(f"not a binary word: {w!r}")
    if len(w) > WORD_CAP:
        raise WordCapExceeded(f"word of {len(w)} bits exceeds cap {WORD_CAP}")
    return w


def parse_word(text: str) -> str:
    """Parse the word grammar: a 0/1 string, with 'e' denoting the empty word."""
    if text == "e":
        return ""
    return check_word(text)


def render_word(w: str) -> str:
    """Inverse of parse_word ('e' for the empty word)."""
    return w if w else "e"


def is_q(w: str) -> bool:
    """True for q-words: empty or ending in '1'."""
    return w == "" or w.endswith("1")


def check_q(w: str) -> str:
    check_word(w)
    if not is_q(w):
        raise ValueError(f"not a q-word (must be empty or end in '1'): {w!r}")
    return w


def q_normalize(w: str) -> str:
    """Strip trailing zeros; the result names the same eventually-zero point."""
    check_word(w)
    return w.rstrip("0")


def le_l(s: str, t: str) -> bool:
    """Length-lexicographic order: shorter first, lexicographic among equals."""
    return (len(s), s) <= (len(t), t)


def lex_less(s: str, t: str) -> bool:
    """Strict lexicographic order on words; a strict prefix is strictly smaller."""
    return s < t


def b(n: int) -> str:
    """The n-th word in the length-lexicographic enumeration ('', '0', '1', '00', ...)."""
    if n < 0:
        raise ValueError("index must be a natural number")
    length = 0
    while n >= (1 << length):
        n -= 1 << length
        length += 1
        if length > WORD_CAP:
            raise WordCapExceeded(f"enumeration index needs words longer than {WORD_CAP}")
    return format(n, f"0{length}b") if length else ""


def b_inverse(w: str) -> int:
    """Position of w in the length-lexicographic enumeration."""
    check_word(w)
    return ((1 << len(w)) - 1) + (int(w, 2) if w else 0)


@dataclass(frozen=True)
class Point:
    """An eventually periodic binary sequence, as minimal prefix + primitive period.

    Canonicalization happens on construction, so structural equality of Point
    values coincides with equality of the sequences they denote.
    """

    prefix: str
    period: str

    def __post_init__(self) -> None:
        check_word(self.prefix)
        check_word(self.period)
        if not self.period:
            raise ValueError("period must be nonempty")
        prefix, period = _canonical(self.prefix, self.period)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    def bit(self, n: int) -> int:
        """The n-th bit of the sequence."""
        if n < 0:
            raise ValueError("bit index must be a natural number")
        if n < len(self.prefix):
            return int(self.prefix[n])
        return int(self.period[(n - len(self.prefix)) % len(self.period)])

    def unfold(self, n: int) -> str:
        """The first n bits."""
        if n <= len(self.prefix):
            return self.prefix[:n]
        reps = (n - len(self.prefix)) // len(self.period) + 1
        return (self.prefix + self.period * reps)[:n]

    def starts_with(self, w: str) -> bool:
        """Membership in the cylinder of sequences extending w."""
        check_word(w)
        return self.unfold(len(w)) == w

    def __str__(self) -> str:
        return f"{self.prefix}({self.period})"


def _canonical(prefix: str, period: str) -> tuple[str, str]:
    # primitive period: the shortest word whose repetition gives the period
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period[:d] * (n // d) == period:
            period = period[:d]
            break
    # absorb prefix bits that agree with the tail of the (rotated) period
    while prefix and prefix[-1] == period[-1]:
        prefix = prefix[:-1]
        period = period[-1] + period[:-1]
    return prefix, period


def parse_point(text: str) -> Point:
    """Parse the point grammar `<word>(<word>)`, e.g. `(0)`, `1(0)`, `(01)`."""
    m = _POINT_RE.match(text)
    if not m:
        raise ValueError(f"not a point literal: {text!r}")
    prefix = "" if m.group(1) == "e" else m.group(1)
    return Point(prefix, m.group(2))


def from_q(w: str) -> Point:
    """The eventually-zero point named by a q-word (or any word; zeros are stripped)."""
    return Point(q_normalize(w), "0")


def classify(p: Point) -> str:
    """PF when the sequence is eventually zero, PINFTY when it has infinitely many ones."""
    return PF if p.period == "0" else PINFTY


def is_pf(p: Point) -> bool:
    return p.period == "0"


def q_word(p: Point) -> str:
    """The q-word naming an eventually-zero point."""
    if not is_pf(p):
        raise ValueError(f"{p} has infinitely many ones, so it has no finite name")
    return p.prefix


def alpha(n: int) -> Point:
    """The n-th eventually-zero point: all-zeros for n=0, else b(n-1)·1·000..."""
    if n < 0:
        raise ValueError("index must be a natural number")
    if n == 0:
        return Point("", "0")
    return Point(b(n - 1) + "1", "0")


def alpha_index(p: Point) -> int:
    """Inverse of alpha; only eventually-zero points have an index."""
    w = q_word(p)
    if not w:
        return 0
    return b_inverse(w[:-1]) + 1


def q_predecessor(z: str) -> str:
    """The longest proper prefix of a nonempty q-word that is itself a q-word."""
    check_q(z)
    if not z:
        raise ValueError("the empty word has no predecessor")
    for l in range(len(z) - 1, -1, -1):
        if is_q(z[:l]):
            return z[:l]
    raise AssertionError("unreachable: the empty word is a q-word")


def perp_less(z: str, t: str) -> bool:
    """True when the first disagreement below min(|z|,|t|) has z-bit 0 and t-bit 1."""
    check_q(z)
    check_q(t)
    for i in range(min(len(z), len(t))):
        if z[i] != t[i]:
            return z[i] < t[i]
    return False


def shift(p: Point) -> Point:
    """Drop the first bit."""
    if p.prefix:
        return Point(p.prefix[1:], p.period)
    return Point("", p.period[1:] + p.period[0])


def prepend(bit: int, p: Point) -> Point:
    """Prepend one bit."""
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    return Point(str(bit) + p.prefix, p.period)


def flip_first(p: Point) -> Point:
    """Flip the first bit (an involutive homeomorphism of the sequence space)."""
    flipped = "1" if p.bit(0) == 0 else "0"
    if p.prefix:
        return Point(flipped + p.prefix[1:], p.period)
    return Point(flipped, p.period[1:] + p.period[0])


def point_lex_less(x: Point, y: Point) -> bool:
    """Strict lexicographic order on sequences (decidable: both are eventually periodic)."""
    if x == y:
        return False
    bound = len(x.prefix) + len(y.prefix) + 2 * lcm(len(x.period), len(y.period))
    return x.unfold(bound) < y.unfold(bound)


def points_equal_by_unfolding(x: Point, y: Point) -> bool:
    """Equality decided by comparing unfoldings out to the periodicity bound.

    This is the reference oracle for Point equality; structural equality of the
    canonical forms must agree with it.
    """
    bound = len(x.prefix) + len(y.prefix) + 2 * lcm(len(x.period), len(y.period))
    return x.unfold(bound) == y.unfold(bound)
