"""The coloring induced on eventually-zero points by the pair invariant.

The color of an unordered pair of distinct eventually-zero points is the
invariant of their q-words.  A parameter point `beta` switches individual
colors on and off, giving a symmetric relation (diagonal on the chosen
witness class, plus all off-diagonal pairs whose color is switched on) and
two derived graphs on the doubled and on the plain sequence space.

witness_pair produces a color-p pair inside any prescribed cylinder.  For odd
p it is the ladder pair (s1(10)^{k+1}1, s1(01)^k) with p = 2k+1; for even
p = 2k the ladder exponent is k-1.  The two ladders make every positive color
realizable below any s, which is the onto-ness witness used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .oscillation import invariant_i
from .words import (
    PF,
    PINFTY,
    Point,
    check_q,
    classify,
    from_q,
    is_pf,
    q_normalize,
    q_word,
)

SIGMA02_TAG = "Sigma02"
PI02_TAG = "Pi02"
ORACLE_TAG = "OracleRank3"


@dataclass(frozen=True)
class GammaClass:
    """Selects the witness subset used on the diagonal.

    Sigma02 fixes the points with infinitely many ones, Pi02 the eventually
    zero points; the oracle tag delegates membership to a caller-supplied
    predicate (required, since no concrete set is prescribed at higher ranks).
    """

    tag: str
    oracle: Callable[[Point], bool] | None = None

    def __post_init__(self):
        if self.tag not in (SIGMA02_TAG, PI02_TAG, ORACLE_TAG):
            raise ValueError(f"unknown class tag {self.tag!r}")

    def member(self, p: Point) -> bool:
        if self.tag == SIGMA02_TAG:
            return classify(p) == PINFTY
        if self.tag == PI02_TAG:
            return classify(p) == PF
        if self.oracle is None:
            raise ValueError("oracle-backed class used without a membership oracle")
        return bool(self.oracle(p))


SIGMA02 = GammaClass(SIGMA02_TAG)
PI02 = GammaClass(PI02_TAG)


def check_beta(beta: Point) -> Point:
    """The color-selection parameter must be an eventually periodic point."""
    if not isinstance(beta, Point):
        raise ValueError("beta must be a Point (arbitrary predicates are not accepted)")
    return beta


def color_c(x: Point, y: Point) -> int:
    """Color of a pair of distinct eventually-zero points; symmetric by construction."""
    if not (is_pf(x) and is_pf(y)):
        raise ValueError("colors are defined on eventually-zero points only")
    if x == y:
        raise ValueError("colors are defined on pairs of distinct points")
    return invariant_i(q_word(x), q_word(y))


def witness_pair(p: int, s: str = "") -> tuple[Point, Point]:
    """A pair of distinct eventually-zero points of color p extending the word s.

    p = 0 is not supported: no pair of distinct q-words with invariant 0 is
    known, and the exhaustive sweeps find none.
    """
    s = check_q(s)
    if p < 1:
        raise ValueError("witness pairs exist for colors >= 1 only")
    k, odd = divmod(p, 2)
    rungs = k + 1 if odd else k - 1
    z = s + "1" + "10" * rungs + "1"
    t = s + "1" + "01" * k
    return from_q(z), from_q(q_normalize(t))


def r_beta_contains(g: GammaClass, beta: Point, x: Point, y: Point) -> bool:
    """Diagonal of the witness class, plus off-diagonal pairs with switched-on color."""
    check_beta(beta)
    if x == y:
        return g.member(x)
    if is_pf(x) and is_pf(y):
        return beta.bit(color_c(x, y)) == 1
    return False


def g_beta_bipartite_contains(beta: Point, u: tuple[int, Point], v: tuple[int, Point]) -> bool:
    """Graph on the doubled space: cross-side pairs whose underlying pair is related.

    The witness class is the Sigma02 one.  Symmetric and irreflexive since only
    pairs with opposite side tags qualify.
    """
    (eu, pu), (ev, pv) = u, v
    if eu not in (0, 1) or ev not in (0, 1):
        raise ValueError("side tags must be 0 or 1")
    if eu == ev:
        return False
    first, second = (pu, pv) if eu == 0 else (pv, pu)
    return r_beta_contains(SIGMA02, beta, first, second)


def g_beta_diagfree_contains(beta: Point, x: Point, y: Point) -> bool:
    """The beta relation with its whole diagonal removed (a graph on the sequence space)."""
    check_beta(beta)
    if x == y:
        return False
    if is_pf(x) and is_pf(y):
        return beta.bit(color_c(x, y)) == 1
    return False


# Raw display words for the four triangle families, kept verbatim so the tests
# can exercise q-normalization on them.
def cycle_words_raw(p: int) -> tuple[str, str, str]:
    if p < 1:
        raise ValueError("triangles exist for colors >= 1 only")
    if p == 1:
        return "", "1", "11"
    if p == 2:
        return "1", "01", "001"
    if p % 2 == 1:
        k = (p - 3) // 2
        return "10" + "1" * (k + 1), "1" * (k + 3), "010" + "1" * k
    k = (p - 4) // 2
    return ("01011" + "0" + "110" * k,
            "101" + "000" + "100" * k,
            "010011" + "101" * k)


def cycle_witness(p: int) -> tuple[Point, Point, Point]:
    """Three distinct eventually-zero points, pairwise of color p.

    Whenever beta switches color p on, the triple is a closed triangle in the
    symmetrized beta relation.
    """
    return tuple(from_q(w) for w in cycle_words_raw(p))  # type: ignore[return-value]


@dataclass(frozen=True)
class DiagViolation:
    clause: str
    x: Point
    y: Point


def diagonally_complex_check(
    g: GammaClass,
    digraph: Callable[[str, str], bool],
    samples: list[Point],
) -> list[DiagViolation]:
    """Check the two diagonal-complexity clauses on all sample pairs.

    The relation under test is the diagonal of the witness class together with
    the pairs of eventually-zero points whose q-words the digraph relates.
    Clause 1: the relation meets the diagonal exactly on the witness class.
    Clause 2: every related pair is diagonal-in-class or eventually-zero on
    both sides.  Returns the (possibly empty) list of violations.
    """

    def related(x: Point, y: Point) -> bool:
        if x == y and g.member(x):
            return True
        if is_pf(x) and is_pf(y):
            return bool(digraph(q_word(x), q_word(y)))
        return False

    violations = []
    for x in samples:
        if related(x, x) != g.member(x):
            violations.append(DiagViolation("1", x, x))
    for x in samples:
        for y in samples:
            if related(x, y):
                ok = (x == y and g.member(x)) or (is_pf(x) and is_pf(y))
                if not ok:
                    violations.append(DiagViolation("2", x, y))
    return violations
