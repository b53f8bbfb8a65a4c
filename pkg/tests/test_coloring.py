import itertools

import pytest

from cantorpairs.coloring import (
    PI02,
    SIGMA02,
    GammaClass,
    color_c,
    cycle_witness,
    cycle_words_raw,
    diagonally_complex_check,
    g_beta_bipartite_contains,
    g_beta_diagfree_contains,
    r_beta_contains,
    witness_pair,
)
from cantorpairs.words import Point, alpha, alpha_index, from_q, parse_point, q_normalize

BETA_P1 = parse_point("01(0)")      # switches on color 1 only
BETA_NONE = parse_point("(0)")
BETA_ALL = parse_point("(1)")


def test_color_examples():
    assert color_c(parse_point("1(0)"), parse_point("01(0)")) == 2
    assert color_c(parse_point("(0)"), parse_point("1(0)")) == 1
    assert color_c(parse_point("11(0)"), parse_point("1(0)")) == 1


def test_color_domain_errors():
    with pytest.raises(ValueError):
        color_c(parse_point("(01)"), parse_point("1(0)"))
    with pytest.raises(ValueError):
        color_c(parse_point("1(0)"), parse_point("1(0)"))


def test_color_symmetric_and_matches_invariant():
    pts = [alpha(n) for n in range(25)]
    from cantorpairs.oscillation import invariant_i

    for x, y in itertools.combinations(pts, 2):
        assert color_c(x, y) == color_c(y, x) == invariant_i(x.prefix, y.prefix)


def test_witness_pair_examples():
    assert witness_pair(1, "") == (from_q("1101"), from_q("1"))
    assert witness_pair(3, "1") == (from_q("1110101"), from_q("1101"))
    # even colors use the shortened ladder; the resulting pair really has the color
    assert witness_pair(2, "") == (from_q("11"), from_q("101"))
    assert color_c(*witness_pair(2, "")) == 2


def test_witness_pair_colors_and_cylinders():
    for s in ("", "1", "01", "0101"):
        for p in range(1, 51):
            x, y = witness_pair(p, s)
            assert x != y
            assert x.starts_with(s) and y.starts_with(s)
            assert color_c(x, y) == p


def test_witness_pair_zero_unsupported():
    with pytest.raises(ValueError):
        witness_pair(0, "")


def test_surjectivity_over_alpha_pairs():
    # independent route: every color up to 6 appears among pairs of the
    # enumeration points below a computed bound
    max_color = 6
    need = max(alpha_index(q)
               for p in range(1, max_color + 1)
               for q in witness_pair(p, ""))
    attained = set()
    pts = [alpha(n) for n in range(need + 1)]
    for x, y in itertools.combinations(pts, 2):
        attained.add(color_c(x, y))
    assert set(range(1, max_color + 1)) <= attained


def test_r_beta_examples():
    assert r_beta_contains(SIGMA02, BETA_ALL, parse_point("(01)"), parse_point("(01)"))
    assert r_beta_contains(PI02, BETA_P1, parse_point("(0)"), parse_point("1(0)"))
    assert not r_beta_contains(PI02, BETA_P1, parse_point("1(0)"), parse_point("01(0)"))


def test_r_beta_symmetric_on_samples():
    pts = [alpha(n) for n in range(12)] + [parse_point("(01)"), parse_point("(10)")]
    beta = parse_point("0101(0)")
    for g in (SIGMA02, PI02):
        for x in pts:
            for y in pts:
                assert r_beta_contains(g, beta, x, y) == r_beta_contains(g, beta, y, x)


def test_r_beta_oracle_class():
    oracle = GammaClass("OracleRank3", oracle=lambda p: p.bit(0) == 1)
    assert r_beta_contains(oracle, BETA_NONE, parse_point("1(0)"), parse_point("1(0)"))
    assert not r_beta_contains(oracle, BETA_NONE, parse_point("(0)"), parse_point("(0)"))
    bare = GammaClass("OracleRank3")
    with pytest.raises(ValueError):
        r_beta_contains(bare, BETA_NONE, parse_point("(0)"), parse_point("(0)"))


def test_g_beta_bipartite_examples():
    p01 = parse_point("(01)")
    assert g_beta_bipartite_contains(BETA_NONE, (0, p01), (1, p01))
    assert not g_beta_bipartite_contains(BETA_ALL, (0, p01), (0, p01))
    assert g_beta_bipartite_contains(BETA_P1, (1, parse_point("1(0)")), (0, parse_point("(0)")))


def test_g_beta_bipartite_graph_axioms():
    pts = [alpha(n) for n in range(8)] + [parse_point("(01)")]
    vertices = [(e, p) for e in (0, 1) for p in pts]
    for u in vertices:
        assert not g_beta_bipartite_contains(BETA_ALL, u, u)
        for v in vertices:
            assert (g_beta_bipartite_contains(BETA_ALL, u, v)
                    == g_beta_bipartite_contains(BETA_ALL, v, u))


def test_g_beta_diagfree_examples():
    zero = parse_point("(0)")
    assert not g_beta_diagfree_contains(BETA_P1, zero, zero)
    assert g_beta_diagfree_contains(BETA_P1, zero, parse_point("1(0)"))
    pts = [alpha(n) for n in range(6)]
    for x, y in itertools.combinations(pts, 2):
        assert not g_beta_diagfree_contains(BETA_NONE, x, y)


def test_cycle_witness_examples():
    assert cycle_witness(1) == (from_q(""), from_q("1"), from_q("11"))
    assert cycle_witness(2) == (from_q("1"), from_q("01"), from_q("001"))
    assert cycle_witness(4) == (from_q("01011"), from_q("101"), from_q("010011"))


def test_cycle_witness_raw_words_need_normalizing():
    raw = cycle_words_raw(4)
    assert raw[0].endswith("0")  # the shipped display words carry trailing zeros
    assert tuple(from_q(q_normalize(w)) for w in raw) == cycle_witness(4)


def test_cycle_witness_pairwise_colors():
    for p in range(1, 25):
        triple = cycle_witness(p)
        assert len(set(triple)) == 3
        for x, y in itertools.combinations(triple, 2):
            assert color_c(x, y) == p


def test_cycle_witness_is_beta_triangle():
    for p in (1, 2, 5, 8):
        beta = Point("0" * p + "1", "0")  # switches on exactly color p
        triple = cycle_witness(p)
        for x, y in itertools.combinations(triple, 2):
            assert r_beta_contains(PI02, beta, x, y)


def test_diagonally_complex_check():
    samples = [alpha(n) for n in range(10)] + [parse_point("(01)"), parse_point("(10)")]
    empty = lambda a, b: False
    full = lambda a, b: True
    loop_free = lambda a, b: a != b
    for g in (SIGMA02, PI02):
        assert diagonally_complex_check(g, empty, samples) == []
        assert diagonally_complex_check(g, loop_free, samples) == []
    assert diagonally_complex_check(PI02, full, samples) == []
    # with the other witness class, digraph loops land on the wrong diagonal
    bad = diagonally_complex_check(SIGMA02, full, samples)
    assert bad and all(v.clause == "1" for v in bad)


def test_diagonally_complex_check_beta_digraph():
    from cantorpairs.oscillation import invariant_i

    beta = parse_point("01(0)")
    digraph = lambda a, b: a != b and beta.bit(invariant_i(a, b)) == 1
    samples = [alpha(n) for n in range(10)] + [parse_point("(01)"), parse_point("(10)")]
    assert diagonally_complex_check(PI02, digraph, samples) == []
