import pytest

from cantorpairs.coloring import PI02, SIGMA02
from cantorpairs.relations import (
    AC_CATALOG,
    CANTOR,
    D2XCANTOR,
    D2XK,
    KSPACE,
    LSPACE,
    MSPACE,
    SSEQ,
    KPoint,
    K_ZERO,
    RelationSpec,
    acyclicity_check,
    diag_class,
    evaluate,
    in_diag_class,
    kcell,
    parse_kpoint,
    parse_relation_spec,
    parse_space_point,
    sp,
    standard_vertices,
    structural_profile,
)
from cantorpairs.words import Point, is_pf, parse_point


def c(text):
    return sp(CANTOR, parse_point(text))


def d(tag, text):
    return sp(D2XCANTOR, parse_point(text), tag)


def s_(text):
    return sp(SSEQ, parse_point(text))


def k(x):
    return sp(KSPACE, K_ZERO if x is None else KPoint(x))


# ---------------------------------------------------------------------------
# cells and classes

def test_diag_class_examples():
    assert diag_class(SIGMA02, parse_point("(01)")) == 0
    assert diag_class(PI02, parse_point("(01)")) == 2
    assert diag_class(SIGMA02, parse_point("1(0)")) == 2


def test_in_diag_class():
    p = parse_point("(01)")
    assert in_diag_class(SIGMA02, 0, p)
    assert not in_diag_class(SIGMA02, 1, p)
    assert not in_diag_class(SIGMA02, 2, p)
    assert in_diag_class(SIGMA02, 3, p)
    with pytest.raises(ValueError):
        in_diag_class(SIGMA02, 4, p)


def test_kcell_examples():
    assert kcell(KPoint(3), KPoint(1)) == 0
    assert kcell(K_ZERO, KPoint(2)) == 4
    assert kcell(K_ZERO, K_ZERO) == 5


def test_kcell_partitions_exhaustively():
    pts = [K_ZERO] + [KPoint(i) for i in range(65)]
    for x in pts:
        for y in pts:
            cells = [
                x.in_c and y.in_c and x.k > y.k,     # strictly smaller value first
                x.in_c and y.in_c and x.k == y.k,
                x.in_c and y.in_c and x.k < y.k,
                x.in_c and not y.in_c,
                (not x.in_c) and y.in_c,
                (not x.in_c) and (not y.in_c),
            ]
            assert cells.count(True) == 1
            assert cells.index(True) == kcell(x, y)


# ---------------------------------------------------------------------------
# evaluators

def test_gm_and_e3_examples():
    gm = RelationSpec("Gm", gamma=SIGMA02)
    assert evaluate(gm, d(0, "(01)"), d(1, "(01)"))
    assert not evaluate(gm, d(0, "1(0)"), d(1, "1(0)"))
    e3 = RelationSpec("E3", gamma=SIGMA02)
    verts = standard_vertices(D2XCANTOR, 8)
    for u in verts:
        assert evaluate(e3, u, u)
        for v in verts:
            assert evaluate(e3, u, v) == evaluate(e3, v, u)


def test_gm_is_symmetrization_of_om():
    gm = RelationSpec("Gm", gamma=SIGMA02)
    om = RelationSpec("Om", gamma=SIGMA02)
    verts = standard_vertices(D2XCANTOR, 10)
    for u in verts:
        for v in verts:
            assert evaluate(gm, u, v) == (evaluate(om, u, v) or evaluate(om, v, u))


def test_rt_p_diagonal_codes():
    spec = RelationSpec("Rt_P", gamma=SIGMA02, code=(3, 0, 0, 3))
    e3 = RelationSpec("E3", gamma=SIGMA02)
    verts = standard_vertices(D2XCANTOR, 8)
    for u in verts:
        for v in verts:
            assert evaluate(spec, u, v) == evaluate(e3, u, v)


def test_gma_and_rta_examples():
    gma = RelationSpec("GmA", gamma=PI02)
    zero = s_("(0)")
    branch = s_("11(0)")
    periodic = s_("1(01)")
    assert evaluate(gma, zero, branch)      # shifted branch point is eventually zero
    assert evaluate(gma, branch, zero)
    assert not evaluate(gma, zero, periodic)
    assert not evaluate(gma, branch, branch)
    generic = RelationSpec("RtA_A", gamma=PI02, code=(1, 1, 3, 2))
    assert evaluate(generic, zero, zero)            # loop switched on
    assert not evaluate(generic, zero, branch)      # class 1 is empty
    assert evaluate(generic, branch, zero)          # class 3 holds everything
    assert evaluate(generic, periodic, periodic)    # class 2 holds the non-eventually-zero points
    assert not evaluate(generic, branch, branch)
    assert not evaluate(generic, branch, periodic)  # off-diagonal branch pairs never relate


def test_rank1_n_example():
    spec = RelationSpec("Rank1_N", code=(0, 0, 0, 1, 1, 0))
    assert evaluate(spec, k(1), k(None))
    assert evaluate(spec, k(None), k(1))
    assert not evaluate(spec, k(1), k(2))
    comp = RelationSpec("Rank1_N", code=(0, 0, 0, 1, 1, 0), complement=True)
    assert not evaluate(comp, k(1), k(None))
    assert evaluate(comp, k(1), k(2))


def test_tj_examples():
    tj = RelationSpec("Tj", j=(0, 1))
    assert evaluate(tj, k(0), k(1))
    assert not evaluate(tj, k(1), k(2))
    assert evaluate(tj, k(2), k(3))
    assert not evaluate(tj, k(0), k(2))
    assert not evaluate(tj, k(None), k(1))


def test_r01_structure():
    r0 = RelationSpec("R01_0")
    r1 = RelationSpec("R01_1")
    verts = [sp(KSPACE, K_ZERO)] + [sp(KSPACE, KPoint(i)) for i in range(65)]
    p0 = structural_profile(r0, verts)
    assert p0.antisymmetric and not p0.symmetric
    p1 = structural_profile(r1, verts)
    assert p1.symmetric and p1.irreflexive


def test_rank1_v_h_s_spaces():
    v_code = ((0,) * 6, (0, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0), (0,) * 6)
    spec = RelationSpec("Rank1_V", code=v_code)
    zero_side = sp(LSPACE, K_ZERO, 0)
    one_side = sp(LSPACE, KPoint(3), 1)
    assert evaluate(spec, zero_side, one_side)     # cell 4 on the cross pair
    assert evaluate(spec, one_side, zero_side)     # cell 3 back
    assert not evaluate(spec, one_side, one_side)
    with pytest.raises(ValueError):
        sp(LSPACE, KPoint(3), 0)  # the 0 side holds only the limit point
    with pytest.raises(ValueError):
        sp(MSPACE, KPoint(3), 1)


def test_catalog_examples():
    flip = RelationSpec("Ac", index=11)
    x = parse_point("(01)")
    assert evaluate(flip, c("(01)"), sp(CANTOR, parse_point("1(10)")))
    from cantorpairs.words import flip_first

    assert evaluate(flip, sp(CANTOR, x), sp(CANTOR, flip_first(x)))
    half = RelationSpec("Ac", index=12)
    assert evaluate(half, c("(0)"), c("1(0)"))
    assert not evaluate(half, c("1(0)"), c("(0)"))
    eq = RelationSpec("Ac", index=9)
    assert evaluate(eq, c("(01)"), c("(01)"))
    lt = RelationSpec("Ac", index=8)
    assert evaluate(lt, c("(0)"), c("(01)"))
    assert not evaluate(lt, c("(01)"), c("(0)"))


def test_space_mismatch_is_an_error():
    gm = RelationSpec("Gm", gamma=SIGMA02)
    with pytest.raises(ValueError):
        evaluate(gm, c("(01)"), c("(01)"))
    rank1 = RelationSpec("Rank1_V", code=((0,) * 6,) * 4)
    with pytest.raises(ValueError):
        evaluate(rank1, k(1), k(2))


# ---------------------------------------------------------------------------
# profiles, acyclicity

def test_structural_profile_examples():
    verts = standard_vertices(CANTOR, 6)
    eq = structural_profile(RelationSpec("Ac", index=9), verts)
    assert eq.reflexive and eq.symmetric and eq.transitive and eq.antisymmetric
    ne = structural_profile(RelationSpec("Ac", index=7), verts)
    assert ne.irreflexive and not ne.reflexive and ne.symmetric and not ne.transitive
    lt = structural_profile(RelationSpec("Ac", index=8), verts)
    assert lt.antisymmetric and lt.transitive and not lt.symmetric


def test_catalog_profiles_match_static_table():
    for entry in AC_CATALOG:
        verts = standard_vertices(entry.space, 8)
        assert structural_profile(entry.spec(), verts) == entry.profile, entry.name


def test_catalog_metadata():
    assert len(AC_CATALOG) == 13
    assert [e.topology for e in AC_CATALOG] == (
        ["clopen"] * 7 + ["open-not-closed"] * 2 + ["closed-not-open"] * 4)
    assert [e.index for e in AC_CATALOG if e.is_graph] == [3, 7, 11]
    nine = AC_CATALOG[9]
    assert nine.name == "eq"
    assert nine.profile.reflexive and nine.profile.symmetric and nine.profile.transitive


def test_acyclicity_triangle_from_cycle_witness():
    from cantorpairs.coloring import cycle_witness

    spec = RelationSpec("GbetaDiag", beta=parse_point("01(0)"))
    verts = [sp(CANTOR, p) for p in cycle_witness(1)]
    cyc = acyclicity_check(spec, verts)
    assert cyc is not None and len(cyc) == 3


def test_acyclicity_matching_graph_large():
    gm = RelationSpec("Gm", gamma=SIGMA02)
    verts = standard_vertices(D2XCANTOR, 48)
    assert len(verts) >= 100
    assert acyclicity_check(gm, verts) is None


def test_acyclicity_square_minus_diagonal():
    dense = [c("(01)"), c("(10)"), c("(011)")]
    assert len(set(dense)) == 3
    rel = lambda u, v: u.point != v.point and not is_pf(u.point) and not is_pf(v.point)
    cyc = acyclicity_check(rel, dense)
    assert cyc is not None and len(cyc) == 3


def test_acyclicity_certificate_is_a_real_cycle():
    rel = RelationSpec("Ac", index=7)
    verts = standard_vertices(CANTOR, 4)
    cyc = acyclicity_check(rel, verts)
    assert cyc is not None and len(cyc) >= 3
    assert len(set(cyc)) == len(cyc)
    ring = cyc + [cyc[0]]
    for u, v in zip(ring, ring[1:]):
        assert evaluate(rel, u, v) or evaluate(rel, v, u)


# ---------------------------------------------------------------------------
# text forms

def test_parse_relation_spec_roundtrip():
    for text in ("Gm:gamma=Sigma02", "Rank1_N:t=000110", "Rbeta:gamma=Pi02,beta=01(0)",
                 "Tj:j=01", "Ac:i=8", "Rank1_N:t=000110,complement=1",
                 "Rank1_V:t=000000,000010,000100,000000"):
        spec = parse_relation_spec(text)
        assert parse_relation_spec(str(spec)) == spec


def test_parse_relation_spec_errors():
    for text in ("Nope", "Gm", "Tj", "Ac", "Gm:gamma=Sigma02,weird=1"):
        with pytest.raises(ValueError):
            parse_relation_spec(text)


def test_parse_space_point():
    u = parse_space_point("0:(01)", D2XCANTOR)
    assert u.tag == 0 and u.point == Point("", "01")
    assert parse_space_point("2^-3", KSPACE).point == KPoint(3)
    assert parse_space_point("0", KSPACE).point == K_ZERO
    assert parse_kpoint("2^-0") == KPoint(0)
    with pytest.raises(ValueError):
        parse_space_point("(01)", D2XCANTOR)
    with pytest.raises(ValueError):
        sp(SSEQ, parse_point("01(0)"))


def test_standard_vertices_shapes():
    cverts = standard_vertices(CANTOR, 20)
    assert len(cverts) == len(set(cverts)) == 23  # 1(01) and (10) are the same point
    assert len(standard_vertices(D2XCANTOR, 20)) == 46
    sverts = standard_vertices(SSEQ, 20)
    assert sp(SSEQ, Point("", "0")) in sverts
    assert all(v.point == Point("", "0") or v.point.bit(0) == 1 for v in sverts)
    assert len(standard_vertices(KSPACE, 20)) == 22
    assert len(standard_vertices(LSPACE, 20)) == 23
    assert len(standard_vertices(MSPACE, 20)) == 23
    assert len(standard_vertices(D2XK, 20)) == 44
