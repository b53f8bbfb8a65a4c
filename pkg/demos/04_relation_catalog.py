"""Evaluating the relation catalog, profiling structure, certifying cycles."""

from cantorpairs.relations import (
    AC_CATALOG,
    CANTOR,
    D2XCANTOR,
    KSPACE,
    KPoint,
    K_ZERO,
    RelationSpec,
    acyclicity_check,
    evaluate,
    kcell,
    parse_relation_spec,
    sp,
    standard_vertices,
    structural_profile,
)
from cantorpairs.words import parse_point

print("the matching graph relates the two copies of each witness point:")
gm = parse_relation_spec("Gm:gamma=Sigma02")
u, v = sp(D2XCANTOR, parse_point("(01)"), 0), sp(D2XCANTOR, parse_point("(01)"), 1)
print(f"  {u} ~ {v}: {evaluate(gm, u, v)}")
print(f"  same side: {evaluate(gm, u, u)}")

print("\nsix cells partition the square of the convergent sequence space:")
for x, y in ((KPoint(3), KPoint(1)), (KPoint(1), KPoint(1)), (K_ZERO, KPoint(2)),
             (K_ZERO, K_ZERO)):
    print(f"  cell({x}, {y}) = {kcell(x, y)}")

print("\ncell-union codes give closed relations on that space:")
star = parse_relation_spec("Rank1_N:t=000110")
verts = standard_vertices(KSPACE, 6)
edges = [(str(a.point), str(b.point)) for a in verts for b in verts if evaluate(star, a, b)]
print(f"  code 000110 has {len(edges)} edges on {len(verts)} points, e.g. {edges[:3]}")
print(f"  acyclic: {acyclicity_check(star, verts) is None}")

print("\nstructure profiles over the standard vertex sets:")
for idx in (7, 9, 10, 11):
    entry = AC_CATALOG[idx]
    profile = structural_profile(entry.spec(), standard_vertices(entry.space, 6))
    flags = [name for name, val in profile.as_dict().items() if val]
    print(f"  {entry.index:2} {entry.name:10} {flags}")

print("\na cycle certificate for the inequality relation:")
ne = RelationSpec("Ac", index=7)
cyc = acyclicity_check(ne, standard_vertices(CANTOR, 4))
print(f"  cycle of length {len(cyc)}: {[str(p.point) for p in cyc[:4]]}...")
