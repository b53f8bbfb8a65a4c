"""The code families behind the relation catalog, with their exact counts.

Every family is enumerated by filtering its full product space of candidate
codes, so the counts below are recomputed from scratch on every run.
"""

from cantorpairs import antichains
from cantorpairs.coloring import SIGMA02

print("family sizes (filter over the full candidate space):")
for family in ("P", "A", "Cpi02", "N", "V", "H", "C", "S"):
    print(f"  |{family:5}| = {len(antichains.family_codes(family))}")

n, v, h, s = (len(antichains.enum_rank1(f)) for f in "NVHS")
print(f"  rank-one total: {n} + {v} + {h} + {s} = {n + v + h + s}")
print(f"  combined doubled/one-limit total: {len(antichains.enum_P())} + 1 + "
      f"{len(antichains.enum_A())} = {len(antichains.enum_P()) + 1 + len(antichains.enum_A())}")

print("\ndistinguished codes map to named relations:")
for code, family in (((3, 0, 0, 3), "P"), ((1, 0, 0, 1), "P"), ((0, 0, 0, 1), "A")):
    spec = antichains.instantiate(code, family, gamma=SIGMA02)
    print(f"  {antichains.code_literal(code)} in {family} -> {spec.rid}")

print("\nthe graph bases:")
bases = antichains.graph_subbases()
for label, entries in (("closed", bases.closed_plain),
                       ("closed+injective", bases.closed_injective),
                       ("open", bases.open_basis)):
    marks = sum(1 for e in entries if e.acyclic)
    print(f"  {label:17} {len(entries):2} entries ({marks} marked acyclic)")
    for e in entries[:3]:
        code = antichains.code_literal(e.code) if e.code else "R01_1"
        print(f"     {e.family:5} {code}{' (complemented)' if e.complement else ''}")

print("\nthe 13-entry catalog with its structure table:")
for entry in antichains.catalog_Ac():
    flags = ",".join(k for k, val in entry.profile.as_dict().items() if val) or "-"
    graph = " graph" if entry.is_graph else ""
    print(f"  {entry.index:2} {entry.name:13} {entry.topology:16} {flags}{graph}")
print("graph sub-catalog:", [e.name for e in antichains.graph_subcatalog()])
