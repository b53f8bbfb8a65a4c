"""Building a color-preserving embedding into a prescribed dense subset.

The construction pushes the eventually-zero points into H, level by level,
keeping the pair invariant of every pair unchanged.  It is fully
deterministic, so rebuilding reproduces the scheme bit for bit.
"""

import json

from cantorpairs import embed
from cantorpairs.oscillation import SuffAssignment, suff_check
from cantorpairs.words import render_word

for preset in ("pf", "cyl:01", "double"):
    h = embed.h_preset(preset)
    scheme = embed.build_embedding(h, depth=4)
    report = embed.verify_conditions(scheme, h)
    preserved = embed.check_color_preservation(scheme) is None
    table_ok = suff_check(SuffAssignment(scheme.depth, dict(scheme.s))) is None
    print(f"{preset:8} depth 4: conditions {'1-9 pass' if report.all_ok else 'FAIL'}, "
          f"colors preserved: {preserved}, substitution table passes: {table_ok}")

print("\nname table of the plain preset (each name extends its predecessor's):")
scheme = embed.build_embedding(embed.h_preset("pf"), depth=3)
for w in sorted(scheme.s, key=lambda w: (len(w), w)):
    print(f"  {render_word(w):4} -> {scheme.s[w]}")

print("\ncolors attained by the embedded image at depth 6:")
deep = embed.build_embedding(embed.h_preset("cyl:01"), depth=6)
attained = sorted(embed.attained_colors(deep))
print(f"  {attained[:12]}{'...' if len(attained) > 12 else ''}")

print("\nschemes serialize deterministically:")
a = embed.build_embedding(embed.h_preset("double"), depth=3).to_json()
b = embed.build_embedding(embed.h_preset("double"), depth=3).to_json()
print(f"  rebuild byte-identical: {a == b}")
print(f"  first entries: {json.loads(a)['entries'][:2]}")
