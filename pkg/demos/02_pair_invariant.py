"""The recursive pair invariant, its value patterns, and the bulk sweep.

The invariant counts, roughly, how often the two words trade blocks of ones
after their common prefix; ladder-shaped pairs realize every positive value.
"""

from cantorpairs import oscillation
from cantorpairs.oscillation import exhaustive_check, invariant_i, osc
from cantorpairs.words import q_normalize

print("small values:")
for z, t in (("", "1"), ("1", "01"), ("11", "101"), ("1101", "101"), ("01", "11")):
    print(f"  i({z or 'e'}, {t or 'e'}) = {invariant_i(z, t)}"
          f"   (oscillation count {osc(z, t)})")

print("\nalternating prefixes climb two at a time:")
for k in range(6):
    z, t = q_normalize("10" * k), q_normalize("01" * k)
    print(f"  i({z or 'e':12}, {t or 'e':12}) = {invariant_i(z, t)}")

print("\nladder pairs realize every positive value inside any cylinder:")
from cantorpairs.coloring import witness_pair
from cantorpairs.words import q_word

for p in range(1, 9):
    x, y = witness_pair(p, s="01")
    print(f"  p={p}: ({q_word(x)}, {q_word(y)})")

print("\nbulk sweep over every q-word pair up to 12 bits:")
report = exhaustive_check(12)
print(f"  {report.pair_count} ordered pairs, single-case dispatch: {report.single_case}, "
      f"symmetric: {report.symmetric}")
print(f"  values range over 0..{report.max_value}; "
      f"smallest off-diagonal value: {report.min_distinct}")

print("\nsubstitution tables that grow and extend names preserve the invariant:")
table = {"": "", "1": "1", "01": "011", "11": "1011"}
print(f"  table {table}")
print(f"  counterexample search: {oscillation.suff_check(oscillation.SuffAssignment(2, table))}")
