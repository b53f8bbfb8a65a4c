"""Tour of the word and sequence primitives.

Finite binary words name the eventually-zero sequences: strip trailing zeros
and you get the canonical q-word.  The length-lex enumeration lines the words
up in a single sequence, which also indexes the eventually-zero points.
"""

from cantorpairs import words

print("q-normalization strips trailing zeros:")
for w in ("010", "101000", "", "1"):
    print(f"  {words.render_word(w)!r:10} -> {words.render_word(words.q_normalize(w))!r}")

print("\nthe first twelve words in length-lex order:")
print(" ", [words.render_word(words.b(n)) for n in range(12)])

print("\n...and the eventually-zero points they index (alpha enumeration):")
for n in range(6):
    p = words.alpha(n)
    print(f"  alpha({n}) = {p}   index recovered: {words.alpha_index(p)}")

print("\npoints are kept canonical, so equality is plain structural equality:")
x = words.Point("101", "01")
print(f"  101(01) canonicalizes to {x}")
print(f"  1(01) == (10)? {words.Point('1', '01') == words.Point('', '10')}")

print("\nclassification is decidable from the period:")
for text in ("(0)", "10(0)", "(01)", "1(10)"):
    p = words.parse_point(text)
    print(f"  {text:7} -> {words.classify(p)}")

print("\nq-word predecessors walk back through nested q-prefixes:")
z = "110001"
while z:
    nxt = words.q_predecessor(z)
    print(f"  {z} -> {words.render_word(nxt)}")
    z = nxt
