"""From a Spoiler win to a sentence: certificate synthesis.

Whenever Spoiler wins the k-round game on w vs v, there is a sentence of
quantifier rank at most k true on w and false on v.  The synthesis walks
Spoiler's strategy: a pick in w's structure becomes an existential over the
refutations of every reply, a pick in v's structure the dual universal, and
an exhausted position contributes the concatenation atom that broke.
"""

from fclab import distinguishing_formula, language_member, quantifier_rank, to_text
from fclab.catalog import catalog

# a^4 vs a^3 at two rounds
phi = distinguishing_formula("aaaa", "aaa", 2)
print("rank:", quantifier_rank(phi))
print("sentence:", to_text(phi)[:160], "...")
print("on a^4:", language_member(phi, "aaaa", alphabet="a"))
print("on a^3:", language_member(phi, "aaa", alphabet="a"))

# different letters present: a quantifier-free atom suffices
phi = distinguishing_formula("ab", "aa", 0)
print("\nconstant difference:", to_text(phi))

# the v.b.v language separates a^2 b a from a b a; the hand-written catalog
# sentence and the synthesized one must agree on both words
w, v = "aba", "aaba"
synth = distinguishing_formula(w, v, 5)
vbv = catalog("phi_vbv")
for word in (w, v):
    print(
        f"\non {word!r}: synthesized={language_member(synth, word, alphabet='ab')}"
        f" catalog-vbv={language_member(vbv, word, alphabet='ab')}"
    )
print("synthesized rank:", quantifier_rank(synth), "(catalog sentence has rank 5)")
