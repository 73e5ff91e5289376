"""Model checking tour: words as relational structures, formulas as queries.

A word w is viewed as a structure whose universe is the set of factors of w
(plus a null element), with a ternary concatenation relation and a constant
per letter.  Sentences then define languages; open formulas define
relations on factors.
"""

from fclab import (
    build_structure,
    concat_triples,
    enumerate_models,
    language_member,
    parse_formula,
)
from fclab.catalog import catalog

# -- the structure of a word -------------------------------------------------

s = build_structure("ab", alphabet="ab")
print("factors of 'ab':", s.facs)
print("constants (a, b, eps):", s.constants())
print("concatenation triples:", sorted(concat_triples(s)))

# a letter missing from the word interprets to the null element
s = build_structure("aa", alphabet="ab")
print("\nconstant b over 'aa':", s.const("b"), "(null: atoms touching it are false)")

# -- sentences and languages ---------------------------------------------------

# "some factor equals the letter b" -- i.e. the word contains b
contains_b = parse_formula("(exists ?x (= ?x 'b eps))")
for w in ["aa", "aba"]:
    print(f"contains-b on {w!r}:", language_member(contains_b, w, alphabet="ab"))

# the square language {vv}: uses the whole-word device from the catalog
ww = catalog("phi_ww")
for w in ["abab", "aba", "", "abaaba"]:
    print(f"square-word sentence on {w!r}:", language_member(ww, w, alphabet="ab"))

# -- open formulas define relations on factors ---------------------------------

copy = parse_formula("(= ?x ?y ?y)")  # x = y.y
print("\nsolutions of x = y.y over 'abab':")
for m in enumerate_models(copy, "abab"):
    print("   ", {k: v or "eps" for k, v in m.items()})

# phi_w pins its variable to the whole word
phi_w = catalog("phi_w")
print("phi_w over 'aab':", enumerate_models(phi_w, "aab"))

# no-cube words: no factor u^3 with u nonempty (a classic first-order query)
no_cubes = parse_formula(
    "(forall ?z (or (= ?z eps eps) (not (exists ?x (exists ?y "
    "(and (= ?x ?z ?y) (= ?y ?z ?z)))))))"
)
for w in ["abab", "aaa", "ababab", "abba"]:
    print(f"cube-free on {w!r}:", language_member(no_cubes, w, alphabet="ab"))
