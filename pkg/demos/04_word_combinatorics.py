"""Word combinatorics: the primitives behind the game lemmas.

Primitivity, conjugacy, the exponent function, unique factor decomposition
inside powers, and the stabilizing factor intersection of co-primitive
powers.
"""

from fclab import (
    are_conjugate,
    are_coprimitive,
    common_factor_bound,
    exp,
    factors,
    fibonacci,
    fibonacci_marked,
    is_primitive,
    power_factor_decompose,
    primitive_root,
    relation_oracle,
)

print("primitive:", {w: is_primitive(w) for w in ["aba", "abab", "a", ""]})
print("roots:", {w: primitive_root(w) for w in ["abab", "aabaab", "aba"]})

# rotations vs genuinely different words
print("\naabba ~ aaabb (rotation):", are_conjugate("aabba", "aaabb"))
print("aba ~ bba:", are_conjugate("aba", "bba"))
print("co-primitive aba/bba:", are_coprimitive("aba", "bba"))
print("co-primitive abaabb/bbaaba:", are_coprimitive("abaabb", "bbaaba"))

# the exponent function: largest power of the base inside a word
u = "aaaabaabaab"
print(f"\nexp_a({u}) =", exp("a", u))
print(f"exp_aab({u}) =", exp("aab", u))

# factors of a power of a primitive word decompose uniquely
print("\ndecompose 'bab' inside (ab)^m:", power_factor_decompose("ab", "bab"))
print("decompose 'baabaa' inside (aab)^m:", power_factor_decompose("aab", "baabaa"))

# co-primitive words share only boundedly long factors, no matter the powers
r, (n0, m0) = common_factor_bound("abaabb", "bbaaba")
print(f"\nlongest common factor of (abaabb)^n and (bbaaba)^m: {r}")
print(f"   saturates at exponents ({n0}, {m0}); periodicity caps it below",
      len("abaabb") + len("bbaaba") - 1)

# the Fibonacci words avoid fourth powers, which is what lets a single
# sentence pin down the whole marked family
print("\nF_0..F_5:", [fibonacci(n) for n in range(6)])
print("marked member for n=2:", fibonacci_marked(2))
w = fibonacci(12)
print("fourth-power factors in F_12:", [f for f in factors(w) if f and f * 4 in w])

# built-in word relations used as oracle atoms
print("\nscattered 'aa' in 'abba':", relation_oracle("scatt", ("aa", "abba")))
print("'ababaa' in shuffle(abba, aa):", relation_oracle("shuff", ("abba", "aa", "ababaa")))
