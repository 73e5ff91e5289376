import itertools

import pytest

from fclab.words import (
    Morphism,
    PreconditionError,
    SemilinearSet,
    are_conjugate,
    are_coprimitive,
    common_factor_bound,
    enumerate_semilinear_sets,
    exp,
    factors,
    fibonacci,
    fibonacci_marked,
    is_primitive,
    power_factor_decompose,
    primitive_root,
    relation_oracle,
    semilinear_member,
)

from conftest import words_up_to


def brute_primitive(w):
    if not w:
        return False
    for plen in range(1, len(w)):
        if len(w) % plen == 0 and w[:plen] * (len(w) // plen) == w:
            return False
    return True


def test_factors_examples():
    assert factors("ab") == frozenset({"", "a", "b", "ab"})
    assert factors("") == frozenset({""})
    assert len(factors("aaaa")) == 5


def test_factors_closed_under_factors():
    for w in words_up_to(5):
        fs = factors(w)
        assert "" in fs
        for u in fs:
            assert factors(u) <= fs
        assert len(fs) <= len(w) * (len(w) + 1) // 2 + 1


def test_primitivity_examples():
    assert is_primitive("aba")
    assert not is_primitive("abab")
    assert not is_primitive("")


def test_primitivity_against_brute_force():
    for w in words_up_to(10, "ab"):
        assert is_primitive(w) == brute_primitive(w), w


def test_primitive_root_examples():
    assert primitive_root("abab") == ("ab", 2)
    assert primitive_root("a") == ("a", 1)
    assert primitive_root("aabaab") == ("aab", 2)
    with pytest.raises(PreconditionError):
        primitive_root("")


def test_primitive_root_properties():
    for w in words_up_to(10, "ab"):
        if not w:
            continue
        root, e = primitive_root(w)
        assert root * e == w
        assert is_primitive(root)
        assert (e == 1) == is_primitive(w)


def test_conjugacy_examples():
    assert are_conjugate("aabba", "aaabb")
    assert not are_conjugate("aba", "bba")
    for w in ["a", "ab", "abc"]:
        assert are_conjugate(w, w)


def test_conjugacy_is_equivalence_per_length_class():
    for n in range(1, 7):
        ws = ["".join(t) for t in itertools.product("ab", repeat=n)]
        for u in ws:
            assert are_conjugate(u, u)
        for u, v in itertools.combinations(ws, 2):
            assert are_conjugate(u, v) == are_conjugate(v, u)
        for u, v, w in itertools.combinations(ws, 3):
            if are_conjugate(u, v) and are_conjugate(v, w):
                assert are_conjugate(u, w)


def test_conjugacy_matches_rotation_enumeration():
    for u in words_up_to(6, "ab"):
        if not u:
            continue
        rotations = {u[i:] + u[:i] for i in range(len(u))}
        for v in words_up_to(6, "ab"):
            if not v:
                continue
            assert are_conjugate(u, v) == (v in rotations)


def test_coprimitivity_examples():
    assert are_coprimitive("aba", "bba")
    assert not are_coprimitive("aabba", "aaabb")
    assert not are_coprimitive("ab", "abab")
    assert are_coprimitive("abaabb", "bbaaba")


def test_exp_examples():
    u = "aaaabaabaab"
    assert exp("a", u) == 4
    assert exp("aab", u) == 3
    assert exp("ab", "") == 0
    with pytest.raises(PreconditionError):
        exp("", "abc")


def test_power_factor_decompose_examples():
    assert power_factor_decompose("ab", "bab") == ("b", 1, "")
    assert power_factor_decompose("ab", "abab") == ("", 2, "")
    with pytest.raises(PreconditionError):
        power_factor_decompose("ab", "ba")


def test_power_factor_decompose_unique_by_brute_force():
    # every factor of base^5 with positive exponent has exactly one valid split
    bases = [w for w in words_up_to(4, "ab") if w and is_primitive(w)]
    for base in bases:
        power = base * 5
        for u in factors(power):
            if not u or exp(base, u) == 0:
                continue
            e = exp(base, u)
            splits = []
            for i in range(len(u) + 1):
                for j in range(i, len(u) + 1):
                    left, mid, right = u[:i], u[i:j], u[j:]
                    if (
                        mid == base * e
                        and len(left) < len(base)
                        and base.endswith(left)
                        and len(right) < len(base)
                        and base.startswith(right)
                    ):
                        splits.append((left, e, right))
            assert len(splits) == 1, (base, u, splits)
            assert power_factor_decompose(base, u) == splits[0]


def test_exp_additivity_window():
    # for primitive base and u.v inside a base power, exp of the product is
    # the sum or the sum plus one
    bases = [w for w in words_up_to(3, "ab") if w and is_primitive(w)]
    for base in bases:
        power = base * 6
        fs = sorted(factors(power), key=len)
        for u in fs:
            for v in fs:
                if u + v not in power:
                    continue
                total = exp(base, u + v)
                assert total in (exp(base, u) + exp(base, v), exp(base, u) + exp(base, v) + 1)


def test_common_factor_bound_examples():
    r, _ = common_factor_bound("a", "b")
    assert r == 0
    r, (n0, m0) = common_factor_bound("aba", "bba")
    assert r == 2
    with pytest.raises(PreconditionError):
        common_factor_bound("ab", "ba")


def test_common_factor_bound_brute_force_and_periodicity_cap():
    pairs = [("a", "b"), ("aba", "bba"), ("ab", "aab"), ("abaabb", "bbaaba")]
    for u, v in pairs:
        r, (n0, m0) = common_factor_bound(u, v)
        brute = max(len(x) for x in factors(u * 4) & factors(v * 4))
        assert r == brute
        assert r < len(u) + len(v) - 1
        assert factors(u * n0) & factors(v * m0) == factors(u * (n0 + 1)) & factors(v * (m0 + 1))


def test_fibonacci_words():
    assert fibonacci(0) == "a"
    assert fibonacci(1) == "ab"
    assert fibonacci(2) == "aba"
    assert fibonacci(3) == "abaab"
    for i in range(2, 10):
        assert fibonacci(i) == fibonacci(i - 1) + fibonacci(i - 2)
    assert fibonacci_marked(1) == "cacabc"
    assert fibonacci_marked(0) == "cac"


def test_fibonacci_no_fourth_powers():
    for n in range(13):
        w = fibonacci(n)
        for u in factors(w):
            if u:
                assert u * 4 not in w, (n, u)


def test_relation_oracle_examples():
    assert relation_oracle("scatt", ("aa", "abba"))
    assert relation_oracle("shuff", ("abba", "aa", "ababaa"))
    assert relation_oracle("rev", ("ab", "ba"))
    assert relation_oracle("num_a", ("aba", "baa"))
    assert not relation_oracle("num_a", ("aa", "ab"))
    assert relation_oracle("add", ("b", "aa", "bbb"))
    assert relation_oracle("mult", ("bb", "aaa", "bbbbbb"))
    assert relation_oracle("perm", ("ab", "ba"))
    h = Morphism.from_dict({"a": "b", "b": "b"})
    assert relation_oracle("morph", ("aa", "bb"), h)
    assert not relation_oracle("morph", ("aa", "ba"), h)


def test_relation_oracle_errors():
    with pytest.raises(PreconditionError):
        relation_oracle("nope", ("a", "b"))
    with pytest.raises(PreconditionError):
        relation_oracle("add", ("a", "b"))
    with pytest.raises(PreconditionError):
        relation_oracle("morph", ("a", "b"))


def test_shuffle_against_brute_force():
    def brute_shuffle(x, y):
        if not x:
            return {y}
        if not y:
            return {x}
        return {x[0] + r for r in brute_shuffle(x[1:], y)} | {y[0] + r for r in brute_shuffle(x, y[1:])}

    for x in words_up_to(3, "ab"):
        for y in words_up_to(3, "ab"):
            expected = brute_shuffle(x, y)
            for z in words_up_to(6, "ab"):
                assert relation_oracle("shuff", (x, y, z)) == (z in expected)


def test_semilinear_member():
    evens = SemilinearSet.of((0, [2]))
    assert semilinear_member(evens, 4)
    assert not semilinear_member(evens, 5)
    assert semilinear_member(SemilinearSet.of((1, [3, 5])), 9)
    assert not semilinear_member(SemilinearSet.of((1, [3, 5])), 2)
    assert semilinear_member(SemilinearSet.of((0, [])), 0)
    assert not semilinear_member(SemilinearSet.of((0, [])), 1)


def test_semilinear_member_matches_exhaustive_combination():
    s = SemilinearSet.of((1, [3, 5]), (2, [4]))
    for n in range(30):
        brute = any(
            m0 + 3 * i + 5 * j == n
            for m0, _ in [(1, None)]
            for i in range(11)
            for j in range(7)
        ) or any(2 + 4 * i == n for i in range(8))
        assert semilinear_member(s, n) == brute


def test_enumerate_semilinear_sets_counts():
    sets = list(enumerate_semilinear_sets(2, 1))
    # offsets 0..2, period subsets of {1,2}: 3 * 4 singleton components
    assert len(sets) == 12
