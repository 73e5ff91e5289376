import pytest

from fclab.catalog import UnknownFormulaError, catalog
from fclab.evaluate import enumerate_models, language_member
from fclab.formulas import quantifier_rank
from fclab.languages import LANGUAGES, in_fib_marked
from fclab.words import fibonacci_marked

from conftest import words_up_to


def test_unknown_id():
    with pytest.raises(UnknownFormulaError):
        catalog("no_such_formula")


def test_phi_w_binds_whole_word():
    phi = catalog("phi_w")
    for w in words_up_to(6):
        ms = enumerate_models(phi, w, alphabet="ab")
        assert ms == [{"x": w}], w


def test_phi_ww_language():
    phi = catalog("phi_ww")
    for w in words_up_to(8):
        expected = len(w) % 2 == 0 and w[: len(w) // 2] == w[len(w) // 2 :]
        assert language_member(phi, w, alphabet="ab") == expected, w


def test_phi_copy_and_copies():
    copy = catalog("phi_copy")
    ms = enumerate_models(copy, "aaaa")
    assert {(m["x"], m["y"]) for m in ms} == {("", ""), ("aa", "a"), ("aaaa", "aa")}
    copies3 = catalog("phi_copies", k=3)
    ms = enumerate_models(copies3, "aaa")
    assert ("aaa", "a") in {(m["x"], m["y"]) for m in ms}
    with pytest.raises(ValueError):
        catalog("phi_copies", k=0)


def test_phi_vbv_language():
    phi = catalog("phi_vbv")
    assert quantifier_rank(phi) == 5
    for w in words_up_to(7):
        n = (len(w) - 1) // 2
        expected = len(w) % 2 == 1 and w[n] == "b" and w[:n] == w[n + 1 :]
        assert language_member(phi, w, alphabet="ab") == expected, w


def test_phi_fib_family_and_negatives():
    phi = catalog("phi_fib")
    for n in range(5):
        assert language_member(phi, fibonacci_marked(n), alphabet="abc"), n
    for w in ["", "c", "cc", "ca", "cacab", "cacabcc", "cacbcac", "cacabcbaac", "acacabc"]:
        assert not language_member(phi, w, alphabet="abc"), w


def test_phi_fib_matches_checker_on_short_words():
    phi = catalog("phi_fib")
    for w in words_up_to(7, "abc"):
        assert language_member(phi, w, alphabet="abc") == in_fib_marked(w), w


def test_phi_wstar():
    phi = catalog("phi_wstar", w="ab")
    ms = enumerate_models(phi, "abab", alphabet="ab")
    assert {m["x"] for m in ms} == {"", "ab", "abab"}
    # imprimitive base: only true powers of the word itself qualify
    phi = catalog("phi_wstar", w="aa")
    ms = enumerate_models(phi, "aaaaa", alphabet="a")
    assert {m["x"] for m in ms} == {"", "aa", "aaaa"}


def test_psi_languages_small():
    pairs = [("psi_1", "l1"), ("psi_2", "l2"), ("psi_3", "l3"), ("psi_4", "l4"), ("psi_6", "l6")]
    for pid, lid in pairs:
        phi = catalog(pid)
        checker = LANGUAGES[lid].checker
        for w in words_up_to(7):
            assert language_member(phi, w, alphabet="ab") == checker(w), (pid, w)


def test_psi_5_on_block_words():
    phi = catalog("psi_5")
    checker = LANGUAGES["l5"].checker
    for w in ["", "abaabb", "bbaaba", "abaabbbbaaba", "abaabbbbaababbaaba", "bbaabaabaabb"]:
        assert language_member(phi, w, alphabet="ab") == checker(w), w


def test_psi_morph_is_anbn():
    phi = catalog("psi_morph")
    for w in words_up_to(8):
        assert language_member(phi, w, alphabet="ab") == LANGUAGES["anbn"].checker(w), w
