"""Reference languages with direct (non-logical) membership checkers.

These are the comparison targets for the formula catalog and the witness
families for the inexpressibility experiments.  Each entry carries a direct
checker and a generator of candidate witness pairs (inside-word,
outside-word) shaped so that equivalence at low round counts is plausible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .words import fibonacci_marked


def in_l1(w: str) -> bool:
    """a^n (ba)^n"""
    for n in range(len(w) // 3 + 2):
        if w == "a" * n + "ba" * n:
            return True
    return False


def in_l2(w: str) -> bool:
    """a^i (ba)^j with 1 <= i <= j"""
    for i in range(1, len(w) + 1):
        for j in range(i, len(w) + 1):
            if len(w) == i + 2 * j and w == "a" * i + "ba" * j:
                return True
    return False


def in_l3(w: str) -> bool:
    """b^n a^m b^(n+m)"""
    for n in range(len(w) + 1):
        for m in range(len(w) + 1):
            if len(w) == 2 * n + 2 * m and w == "b" * n + "a" * m + "b" * (n + m):
                return True
    return False


def in_l4(w: str) -> bool:
    """b^n a^m b^(n*m)"""
    for n in range(len(w) + 1):
        for m in range(len(w) + 1):
            if len(w) == n + m + n * m and w == "b" * n + "a" * m + "b" * (n * m):
                return True
    return False


def in_l5(w: str) -> bool:
    """(abaabb)^m (bbaaba)^m"""
    for m in range(len(w) // 12 + 2):
        if w == "abaabb" * m + "bbaaba" * m:
            return True
    return False


def in_l6(w: str) -> bool:
    """a^n b^n (ab)^n"""
    for n in range(len(w) // 4 + 2):
        if w == "a" * n + "b" * n + "ab" * n:
            return True
    return False


def in_anbn(w: str) -> bool:
    n = len(w) // 2
    return len(w) % 2 == 0 and w == "a" * n + "b" * n


def in_pow2(w: str) -> bool:
    """a^(2^n)"""
    n = len(w)
    if n == 0 or w != "a" * n:
        return False
    return n & (n - 1) == 0


def in_sigma_star(w: str) -> bool:
    return True


def in_fib_marked(w: str, marker: str = "c") -> bool:
    """Member of the marker-separated Fibonacci-prefix family."""
    n = 0
    while True:
        member = fibonacci_marked(n, marker)
        if len(member) > len(w):
            return False
        if member == w:
            return True
        n += 1


def _pairs_swapped_exponent(make_in, make_out, bound: int) -> Iterator[tuple[str, str]]:
    for q in range(1, bound + 1):
        for p in range(q):
            yield make_in(q), make_out(p, q)


def _witness_pairs(language_id: str, bound: int) -> Iterator[tuple[str, str]]:
    """Candidate (member, non-member) pairs; the solver certifies equivalence."""
    if language_id == "l1":
        yield from _pairs_swapped_exponent(
            lambda q: "a" * q + "ba" * q, lambda p, q: "a" * p + "ba" * q, bound
        )
    elif language_id == "l2":
        # outside: i > j
        for q in range(1, bound + 1):
            for p in range(q + 1, bound + 1):
                yield "a" * q + "ba" * q, "a" * p + "ba" * q
    elif language_id == "l3":
        yield from _pairs_swapped_exponent(
            lambda q: "a" * q + "b" * q, lambda p, q: "a" * p + "b" * q, bound
        )
    elif language_id == "l4":
        yield from _pairs_swapped_exponent(
            lambda q: "b" + "a" * q + "b" * q, lambda p, q: "b" + "a" * q + "b" * p, bound
        )
    elif language_id == "l5":
        for q in range(1, bound + 1):
            for p in range(bound + 1):
                if p != q:
                    yield "abaabb" * q + "bbaaba" * q, "abaabb" * p + "bbaaba" * q
    elif language_id == "l6":
        yield from _pairs_swapped_exponent(
            lambda q: "a" * q + "b" * q + "ab" * q, lambda p, q: "a" * p + "b" * q + "ab" * q, bound
        )
    elif language_id == "anbn":
        yield from _pairs_swapped_exponent(
            lambda q: "a" * q + "b" * q, lambda p, q: "a" * p + "b" * q, bound
        )
    elif language_id == "pow2":
        for n in range(1, bound.bit_length() + 1):
            m = 1 << n
            if m > bound:
                break
            for d in range(1, bound - m + 1):
                if not in_pow2("a" * (m + d)):
                    yield "a" * m, "a" * (m + d)
    elif language_id == "sigma_star":
        return
    else:
        raise ValueError(f"unknown language id {language_id!r}")


@dataclass(frozen=True)
class Language:
    id: str
    checker: Callable[[str], bool]
    alphabet: str
    witness_pairs: Callable[[int], Iterator[tuple[str, str]]]


LANGUAGES: dict[str, Language] = {
    lid: Language(lid, chk, sigma, (lambda b, lid=lid: _witness_pairs(lid, b)))
    for lid, chk, sigma in [
        ("l1", in_l1, "ab"),
        ("l2", in_l2, "ab"),
        ("l3", in_l3, "ab"),
        ("l4", in_l4, "ab"),
        ("l5", in_l5, "ab"),
        ("l6", in_l6, "ab"),
        ("anbn", in_anbn, "ab"),
        ("pow2", in_pow2, "a"),
        ("sigma_star", in_sigma_star, "ab"),
    ]
}
