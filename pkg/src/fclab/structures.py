"""Relational word structures.

A word w is represented by the structure whose universe is the set of
factors of w plus a null element, with the ternary concatenation relation
restricted to factors, a constant per alphabet letter (null when the letter
does not occur in w), and a constant for the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass, field

BOT = None  # the null universe element; factors are str, null is None


def _sort_key(u: str):
    return (len(u), u)


@dataclass(frozen=True)
class WordStructure:
    word: str
    alphabet: tuple[str, ...]
    facs: tuple[str, ...] = field(init=False, repr=False)
    fac_set: frozenset[str] = field(init=False, repr=False)

    def __post_init__(self):
        present = set(self.word)
        if not present <= set(self.alphabet):
            raise ValueError(f"word {self.word!r} uses letters outside alphabet {self.alphabet}")
        fs = {""}
        n = len(self.word)
        for i in range(n):
            for j in range(i + 1, n + 1):
                fs.add(self.word[i : j])
        object.__setattr__(self, "facs", tuple(sorted(fs, key=_sort_key)))
        object.__setattr__(self, "fac_set", frozenset(fs))

    def const(self, letter: str) -> str | None:
        """Interpretation of a letter constant: the letter, or null if absent."""
        return letter if letter in self.fac_set and letter != "" else BOT

    def constants(self) -> list[str | None]:
        """Interpretations of all constants, letters in alphabet order then eps."""
        return [self.const(c) for c in self.alphabet] + [""]

    def has_triple(self, a: str | None, b: str | None, c: str | None) -> bool:
        """Membership in the concatenation relation; anything nullish is out."""
        if a is None or b is None or c is None:
            return False
        return len(a) == len(b) + len(c) and a.startswith(b) and a.endswith(c)

    def prefixes(self, u: str) -> list[str]:
        return [u[:i] for i in range(len(u) + 1)]

    def suffixes(self, u: str) -> list[str]:
        return [u[i:] for i in range(len(u) + 1)]


def build_structure(w: str, alphabet: str | tuple[str, ...] | None = None) -> WordStructure:
    """Structure for w; the alphabet defaults to the letters occurring in w."""
    if alphabet is None:
        alphabet = tuple(sorted(set(w)))
    elif isinstance(alphabet, str):
        alphabet = tuple(sorted(set(alphabet)))
    else:
        alphabet = tuple(sorted(set(alphabet)))
    return WordStructure(w, alphabet)


def concat_triples(s: WordStructure) -> set[tuple[str, str, str]]:
    """The concatenation relation materialized (quadratic in factor count)."""
    out = set()
    for b in s.facs:
        for c in s.facs:
            a = b + c
            if a in s.fac_set:
                out.add((a, b, c))
    return out
