"""Regular expressions for constraint atoms.

Only the operators the constraint language needs: literals, the empty word
(written ``_``), concatenation, union ``|``, Kleene star and plus.  Matching
simulates a Thompson-style NFA with epsilon closure, no backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union


class RegexSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class RLit:
    letter: str


@dataclass(frozen=True)
class REps:
    pass


@dataclass(frozen=True)
class RCat:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class RAlt:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class RStar:
    body: "Regex"


@dataclass(frozen=True)
class RPlus:
    body: "Regex"


Regex = Union[RLit, REps, RCat, RAlt, RStar, RPlus]

R_EPS = REps()


def regex_from_word(w: str) -> Regex:
    """A regex matching exactly the word w."""
    if not w:
        return R_EPS
    out: Regex = RLit(w[0])
    for c in w[1:]:
        out = RCat(out, RLit(c))
    return out


def parse_regex(text: str) -> Regex:
    """Parse the concrete syntax: letters, ``_``, ``()``, ``|``, ``*``, ``+``."""
    pos = 0

    def peek():
        return text[pos] if pos < len(text) else None

    def fail(msg):
        raise RegexSyntaxError(f"regex error at position {pos}: {msg} in /{text}/")

    def parse_alt():
        nonlocal pos
        node = parse_cat()
        while peek() == "|":
            pos += 1
            node = RAlt(node, parse_cat())
        return node

    def parse_cat():
        nonlocal pos
        parts = []
        while peek() is not None and peek() not in ")|":
            parts.append(parse_postfix())
        if not parts:
            return R_EPS
        node = parts[0]
        for p in parts[1:]:
            node = RCat(node, p)
        return node

    def parse_postfix():
        nonlocal pos
        node = parse_base()
        while peek() in ("*", "+"):
            node = RStar(node) if peek() == "*" else RPlus(node)
            pos += 1
        return node

    def parse_base():
        nonlocal pos
        c = peek()
        if c == "(":
            pos += 1
            node = parse_alt()
            if peek() != ")":
                fail("expected ')'")
            pos += 1
            return node
        if c is None or c in "*+)|":
            fail(f"unexpected {c!r}")
        pos += 1
        return R_EPS if c == "_" else RLit(c)

    node = parse_alt()
    if pos != len(text):
        fail("trailing input")
    return node


def regex_to_text(r: Regex) -> str:
    def prec(n):
        if isinstance(n, RAlt):
            return 0
        if isinstance(n, RCat):
            return 1
        return 2

    def render(n, minp):
        if isinstance(n, RLit):
            s = n.letter
        elif isinstance(n, REps):
            s = "_"
        elif isinstance(n, RCat):
            s = render(n.left, 1) + render(n.right, 1)
        elif isinstance(n, RAlt):
            s = render(n.left, 0) + "|" + render(n.right, 0)
        elif isinstance(n, RStar):
            s = render(n.body, 2) + "*"
        elif isinstance(n, RPlus):
            s = render(n.body, 2) + "+"
        else:
            raise TypeError(f"not a regex: {n!r}")
        return "(" + s + ")" if prec(n) < minp else s

    return render(r, 0)


class _NFA:
    def __init__(self):
        self.eps: list[list[int]] = []
        self.step: list[dict[str, int]] = []

    def new_state(self) -> int:
        self.eps.append([])
        self.step.append({})
        return len(self.eps) - 1


def _build(nfa: _NFA, r: Regex, src: int, dst: int) -> None:
    if isinstance(r, RLit):
        mid = nfa.new_state()
        nfa.step[src][r.letter] = mid
        nfa.eps[mid].append(dst)
    elif isinstance(r, REps):
        nfa.eps[src].append(dst)
    elif isinstance(r, RCat):
        mid = nfa.new_state()
        _build(nfa, r.left, src, mid)
        _build(nfa, r.right, mid, dst)
    elif isinstance(r, RAlt):
        _build(nfa, r.left, src, dst)
        _build(nfa, r.right, src, dst)
    elif isinstance(r, RStar):
        loop = nfa.new_state()
        nfa.eps[src].append(loop)
        nfa.eps[loop].append(dst)
        _build(nfa, r.body, loop, loop)
    elif isinstance(r, RPlus):
        loop = nfa.new_state()
        _build(nfa, r.body, src, loop)
        nfa.eps[loop].append(dst)
        _build(nfa, r.body, loop, loop)
    else:
        raise TypeError(f"not a regex: {r!r}")


@lru_cache(maxsize=512)
def _compiled(r: Regex) -> tuple[_NFA, int, int]:
    nfa = _NFA()
    src, dst = nfa.new_state(), nfa.new_state()
    _build(nfa, r, src, dst)
    return nfa, src, dst


def _closure(nfa: _NFA, states: set[int]) -> frozenset[int]:
    stack = list(states)
    seen = set(states)
    while stack:
        s = stack.pop()
        for t in nfa.eps[s]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def regex_match(r: Regex, u: str) -> bool:
    """Whole-word membership of u in the language of r."""
    nfa, src, dst = _compiled(r)
    cur = _closure(nfa, {src})
    for c in u:
        nxt = {nfa.step[s][c] for s in cur if c in nfa.step[s]}
        if not nxt:
            return False
        cur = _closure(nfa, nxt)
    return dst in cur


def single_word_of(r: Regex) -> str | None:
    """The unique word denoted by a star-free, union-free expression, else None."""
    if isinstance(r, RLit):
        return r.letter
    if isinstance(r, REps):
        return ""
    if isinstance(r, RCat):
        a, b = single_word_of(r.left), single_word_of(r.right)
        return a + b if a is not None and b is not None else None
    return None


def is_bounded_regex(r: Regex) -> bool:
    """Conservative syntactic check for the bounded normal form.

    Accepts expressions built from literals, the empty word, and stars or
    pluses applied to single-word expressions, closed under union and
    concatenation.  Sound (accepted implies the language is bounded), not
    complete.
    """
    if isinstance(r, (RLit, REps)):
        return True
    if isinstance(r, (RCat, RAlt)):
        return is_bounded_regex(r.left) and is_bounded_regex(r.right)
    if isinstance(r, (RStar, RPlus)):
        return single_word_of(r.body) is not None
    raise TypeError(f"not a regex: {r!r}")
