"""Exact solving of k-round element-picking games over two word structures.

Positions are sets of picked element pairs; the winning condition for the
second player (Duplicator) is that the picks, extended with the constant
interpretations, form a partial isomorphism: equality patterns, constant
matches, and concatenation triples must coincide on both sides.  Triple
membership is checked in each structure's concatenation relation, so any
triple touching the null element is false on both sides.

Solving is exhaustive search with two workhorses:

* a consistency *profile* per candidate element relative to the current
  picks (equality and triple bits against picks and constants).  A reply is
  immediately losing iff its profile differs from the picked element's, and
  Spoiler wins in one round iff the two structures' profile sets differ.
  Profile fragments are cached per element and per (element, pick) pair.
* a banded memo table per position recording the largest round count known
  insufficient for Spoiler and the smallest known sufficient, shared across
  queries at different k.

Violations are permanent, so inconsistent replies are pruned on the spot.
The null element never needs search: picking it is answered by the null
element, and answering a factor with null immediately violates the triple
condition on (pick, pick, eps).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .formulas import (
    EPS,
    ConcatAtom,
    Exists,
    Forall,
    Formula,
    Lit,
    Not,
    Var,
    conj,
    disj,
)
from .structures import WordStructure, build_structure

DEFAULT_BUDGET = 50_000_000
DEFAULT_FORMULA_NODE_CAP = 500_000

BOT = None
BOT_TOKEN = "⊥"


class BudgetExceededError(RuntimeError):
    """The solver ran out of its node budget; not a verdict."""

    def __init__(self, explored: int):
        super().__init__(f"game search budget exceeded after {explored} positions")
        self.explored = explored


class FormulaSynthesisError(RuntimeError):
    """Distinguishing-formula construction exceeded the size cap."""


class IllegalMoveError(ValueError):
    pass


def _triple(a, b, c) -> bool:
    # concatenation-relation membership among universe elements; null is out
    if a is None or b is None or c is None:
        return False
    return len(a) == len(b) + len(c) and a.startswith(b) and a.endswith(c)


@dataclass(frozen=True)
class Violation:
    """A failed partial-isomorphism condition, naming the offending atoms."""

    kind: str  # "equality" | "constant" | "concat"
    detail: str

    def to_json(self) -> dict:
        return {"violation": self.kind, "detail": self.detail}


@dataclass
class StrategyNode:
    """One Spoiler move plus the refutation of every legal reply."""

    side: str  # "A" | "B"
    element: str
    replies: dict  # reply element (str or BOT_TOKEN) -> StrategyNode | Violation

    def to_json(self) -> dict:
        return {
            "move": {"structure": self.side, "element": self.element},
            "replies": {
                k: (v.to_json() if isinstance(v, (StrategyNode, Violation)) else v)
                for k, v in self.replies.items()
            },
        }

    def depth(self) -> int:
        kids = [v.depth() for v in self.replies.values() if isinstance(v, StrategyNode)]
        return 1 + (max(kids) if kids else 0)


@dataclass
class Equivalent:
    k: int
    explored: int = 0

    outcome = "equivalent"

    def to_json(self) -> dict:
        return {"outcome": "equivalent", "k": self.k, "explored": self.explored}


@dataclass
class SpoilerWins:
    k: int
    rounds_needed: int
    strategy: Optional[StrategyNode]
    formula: Optional[Formula] = None
    explored: int = 0

    outcome = "spoiler_wins"

    def to_json(self) -> dict:
        from .formulas import to_text

        return {
            "outcome": "spoiler_wins",
            "k": self.k,
            "rounds_needed": self.rounds_needed,
            "strategy": self.strategy.to_json() if self.strategy else None,
            "formula": to_text(self.formula) if self.formula is not None else None,
            "explored": self.explored,
        }


Verdict = Union[Equivalent, SpoilerWins]


def partial_isomorphism(sa: WordStructure, sb: WordStructure, picks: list[tuple]) -> bool:
    """Do the picks, extended with the constants, satisfy all three
    conditions (constant match, equality pattern, concatenation triples)?"""
    if sa.alphabet != sb.alphabet:
        raise ValueError("structures must share an alphabet")
    pairs = list(picks) + list(zip(sa.constants(), sb.constants()))
    n = len(pairs)
    for i in range(n):
        ai, bi = pairs[i]
        for j in range(n):
            aj, bj = pairs[j]
            if (ai == aj) != (bi == bj):
                return False
    for i in range(n):
        for j in range(n):
            for l in range(n):
                if _triple(pairs[i][0], pairs[j][0], pairs[l][0]) != _triple(
                    pairs[i][1], pairs[j][1], pairs[l][1]
                ):
                    return False
    return True


def find_violation(sa: WordStructure, sb: WordStructure, picks: list[tuple]) -> Optional[Violation]:
    """First failed condition over picks plus constants, or None."""

    def show(x):
        return BOT_TOKEN if x is None else (x if x != "" else "eps")

    pairs = list(picks) + list(zip(sa.constants(), sb.constants()))
    names = [f"pick{i+1}" for i in range(len(picks))] + [f"const:{c}" for c in sa.alphabet] + ["const:eps"]
    n = len(pairs)
    for i in range(n):
        for j in range(n):
            if (pairs[i][0] == pairs[j][0]) != (pairs[i][1] == pairs[j][1]):
                kind = "constant" if j >= len(picks) else "equality"
                return Violation(
                    kind,
                    f"{names[i]}={show(pairs[i][0])}|{show(pairs[i][1])} vs {names[j]}={show(pairs[j][0])}|{show(pairs[j][1])}",
                )
    for i in range(n):
        for j in range(n):
            for l in range(n):
                ta = _triple(pairs[i][0], pairs[j][0], pairs[l][0])
                tb = _triple(pairs[i][1], pairs[j][1], pairs[l][1])
                if ta != tb:
                    return Violation(
                        "concat",
                        f"{names[i]} = {names[j]}.{names[l]} holds in {'A only' if ta else 'B only'}"
                        f" ({show(pairs[i][0])}|{show(pairs[i][1])} = {show(pairs[j][0])}|{show(pairs[j][1])}"
                        f" . {show(pairs[l][0])}|{show(pairs[l][1])})",
                    )
    return None


class GameSolver:
    """Shared search state for one pair of words (one game board)."""

    def __init__(
        self,
        word_a: str,
        word_b: str,
        alphabet: str | None = None,
        budget: int = DEFAULT_BUDGET,
    ):
        sigma = set(word_a) | set(word_b) | set(alphabet or "")
        self.alphabet = tuple(sorted(sigma))
        self.sa = build_structure(word_a, self.alphabet)
        self.sb = build_structure(word_b, self.alphabet)
        self.consts_a = self.sa.constants()
        self.consts_b = self.sb.constants()
        self.identical = word_a == word_b
        self.budget = budget
        self.explored = 0
        self._p0: tuple[dict, dict] = ({}, {})
        self._p1: tuple[dict, dict] = ({}, {})
        self._band: dict[frozenset, list[int]] = {}
        self.constants_ok = partial_isomorphism(self.sa, self.sb, [])

    # -- profiles ----------------------------------------------------------

    def _consts(self, side: int):
        return self.consts_a if side == 0 else self.consts_b

    def _facs(self, side: int):
        return (self.sa if side == 0 else self.sb).facs

    def _profile0(self, side: int, e: str) -> int:
        cache = self._p0[side]
        got = cache.get(e)
        if got is not None:
            return got
        consts = self._consts(side)
        bits = 0
        for c in consts:
            bits = bits << 1 | (e == c)
        bits = bits << 1 | _triple(e, e, e)
        for c in consts:
            bits = bits << 1 | _triple(e, e, c)
            bits = bits << 1 | _triple(e, c, e)
            bits = bits << 1 | _triple(c, e, e)
        for c1 in consts:
            for c2 in consts:
                bits = bits << 1 | _triple(e, c1, c2)
                bits = bits << 1 | _triple(c1, e, c2)
                bits = bits << 1 | _triple(c1, c2, e)
        cache[e] = bits
        return bits

    def _profile1(self, side: int, e: str, x: str) -> int:
        cache = self._p1[side]
        key = (e, x)
        got = cache.get(key)
        if got is not None:
            return got
        consts = self._consts(side)
        bits = 1 if e == x else 0
        bits = bits << 1 | _triple(e, e, x)
        bits = bits << 1 | _triple(e, x, e)
        bits = bits << 1 | _triple(x, e, e)
        bits = bits << 1 | _triple(e, x, x)
        bits = bits << 1 | _triple(x, e, x)
        bits = bits << 1 | _triple(x, x, e)
        for c in consts:
            bits = bits << 1 | _triple(e, x, c)
            bits = bits << 1 | _triple(e, c, x)
            bits = bits << 1 | _triple(x, e, c)
            bits = bits << 1 | _triple(c, e, x)
            bits = bits << 1 | _triple(x, c, e)
            bits = bits << 1 | _triple(c, x, e)
        cache[key] = bits
        return bits

    @staticmethod
    def _cross(e: str, x: str, y: str) -> int:
        bits = _triple(e, x, y)
        bits = bits << 1 | _triple(e, y, x)
        bits = bits << 1 | _triple(x, e, y)
        bits = bits << 1 | _triple(y, e, x)
        bits = bits << 1 | _triple(x, y, e)
        bits = bits << 1 | _triple(y, x, e)
        return bits

    def profile(self, side: int, e: str, pick_values: tuple[str, ...]) -> tuple:
        parts = [self._profile0(side, e)]
        for x in pick_values:
            parts.append(self._profile1(side, e, x))
        m = len(pick_values)
        for i in range(m):
            for j in range(i + 1, m):
                parts.append(self._cross(e, pick_values[i], pick_values[j]))
        return tuple(parts)

    def consistent_extension(self, picks, na, nb) -> bool:
        """Would adding the pair keep the position a partial isomorphism?"""
        vals_a = tuple(a for a, _ in picks)
        vals_b = tuple(b for _, b in picks)
        return self.profile(0, na, vals_a) == self.profile(1, nb, vals_b)

    # -- search ------------------------------------------------------------

    def _tick(self):
        self.explored += 1
        if self.explored > self.budget:
            raise BudgetExceededError(self.explored)

    def _ordered_picks(self, picks: frozenset) -> tuple:
        return tuple(sorted(picks, key=lambda p: (len(p[0]), p[0], len(p[1]), p[1])))

    def wins_in_one(self, picks: frozenset) -> bool:
        """Spoiler wins in one more round iff profile sets differ."""
        ordered = self._ordered_picks(picks)
        vals_a = tuple(a for a, _ in ordered)
        vals_b = tuple(b for _, b in ordered)
        profs_a = {self.profile(0, e, vals_a) for e in self.sa.facs}
        profs_b = {self.profile(1, e, vals_b) for e in self.sb.facs}
        return profs_a != profs_b

    def can_win(self, picks: frozenset, d: int) -> bool:
        """Can Spoiler force a violation within d more rounds?"""
        if d <= 0:
            return False
        if self.identical and all(a == b for a, b in picks):
            return False
        band = self._band.get(picks)
        if band is None:
            band = [0, 1 << 30]
            self._band[picks] = band
        if d <= band[0]:
            return False
        if d >= band[1]:
            return True
        self._tick()
        result = self._search(picks, d)
        if result:
            band[1] = min(band[1], d)
        else:
            band[0] = max(band[0], d)
        return result

    def _search(self, picks: frozenset, d: int) -> bool:
        if self.wins_in_one(picks):
            return True
        if d == 1:
            return False
        for side, elem in self._moves(picks):
            replies = self._surviving_replies(picks, side, elem)
            # wins_in_one was false, so every move has at least one survivor
            if all(self.can_win(picks | {self._pair(side, elem, b)}, d - 1) for b in replies):
                return True
        return False

    def _pair(self, side: int, elem: str, reply: str) -> tuple:
        return (elem, reply) if side == 0 else (reply, elem)

    def _moves(self, picks: frozenset):
        """Candidate Spoiler moves: unpicked factors, longest first, then
        lexicographic, structure A before B."""
        picked_a = {a for a, _ in picks}
        picked_b = {b for _, b in picks}
        moves = [(0, e) for e in self.sa.facs if e not in picked_a]
        moves += [(1, e) for e in self.sb.facs if e not in picked_b]
        moves.sort(key=lambda m: (-len(m[1]), m[1], m[0]))
        return moves

    def _surviving_replies(self, picks: frozenset, side: int, elem: str) -> list[str]:
        ordered = self._ordered_picks(picks)
        vals_a = tuple(a for a, _ in ordered)
        vals_b = tuple(b for _, b in ordered)
        other = 1 - side
        vals_own = vals_a if side == 0 else vals_b
        vals_other = vals_b if side == 0 else vals_a
        target = self.profile(side, elem, vals_own)
        replies = [b for b in self._facs(other) if self.profile(other, b, vals_other) == target]
        # likely survivors first: identical string, then nearest length
        replies.sort(key=lambda b: (b != elem, abs(len(b) - len(elem)), len(b), b))
        return replies

    def min_win_depth(self, picks: frozenset, k: int) -> Optional[int]:
        """Smallest d <= k such that Spoiler wins within d rounds, else None."""
        for d in range(1, k + 1):
            if self.can_win(picks, d):
                return d
        return None

    # -- certificates --------------------------------------------------------

    def best_move(self, picks: frozenset, d: int) -> tuple[int, str]:
        """First move in tie-break order that forces a win within d rounds."""
        for side, elem in self._moves(picks):
            replies = self._surviving_replies(picks, side, elem)
            if not replies:
                return side, elem
            if d >= 2 and all(self.can_win(picks | {self._pair(side, elem, b)}, d - 1) for b in replies):
                return side, elem
        raise AssertionError("best_move called on a position Spoiler cannot win")

    def build_strategy(self, picks: frozenset, d: int, pick_list: tuple = ()) -> StrategyNode:
        side, elem = self.best_move(picks, d)
        other = 1 - side
        replies: dict = {}
        for b in self._facs(other):
            pair = self._pair(side, elem, b)
            child_list = pick_list + (pair,)
            if not self.consistent_extension(self._ordered_picks(picks), *pair):
                v = find_violation(self.sa, self.sb, list(child_list))
                replies[b if b != "" else "eps"] = v if v is not None else Violation("concat", "inconsistent extension")
            else:
                replies[b if b != "" else "eps"] = self.build_strategy(picks | {pair}, d - 1, child_list)
        replies[BOT_TOKEN] = Violation(
            "concat",
            f"{elem if elem else 'eps'} = {elem if elem else 'eps'}.eps holds on the picking side only",
        )
        return StrategyNode("A" if side == 0 else "B", elem if elem != "" else "eps", replies)

    # -- distinguishing formulas ----------------------------------------------

    def distinguishing_formula(self, k: int, node_cap: int = DEFAULT_FORMULA_NODE_CAP) -> Formula:
        if not self.constants_ok:
            return self._atomic_difference(())
        d = self.min_win_depth(frozenset(), k)
        if d is None:
            raise ValueError("words are k-equivalent; no distinguishing sentence of this rank exists")
        self._nodes_built = 0
        self._node_cap = node_cap
        return self._formula(frozenset(), d, ())

    def _count_nodes(self, n: int):
        self._nodes_built += n
        if self._nodes_built > self._node_cap:
            raise FormulaSynthesisError(f"formula size cap {self._node_cap} exceeded")

    def _formula(self, picks: frozenset, d: int, pick_list: tuple) -> Formula:
        side, elem = self.best_move(picks, d)
        other = 1 - side
        var = Var(f"v{len(pick_list) + 1}")
        subs: list[Formula] = []
        seen = set()
        for b in self._facs(other):
            pair = self._pair(side, elem, b)
            child_list = pick_list + (pair,)
            if not self.consistent_extension(self._ordered_picks(picks), *pair):
                sub = self._atomic_difference(child_list)
            else:
                child = picks | {pair}
                child_d = self.min_win_depth(child, d - 1)
                sub = self._formula(child, child_d, child_list)
            if sub not in seen:
                seen.add(sub)
                subs.append(sub)
        self._count_nodes(len(subs) + 1)
        if side == 0:
            return Exists(var, conj(*subs))
        return Forall(var, disj(*subs))

    def _atomic_difference(self, pick_list: tuple) -> Formula:
        """An atom (or negated atom) over pick variables and constants that
        holds in structure A under the A-side picks but not in B, witnessing
        the partial-isomorphism failure."""
        terms: list[tuple] = []
        for i, (a, b) in enumerate(pick_list):
            terms.append((Var(f"v{i + 1}"), a, b))
        for idx, c in enumerate(self.alphabet):
            terms.append((Lit(c), self.consts_a[idx], self.consts_b[idx]))
        terms.append((EPS, "", ""))
        for ti, ai, bi in terms:
            for tj, aj, bj in terms:
                for tl, al, bl in terms:
                    ta = _triple(ai, aj, al)
                    tb = _triple(bi, bj, bl)
                    if ta == tb:
                        continue
                    atom = ConcatAtom(ti, tj, tl)
                    return atom if ta else Not(atom)
        raise AssertionError("no atomic difference found; position was consistent")


def solve(
    w: str,
    v: str,
    k: int,
    want_formula: bool = False,
    want_strategy: bool = True,
    alphabet: str | None = None,
    budget: int = DEFAULT_BUDGET,
    solver: GameSolver | None = None,
) -> Verdict:
    """Decide the k-round game on the structures of w and v.

    Returns Equivalent, or SpoilerWins carrying a full strategy tree and,
    on request, a distinguishing sentence of rank at most k.  A blown node
    budget raises BudgetExceededError rather than misreporting.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    g = solver or GameSolver(w, v, alphabet=alphabet, budget=budget)
    if not g.constants_ok:
        formula = g._atomic_difference(()) if want_formula else None
        return SpoilerWins(k, 0, None, formula, g.explored)
    if g.identical:
        return Equivalent(k, g.explored)
    d = g.min_win_depth(frozenset(), k)
    if d is None:
        return Equivalent(k, g.explored)
    strategy = g.build_strategy(frozenset(), d) if want_strategy else None
    formula = None
    if want_formula:
        g._nodes_built = 0
        g._node_cap = DEFAULT_FORMULA_NODE_CAP
        formula = g._formula(frozenset(), d, ())
    return SpoilerWins(k, d, strategy, formula, g.explored)


def equiv_k(w: str, v: str, k: int, alphabet: str | None = None, budget: int = DEFAULT_BUDGET) -> bool:
    """w and v are indistinguishable in the k-round game."""
    g = GameSolver(w, v, alphabet=alphabet, budget=budget)
    if not g.constants_ok:
        return False
    if g.identical:
        return True
    return g.min_win_depth(frozenset(), k) is None


def distinguishing_formula(
    w: str, v: str, k: int, alphabet: str | None = None, budget: int = DEFAULT_BUDGET
) -> Formula:
    """A sentence of quantifier rank at most k true on w and false on v.

    Built by recursion on Spoiler's winning strategy: a pick in the first
    structure becomes an existential over the replies' refutations, a pick
    in the second the dual universal, and exhausted positions yield the
    failing atom.  Raises if the words are k-equivalent.
    """
    g = GameSolver(w, v, alphabet=alphabet, budget=budget)
    if g.identical:
        raise ValueError("identical words are k-equivalent for every k")
    return g.distinguishing_formula(k)


def search_equiv_pair(
    family: Callable[[int], str],
    k: int,
    bound: int,
    alphabet: str | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Optional[tuple[int, int, dict]]:
    """Smallest (p, q), p < q <= bound, with family(p) and family(q)
    equivalent at k rounds; certificate records the words and verdict."""
    for p in range(bound + 1):
        for q in range(p + 1, bound + 1):
            wp, wq = family(p), family(q)
            if equiv_k(wp, wq, k, alphabet=alphabet, budget=budget):
                cert = {
                    "p": p,
                    "q": q,
                    "wordA": wp,
                    "wordB": wq,
                    "k": k,
                    "outcome": "equivalent",
                }
                return p, q, cert
    return None


# -- interactive-position helpers (service side) ---------------------------


@dataclass
class GamePosition:
    """A game in progress: the solver plus the ordered picks and rounds left."""

    solver: GameSolver
    picks: list[tuple]
    rounds_left: int

    def pick_set(self) -> frozenset:
        # null-null pairs are neutral for the win condition; the solver's
        # profile machinery tracks factor pairs only
        return frozenset((a, b) for a, b in self.picks if a is not None and b is not None)

    def violated(self) -> bool:
        return find_violation(self.solver.sa, self.solver.sb, self.picks) is not None


def duplicator_respond(pos: GamePosition, side: str, element: str | None) -> tuple[str | None, bool]:
    """Engine reply to a Spoiler move.

    Returns (reply element, surviving) where surviving is False when every
    reply loses.  A null pick is answered by null without search.
    """
    g = pos.solver
    if pos.rounds_left < 1:
        raise IllegalMoveError("no rounds left")
    side_idx = 0 if side == "A" else 1
    if element is BOT or element == BOT_TOKEN:
        if pos.violated():
            return BOT, False
        return BOT, not g.can_win(pos.pick_set(), pos.rounds_left - 1)
    if element not in g._facs(side_idx) :
        raise IllegalMoveError(f"element {element!r} is not in structure {side}'s universe")
    if pos.violated():
        other = g._facs(1 - side_idx)
        return (min(other, key=lambda b: (len(b), b)) if other else BOT), False
    ordered = g._ordered_picks(pos.pick_set())
    vals_a = tuple(a for a, _ in ordered)
    vals_b = tuple(b for _, b in ordered)
    own_vals = vals_a if side_idx == 0 else vals_b
    other_vals = vals_b if side_idx == 0 else vals_a
    target = g.profile(side_idx, element, own_vals)
    other = 1 - side_idx
    candidates = [b for b in g._facs(other) if g.profile(other, b, other_vals) == target]
    candidates.sort(key=lambda b: (len(b), b))
    base = pos.pick_set()
    for b in candidates:
        if not g.can_win(base | {g._pair(side_idx, element, b)}, pos.rounds_left - 1):
            return b, True
    # all replies lose: maximize survival depth
    best, best_depth = None, -1
    for b in candidates:
        child = base | {g._pair(side_idx, element, b)}
        depth = g.min_win_depth(child, pos.rounds_left - 1)
        depth = (1 << 30) if depth is None else depth
        if depth > best_depth:
            best, best_depth = b, depth
    if best is None:
        allb = g._facs(other)
        best = min(allb, key=lambda b: (len(b), b)) if allb else BOT
    return best, False


@dataclass
class WinsIn:
    rounds: int

    def to_json(self):
        return {"evaluation": "wins_in", "rounds": self.rounds}


@dataclass
class CannotWin:
    def to_json(self):
        return {"evaluation": "cannot_win"}


def spoiler_hint(pos: GamePosition) -> tuple[Optional[tuple[str, str | None]], WinsIn | CannotWin]:
    """Optimal Spoiler move with the rounds needed, or CannotWin."""
    g = pos.solver
    if pos.rounds_left < 1:
        raise IllegalMoveError("no rounds left")
    if pos.violated():
        return None, WinsIn(0)
    base = pos.pick_set()
    for d in range(1, pos.rounds_left + 1):
        if not g.can_win(base, d):
            continue
        side, elem = g.best_move(base, d)
        return ("A" if side == 0 else "B", elem), WinsIn(d)
    return None, CannotWin()
