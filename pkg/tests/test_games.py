"""Game solver tests, anchored by an independent brute-force reference."""

import itertools

import pytest

from fclab.games import (
    BOT,
    BudgetExceededError,
    Equivalent,
    GamePosition,
    GameSolver,
    SpoilerWins,
    distinguishing_formula,
    duplicator_respond,
    equiv_k,
    partial_isomorphism,
    search_equiv_pair,
    solve,
    spoiler_hint,
    CannotWin,
    WinsIn,
)
from fclab.evaluate import language_member
from fclab.formulas import quantifier_rank
from fclab.structures import build_structure

from conftest import words_up_to


# -- independent reference implementation ------------------------------------


def ref_partial_iso(pairs):
    n = len(pairs)
    for i in range(n):
        for j in range(n):
            if (pairs[i][0] == pairs[j][0]) != (pairs[i][1] == pairs[j][1]):
                return False

    def t(a, b, c):
        return a is not None and b is not None and c is not None and a == b + c

    for i in range(n):
        for j in range(n):
            for l in range(n):
                if t(pairs[i][0], pairs[j][0], pairs[l][0]) != t(pairs[i][1], pairs[j][1], pairs[l][1]):
                    return False
    return True


def ref_equiv(w, v, k, alphabet):
    """Naive game-tree evaluation, universes include the null element."""
    sa, sb = build_structure(w, alphabet), build_structure(v, alphabet)
    consts = list(zip(sa.constants(), sb.constants()))
    ua = list(sa.facs) + [BOT]
    ub = list(sb.facs) + [BOT]

    def dup_wins(pairs, rounds):
        if not ref_partial_iso(pairs + consts):
            return False
        if rounds == 0:
            return True
        for a in ua:
            if not any(dup_wins(pairs + [(a, b)], rounds - 1) for b in ub):
                return False
        for b in ub:
            if not any(dup_wins(pairs + [(a, b)], rounds - 1) for a in ua):
                return False
        return True

    return dup_wins([], k)


# -- cross-checks -------------------------------------------------------------


def test_solver_matches_reference_small():
    words = words_up_to(3)
    for w, v in itertools.combinations_with_replacement(words, 2):
        for k in range(3):
            expected = ref_equiv(w, v, k, "ab")
            assert equiv_k(w, v, k) == expected, (w, v, k)


def test_solver_matches_reference_k3_spot():
    cases = [("aaa", "aaaa"), ("ab", "abab"), ("aab", "aabaab"), ("ba", "ba"), ("abab", "abab")]
    for w, v in cases:
        assert equiv_k(w, v, 3) == ref_equiv(w, v, 3, "ab"), (w, v)


def test_solver_matches_reference_k3_random_len4():
    import random

    rng = random.Random(4242)
    words = [w for w in words_up_to(4) if len(w) >= 3]
    for _ in range(12):
        w, v = rng.choice(words), rng.choice(words)
        assert equiv_k(w, v, 3) == ref_equiv(w, v, 3, "ab"), (w, v)


def test_duplicator_respond_keeps_winning_positions_winning():
    # from any equivalent starting pair, whatever Spoiler opens with, the
    # engine's reply must land in a position that is still Duplicator-won
    pairs = [("a" * 3, "a" * 4), ("aba", "ababa"), ("ab", "ab")]
    for w, v in pairs:
        k = 1 if w != v else 2
        assert equiv_k(w, v, k)
        g = GameSolver(w, v)
        for side, facs in (("A", g.sa.facs), ("B", g.sb.facs)):
            for u in facs:
                reply, surviving = duplicator_respond(GamePosition(g, [], k), side, u)
                assert surviving, (w, v, side, u)
                pair = (u, reply) if side == "A" else (reply, u)
                assert not g.can_win(frozenset([pair]), k - 1), (w, v, side, u, reply)


def test_solver_matches_reference_unary():
    for p in range(6):
        for q in range(6):
            for k in range(3):
                assert equiv_k("a" * p, "a" * q, k) == ref_equiv("a" * p, "a" * q, k, "a"), (p, q, k)


# -- partial isomorphism ------------------------------------------------------


def test_partial_isomorphism_constants_only():
    sa = build_structure("ab", "ab")
    sb = build_structure("ba", "ab")
    assert partial_isomorphism(sa, sb, [])
    sc = build_structure("aa", "ab")
    assert not partial_isomorphism(sa, sc, [])  # b present in only one word


def test_partial_isomorphism_paper_example():
    sa = build_structure("aaaa", "a")
    sb = build_structure("aaa", "a")
    for b1 in sb.facs:
        assert not partial_isomorphism(sa, sb, [("aaaa", b1), ("aa", b1)]) or not partial_isomorphism(
            sa, sb, [("aaaa", "aaa"), ("aa", b1)]
        )
    # concretely: no reply to aa works once aaaa |-> aaa is on the board
    assert not any(partial_isomorphism(sa, sb, [("aaaa", "aaa"), ("aa", b)]) for b in sb.facs)


def test_partial_isomorphism_shared_letter():
    sa = build_structure("aba", "ab")
    sb = build_structure("ba", "ab")
    assert partial_isomorphism(sa, sb, [("a", "a")])


# -- solve / equiv ------------------------------------------------------------


def test_solve_paper_two_round_example():
    verdict = solve("aaaa", "aaa", 2)
    assert isinstance(verdict, SpoilerWins)
    assert verdict.rounds_needed == 2
    assert verdict.strategy.side == "A"
    assert verdict.strategy.element == "aaaa"


def test_solve_identity_is_equivalent():
    for w in ["", "a", "abab", "aabba"]:
        assert isinstance(solve(w, w, 3), Equivalent)


def test_equiv_examples():
    assert equiv_k("aaaa", "aaa", 1)
    assert not equiv_k("aaaa", "aaa", 2)
    assert not equiv_k("ab", "ba", 2)
    assert not equiv_k("ab", "ba", 1)


def test_monotonicity_small():
    words = words_up_to(4)
    for w, v in itertools.combinations(words, 2):
        if equiv_k(w, v, 2):
            assert equiv_k(w, v, 1), (w, v)


def test_equiv_is_equivalence_relation():
    words = words_up_to(4)
    for k in (1, 2):
        classes = {}
        for w in words:
            assert equiv_k(w, w, k)
        rel = {(w, v): equiv_k(w, v, k) for w, v in itertools.combinations(words, 2)}
        for (w, v), r in rel.items():
            assert r == equiv_k(v, w, k)
        for w, v, u in itertools.combinations(words, 3):
            if rel.get((w, v)) and rel.get((v, u)):
                assert rel.get((w, u)), (w, v, u)


def test_budget_exceeded_is_distinct():
    with pytest.raises(BudgetExceededError):
        solve("aabbab", "aabbba", 4, budget=5)


# -- distinguishing formulas --------------------------------------------------


def test_distinguishing_formula_examples():
    phi = distinguishing_formula("aaaa", "aaa", 2)
    assert quantifier_rank(phi) <= 2
    assert language_member(phi, "aaaa", alphabet="a")
    assert not language_member(phi, "aaa", alphabet="a")


def test_distinguishing_formula_constant_difference():
    # w contains b, v does not: a quantifier-free sentence suffices
    phi = distinguishing_formula("ab", "aa", 0)
    assert quantifier_rank(phi) == 0
    assert language_member(phi, "ab", alphabet="ab")
    assert not language_member(phi, "aa", alphabet="ab")


def test_distinguishing_formula_requires_inequivalence():
    with pytest.raises(ValueError):
        distinguishing_formula("aaaa", "aaa", 1)
    with pytest.raises(ValueError):
        distinguishing_formula("ab", "ab", 3)


def test_distinguishing_formula_prop35_instance():
    phi = distinguishing_formula("aba", "aaba", 5)
    assert quantifier_rank(phi) <= 5
    assert language_member(phi, "aba", alphabet="ab")
    assert not language_member(phi, "aaba", alphabet="ab")


# -- strategy trees -----------------------------------------------------------


def collect_leaves(node, picks, sa, sb):
    from fclab.games import StrategyNode, Violation

    out = []
    for reply, sub in node.replies.items():
        if reply == "⊥":
            continue
        elem = node.element if node.element != "eps" else ""
        rep = reply if reply != "eps" else ""
        pair = (elem, rep) if node.side == "A" else (rep, elem)
        if isinstance(sub, StrategyNode):
            out.extend(collect_leaves(sub, picks + [pair], sa, sb))
        else:
            out.append(picks + [pair])
    return out


def test_strategy_tree_leaves_all_violate():
    verdict = solve("aaaa", "aaa", 2)
    sa, sb = build_structure("aaaa", "a"), build_structure("aaa", "a")
    leaves = collect_leaves(verdict.strategy, [], sa, sb)
    assert leaves
    for picks in leaves:
        assert not partial_isomorphism(sa, sb, picks), picks
    assert verdict.strategy.depth() <= 2


def test_strategy_tree_covers_all_replies():
    verdict = solve("aaaa", "aaa", 2)
    # first move in A, so replies cover all of B's factors plus the null token
    sb = build_structure("aaa", "a")
    keys = set(verdict.strategy.replies)
    expected = {f if f else "eps" for f in sb.facs} | {"⊥"}
    assert keys == expected


# -- violation permanence ------------------------------------------------------


def test_violation_permanence_spot_checks():
    sa = build_structure("aaaa", "a")
    sb = build_structure("aaa", "a")
    base = [("aaaa", "aaa"), ("aa", "a")]
    assert not partial_isomorphism(sa, sb, base)
    for a in sa.facs:
        for b in sb.facs:
            assert not partial_isomorphism(sa, sb, base + [(a, b)])


# -- interactive helpers -------------------------------------------------------


def test_duplicator_respond_bottom_and_constant():
    g = GameSolver("aaaa", "aaa")
    pos = GamePosition(g, [], 2)
    reply, surviving = duplicator_respond(pos, "A", None)
    assert reply is BOT
    reply, surviving = duplicator_respond(pos, "A", "a")
    assert reply == "a"


def test_duplicator_respond_losing_position():
    g = GameSolver("aaaa", "aaa")
    pos = GamePosition(g, [], 2)
    reply, surviving = duplicator_respond(pos, "A", "aaaa")
    assert not surviving  # every reply loses the 2-round game
    assert reply in g.sb.facs


def test_duplicator_respond_illegal_move():
    g = GameSolver("aaaa", "aaa")
    pos = GamePosition(g, [], 2)
    with pytest.raises(Exception):
        duplicator_respond(pos, "B", "aaaa")


def test_spoiler_hint_fresh_games():
    g = GameSolver("aaaa", "aaa")
    move, evaluation = spoiler_hint(GamePosition(g, [], 2))
    assert isinstance(evaluation, WinsIn) and evaluation.rounds == 2
    assert move == ("A", "aaaa")
    g2 = GameSolver("abab", "abab")
    move, evaluation = spoiler_hint(GamePosition(g2, [], 3))
    assert isinstance(evaluation, CannotWin)
    assert move is None


def test_spoiler_hint_mid_game():
    g = GameSolver("aaaa", "aaa")
    # after the best reply aaa to aaaa, Spoiler still wins the last round
    pos = GamePosition(g, [("aaaa", "aaa")], 1)
    move, evaluation = spoiler_hint(pos)
    assert isinstance(evaluation, WinsIn) and evaluation.rounds == 1
    # an immediately violating reply leaves Spoiler already won
    pos = GamePosition(g, [("aaaa", "aa")], 1)
    move, evaluation = spoiler_hint(pos)
    assert isinstance(evaluation, WinsIn) and evaluation.rounds == 0


# -- concatenation does not respect equivalence --------------------------------


def test_equivalence_is_not_a_congruence():
    # components pairwise equivalent, concatenations distinguished: the
    # direct instance a.b.a vs a^2.b.a at five rounds
    assert isinstance(solve("aba", "aba", 5), Equivalent)
    assert isinstance(solve("ba", "ba", 5), Equivalent)
    assert isinstance(solve("aba", "aaba", 5), SpoilerWins)
    # and the v.b.v catalog sentence witnesses the separation semantically
    from fclab.catalog import catalog

    vbv = catalog("phi_vbv")
    assert language_member(vbv, "aba", alphabet="ab")
    assert not language_member(vbv, "aaba", alphabet="ab")


# -- searches ------------------------------------------------------------------


def test_search_equiv_pair_unary():
    found = search_equiv_pair(lambda n: "a" * n, 1, 10)
    assert found is not None
    p, q, cert = found
    assert (p, q) == (3, 4)
    assert equiv_k("a" * p, "a" * q, 1)


def test_search_equiv_pair_unary_k2_regression():
    # frozen from a full search: the smallest two-round-equivalent unary
    # pair is (12, 14); the classes above the threshold go by parity
    found = search_equiv_pair(lambda n: "a" * n, 2, 30)
    assert found is not None and found[:2] == (12, 14)
    assert equiv_k("a" * 13, "a" * 15, 2)
    assert not equiv_k("a" * 12, "a" * 13, 2)
    assert not equiv_k("a" * 11, "a" * 13, 2)


def test_search_equiv_pair_k0():
    found = search_equiv_pair(lambda n: "a" * n, 0, 3)
    assert found is not None
    assert found[:2] == (1, 2)


def test_search_equiv_pair_absent():
    assert search_equiv_pair(lambda n: "a" * n, 2, 5) is None


# -- duplicator forced-copy and prefix/suffix invariants -----------------------


def _sentence_family(k):
    """A bounded enumeration of rank-k sentences: quantifier prefixes over
    x1..xk with single (possibly negated) atoms as matrices."""
    from fclab.formulas import EPS, ConcatAtom, Exists, Forall, Lit, Not, Var

    terms = [Var("x1"), Lit("a"), Lit("b"), EPS] + ([Var("x2")] if k >= 2 else [])
    atoms = [ConcatAtom(t1, t2, t3) for t1 in terms for t2 in terms for t3 in terms]
    out = []
    prefixes = list(itertools.product([Exists, Forall], repeat=k))
    for atom in atoms:
        for body in (atom, Not(atom)):
            for prefix in prefixes:
                phi = body
                for i, q in enumerate(reversed(prefix)):
                    phi = q(Var(f"x{k - i}"), phi)
                out.append(phi)
    return out


def test_no_low_rank_sentence_separates_equivalent_pairs():
    # soundness direction of the game/logic correspondence at desk scale:
    # pairs the solver calls k-equivalent satisfy exactly the same
    # enumerated sentences of rank <= k
    words = words_up_to(4)
    for k in (1, 2):
        family = _sentence_family(k)
        pairs = [(w, v) for w, v in itertools.combinations(words, 2) if equiv_k(w, v, k)]
        for w, v in pairs:
            sw = build_structure(w, "ab")
            sv = build_structure(v, "ab")
            from fclab.evaluate import Evaluator

            ew, ev_ = Evaluator(sw), Evaluator(sv)
            for phi in family:
                assert ew.holds(phi, {}) == ev_.holds(phi, {}), (w, v, k)


def test_duplicator_forced_copy_on_winning_lines():
    # whenever the engine is in a winning position and Spoiler's pick u at
    # round r satisfies r + |u| - 1 < k, the reply must equal the pick
    w, v = "a" * 3, "a" * 4
    k = 1
    assert equiv_k(w, v, k)
    g = GameSolver(w, v)
    for u in g.sa.facs:
        pos = GamePosition(g, [], k)
        reply, surviving = duplicator_respond(pos, "A", u)
        assert surviving
        if 1 + len(u) - 1 < k:
            assert reply == u
