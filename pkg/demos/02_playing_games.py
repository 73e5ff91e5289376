"""The k-round comparison game, solved exactly.

Spoiler picks a factor (or the null element) in either word's structure,
Duplicator answers in the other; after k rounds Duplicator has won iff the
picks plus the constants form a partial isomorphism.  The solver decides
the winner, produces Spoiler strategy trees, and replays positions.
"""

from fclab import (
    GamePosition,
    GameSolver,
    duplicator_respond,
    equiv_k,
    partial_isomorphism,
    search_equiv_pair,
    solve,
    spoiler_hint,
)
from fclab.structures import build_structure

# -- the classic two-round separation: a^4 vs a^3 ------------------------------

verdict = solve("aaaa", "aaa", 2)
print("a^4 vs a^3, two rounds:", verdict.outcome, "in", verdict.rounds_needed)
print("Spoiler opens with:", verdict.strategy.side, verdict.strategy.element)
print("replies covered:", sorted(verdict.strategy.replies))

# one round is not enough
print("a^4 vs a^3, one round:", solve("aaaa", "aaa", 1).outcome)

# -- the partial isomorphism condition directly ---------------------------------

sa, sb = build_structure("aaaa", "a"), build_structure("aaa", "a")
print("\npicks (a^4 -> a^3) alone still isomorphic:", partial_isomorphism(sa, sb, [("aaaa", "aaa")]))
print("after (aa -> a):", partial_isomorphism(sa, sb, [("aaaa", "aaa"), ("aa", "a")]))

# -- interactive positions: the engine answers optimally -------------------------

g = GameSolver("aaaa", "aaa")
pos = GamePosition(g, [], 2)
reply, surviving = duplicator_respond(pos, "A", "aaaa")
print("\nengine answers a^4 with:", reply or "eps", "| can still win:", surviving)

move, evaluation = spoiler_hint(GamePosition(g, [], 2))
print("spoiler hint on the fresh game:", move, evaluation)

move, evaluation = spoiler_hint(GamePosition(GameSolver("abba", "abba"), [], 3))
print("hint on a mirror game:", move, evaluation)

# -- unary words become indistinguishable at every fixed round count -------------

for k in (0, 1, 2):
    found = search_equiv_pair(lambda n: "a" * n, k, 30)
    print(f"\nsmallest unary pair equivalent at k={k}:", found[:2] if found else "none <= 30")

print("check: a^12 vs a^14 at two rounds:", equiv_k("a" * 12, "a" * 14, 2))
print("       a^12 vs a^13 at two rounds:", equiv_k("a" * 12, "a" * 13, 2))
