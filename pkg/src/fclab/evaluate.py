"""Model checking over word structures.

The evaluator is a straightforward structural recursion with two additions
that keep quantification over factor sets tractable:

* results of subformulas are memoized per binding of their free variables,
  so repeated universe devices (the "this variable is the whole word"
  subformula) cost one evaluation per value;
* blocks of like quantifiers are evaluated with a small greedy planner that
  picks the next variable by candidate class: a concatenation atom whose
  other terms are bound determines a variable outright, an atom with a
  bound left-hand side restricts it to prefixes or suffixes, and only as a
  last resort does a variable scan the whole factor set.

Both are invisible semantically: quantifiers range over the factor set in
length-then-lexicographic order, never the null element.
"""

from __future__ import annotations

from .formulas import (
    And,
    ConcatAtom,
    Exists,
    Forall,
    Formula,
    Lit,
    Not,
    Or,
    OracleAtom,
    RegexAtom,
    Term,
    Var,
    free_variables,
)
from .regexes import regex_match
from .structures import WordStructure, build_structure
from .words import relation_oracle

_MAX_OR_SPLITS = 4


class UnboundVariableError(ValueError):
    pass


class Evaluator:
    """Evaluates formulas against one fixed structure, with caching."""

    def __init__(self, structure: WordStructure):
        self.s = structure
        self._memo: dict[tuple, bool] = {}
        self._free: dict[int, tuple[str, ...]] = {}
        self._regex_cache: dict[tuple[int, str], bool] = {}
        # memo keys use id(); pin nodes so ids cannot be recycled underneath us
        self._pinned: dict[int, object] = {}

    # -- helpers ---------------------------------------------------------

    def _free_of(self, node: Formula) -> tuple[str, ...]:
        key = id(node)
        got = self._free.get(key)
        if got is None:
            got = tuple(sorted(free_variables(node)))
            self._free[key] = got
            self._pinned[key] = node
        return got

    def _term_value(self, t: Term, env: dict[str, str]) -> str | None:
        if isinstance(t, Var):
            if t.name not in env:
                raise UnboundVariableError(f"unbound variable ?{t.name}")
            return env[t.name]
        if isinstance(t, Lit):
            return self.s.const(t.letter)
        return ""

    # -- evaluation ------------------------------------------------------

    def holds(self, node: Formula, env: dict[str, str]) -> bool:
        if isinstance(node, ConcatAtom):
            return self.s.has_triple(
                self._term_value(node.lhs, env),
                self._term_value(node.rhs1, env),
                self._term_value(node.rhs2, env),
            )
        if isinstance(node, RegexAtom):
            u = self._term_value(node.var, env)
            key = (id(node.regex), u)
            got = self._regex_cache.get(key)
            if got is None:
                got = regex_match(node.regex, u)
                self._regex_cache[key] = got
                self._pinned[id(node.regex)] = node.regex
            return got
        if isinstance(node, OracleAtom):
            args = tuple(self._term_value(v, env) for v in node.vars)
            return relation_oracle(node.relation, args, node.morphism)
        if isinstance(node, Not):
            return not self.holds(node.body, env)
        if isinstance(node, And):
            return self.holds(node.left, env) and self.holds(node.right, env)
        if isinstance(node, Or):
            return self.holds(node.left, env) or self.holds(node.right, env)
        if isinstance(node, (Exists, Forall)):
            key = (id(node), tuple(env.get(x) for x in self._free_of(node)))
            got = self._memo.get(key)
            if got is None:
                got = self._eval_block(node, env)
                self._memo[key] = got
            return got
        raise TypeError(f"not a formula: {node!r}")

    # -- quantifier blocks -----------------------------------------------

    def _eval_block(self, node: Exists | Forall, env: dict[str, str]) -> bool:
        kind = type(node)
        names: list[str] = []
        body: Formula = node
        while isinstance(body, kind):
            names.append(body.var.name)
            body = body.body
        if kind is Forall:
            return not self._exists(names, Not(body), env)
        return self._exists(names, body, env)

    def _exists(self, names: list[str], body: Formula, env: dict[str, str]) -> bool:
        conjuncts = self._flatten_and(body)
        for branch in self._split_or(conjuncts, _MAX_OR_SPLITS):
            local = dict(env)
            for x in names:
                local.pop(x, None)
            if self._assign(list(names), branch, local):
                return True
        return False

    def _flatten_and(self, body: Formula) -> list[Formula]:
        out: list[Formula] = []
        stack = [body]
        while stack:
            n = stack.pop()
            if isinstance(n, And):
                stack.append(n.right)
                stack.append(n.left)
            else:
                out.append(n)
        return out

    def _split_or(self, conjuncts: list[Formula], budget: int):
        """Distribute top-level disjunctions: E (C and (D or D')) splits into
        two existence problems, letting each branch plan its own atoms."""
        if budget <= 0:
            yield conjuncts
            return
        for i, c in enumerate(conjuncts):
            if isinstance(c, Or):
                rest = conjuncts[:i] + conjuncts[i + 1 :]
                yield from self._split_or(rest + self._flatten_and(c.left), budget - 1)
                yield from self._split_or(rest + self._flatten_and(c.right), budget - 1)
                return
        yield conjuncts

    def _assign(self, todo: list[str], conjuncts: list[Formula], env: dict[str, str]) -> bool:
        pending = []
        for c in conjuncts:
            if all(x in env for x in self._free_of(c)):
                if not self.holds(c, env):
                    return False
            else:
                pending.append(c)
        if not todo:
            if pending:
                missing = sorted(set().union(*(self._free_of(c) for c in pending)) - set(env))
                raise UnboundVariableError(f"unbound variables {missing} in quantifier body")
            return True
        var, candidates = self._choose(todo, pending, env)
        rest = [x for x in todo if x != var]
        for value in candidates:
            env[var] = value
            if self._assign(rest, pending, env):
                del env[var]
                return True
        env.pop(var, None)
        return False

    def _choose(self, todo: list[str], conjuncts: list[Formula], env: dict[str, str]):
        """Pick the next variable and its candidate values.

        Preference order: determined by an atom (one candidate), prefix or
        suffix of a bound value, then a full factor scan for the variable
        that unlocks the most determinations.
        """
        best_scan = None
        best_unlock = -1
        for x in todo:
            gen = self._generator_for(x, conjuncts, env)
            if gen is not None and gen[0] == 0:
                return x, gen[1]
        for x in todo:
            gen = self._generator_for(x, conjuncts, env)
            if gen is not None:
                return x, gen[1]
            unlock = self._unlock_score(x, conjuncts, env)
            if unlock > best_unlock:
                best_unlock = unlock
                best_scan = x
        return best_scan, self.s.facs

    def _generator_for(self, x: str, conjuncts: list[Formula], env: dict[str, str]):
        """(rank, candidates) for x from some concat atom, or None.

        rank 0: determined (other two terms bound); rank 1: prefixes or
        suffixes of a bound left-hand side.
        """
        fallback = None
        for c in conjuncts:
            if not isinstance(c, ConcatAtom):
                continue
            lhs, r1, r2 = c.lhs, c.rhs1, c.rhs2
            bl = self._bound_value(lhs, env)
            b1 = self._bound_value(r1, env)
            b2 = self._bound_value(r2, env)
            if self._is_var(lhs, x) and b1 is not ... and b2 is not ...:
                if b1 is None or b2 is None:
                    return 0, ()
                v = b1 + b2
                return 0, ((v,) if v in self.s.fac_set else ())
            if self._is_var(r1, x) and bl is not ... and b2 is not ...:
                if bl is None:
                    return 0, ()
                if b2 is not None:
                    v = bl[: len(bl) - len(b2)] if bl.endswith(b2) else None
                    return 0, ((v,) if v is not None else ())
                fallback = fallback or (1, tuple(self.s.prefixes(bl)))
            if self._is_var(r2, x) and bl is not ... and b1 is not ...:
                if bl is None:
                    return 0, ()
                if b1 is not None:
                    v = bl[len(b1) :] if bl.startswith(b1) else None
                    return 0, ((v,) if v is not None else ())
                fallback = fallback or (1, tuple(self.s.suffixes(bl)))
        return fallback

    def _is_var(self, t: Term, x: str) -> bool:
        return isinstance(t, Var) and t.name == x

    def _bound_value(self, t: Term, env: dict[str, str]):
        """Value of a term if bound; Ellipsis when it is an unbound variable."""
        if isinstance(t, Var):
            return env.get(t.name, ...)
        if isinstance(t, Lit):
            return self.s.const(t.letter)
        return ""

    def _unlock_score(self, x: str, conjuncts: list[Formula], env: dict[str, str]) -> int:
        score = 0
        for c in conjuncts:
            if not isinstance(c, ConcatAtom):
                continue
            terms = (c.lhs, c.rhs1, c.rhs2)
            unbound = [t.name for t in terms if isinstance(t, Var) and t.name not in env]
            if x in unbound and isinstance(c.lhs, Var) and c.lhs.name == x:
                score += 2
            if unbound.count(x) and len(set(unbound)) <= 2:
                score += 1
        return score


def models(structure: WordStructure, assignment: dict[str, str], phi: Formula) -> bool:
    """Satisfaction of phi in the structure under the assignment.

    The assignment must bind every free variable of phi to a factor.
    """
    for x in free_variables(phi):
        if x not in assignment:
            raise UnboundVariableError(f"unbound free variable ?{x}")
        if assignment[x] not in structure.fac_set:
            raise ValueError(f"assignment binds ?{x} to a non-factor {assignment[x]!r}")
    return Evaluator(structure).holds(phi, dict(assignment))


def language_member(phi: Formula, w: str, alphabet: str | None = None, evaluator: Evaluator | None = None) -> bool:
    """Whole-word membership: does the structure of w satisfy the sentence?"""
    fv = free_variables(phi)
    if fv:
        raise ValueError(f"language_member needs a sentence; free variables: {sorted(fv)}")
    if evaluator is not None:
        return evaluator.holds(phi, {})
    from .formulas import letters_of

    sigma = set(w) | set(letters_of(phi))
    if alphabet is not None:
        sigma |= set(alphabet)
    return Evaluator(build_structure(w, tuple(sorted(sigma)))).holds(phi, {})


def enumerate_models(phi: Formula, w: str, alphabet: str | None = None, limit: int | None = None) -> list[dict[str, str]]:
    """All assignments of the free variables into factors of w satisfying phi.

    Deterministic order: variables sorted by name, values length-then-lex.
    """
    from .formulas import letters_of

    sigma = set(w) | set(letters_of(phi))
    if alphabet is not None:
        sigma |= set(alphabet)
    s = build_structure(w, tuple(sorted(sigma)))
    ev = Evaluator(s)
    names = sorted(free_variables(phi))
    out: list[dict[str, str]] = []

    def rec(i: int, env: dict[str, str]):
        if limit is not None and len(out) >= limit:
            return
        if i == len(names):
            if ev.holds(phi, env):
                out.append(dict(env))
            return
        for u in s.facs:
            env[names[i]] = u
            rec(i + 1, env)
            del env[names[i]]

    rec(0, {})
    return out
