"""Formula abstract syntax for first-order logic over word-factor structures.

Atoms are binary-concatenation facts ``x = y.z`` whose terms are variables,
single-letter constants, or the empty word; the extended logic adds regular
constraints and oracle atoms for externally decided word relations.
All nodes are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .regexes import Regex, regex_to_text
from .words import Morphism

FRESH_PREFIX = "__"


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lit:
    letter: str


@dataclass(frozen=True)
class Eps:
    pass


Term = Union[Var, Lit, Eps]

EPS = Eps()


@dataclass(frozen=True)
class ConcatAtom:
    lhs: Term
    rhs1: Term
    rhs2: Term


@dataclass(frozen=True)
class RegexAtom:
    var: Var
    regex: Regex


@dataclass(frozen=True)
class OracleAtom:
    relation: str
    vars: tuple[Var, ...]
    morphism: Optional[Morphism] = None


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: Var
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: Var
    body: "Formula"


Formula = Union[ConcatAtom, RegexAtom, OracleAtom, Not, And, Or, Exists, Forall]

ATOMS = (ConcatAtom, RegexAtom, OracleAtom)


def conj(*parts: Formula) -> Formula:
    """Right-nested conjunction of one or more formulas."""
    if not parts:
        raise ValueError("conj needs at least one formula")
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = And(p, out)
    return out


def disj(*parts: Formula) -> Formula:
    if not parts:
        raise ValueError("disj needs at least one formula")
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Or(p, out)
    return out


def exists(names: str | list[str], body: Formula) -> Formula:
    if isinstance(names, str):
        names = names.split()
    for n in reversed(names):
        body = Exists(Var(n), body)
    return body


def forall(names: str | list[str], body: Formula) -> Formula:
    if isinstance(names, str):
        names = names.split()
    for n in reversed(names):
        body = Forall(Var(n), body)
    return body


def equals_eps(t: Term) -> Formula:
    """Shorthand t = eps, encoded as the atom t = eps.eps."""
    return ConcatAtom(t, EPS, EPS)


def term_equals(a: Term, b: Term) -> Formula:
    """Term equality sugar: a = b encoded as a = b.eps."""
    return ConcatAtom(a, b, EPS)


_fresh_counter = [0]


def fresh_var() -> Var:
    _fresh_counter[0] += 1
    return Var(f"{FRESH_PREFIX}f{_fresh_counter[0]}")


def desugar_long_concat(lhs: Term, rhs: list[Term]) -> Formula:
    """Rewrite lhs = t1 t2 ... tn into binary atoms with fresh middles.

    One term becomes lhs = t.eps, two terms the plain binary atom, longer
    right-hand sides chain fresh existential variables:
    lhs = t1.f1, f1 = t2.f2, ..., f_{n-2} = t_{n-1}.t_n.
    """
    if not rhs:
        raise ValueError("desugar_long_concat: empty right-hand side")
    if len(rhs) == 1:
        return ConcatAtom(lhs, rhs[0], EPS)
    if len(rhs) == 2:
        return ConcatAtom(lhs, rhs[0], rhs[1])
    fresh = [fresh_var() for _ in range(len(rhs) - 2)]
    chain: list[Formula] = []
    cur = lhs
    for i, t in enumerate(rhs[:-2]):
        chain.append(ConcatAtom(cur, t, fresh[i]))
        cur = fresh[i]
    chain.append(ConcatAtom(cur, rhs[-2], rhs[-1]))
    body = conj(*chain)
    for f in reversed(fresh):
        body = Exists(f, body)
    return body


def word_terms(w: str) -> list[Term]:
    """A word as a list of letter terms (empty word -> [eps])."""
    return [Lit(c) for c in w] if w else [EPS]


def quantifier_rank(phi: Formula) -> int:
    if isinstance(phi, ATOMS):
        return 0
    if isinstance(phi, Not):
        return quantifier_rank(phi.body)
    if isinstance(phi, (And, Or)):
        return max(quantifier_rank(phi.left), quantifier_rank(phi.right))
    if isinstance(phi, (Exists, Forall)):
        return quantifier_rank(phi.body) + 1
    raise TypeError(f"not a formula: {phi!r}")


def _term_vars(t: Term) -> set[str]:
    return {t.name} if isinstance(t, Var) else set()


def free_variables(phi: Formula) -> frozenset[str]:
    if isinstance(phi, ConcatAtom):
        return frozenset(_term_vars(phi.lhs) | _term_vars(phi.rhs1) | _term_vars(phi.rhs2))
    if isinstance(phi, RegexAtom):
        return frozenset({phi.var.name})
    if isinstance(phi, OracleAtom):
        return frozenset(v.name for v in phi.vars)
    if isinstance(phi, Not):
        return free_variables(phi.body)
    if isinstance(phi, (And, Or)):
        return free_variables(phi.left) | free_variables(phi.right)
    if isinstance(phi, (Exists, Forall)):
        return free_variables(phi.body) - {phi.var.name}
    raise TypeError(f"not a formula: {phi!r}")


def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    if isinstance(phi, Not):
        yield from subformulas(phi.body)
    elif isinstance(phi, (And, Or)):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)
    elif isinstance(phi, (Exists, Forall)):
        yield from subformulas(phi.body)


def formula_size(phi: Formula) -> int:
    return sum(1 for _ in subformulas(phi))


def letters_of(phi: Formula) -> frozenset[str]:
    """Alphabet letters mentioned anywhere in the formula."""
    out: set[str] = set()
    for sub in subformulas(phi):
        if isinstance(sub, ConcatAtom):
            for t in (sub.lhs, sub.rhs1, sub.rhs2):
                if isinstance(t, Lit):
                    out.add(t.letter)
        elif isinstance(sub, RegexAtom):
            out.update(c for c in regex_to_text(sub.regex) if c.isalnum() and c != "_")
    return frozenset(out)


def term_to_text(t: Term) -> str:
    if isinstance(t, Var):
        return "?" + t.name
    if isinstance(t, Lit):
        return "'" + t.letter
    return "eps"


def to_text(phi: Formula) -> str:
    """Render a formula in the s-expression concrete syntax."""
    if isinstance(phi, ConcatAtom):
        return f"(= {term_to_text(phi.lhs)} {term_to_text(phi.rhs1)} {term_to_text(phi.rhs2)})"
    if isinstance(phi, RegexAtom):
        return f"(in ?{phi.var.name} /{regex_to_text(phi.regex)}/)"
    if isinstance(phi, OracleAtom):
        return "(oracle " + phi.relation + " " + " ".join("?" + v.name for v in phi.vars) + ")"
    if isinstance(phi, Not):
        return f"(not {to_text(phi.body)})"
    if isinstance(phi, And):
        return f"(and {to_text(phi.left)} {to_text(phi.right)})"
    if isinstance(phi, Or):
        return f"(or {to_text(phi.left)} {to_text(phi.right)})"
    if isinstance(phi, Exists):
        return f"(exists ?{phi.var.name} {to_text(phi.body)})"
    if isinstance(phi, Forall):
        return f"(forall ?{phi.var.name} {to_text(phi.body)})"
    raise TypeError(f"not a formula: {phi!r}")


def term_to_json(t: Term) -> dict:
    if isinstance(t, Var):
        return {"node": "var", "name": t.name}
    if isinstance(t, Lit):
        return {"node": "letter", "letter": t.letter}
    return {"node": "eps"}


def to_json(phi: Formula) -> dict:
    """Mirror of the text grammar, one object per node with a discriminator."""
    if isinstance(phi, ConcatAtom):
        return {
            "node": "concat",
            "lhs": term_to_json(phi.lhs),
            "rhs1": term_to_json(phi.rhs1),
            "rhs2": term_to_json(phi.rhs2),
        }
    if isinstance(phi, RegexAtom):
        return {"node": "in", "var": phi.var.name, "regex": regex_to_text(phi.regex)}
    if isinstance(phi, OracleAtom):
        return {"node": "oracle", "relation": phi.relation, "vars": [v.name for v in phi.vars]}
    if isinstance(phi, Not):
        return {"node": "not", "body": to_json(phi.body)}
    if isinstance(phi, And):
        return {"node": "and", "left": to_json(phi.left), "right": to_json(phi.right)}
    if isinstance(phi, Or):
        return {"node": "or", "left": to_json(phi.left), "right": to_json(phi.right)}
    if isinstance(phi, Exists):
        return {"node": "exists", "var": phi.var.name, "body": to_json(phi.body)}
    if isinstance(phi, Forall):
        return {"node": "forall", "var": phi.var.name, "body": to_json(phi.body)}
    raise TypeError(f"not a formula: {phi!r}")
