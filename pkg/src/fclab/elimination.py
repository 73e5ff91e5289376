"""Rewriting bounded regular constraints into plain concatenation logic.

Every constraint ``x in r`` whose regex is in the bounded normal form
(literals, the empty word, and stars of single words, closed under union
and concatenation) can be replaced by a first-order formula over the
concatenation relation alone:

* a literal or fixed word becomes a chain of concatenation atoms;
* ``x in w*`` for primitive w becomes "x is empty, or x = w.z and x = z.w
  for some z" (a word commuting with a primitive w is a power of w, so x
  is pinned to a power of w);
* for imprimitive w = r^e the star is expressed as "x = y^e for some y in
  r*", which keeps exactly the multiples-of-e powers of r;
* unions and concatenations expand structurally with fresh variables.
"""

from __future__ import annotations

from .formulas import (
    And,
    ConcatAtom,
    Exists,
    Forall,
    Formula,
    Not,
    Or,
    OracleAtom,
    RegexAtom,
    Term,
    Var,
    conj,
    desugar_long_concat,
    equals_eps,
    fresh_var,
    word_terms,
)
from .regexes import (
    RAlt,
    RCat,
    REps,
    RLit,
    RPlus,
    RStar,
    Regex,
    is_bounded_regex,
    single_word_of,
)
from .words import primitive_root


class NotBoundedError(ValueError):
    pass


def _word_formula(x: Term, w: str) -> Formula:
    return desugar_long_concat(x, word_terms(w))


def star_formula(x: Term, w: str) -> Formula:
    """x in w* as a plain formula."""
    if w == "":
        return equals_eps(x)
    root, e = primitive_root(w)
    if e == 1:
        z = fresh_var()
        left = desugar_long_concat(x, word_terms(w) + [z])
        right = desugar_long_concat(x, [z] + word_terms(w))
        return Exists(z, Or(equals_eps(x), And(left, right)))
    y = fresh_var()
    return Exists(y, And(star_formula(y, root), desugar_long_concat(x, [y] * e)))


def _split(x: Term, left_lang, right_lang) -> Formula:
    l, r = fresh_var(), fresh_var()
    return Exists(l, Exists(r, conj(ConcatAtom(x, l, r), left_lang(l), right_lang(r))))


def _expand(x: Term, r: Regex) -> Formula:
    if isinstance(r, RLit):
        return _word_formula(x, r.letter)
    if isinstance(r, REps):
        return equals_eps(x)
    if isinstance(r, RAlt):
        return Or(_expand(x, r.left), _expand(x, r.right))
    if isinstance(r, RCat):
        return _split(x, lambda t: _expand(t, r.left), lambda t: _expand(t, r.right))
    if isinstance(r, RStar):
        w = single_word_of(r.body)
        if w is None:
            raise NotBoundedError("star over a non-single-word expression")
        return star_formula(x, w)
    if isinstance(r, RPlus):
        w = single_word_of(r.body)
        if w is None:
            raise NotBoundedError("plus over a non-single-word expression")
        if w == "":
            return equals_eps(x)
        return _split(x, lambda t: _word_formula(t, w), lambda t: star_formula(t, w))
    raise TypeError(f"not a regex: {r!r}")


def expand_constraint(x: Var, r: Regex) -> Formula:
    if not is_bounded_regex(r):
        raise NotBoundedError(f"constraint on ?{x.name} is not in bounded normal form")
    return _expand(x, r)


def eliminate_bounded_constraints(phi: Formula) -> Formula:
    """Replace every regular-constraint atom by an equivalent plain formula.

    Every constraint's regex must pass is_bounded_regex; otherwise
    NotBoundedError is raised.  Oracle atoms and everything else pass
    through untouched.
    """
    if isinstance(phi, RegexAtom):
        return expand_constraint(phi.var, phi.regex)
    if isinstance(phi, (ConcatAtom, OracleAtom)):
        return phi
    if isinstance(phi, Not):
        return Not(eliminate_bounded_constraints(phi.body))
    if isinstance(phi, And):
        return And(eliminate_bounded_constraints(phi.left), eliminate_bounded_constraints(phi.right))
    if isinstance(phi, Or):
        return Or(eliminate_bounded_constraints(phi.left), eliminate_bounded_constraints(phi.right))
    if isinstance(phi, Exists):
        return Exists(phi.var, eliminate_bounded_constraints(phi.body))
    if isinstance(phi, Forall):
        return Forall(phi.var, eliminate_bounded_constraints(phi.body))
    raise TypeError(f"not a formula: {phi!r}")
