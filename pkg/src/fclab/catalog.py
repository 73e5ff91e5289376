"""A catalog of named formulas used across the test harness and CLI.

Contents:

* ``phi_w``        -- free x; holds exactly when x is the whole word.
* ``phi_ww``       -- sentence for the copy language {vv}.
* ``phi_copy``     -- free x, y; the relation x = yy.
* ``phi_copies``   -- free x, y; the relation x = y^k (parameter k >= 1).
* ``phi_vbv``      -- sentence for {v b v}; quantifier rank 5.
* ``phi_fib``      -- sentence for the marker-separated Fibonacci-word
                      prefixes (the two shortest members are matched by
                      explicit disjuncts; the recursive clause needs at
                      least three blocks to bite).
* ``phi_wstar``    -- free x; x lies in w* (parameter w).
* ``psi_1``..``psi_6``, ``psi_5_rev``, ``psi_morph`` -- sentences pairing a
  shape constraint with an oracle atom so that their languages coincide
  with the reference languages L1..L6 (and a^n b^n for the morphism one).

The psi formulas use the whole-word device phi_w(u) in place of a universe
constant, and carry oracle atoms standing in for a hypothetical defined
relation.
"""

from __future__ import annotations

from .formulas import (
    EPS,
    And,
    ConcatAtom,
    Exists,
    Formula,
    Lit,
    Not,
    Or,
    OracleAtom,
    RegexAtom,
    Var,
    conj,
    disj,
    equals_eps,
    exists,
    word_terms,
)
from .regexes import parse_regex
from .words import Morphism, primitive_root


class UnknownFormulaError(ValueError):
    pass


def _chain(lhs: Var, parts: list, var_prefix: str) -> tuple[list[Formula], list[Var]]:
    """lhs = p1 p2 ... pn as binary atoms, naming the cut points.

    Parts are terms or variables; returns (atoms, helper vars).  Helpers are
    ordinary named variables so catalog formulas survive a print/parse trip.
    """
    if len(parts) == 1:
        return [ConcatAtom(lhs, parts[0], EPS)], []
    if len(parts) == 2:
        return [ConcatAtom(lhs, parts[0], parts[1])], []
    helpers = [Var(f"{var_prefix}{i+1}") for i in range(len(parts) - 2)]
    atoms: list[Formula] = []
    cur = lhs
    for i, p in enumerate(parts[:-2]):
        atoms.append(ConcatAtom(cur, p, helpers[i]))
        cur = helpers[i]
    atoms.append(ConcatAtom(cur, parts[-2], parts[-1]))
    return atoms, helpers


def whole_word(x: str) -> Formula:
    """phi_w(x): no factor extends x on either side by a nonempty word."""
    xv, z1, z2 = Var(x), Var(f"{x}z1"), Var(f"{x}z2")
    ext = Or(ConcatAtom(z1, z2, xv), ConcatAtom(z1, xv, z2))
    return Not(Exists(z1, Exists(z2, And(ext, Not(equals_eps(z2))))))


def word_equals(x: str, w: str, var_prefix: str) -> Formula:
    """x spells out the fixed word w."""
    atoms, helpers = _chain(Var(x), word_terms(w), var_prefix)
    body = conj(*atoms)
    for h in reversed(helpers):
        body = Exists(h, body)
    return body


def exact_word_sentence(w: str, var_prefix: str = "e") -> Formula:
    """Sentence: the model's word is exactly w."""
    x = f"{var_prefix}x"
    return Exists(Var(x), And(word_equals(x, w, f"{var_prefix}h"), whole_word(x)))


def phi_w(x: str = "x") -> Formula:
    return whole_word(x)


def phi_ww() -> Formula:
    x, y = Var("x"), Var("y")
    return Exists(x, Exists(y, And(whole_word("x"), ConcatAtom(x, y, y))))


def phi_copy() -> Formula:
    return ConcatAtom(Var("x"), Var("y"), Var("y"))


def phi_copies(k: int) -> Formula:
    if k < 1:
        raise ValueError("phi_copies needs k >= 1")
    x, y = Var("x"), Var("y")
    atoms, helpers = _chain(x, [y] * k if k > 1 else [y], "c")
    body = conj(*atoms)
    for h in reversed(helpers):
        body = Exists(h, body)
    return body


def phi_vbv(marker: str = "b") -> Formula:
    x, y, z = Var("x"), Var("y"), Var("z")
    body = conj(
        ConcatAtom(y, x, z),
        ConcatAtom(z, Lit(marker), x),
        whole_word("y"),
    )
    return Exists(x, Exists(y, Exists(z, body)))


def _phi_contains(letter: str, x: str) -> Formula:
    """phi_c(x): x contains the letter somewhere, i.e. x = y . letter . z."""
    y, g, z = Var(f"{x}cy"), Var(f"{x}cg"), Var(f"{x}cz")
    return Exists(y, Exists(z, Exists(g, And(ConcatAtom(Var(x), y, g), ConcatAtom(g, Lit(letter), z)))))


def phi_fib(marker: str = "c") -> Formula:
    m = Lit(marker)
    u = Var("u")
    # shape: u is the whole word, u = m a m a b m x1 m, and mm never occurs
    shape_atoms, shape_helpers = _chain(u, [m, Lit("a"), m, Lit("a"), Lit("b"), m, Var("x1"), m], "s")
    no_mm = Not(Exists(Var("x2"), ConcatAtom(Var("x2"), m, m)))
    struc = exists(
        ["x1", "u"] + [h.name for h in shape_helpers],
        conj(*shape_atoms, no_mm, whole_word("u")),
    )
    # recursion: every factor m y1 m y2 m y3 m with marker-free blocks
    # satisfies y3 = y2 y1
    x = Var("x")
    chain_atoms, chain_helpers = _chain(x, [m, Var("y1"), m, Var("y2"), m, Var("y3"), m], "g")
    blocks_fine = disj(
        _phi_contains(marker, "y1"),
        _phi_contains(marker, "y2"),
        _phi_contains(marker, "y3"),
        ConcatAtom(Var("y3"), Var("y2"), Var("y1")),
    )
    rec = Not(
        exists(
            ["x", "y1", "y2", "y3"] + [h.name for h in chain_helpers],
            conj(*chain_atoms, Not(blocks_fine)),
        )
    )
    base = Or(exact_word_sentence(marker + "a" + marker, "b0"), exact_word_sentence(marker + "a" + marker + "ab" + marker, "b1"))
    return Or(base, And(struc, rec))


def phi_wstar(w: str, x: str = "x") -> Formula:
    """x is a member of w*; for imprimitive w the star of the primitive root
    is combined with an exact-power constraint so only true w-powers pass."""
    xv = Var(x)
    if w == "":
        return equals_eps(xv)
    root, e = primitive_root(w)
    if e == 1:
        z = Var(f"{x}s")
        left, lh = _chain(xv, word_terms(w) + [z], f"{x}l")
        right, rh = _chain(xv, [z] + word_terms(w), f"{x}r")
        body = Or(equals_eps(xv), conj(*(left + right)))
        return exists([z.name] + [h.name for h in lh + rh], body)
    y = Var(f"{x}p")
    power_atoms, ph = _chain(xv, [y] * e, f"{x}q")
    return exists(
        [y.name] + [h.name for h in ph],
        conj(phi_wstar(root, y.name), *power_atoms),
    )


def _psi(universe_var: str, split: list[str], regexes: list[str | None], oracle: OracleAtom) -> Formula:
    u = Var(universe_var)
    parts = [Var(s) for s in split]
    split_atoms, helpers = _chain(u, parts, "m")
    constraints: list[Formula] = []
    for s, rx in zip(split, regexes):
        if rx is not None:
            constraints.append(RegexAtom(Var(s), parse_regex(rx)))
    body = conj(*split_atoms, *constraints, oracle, whole_word(universe_var))
    return exists([universe_var] + split + [h.name for h in helpers], body)


def psi_1() -> Formula:
    return _psi("u", ["x", "y"], ["a*", "(ba)*"], OracleAtom("num_a", (Var("x"), Var("y"))))


def psi_2() -> Formula:
    return _psi("u", ["x", "y"], ["aa*", "(ba)*"], OracleAtom("scatt", (Var("x"), Var("y"))))


def psi_3() -> Formula:
    return _psi("u", ["x", "y", "z"], ["b*", "a*", "b*"], OracleAtom("add", (Var("x"), Var("y"), Var("z"))))


def psi_4() -> Formula:
    return _psi("u", ["x", "y", "z"], ["b*", "a*", "b*"], OracleAtom("mult", (Var("x"), Var("y"), Var("z"))))


def psi_5() -> Formula:
    return _psi("u", ["x", "y"], ["(abaabb)*", "(bbaaba)*"], OracleAtom("perm", (Var("x"), Var("y"))))


def psi_5_rev() -> Formula:
    return _psi("u", ["x", "y"], ["(abaabb)*", "(bbaaba)*"], OracleAtom("rev", (Var("x"), Var("y"))))


def psi_6() -> Formula:
    return _psi("u", ["x", "y", "z"], ["a*", "b*", "(ab)*"], OracleAtom("shuff", (Var("x"), Var("y"), Var("z"))))


def psi_morph(h: Morphism | None = None) -> Formula:
    if h is None:
        h = Morphism.from_dict({"a": "b", "b": "b"})
    return _psi("u", ["x", "y"], ["a*", None], OracleAtom("morph", (Var("x"), Var("y")), h))


_CATALOG = {
    "phi_w": phi_w,
    "phi_ww": phi_ww,
    "phi_copy": phi_copy,
    "phi_copies": phi_copies,
    "phi_vbv": phi_vbv,
    "phi_fib": phi_fib,
    "phi_wstar": phi_wstar,
    "psi_1": psi_1,
    "psi_2": psi_2,
    "psi_3": psi_3,
    "psi_4": psi_4,
    "psi_5": psi_5,
    "psi_5_rev": psi_5_rev,
    "psi_6": psi_6,
    "psi_morph": psi_morph,
}


def catalog_ids() -> list[str]:
    return sorted(_CATALOG)


def catalog(formula_id: str, **params) -> Formula:
    """Look up a catalog formula by id, passing through its parameters."""
    builder = _CATALOG.get(formula_id)
    if builder is None:
        raise UnknownFormulaError(f"unknown catalog formula {formula_id!r}; known: {', '.join(catalog_ids())}")
    return builder(**params)
