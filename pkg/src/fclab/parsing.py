"""Concrete syntax for formulas.

Text form is s-expression based::

    (= ?x ?y ?z)          x = y.z, terms are ?var, 'letter, or eps
    (in ?x /regex/)       regular constraint
    (oracle rel ?x ?y)    oracle atom over a named word relation
    (not f) (and f g) (or f g) (exists ?x f) (forall ?x f)

A JSON form mirrors the grammar one object per node with a ``node``
discriminator; both are accepted wherever a formula is an input.
"""

from __future__ import annotations

from .formulas import (
    EPS,
    FRESH_PREFIX,
    And,
    ConcatAtom,
    Eps,
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
)
from .regexes import parse_regex


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def location(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: int | None = None):
        line, col = self.location(pos)
        raise FormulaSyntaxError(message, line, col)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def token(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and not self.text[self.pos].isspace() and self.text[self.pos] not in "()":
            self.pos += 1
        if self.pos == start:
            self.error("expected a token")
        return self.text[start : self.pos]

    def regex_body(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != "/":
            self.error("expected /regex/")
        self.pos += 1
        start = self.pos
        end = self.text.find("/", start)
        if end < 0:
            self.error("unterminated regex", start)
        self.pos = end + 1
        return self.text[start:end]


def _parse_var(tok: str, sc: _Scanner) -> Var:
    if not tok.startswith("?") or len(tok) < 2:
        sc.error(f"expected a variable, got {tok!r}")
    name = tok[1:]
    if name.startswith(FRESH_PREFIX):
        sc.error(f"variable prefix {FRESH_PREFIX!r} is reserved for generated variables")
    return Var(name)


def _parse_term(sc: _Scanner) -> Term:
    tok = sc.token()
    if tok == "eps":
        return EPS
    if tok.startswith("'"):
        if len(tok) != 2:
            sc.error(f"a letter constant is a single character, got {tok!r}")
        return Lit(tok[1])
    return _parse_var(tok, sc)


def _parse_formula(sc: _Scanner) -> Formula:
    sc.expect("(")
    head = sc.token()
    if head == "=":
        lhs, r1, r2 = _parse_term(sc), _parse_term(sc), _parse_term(sc)
        node: Formula = ConcatAtom(lhs, r1, r2)
    elif head == "in":
        var = _parse_var(sc.token(), sc)
        try:
            regex = parse_regex(sc.regex_body())
        except ValueError as e:
            sc.error(str(e))
        node = RegexAtom(var, regex)
    elif head == "oracle":
        rel = sc.token()
        vs = []
        while sc.peek() != ")":
            vs.append(_parse_var(sc.token(), sc))
        if not vs:
            sc.error("oracle atom needs at least one variable")
        node = OracleAtom(rel, tuple(vs))
    elif head == "not":
        node = Not(_parse_formula(sc))
    elif head == "and":
        node = And(_parse_formula(sc), _parse_formula(sc))
    elif head == "or":
        node = Or(_parse_formula(sc), _parse_formula(sc))
    elif head in ("exists", "forall"):
        var = _parse_var(sc.token(), sc)
        body = _parse_formula(sc)
        node = Exists(var, body) if head == "exists" else Forall(var, body)
    else:
        sc.error(f"unknown form {head!r}")
    sc.expect(")")
    return node


def parse_formula(text: str) -> Formula:
    """Parse the text grammar; raises FormulaSyntaxError with line/column."""
    sc = _Scanner(text)
    node = _parse_formula(sc)
    if sc.peek() is not None:
        sc.error("trailing input")
    return node


def term_from_json(obj: dict) -> Term:
    kind = obj.get("node")
    if kind == "var":
        return Var(obj["name"])
    if kind == "letter":
        return Lit(obj["letter"])
    if kind == "eps":
        return Eps()
    raise ValueError(f"bad term node: {obj!r}")


def formula_from_json(obj: dict) -> Formula:
    kind = obj.get("node")
    if kind == "concat":
        return ConcatAtom(term_from_json(obj["lhs"]), term_from_json(obj["rhs1"]), term_from_json(obj["rhs2"]))
    if kind == "in":
        return RegexAtom(Var(obj["var"]), parse_regex(obj["regex"]))
    if kind == "oracle":
        return OracleAtom(obj["relation"], tuple(Var(v) for v in obj["vars"]))
    if kind == "not":
        return Not(formula_from_json(obj["body"]))
    if kind == "and":
        return And(formula_from_json(obj["left"]), formula_from_json(obj["right"]))
    if kind == "or":
        return Or(formula_from_json(obj["left"]), formula_from_json(obj["right"]))
    if kind == "exists":
        return Exists(Var(obj["var"]), formula_from_json(obj["body"]))
    if kind == "forall":
        return Forall(Var(obj["var"]), formula_from_json(obj["body"]))
    raise ValueError(f"bad formula node: {obj!r}")


def parse_formula_any(source: str | dict) -> Formula:
    """Accept either the text grammar or the JSON AST (object or JSON string)."""
    if isinstance(source, dict):
        return formula_from_json(source)
    stripped = source.lstrip()
    if stripped.startswith("{"):
        import json

        return formula_from_json(json.loads(source))
    return parse_formula(source)
