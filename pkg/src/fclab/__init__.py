"""fclab: first-order logic over word-factor structures, executable.

Model checking, round-limited two-player structure-comparison games with
strategy and distinguishing-formula certificates, combinatorics-on-words
primitives, and a desk-scale experiment harness, plus a CLI and a local
HTTP service for interactive play.
"""

from .words import (
    Morphism,
    PreconditionError,
    SemilinearSet,
    are_conjugate,
    are_coprimitive,
    common_factor_bound,
    exp,
    factors,
    fibonacci,
    fibonacci_marked,
    is_primitive,
    power_factor_decompose,
    primitive_root,
    relation_oracle,
    semilinear_member,
)
from .formulas import (
    And,
    ConcatAtom,
    EPS,
    Eps,
    Exists,
    Forall,
    Formula,
    Lit,
    Not,
    Or,
    OracleAtom,
    RegexAtom,
    Var,
    desugar_long_concat,
    free_variables,
    quantifier_rank,
    to_json,
    to_text,
)
from .parsing import FormulaSyntaxError, formula_from_json, parse_formula, parse_formula_any
from .regexes import Regex, is_bounded_regex, parse_regex, regex_match, regex_to_text
from .structures import WordStructure, build_structure, concat_triples
from .evaluate import Evaluator, enumerate_models, language_member, models
from .catalog import catalog, catalog_ids
from .elimination import NotBoundedError, eliminate_bounded_constraints
from .games import (
    BudgetExceededError,
    Equivalent,
    GamePosition,
    GameSolver,
    SpoilerWins,
    Verdict,
    distinguishing_formula,
    duplicator_respond,
    equiv_k,
    partial_isomorphism,
    search_equiv_pair,
    solve,
    spoiler_hint,
)

__version__ = "0.1.0"
