"""Command-line interface.

Exit codes: 0 on success, 1 on a domain error (bad word, unknown id,
k-equivalent words given to distinguish, budget exhaustion), 2 on usage
errors.  --json switches to machine output; the verdict JSON printed by
``equiv`` is byte-identical to the HTTP API's for the same query.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import UnknownFormulaError, catalog
from .elimination import NotBoundedError
from .evaluate import enumerate_models, language_member
from .formulas import free_variables, quantifier_rank, to_text
from .games import BudgetExceededError, SpoilerWins, distinguishing_formula, solve
from .harness import experiment_ids, run_experiment
from .parsing import FormulaSyntaxError, parse_formula_any
from .service import Config, canonical_json, serve
from .words import (
    PreconditionError,
    are_conjugate,
    are_coprimitive,
    exp,
    fibonacci,
    fibonacci_marked,
    is_primitive,
    primitive_root,
)


class DomainError(Exception):
    pass


def _formula_arg(text: str):
    if text.startswith("catalog:"):
        name, _, rest = text[len("catalog:"):].partition(":")
        params = {}
        if rest:
            for part in rest.split(","):
                key, _, val = part.partition("=")
                params[key] = int(val) if val.isdigit() else val
        return catalog(name, **params)
    return parse_formula_any(text)


def cmd_check(args) -> int:
    phi = _formula_arg(args.formula)
    if free_variables(phi):
        raise DomainError(f"formula has free variables {sorted(free_variables(phi))}; use eval")
    holds = language_member(phi, args.word, alphabet=args.alphabet)
    if args.json:
        print(canonical_json({"word": args.word, "holds": holds}))
    else:
        print("HOLDS" if holds else "FAILS")
    return 0


def cmd_eval(args) -> int:
    phi = _formula_arg(args.formula)
    assignments = enumerate_models(phi, args.word, alphabet=args.alphabet, limit=args.limit)
    if args.json:
        out = [{x: (v if v != "" else "eps") for x, v in m.items()} for m in assignments]
        print(canonical_json({"word": args.word, "assignments": out}))
    else:
        if not assignments:
            print("(no satisfying assignments)")
        for m in assignments:
            print("  ".join(f"?{x}={v if v != '' else 'eps'}" for x, v in sorted(m.items())))
    return 0


def cmd_equiv(args) -> int:
    verdict = solve(args.wordA, args.wordB, args.k, want_formula=args.formula, budget=args.budget)
    if args.json:
        print(canonical_json(verdict.to_json()))
        return 0
    if isinstance(verdict, SpoilerWins):
        print(f"SPOILER_WINS in {verdict.rounds_needed} round(s)")
        if verdict.strategy:
            print(f"first move: {verdict.strategy.side} picks {verdict.strategy.element}")
        if verdict.formula is not None:
            print(f"distinguishing sentence (rank {quantifier_rank(verdict.formula)}):")
            print(f"  {to_text(verdict.formula)}")
    else:
        print("EQUIVALENT")
    return 0


def cmd_distinguish(args) -> int:
    try:
        phi = distinguishing_formula(args.wordA, args.wordB, args.k)
    except ValueError as e:
        raise DomainError(str(e))
    if args.json:
        print(canonical_json({"formula": to_text(phi), "rank": quantifier_rank(phi)}))
    else:
        print(to_text(phi))
    return 0


def cmd_words(args) -> int:
    sub = args.words_cmd
    if sub == "prim":
        if not args.args or len(args.args) != 1:
            raise UsageError("words prim <word>")
        result = is_primitive(args.args[0])
        print(canonical_json({"word": args.args[0], "primitive": result}) if args.json else ("primitive" if result else "imprimitive"))
    elif sub == "root":
        if len(args.args) != 1:
            raise UsageError("words root <word>")
        root, e = primitive_root(args.args[0])
        print(canonical_json({"root": root, "exponent": e}) if args.json else f"{root}^{e}")
    elif sub == "conj":
        if len(args.args) != 2:
            raise UsageError("words conj <u> <v>")
        result = are_conjugate(*args.args)
        print(canonical_json({"conjugate": result}) if args.json else ("conjugate" if result else "not conjugate"))
    elif sub == "coprim":
        if len(args.args) != 2:
            raise UsageError("words coprim <u> <v>")
        result = are_coprimitive(*args.args)
        print(canonical_json({"coprimitive": result}) if args.json else ("co-primitive" if result else "not co-primitive"))
    elif sub == "exp":
        if len(args.args) != 2:
            raise UsageError("words exp <base> <word>")
        result = exp(*args.args)
        print(canonical_json({"exp": result}) if args.json else str(result))
    elif sub == "fib":
        if len(args.args) != 1 or not args.args[0].isdigit():
            raise UsageError("words fib <n>")
        n = int(args.args[0])
        w = fibonacci_marked(n, args.marker) if args.marked else fibonacci(n)
        print(canonical_json({"n": n, "word": w}) if args.json else w)
    else:
        raise UsageError(f"unknown words subcommand {sub!r}")
    return 0


def cmd_verify(args) -> int:
    params = {}
    for spec_item in args.bounds or []:
        key, _, val = spec_item.partition("=")
        if not _:
            raise UsageError(f"bad bound {spec_item!r}; use key=value")
        if val.lstrip("-").isdigit():
            params[key] = int(val)
        elif val in ("true", "false"):
            params[key] = val == "true"
        else:
            params[key] = val
    try:
        report = run_experiment(args.experiment, **params)
    except (ValueError, TypeError) as e:
        raise DomainError(str(e))
    if args.json:
        print(canonical_json(report.to_json()))
    else:
        print(f"{report.id}: {report.status} ({report.instances_checked} instances, {report.seconds}s)")
        for c in report.counterexamples[:5]:
            print(f"  counterexample: {c}")
        for w in report.witnesses[:5]:
            print(f"  witness: {w}")
    return 0 if report.status != "FAIL" else 1


def cmd_serve(args) -> int:
    cfg = Config.from_env(
        port=args.port,
        node_budget=args.budget,
        persistence_path=args.data,
        cors_origin=args.cors_origin,
    )
    serve(cfg)
    return 0


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fclab", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_json(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("check", help="decide whether a sentence holds on a word")
    sp.add_argument("formula", help="text grammar, JSON AST, or catalog:<id>")
    sp.add_argument("word")
    sp.add_argument("--alphabet")
    add_json(sp)
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("eval", help="enumerate satisfying assignments of a formula on a word")
    sp.add_argument("formula")
    sp.add_argument("word")
    sp.add_argument("--alphabet")
    sp.add_argument("--limit", type=int, default=None)
    add_json(sp)
    sp.set_defaults(fn=cmd_eval)

    sp = sub.add_parser("equiv", help="solve the k-round game between two words")
    sp.add_argument("wordA")
    sp.add_argument("wordB")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--formula", action="store_true", help="also synthesize a distinguishing sentence")
    sp.add_argument("--budget", type=int, default=50_000_000)
    add_json(sp)
    sp.set_defaults(fn=cmd_equiv)

    sp = sub.add_parser("distinguish", help="synthesize a distinguishing sentence")
    sp.add_argument("wordA")
    sp.add_argument("wordB")
    sp.add_argument("--k", type=int, required=True)
    add_json(sp)
    sp.set_defaults(fn=cmd_distinguish)

    sp = sub.add_parser("words", help="word combinatorics utilities")
    sp.add_argument("words_cmd", choices=["prim", "root", "conj", "coprim", "exp", "fib"])
    sp.add_argument("args", nargs="*")
    sp.add_argument("--marker", default="c")
    sp.add_argument("--marked", action="store_true", help="fib: emit the marker-separated family member")
    add_json(sp)
    sp.set_defaults(fn=cmd_words)

    sp = sub.add_parser("verify", help="run a harness experiment")
    sp.add_argument("experiment", help="one of: " + ", ".join(experiment_ids()))
    sp.add_argument("--bounds", nargs="*", metavar="key=value")
    add_json(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("serve", help="start the local HTTP service")
    sp.add_argument("--port", type=int, default=None)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--data", default=None, help="persistence directory")
    sp.add_argument("--cors-origin", default=None)
    sp.set_defaults(fn=cmd_serve)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (FormulaSyntaxError, UnknownFormulaError, NotBoundedError, PreconditionError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
