"""Command-line front door.

Every command is deterministic: the same invocation produces byte-identical
output.  Exit codes: 0 success, 2 invalid input, 3 exhausted budget,
4 size guard.  Artifacts go to standard output; diagnostics and growth
sequences go to standard error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import classify as _classify
from . import converter as _converter
from . import spectrum as _spectrum
from . import zero as _zero
from .automata import to_dot, to_json
from .errors import BudgetError, GuardError, InputError
from .expansion import expansion_of_one, word_from_text, word_to_text
from .field import context, parse_poly
from .zero import ExplorationBudget

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_GUARD = 4


def _default_precision() -> int:
    raw = os.environ.get("BETANUM_PRECISION_BITS", "")
    return int(raw) if raw.isdigit() else 128


def _ctx(args):
    return context(parse_poly(args.poly), args.precision_bits)


def _budget(args) -> ExplorationBudget:
    return ExplorationBudget(args.max_states, args.max_depth)


def _parse_word_digits(text: str) -> list[int]:
    w = word_from_text(text)
    if not w.is_finite:
        raise InputError("expected a finite word")
    return list(w.preperiod)


def _growth_csv(growth, stream) -> None:
    for depth, count in enumerate(growth):
        print(f"{depth},{count}", file=stream)


def _emit_automaton(outcome, args) -> int:
    if outcome.status == _zero.BUDGET_EXCEEDED:
        print("budget_exceeded", file=sys.stderr)
        _growth_csv(outcome.growth, sys.stderr)
        return EXIT_BUDGET
    aut = outcome.automaton
    if args.format == "dot":
        print(to_dot(aut))
    else:
        print(to_json(aut))
    return EXIT_OK


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------

def _cmd_classify(args) -> int:
    ctx = _ctx(args)
    rc = _classify.classify_roots(ctx)
    verdict = expansion_of_one(ctx)
    kind_text = {
        _classify.PISOT: "pisot",
        _classify.SALEM: "salem",
        _classify.OTHER_NO_UNIT: "not Pisot; no unit-modulus conjugate",
        _classify.HAS_UNIT: "not Pisot; has unit-modulus conjugate",
        _classify.REDUCIBLE: "reducible or not an algebraic integer",
    }[rc.kind]
    parry = {
        "simple_parry": "simple Parry",
        "parry": "Parry",
        "undetermined_within_budget": "undetermined within budget",
    }[verdict.kind]
    word = word_to_text(verdict.word) if verdict.word is not None else "?"
    if args.format == "json":
        print(json.dumps({
            "kind": rc.kind,
            "verdicts": list(rc.verdicts),
            "ceil_beta": ctx.ceil_beta(),
            "d_beta_1": word,
            "parry": verdict.kind,
        }, indent=2))
    else:
        print(f"{kind_text}; ceil={ctx.ceil_beta()}; d_beta(1)={word}; {parry}")
        for i, v in enumerate(rc.verdicts):
            print(f"conjugate {i}: {v}")
    return EXIT_OK


def _cmd_zero_automaton(args) -> int:
    outcome = _zero.build_zero_automaton(_ctx(args), args.digit_bound,
                                         _budget(args))
    return _emit_automaton(outcome, args)


def _cmd_finite_zero_automaton(args) -> int:
    outcome = _zero.build_finite_zero_automaton(_ctx(args), args.digit_bound,
                                                _budget(args))
    return _emit_automaton(outcome, args)


def _cmd_normalize(args) -> int:
    ctx = _ctx(args)
    digits = _parse_word_digits(args.word)
    out = _converter.normalize(ctx, digits, args.len)
    print("".join(map(str, out)) if all(0 <= a <= 9 for a in out)
          else ",".join(map(str, out)))
    return EXIT_OK


def _cmd_converter(args) -> int:
    aut = _converter.build_converter(_ctx(args), _budget(args))
    print(to_dot(aut) if args.format == "dot" else to_json(aut))
    return EXIT_OK


def _parse_window(text: str):
    try:
        a, b = text.split(",")
        return Fraction(a.strip()), Fraction(b.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad window: {text!r}") from exc


def _cmd_spectrum(args) -> int:
    ctx = _ctx(args)
    q = _spectrum.SpectrumQuery(args.digit_bound, args.degree,
                                _parse_window(args.window), args.signed)
    values = _spectrum.enumerate_spectrum(ctx, q)
    import csv
    writer = csv.writer(sys.stdout)
    writer.writerow(["value", "decimal"])
    for v in values:
        writer.writerow([v.text(), v.decimal()])
    return EXIT_OK


def _cmd_min_gap(args) -> int:
    ctx = _ctx(args)
    stats = _spectrum.min_gap(ctx, args.digit_bound, args.degree,
                              _parse_window(args.window), args.signed)
    print("degree,count,min_gap_decimal")
    for row in stats.per_degree:
        print(f"{row.degree},{row.count},{row.min_gap_decimal()}")
    return EXIT_OK


def _cmd_probe_f(args) -> int:
    ctx = _ctx(args)
    outcome = _spectrum.f_number_probe(ctx, args.budget, args.digit_bound)
    if outcome.status == "budget_exceeded":
        print("budget_exceeded", file=sys.stderr)
        return EXIT_BUDGET
    print(f"finite count={outcome.count}")
    return EXIT_OK


def _cmd_verify_zero(args) -> int:
    ctx = _ctx(args)
    word = word_from_text(args.word)
    result = _zero.is_zero_word(ctx, args.digit_bound, word)
    print("true" if result else "false")
    return EXIT_OK


def _cmd_expand(args) -> int:
    ctx = _ctx(args)
    if "," in args.x:
        x = ctx.parse_element(args.x)
    else:
        x = ctx.from_rational(Fraction(args.x))
    from .expansion import greedy_digits
    digits = greedy_digits(ctx, x, args.digits)
    print("".join(map(str, digits)) if all(0 <= a <= 9 for a in digits)
          else ",".join(map(str, digits)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="betanum",
        description="Beta-numeration toolkit over exact algebraic arithmetic")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, budget=False):
        p.add_argument("--poly", required=True,
                       help="integer coefficients, highest degree first, "
                            "e.g. 1,-1,-1")
        p.add_argument("--precision-bits", type=int,
                       default=_default_precision())
        p.add_argument("--format", choices=["text", "json", "dot", "csv"],
                       default=None)
        if budget:
            p.add_argument("--max-states", type=int, default=10_000)
            p.add_argument("--max-depth", type=int, default=64)

    p = sub.add_parser("classify", help="root classification and expansion of 1")
    common(p)
    p.set_defaults(func=_cmd_classify, default_format="text")

    p = sub.add_parser("zero-automaton",
                       help="Buchi automaton of infinite zero representations")
    common(p, budget=True)
    p.add_argument("--digit-bound", type=int, required=True)
    p.set_defaults(func=_cmd_zero_automaton, default_format="json")

    p = sub.add_parser("finite-zero-automaton",
                       help="finite automaton of finite zero representations")
    common(p, budget=True)
    p.add_argument("--digit-bound", type=int, required=True)
    p.set_defaults(func=_cmd_finite_zero_automaton, default_format="json")

    p = sub.add_parser("normalize", help="greedy expansion of a word's value")
    common(p)
    p.add_argument("--word", required=True)
    p.add_argument("--len", type=int, default=None)
    p.set_defaults(func=_cmd_normalize, default_format="text")

    p = sub.add_parser("converter",
                       help="pair automaton of equal-value digit couples")
    common(p, budget=True)
    p.set_defaults(func=_cmd_converter, default_format="json")

    p = sub.add_parser("spectrum", help="enumerate spectrum values in a window")
    common(p)
    p.add_argument("--digit-bound", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--window", required=True, help="a,b with rational endpoints")
    p.add_argument("--signed", action="store_true",
                   help="digits -d..d instead of 0..d")
    p.set_defaults(func=_cmd_spectrum, default_format="csv")

    p = sub.add_parser("min-gap", help="per-degree minimum spectrum gaps")
    common(p)
    p.add_argument("--digit-bound", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--window", required=True)
    p.add_argument("--signed", action="store_true")
    p.set_defaults(func=_cmd_min_gap, default_format="csv")

    p = sub.add_parser("probe-f", help="finiteness probe for the clipped spectrum")
    common(p)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--digit-bound", type=int, default=None,
                   help="extension beyond the classical ceil(beta)-1 definition")
    p.set_defaults(func=_cmd_probe_f, default_format="text")

    p = sub.add_parser("verify-zero", help="exact zero-value test for a word")
    common(p)
    p.add_argument("--digit-bound", type=int, required=True)
    p.add_argument("--word", required=True, help='finite or "pre(per)" word')
    p.set_defaults(func=_cmd_verify_zero, default_format="text")

    p = sub.add_parser("expand", help="greedy digits of a value in [0,1)")
    common(p)
    p.add_argument("--x", required=True,
                   help="rational like 3/4, or field element like 0,1")
    p.add_argument("--digits", type=int, default=20)
    p.set_defaults(func=_cmd_expand, default_format="text")

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args)
    except InputError as exc:
        if args.format == "json":
            print(json.dumps({"error": str(exc),
                              "kind": type(exc).__name__}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetError as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
