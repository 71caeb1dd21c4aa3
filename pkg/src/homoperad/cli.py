"""Batch command-line front end.

Exit codes: 0 success, 2 parse error, 3 budget exhausted, 4 order failure
(a rule or candidate could not be oriented by the active term order).
"""

from __future__ import annotations

import argparse
import sys

from .completion import Candidate, Resolved, complete, overlaps, resolve
from .homalgebra import (
    check_hom_associative,
    check_hom_jacobi,
    check_multiplicative,
    check_skew,
    envelope_presentation,
    load_algebra,
)
from .linear import IncomparableLeading
from .orders import get_order
from .rewrite import (
    RewritingSystem,
    RuleError,
    format_rules,
    normal_form,
    parse_lincomb,
    parse_rules,
)
from .scalars import ScalarParseError
from .series import format_series, free_series, hilbert_series, unstable_degrees
from .terms import HOM_SIGNATURE, Signature, TermError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_ORDER = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def load_rules_path(path: str, order_name: str):
    """Read a rules file; leading `op` lines override the default hom
    signature, so enveloping presentations are self-contained."""
    with open(path) as f:
        text = f.read()
    op_lines = []
    rule_lines = []
    for line in text.splitlines():
        if line.strip().startswith("op "):
            op_lines.append(line)
        else:
            rule_lines.append(line)
    sig = Signature.parse("\n".join(op_lines)) if op_lines else HOM_SIGNATURE
    order = get_order(order_name)
    rules = parse_rules("\n".join(rule_lines), sig, order)
    return sig, order, rules


def cmd_normalize(args) -> int:
    sig, order, rules = load_rules_path(args.rules, args.order)
    system = RewritingSystem(sig, order, rules)
    text = args.term if args.term is not None else sys.stdin.read()
    x = parse_lincomb(text.strip(), sig)
    print(normal_form(x, system))
    return EXIT_OK


def cmd_complete(args) -> int:
    sig, order, rules = load_rules_path(args.rules, args.order)
    state = complete(
        RewritingSystem(sig, order, rules),
        args.max_order,
        budget_seconds=args.budget,
        inter_reduce=not args.no_inter_reduce,
        require_homogeneous=not args.allow_inhomogeneous,
    )
    for o, n in state.census().items():
        print(f"{o}\t{n}")
    if args.out:
        ordered = sorted(state.system, key=lambda r: (r.order, str(r.lhs)))
        with open(args.out + ".rules", "w") as f:
            f.write(format_rules(ordered))
        with open(args.out + ".census.tsv", "w") as f:
            f.writelines(f"{o}\t{n}\n" for o, n in state.census().items())
        with open(args.out + ".log", "w") as f:
            f.writelines(
                f"{amb.site}\t{amb.rule1},{amb.rule2}\t{outcome}\n"
                for amb, outcome in state.log
            )
    if state.status == "budget":
        print("budget exhausted before reaching max order", file=sys.stderr)
        return EXIT_BUDGET
    if state.status == "order_failure":
        print(
            f"order failure: cannot orient {state.failure.diff}", file=sys.stderr
        )
        return EXIT_ORDER
    return EXIT_OK


def cmd_ambiguities(args) -> int:
    sig, order, rules = load_rules_path(args.rules, args.order)
    system = RewritingSystem(sig, order, rules)
    ambs = []
    for i, r1 in enumerate(rules):
        for r2 in rules[i:]:
            ambs.extend(overlaps(r1, r2, sig))
    ambs.sort(key=lambda a: (a.order, str(a.site), a.rule1, a.rule2))
    for amb in ambs:
        outcome = resolve(amb, system)
        if isinstance(outcome, Resolved):
            verdict = "resolved"
        elif isinstance(outcome, Candidate):
            verdict = f"candidate\t{outcome.diff}"
        else:
            verdict = "order_failure"
        print(f"{amb.site}\t{amb.rule1},{amb.rule2}\t{verdict}")
    return EXIT_OK


def cmd_hilbert(args) -> int:
    if args.free:
        series = free_series(args.degree)
        warnings = []
    else:
        if not args.rules:
            raise CliError("hilbert needs --rules or --free", EXIT_PARSE)
        _, _, rules = load_rules_path(args.rules, args.order)
        series = hilbert_series(rules, args.degree)
        stable = [tuple(map(int, s.split(","))) for s in args.stable]
        warnings = unstable_degrees(stable, args.degree) if stable else []
    sys.stdout.write(format_series(series))
    if warnings:
        print(
            "warning: coefficients not guaranteed stable at degrees "
            + " ".join(f"a^{i}m^{j}" for i, j in warnings),
            file=sys.stderr,
        )
        if args.strict:
            return 1
    return EXIT_OK


_IDENTITY_CHECKS = {
    "hom-associative": check_hom_associative,
    "hom-jacobi": check_hom_jacobi,
    "skew": check_skew,
    "multiplicative": check_multiplicative,
}


def cmd_check_algebra(args) -> int:
    with open(args.algebra) as f:
        A = load_algebra(f.read())
    names = args.identities.split(",")
    ok = True
    for name in names:
        if name not in _IDENTITY_CHECKS:
            raise CliError(f"unknown identity {name!r}", EXIT_PARSE)
        violations = _IDENTITY_CHECKS[name](A)
        if violations:
            ok = False
            print(f"{name}\tFAIL")
            for idx, defect in violations:
                print(f"  at {idx}: defect {defect}")
        else:
            print(f"{name}\tPASS")
    return EXIT_OK if ok else 1


def cmd_envelope(args) -> int:
    with open(args.algebra) as f:
        L = load_algebra(f.read())
    names = args.names.split(",")
    pres = envelope_presentation(L, names, get_order(args.order))
    sys.stdout.write(pres.to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="homoperad",
        description="Rewriting, completion and Hilbert series in free linear operads.",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker count (output is identical for any value)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--rules", help="rules file")
        sp.add_argument("--order", default="lex_ma", choices=["lex_ma", "right_comb"])

    sp = sub.add_parser("normalize", help="reduce a term to its normal form")
    common(sp)
    sp.add_argument("--term", help="term or signed sum; stdin when omitted")
    sp.set_defaults(fn=cmd_normalize)

    sp = sub.add_parser("complete", help="run critical-pairs completion")
    common(sp)
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument("--budget", type=float, default=None, help="seconds")
    sp.add_argument("--no-inter-reduce", action="store_true")
    sp.add_argument("--allow-inhomogeneous", action="store_true")
    sp.add_argument("--out", help="prefix for .rules/.census.tsv/.log outputs")
    sp.set_defaults(fn=cmd_complete)

    sp = sub.add_parser("ambiguities", help="list critical ambiguities and outcomes")
    common(sp)
    sp.set_defaults(fn=cmd_ambiguities)

    sp = sub.add_parser("hilbert", help="irreducible plane monomial counts")
    common(sp)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--free", action="store_true", help="closed-form free series")
    sp.add_argument(
        "--stable",
        action="append",
        default=[],
        metavar="K,L",
        help="grading fully processed by the rule set (repeatable)",
    )
    sp.add_argument("--strict", action="store_true")
    sp.set_defaults(fn=cmd_hilbert)

    sp = sub.add_parser("check-algebra", help="evaluate identities on an algebra")
    sp.add_argument("algebra", help="algebra JSON file")
    sp.add_argument("--identities", required=True, help="comma-separated list")
    sp.set_defaults(fn=cmd_check_algebra)

    sp = sub.add_parser("envelope", help="emit an enveloping presentation")
    sp.add_argument("algebra", help="bracket algebra JSON file")
    sp.add_argument("--names", required=True, help="comma-separated constant names")
    sp.add_argument("--order", default="lex_ma", choices=["lex_ma", "right_comb"])
    sp.set_defaults(fn=cmd_envelope)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ScalarParseError,) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except RuleError as e:
        print(f"order failure: {e}", file=sys.stderr)
        return EXIT_ORDER
    except IncomparableLeading as e:
        print(f"order failure: {e}", file=sys.stderr)
        return EXIT_ORDER
    except TermError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    raise SystemExit(main())
