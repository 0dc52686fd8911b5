"""Command-line workbench for the diagram-monoid library.

Four subcommands:

* ``verify``     run a named verification target and exit 0 (verified),
                 1 (refuted), or 2 (budget exhausted, inconclusive);
* ``enumerate``  count a standard family, optionally listing elements or
                 exporting its right Cayley graph;
* ``factorize``  split a diagram into a transformation times a canonical
                 right factor, with a generator word that replays it;
* ``render``     draw a diagram as deterministic SVG.

Usage errors exit 3.  All reports are deterministic for a fixed input and
library version: JSON is emitted with sorted keys and no timestamps, so two
identical runs produce identical bytes.  The node budget for presentation
enumeration defaults to the ``DIAGCALC_BUDGET`` environment variable when
set, and ``--budget`` overrides both.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path
from typing import Sequence

from .counting import bell, catalan, order_preserving_count
from .engine import DEFAULT_BUDGET, cayley_dot, cayley_json, closure, from_elements
from .equivalences import cap_word
from .laws import (
    CheckReport,
    action_pair_elements,
    check_action_pair,
    check_ehresmann,
    check_grrac,
    check_restriction,
    theta_battery,
)
from .partitions import FAMILY_NAMES, Diagram, family, multiply, transposition
from .presentations import (
    SCHEMA_NAMES,
    cap_lift,
    derived_word,
    eval_word,
    factor_product,
    standard_assignment,
    sym_cap,
    sym_s,
    verify_presentation,
)
from .render import render_svg

LAW_TARGETS = ("ehresmann", "restriction", "action-pair", "grrac", "theta-laws")
VERIFY_TARGETS = SCHEMA_NAMES + LAW_TARGETS

EXIT_VERIFIED = 0
EXIT_REFUTED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage failures exit 3 instead of 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="diagcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification target")
    verify.add_argument("--target", required=True, choices=VERIFY_TARGETS)
    verify.add_argument("--n", type=int, required=True, help="degree")
    verify.add_argument(
        "--monoid",
        help="carrier for law targets (family name, or a pair name like "
        "en-tn for action-pair); defaults: ehresmann/restriction pnfd, "
        "grrac ppnfd, action-pair en-tn",
    )
    verify.add_argument("--side", choices=("left", "right"), default="right",
                        help="which restriction law to test (default right)")
    verify.add_argument("--budget", type=int, help="node budget for enumeration")
    verify.add_argument("--seed", type=int, help="echoed into the report")
    verify.add_argument("--expect-fail", action="store_true",
                        help="swap the verified/refuted exit codes")
    verify.add_argument("--output", help="write the report here instead of stdout")
    verify.add_argument("--format", choices=("json", "text"), default="json")

    enum = sub.add_parser("enumerate", help="count a standard family")
    enum.add_argument("--monoid", required=True, choices=FAMILY_NAMES)
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--elements", action="store_true",
                      help="include the canonical element texts")
    enum.add_argument("--output", help="write here instead of stdout")
    enum.add_argument("--format", choices=("text", "json", "dot"), default="text")

    fact = sub.add_parser("factorize", help="factor a diagram through a standard pair")
    fact.add_argument("text", help="diagram in block notation, e.g. [[1,2,-1],[-2]]")
    fact.add_argument("--mode", required=True, choices=("tn-en", "on-dn"))
    fact.add_argument("--check", metavar="WORD",
                      help="whitespace-separated generator word to verify against the input")
    fact.add_argument("--output", help="write here instead of stdout")
    fact.add_argument("--format", choices=("text", "json"), default="text")

    rend = sub.add_parser("render", help="draw a diagram")
    rend.add_argument("text", help="diagram in block notation")
    rend.add_argument("--output", help="write here instead of stdout")
    rend.add_argument("--format", choices=("svg", "text"), default="svg")
    return parser


def _emit(payload: str, output: str | None) -> None:
    if output:
        Path(output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _resolve_budget(args: argparse.Namespace, parser: _Parser) -> int:
    if getattr(args, "budget", None) is not None:
        budget = args.budget
    else:
        raw = os.environ.get("DIAGCALC_BUDGET")
        if raw is None:
            return DEFAULT_BUDGET
        try:
            budget = int(raw)
        except ValueError:
            parser.error(f"DIAGCALC_BUDGET must be an integer, got {raw!r}")
    if budget < 1:
        parser.error("budget must be at least 1")
    return budget


def _check_lines(checks: Sequence[CheckReport]) -> str:
    lines = []
    for rep in checks:
        mark = "ok  " if rep.holds else "FAIL"
        extra = f"  witness={list(rep.witness)}" if rep.witness else ""
        lines.append(f"[{mark}] {rep.name}{extra}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args: argparse.Namespace, parser: _Parser) -> int:
    budget = _resolve_budget(args, parser)
    report: dict = {
        "command": "verify",
        "target": args.target,
        "n": args.n,
        "budget": budget,
        "seed": args.seed,
        "expect_fail": args.expect_fail,
    }

    try:
        if args.target in SCHEMA_NAMES:
            outcome = verify_presentation(args.target, args.n, budget=budget)
            status = outcome.status
            report["presentation"] = outcome.to_dict()
            text_body = (
                f"target={args.target} n={args.n} status={status} "
                f"target_size={outcome.target_size} "
                f"closure_size={outcome.closure_size} "
                f"presented_size={outcome.enumerated_size}\n"
            )
        else:
            checks = _law_checks(args)
            status = "verified" if all(rep.holds for rep in checks) else "refuted"
            report["checks"] = [rep.to_dict() for rep in checks]
            text_body = f"target={args.target} n={args.n} status={status}\n" + _check_lines(checks)
    except ValueError as exc:
        parser.error(str(exc))

    report["status"] = status
    payload = _json(report) if args.format == "json" else text_body
    _emit(payload, args.output)
    if status == "exhausted":
        return EXIT_INCONCLUSIVE
    verified = status == "verified"
    if args.expect_fail:
        verified = not verified
    return EXIT_VERIFIED if verified else EXIT_REFUTED


def _law_checks(args: argparse.Namespace) -> list[CheckReport]:
    n = args.n
    if args.target == "ehresmann":
        carrier = family(args.monoid or "pnfd", n)
        return check_ehresmann(from_elements(n, carrier))
    if args.target == "restriction":
        carrier = family(args.monoid or "pnfd", n)
        return [check_restriction(from_elements(n, carrier), args.side)]
    if args.target == "grrac":
        carrier = family(args.monoid or "ppnfd", n)
        return check_grrac(from_elements(n, carrier))
    if args.target == "action-pair":
        pair = args.monoid or "en-tn"
        u_elements, s_elements = action_pair_elements(pair, n)
        return [check_action_pair(u_elements, s_elements, pair)]
    return theta_battery(n)


_CLOSED_FORMS = {
    "pn": lambda n: bell(2 * n),
    "ppn": lambda n: catalan(2 * n),
    "en": bell,
    "dn": catalan,
    "on": order_preserving_count,
    "ptn": order_preserving_count,
    "tn": lambda n: n**n,
    "sn": math.factorial,
    "pen": lambda n: max(2 ** (n - 1), 1),
}

# families whose right Cayley graph we can export, with the schema whose
# standard assignment provides the generating set
_GRAPH_GENERATORS = {
    "pnfd": "full-yq",
    "ppnfd": "planar-zo",
    "tn": "tn",
    "sing-tn": "sing-tn",
    "on": "on",
    "en": "en",
    "fn": "fn",
    "dn": "dn",
}


def _cmd_enumerate(args: argparse.Namespace, parser: _Parser) -> int:
    try:
        elements = family(args.monoid, args.n)
    except ValueError as exc:
        parser.error(str(exc))
    size = len(elements)
    closed = _CLOSED_FORMS.get(args.monoid)
    expected = closed(args.n) if closed else None

    if args.format == "dot":
        payload = _cayley(args, parser, fmt="dot")
    elif args.format == "json":
        report = {
            "command": "enumerate",
            "monoid": args.monoid,
            "n": args.n,
            "size": size,
            "closed_form": expected,
        }
        if args.elements:
            report["elements"] = [d.text() for d in elements]
        payload = _json(report)
    else:
        lines = [str(size)]
        if args.elements:
            lines += [d.text() for d in elements]
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.output)
    return EXIT_VERIFIED if expected is None or expected == size else EXIT_REFUTED


def _cayley(args: argparse.Namespace, parser: _Parser, fmt: str) -> str:
    schema_name = _GRAPH_GENERATORS.get(args.monoid)
    if schema_name is None:
        if args.monoid == "sn":
            assignment = {sym_s(i): transposition(args.n, i) for i in range(1, args.n)}
        else:
            parser.error(
                f"no standard generating set for {args.monoid!r}; "
                f"graph export supports {', '.join(sorted({*_GRAPH_GENERATORS, 'sn'}))}"
            )
    else:
        assignment = standard_assignment(schema_name, args.n)
    monoid = closure(
        args.n,
        list(assignment.values()),
        monoid=args.monoid not in ("sing-tn",),
        symbols=list(assignment),
    )
    return cayley_dot(monoid) if fmt == "dot" else _json(cayley_json(monoid))


def _transformation_word(n: int, left: Diagram, mode: str) -> tuple[str, ...]:
    """A generator word for the left factor, over the matching alphabet."""
    if mode == "on-dn":
        assignment = standard_assignment("on", n)
    else:
        assignment = standard_assignment("tn", n)
    monoid = closure(n, list(assignment.values()), symbols=list(assignment))
    index_word = monoid.word_for(left)
    return tuple(monoid.symbols[k] for k in index_word)


def _right_factor_word(n: int, right: Diagram, mode: str) -> tuple[str, ...]:
    """A generator word for the canonical right factor."""
    if mode == "on-dn":
        lift = cap_lift(n)
        word: list[str] = []
        for i, j in cap_word(right.coker()):
            word.extend(lift[sym_cap(i, j)])
        return tuple(word)
    word = []
    for block in right.coker().classes():
        for a, b in zip(block, block[1:]):
            word.extend(derived_word("epsilon", a, b, n))
    return tuple(word)


def _cmd_factorize(args: argparse.Namespace, parser: _Parser) -> int:
    try:
        d = Diagram.from_text(args.text)
        left, right = factor_product(d, args.mode)
    except ValueError as exc:
        parser.error(str(exc))
    n = d.n
    word = _transformation_word(n, left, args.mode) + _right_factor_word(n, right, args.mode)
    assignment = standard_assignment(
        "planar-zo" if args.mode == "on-dn" else "full-yq", n
    )
    # never print an unverified factorization
    assert multiply(left, right) == d
    assert eval_word(assignment, word) == d

    report = {
        "command": "factorize",
        "mode": args.mode,
        "input": d.text(),
        "left": left.text(),
        "right": right.text(),
        "word": list(word),
        "verified": True,
    }
    status = EXIT_VERIFIED
    if args.check is not None:
        check_word = tuple(args.check.split())
        try:
            value = eval_word(assignment, check_word)
        except KeyError as exc:
            parser.error(f"unknown generator symbol {exc.args[0]!r} in --check word")
        report["check_word"] = list(check_word)
        report["check_matches"] = value == d
        if not report["check_matches"]:
            report["check_value"] = value.text()
            status = EXIT_REFUTED

    if args.format == "json":
        payload = _json(report)
    else:
        lines = [
            f"input: {report['input']}",
            f"left:  {report['left']}",
            f"right: {report['right']}",
            f"word:  {' '.join(word) or '(empty)'}",
        ]
        if args.check is not None:
            lines.append(f"check: {'match' if report['check_matches'] else 'MISMATCH'}")
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.output)
    return status


def _cmd_render(args: argparse.Namespace, parser: _Parser) -> int:
    try:
        d = Diagram.from_text(args.text)
    except ValueError as exc:
        parser.error(str(exc))
    payload = d.text() + "\n" if args.format == "text" else render_svg(d)
    _emit(payload, args.output)
    return EXIT_VERIFIED


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args, parser)
    if args.command == "enumerate":
        return _cmd_enumerate(args, parser)
    if args.command == "factorize":
        return _cmd_factorize(args, parser)
    return _cmd_render(args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
