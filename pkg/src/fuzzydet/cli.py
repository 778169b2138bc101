"""Command-line front end: ``fuzzydet <subcommand> ...``.

Exit codes: 0 success, 1 DIFFERENT verdict from ``equiv``, 2 usage error,
3 unreadable or malformed input, 4 precondition violation (wrong automaton
kind, unknown letter, lattice/alphabet mismatch), 5 state cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .cdfa import Cdfa, evaluate_cdfa, language_witness, to_fuzzy
from .determinize import (
    DEFAULT_STATE_CAP,
    ConstructionConfig,
    brzozowski,
    minimize_cdfa,
    nerode,
    reverse_nerode,
)
from .errors import CapExceeded, FuzzyDetError, ParseError
from .fuzzy import evaluate
from .textio import export_dot, format_word, parse_automaton, parse_word, serialize_automaton

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_PRECONDITION = 4
EXIT_CAP = 5

METHODS = {"nerode": nerode, "reverse-nerode": reverse_nerode, "brzozowski": brzozowski}


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read(), "<stdin>"
        with open(path, encoding="utf-8") as f:
            return f.read(), path
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}", EXIT_INPUT) from None


def load(path):
    text, source = _read(path)
    return parse_automaton(text, source=source)


def _write(args, text):
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)


def _render(args, automaton):
    if getattr(args, "format", "text") == "dot":
        return export_dot(automaton)
    return serialize_automaton(automaton)


def _as_fuzzy(a):
    return to_fuzzy(a) if isinstance(a, Cdfa) else a


def cmd_determinize(args):
    a = _as_fuzzy(load(args.input))
    config = ConstructionConfig(state_cap=args.cap, collect_stats=args.stats)
    result = METHODS[args.method](a, config)
    if args.stats:
        print(f"method={args.method} " + result.stats.format_line(), file=sys.stderr)
    _write(args, _render(args, result.cdfa))
    return EXIT_OK


def cmd_minimize(args):
    c = load(args.input)
    if not isinstance(c, Cdfa):
        raise CliError(
            f"{args.input}: minimize expects a cdfa; use 'determinize' for fuzzy automata",
            EXIT_PRECONDITION,
        )
    _write(args, _render(args, minimize_cdfa(c, ConstructionConfig(state_cap=args.cap))))
    return EXIT_OK


def cmd_eval(args):
    a = load(args.input)
    u = parse_word(args.word, a.alphabet)
    value = evaluate_cdfa(a, u) if isinstance(a, Cdfa) else evaluate(a, u)
    print(a.lattice.format_value(value))
    return EXIT_OK


def cmd_equiv(args):
    config = ConstructionConfig(state_cap=args.cap)
    machines = []
    for path in (args.first, args.second):
        a = load(path)
        machines.append(a if isinstance(a, Cdfa) else brzozowski(a, config).cdfa)
    c1, c2 = machines
    witness = language_witness(c1, c2)
    if witness is None:
        print("EQUIVALENT")
        return EXIT_OK
    fmt = c1.lattice.format_value
    print("DIFFERENT")
    print(f"witness: {format_word(witness)}")
    print(f"values: {fmt(evaluate_cdfa(c1, witness))} {fmt(evaluate_cdfa(c2, witness))}")
    return EXIT_DIFFERENT


def cmd_export_dot(args):
    _write(args, export_dot(load(args.input)))
    return EXIT_OK


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fuzzydet",
        description="Determinize and minimize fuzzy automata over residuated lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output=True, cap=True, fmt=False):
        if output:
            p.add_argument("-o", "--output", help="output file (default: stdout)")
        if cap:
            p.add_argument("--cap", type=_positive, default=DEFAULT_STATE_CAP,
                           help=f"state cap per construction (default {DEFAULT_STATE_CAP})")
        if fmt:
            p.add_argument("--format", choices=("text", "dot"), default="text")

    p = sub.add_parser("determinize", help="build a crisp-deterministic automaton")
    p.add_argument("input", help="automaton file, or - for stdin")
    p.add_argument("--method", choices=tuple(METHODS), default="brzozowski")
    p.add_argument("--stats", action="store_true",
                   help="print a key=value stats line on stderr")
    common(p, fmt=True)
    p.set_defaults(func=cmd_determinize)

    p = sub.add_parser("minimize", help="minimize a cdfa")
    p.add_argument("input")
    common(p, fmt=True)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("eval", help="print the degree to which a word is accepted")
    p.add_argument("input")
    p.add_argument("word", help='word, e.g. "xxy" or "x y"; "" is the empty word')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("equiv", help="decide whether two automata recognize the same language")
    p.add_argument("first")
    p.add_argument("second")
    common(p, output=False)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("export-dot", help="render as a Graphviz digraph")
    p.add_argument("input")
    common(p, cap=False)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"fuzzydet: {e}", file=sys.stderr)
        return e.code
    except ParseError as e:
        print(f"fuzzydet: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as e:
        print(f"fuzzydet: {e}", file=sys.stderr)
        return EXIT_CAP
    except FuzzyDetError as e:
        print(f"fuzzydet: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
