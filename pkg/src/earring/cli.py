"""Command-line entry point.

Exit codes: 0 success, 1 a property check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .oscillation import min_oscillation_in_class, oscillation_number
from .projections import phi_truncated
from .table import run_table
from .text import ParseError, format_word, parse_word
from .verify import run_verify
from .word_core import reduce

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_word(arg: str):
    text = sys.stdin.read() if arg == "-" else arg
    return parse_word(text)


def _cmd_reduce(args) -> int:
    print(format_word(reduce(_read_word(args.word))))
    return EXIT_OK


def _cmd_osc(args) -> int:
    w = _read_word(args.word)
    print(f"oscillation {oscillation_number(w)}")
    print(f"class_min {min_oscillation_in_class(w)}")
    return EXIT_OK


def _cmd_phi(args) -> int:
    if args.depth < 1:
        raise ValueError(f"--depth must be >= 1, got {args.depth}")
    seq = phi_truncated(_read_word(args.word), args.depth)
    print(seq.to_json() if args.format == "json" else seq.to_text())
    return EXIT_OK


def _cmd_table(args) -> int:
    sys.stdout.write(run_table(args.max_n, args.depth, args.format))
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_verify(args.seed, args.cases, args.exhaustive_len)
    sys.stdout.write(report.render())
    print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="earring", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    word_help = "word in canonical encoding, e.g. '-1 -2 1 2' or 'e'; '-' reads stdin"

    s = sub.add_parser("reduce", help="print the free-group normal form")
    s.add_argument("word", help=word_help)
    s.set_defaults(func=_cmd_reduce)

    s = sub.add_parser("osc", help="oscillation number of the word and the minimum over its class")
    s.add_argument("word", help=word_help)
    s.set_defaults(func=_cmd_osc)

    s = sub.add_parser("phi", help="image in the inverse limit, truncated at --depth")
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("word", help=word_help)
    s.set_defaults(func=_cmd_phi)

    s = sub.add_parser("table", help="oscillation vs inverse-limit distance of the witness words")
    s.add_argument("--max-n", type=int, default=64)
    s.add_argument("--depth", type=int, default=64)
    s.add_argument("--format", choices=("text", "json", "csv"), default="text")
    s.set_defaults(func=_cmd_table)

    s = sub.add_parser("verify", help="run every property suite")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--cases", type=int, default=1000)
    s.add_argument("--exhaustive-len", type=int, default=8)
    s.set_defaults(func=_cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
