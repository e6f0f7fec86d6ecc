"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 infeasible size,
3 rank-deficient input.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .codes import LinearCode, is_lcd, min_distance, standard_form
from .constructions import construct_optimal
from .errors import DegenerateCodeError, DomainError, InfeasibleSizeError, MatrixParseError
from .formula import lcd_n2_formula
from .io import TableEntry, append_cache, format_table, load_cache, parse_matrix, render_matrix
from .oracle import DEFAULT_BUDGET, oracle_exhaustive, oracle_pairs, oracle_profile

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_DEGENERATE = 3

log = logging.getLogger("lcdcodes")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _summary(code: LinearCode) -> str:
    lcd = "true" if is_lcd(code) else "false"
    return f"n={code.n} k={code.k} d={min_distance(code)} lcd={lcd}"


def _range(args) -> range:
    if args.n is not None:
        return range(args.n, args.n + 1)
    if args.min is None or args.max is None:
        raise DomainError("give --n or both --min and --max")
    return range(args.min, args.max + 1)


def cmd_formula(args, out) -> int:
    for n in _range(args):
        out.write(f"LCD[{n},2] = {lcd_n2_formula(n)}\n")
    return EXIT_OK


def cmd_construct(args, out) -> int:
    code = construct_optimal(args.n)
    if args.standard_form:
        code, _ = standard_form(code)
    out.write(render_matrix(code.generator))
    out.write(_summary(code) + "\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    code = LinearCode(parse_matrix(text))
    out.write(_summary(code) + "\n")
    return EXIT_OK


def _compute_entry(n: int, k: int, method: str, args) -> TableEntry:
    if method != "exhaustive" and k != 2:
        raise DomainError(f"method {method!r} only computes k=2")
    if method == "formula":
        return TableEntry(n, 2, lcd_n2_formula(n), method)
    if method == "construction":
        code = construct_optimal(n)
        return TableEntry(n, 2, min_distance(code), method, code.generator)
    if method == "profile":
        res = oracle_profile(n)
        return TableEntry(n, 2, res.d, method, res.code.generator)
    if method == "pairs":
        return TableEntry(n, 2, oracle_pairs(n), method)
    res = oracle_exhaustive(n, k, budget=args.budget, workers=args.workers)
    return TableEntry(n, k, res.d, method, res.witness)


def cmd_table(args, out) -> int:
    cache = load_cache(args.cache) if args.cache else {}
    entries = []
    for n in range(args.min, args.max + 1):
        entry = cache.get((n, args.k, args.method))
        if entry is None:
            entry = _compute_entry(n, args.k, args.method, args)
            if args.cache:
                append_cache(args.cache, entry)
                cache[entry.key] = entry
        entries.append(entry)
    out.write(format_table(entries, args.format))
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    res = oracle_exhaustive(args.n, args.k, budget=args.budget, workers=args.workers)
    if args.k != 2:
        log.warning("LCD[%d,%d]: computed, unverified against literature", args.n, args.k)
    out.write(f"LCD[{res.n},{res.k}] = {res.d}\n")
    if args.witness and res.witness is not None:
        out.write(render_matrix(res.witness))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lcdcodes", description="Largest minimum distance of binary LCD codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("formula", help="evaluate the closed form for LCD[n,2]")
    p.add_argument("--n", type=int)
    p.add_argument("--min", type=int)
    p.add_argument("--max", type=int)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="print an optimal LCD [n,2] generator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--standard-form", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="report n, k, d and LCD status of a generator")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_check)

    def add_oracle_opts(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="max subspaces for the exhaustive scan (default %(default)s)")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("table", help="tabulate LCD[n,k] over a range of n")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--method", choices=["formula", "profile", "exhaustive", "pairs", "construction"],
                   default="formula")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--cache", metavar="PATH")
    add_oracle_opts(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oracle", help="exhaustive search for LCD[n,k]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--witness", action="store_true")
    add_oracle_opts(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    if not logging.getLogger().handlers:
        logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (MatrixParseError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except DegenerateCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
