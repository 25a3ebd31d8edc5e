"""Command line entry point: ``braidwalk <subcommand> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidParseError, parse_braid, parse_compact, reflect
from .bracket import jones_via_bracket
from .closed_forms import CLOSED_FORMS, VARIANTS, closed_form
from .engine import DEFAULT_MAX_COLOR, DEFAULT_MAX_WORK, colored_jones, kashaev_evaluation
from .errors import DomainError, ResourceLimitError
from .io import TASKS, CorpusError, load_csv, run_batch, write_results
from .minimize import minimize_walks, normalize_leading
from .torus import count_series
from .walks import DEFAULT_LIMIT, count_simple_walks, enumerate_simple_walks

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _word(args):
    parse = parse_compact if args.compact else parse_braid
    return parse(args.word, args.width)


def _add_word(p):
    p.add_argument("word", help='braid word, e.g. "[1,-2,1,-2]"')
    p.add_argument("--compact", action="store_true", help='word uses table notation, e.g. "12^3 12^{-1}"')
    p.add_argument("--width", type=int, default=None, help="number of strands (default: max index + 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidwalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("walks", help="count simple walks")
    _add_word(p)
    p.add_argument("--semi", action="store_true", help="also count walks on the reflection")
    p.add_argument("--dump", action="store_true", help="print every walk")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    p = sub.add_parser("jones", help="colored Jones polynomial from simple walks")
    _add_word(p)
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--eval-root", action="store_true", help="also evaluate at exp(2 pi i / N)")
    p.add_argument("--terms", action="store_true", help="print (doubled exponent, coefficient) pairs as JSON")
    p.add_argument("--max-work", type=int, default=DEFAULT_MAX_WORK)
    p.add_argument("--max-color", type=int, default=DEFAULT_MAX_COLOR)

    p = sub.add_parser("oracle-jones", help="Jones polynomial by the Kauffman bracket")
    _add_word(p)

    p = sub.add_parser("closed-form", help="closed-form colored Jones for 5_2, 6_1, 7_2")
    p.add_argument("knot", choices=sorted(CLOSED_FORMS))
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="corrected")

    p = sub.add_parser("minimize", help="orbit representative with fewest simple walks")
    _add_word(p)
    p.add_argument("--normalize-leading", action="store_true", help="rewrite to start with sigma_1")

    p = sub.add_parser("torus", help="simple-walk counts on torus braids")
    p.add_argument("--family", type=int, choices=(2, 3), required=True)
    p.add_argument("--max", type=int, required=True, dest="n_max")
    p.add_argument("--literal", action="store_true", help="family 3: count the literal negative word")

    p = sub.add_parser("batch", help="run a task over a name,braid CSV")
    p.add_argument("--task", choices=TASKS, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--color", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default=None)
    return parser


def _cmd_walks(args, out):
    b = _word(args)
    if args.dump:
        census = enumerate_simple_walks(b, limit=args.limit)
        print(census.count, file=out)
        if census.walks:
            print(census.dump(), file=out)
    else:
        print(count_simple_walks(b, limit=args.limit), file=out)
    if args.semi:
        mirror = count_simple_walks(reflect(b), limit=args.limit)
        print(f"reflection: {mirror}", file=out)
        print(f"semi-simple total: {count_simple_walks(b, limit=args.limit) + mirror}", file=out)


def _cmd_jones(args, out):
    b = _word(args)
    J = colored_jones(b, args.color, max_color=args.max_color, max_work=args.max_work)
    print(J, file=out)
    if args.terms:
        print(json.dumps(J.term_list()), file=out)
    if args.eval_root:
        value, rate = kashaev_evaluation(b, args.color, max_color=args.max_color, max_work=args.max_work)
        print(f"J(exp(2 pi i/{args.color})) = {value.real:.12g} {value.imag:+.12g}i", file=out)
        print(f"log|J|/N = {rate:.12g}", file=out)


def _cmd_minimize(args, out):
    b = _word(args)
    best = minimize_walks(b)
    word = best.word
    print(f"{word}\t{best.sw_count}\t{best.describe()}\tmirror={best.mirror_flag}", file=out)
    if args.normalize_leading:
        res = normalize_leading(word)
        status = "ok" if res.found else "no sigma_1 start reachable"
        print(f"{res.word}\t{count_simple_walks(res.word)}\t{status}", file=out)


def _cmd_torus(args, out):
    report = count_series(args.family, args.n_max, mirror=False if args.literal else None)
    for n, c in report.rows():
        print(f"{n}\t{c}", file=out)
    print(f"recurrence_ok={report.recurrence_ok} closedform_ok={report.closedform_ok}", file=out)
    for note in report.notes:
        print(f"# {note}", file=out)


def _cmd_batch(args, out):
    loaded = load_csv(args.infile)
    for line, msg in loaded.errors:
        print(f"{args.infile}:{line}: {msg}", file=sys.stderr)
    results = run_batch(loaded.records, args.task, jobs=args.jobs, color=args.color)
    try:
        write_results(results, args.outfile, args.format)
    except OSError as exc:
        raise UsageError(f"cannot write {args.outfile}: {exc}") from exc
    failed = sum(1 for r in results if r.error)
    print(f"{len(results)} records, {failed} failed", file=out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "walks":
            _cmd_walks(args, out)
        elif args.command == "jones":
            _cmd_jones(args, out)
        elif args.command == "oracle-jones":
            print(jones_via_bracket(_word(args)), file=out)
        elif args.command == "closed-form":
            print(closed_form(args.knot, args.color, args.variant), file=out)
        elif args.command == "minimize":
            _cmd_minimize(args, out)
        elif args.command == "torus":
            _cmd_torus(args, out)
        elif args.command == "batch":
            _cmd_batch(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (BraidParseError, CorpusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
