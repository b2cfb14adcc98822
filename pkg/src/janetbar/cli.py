"""Command-line front end.

Exit codes: 0 success or complete, 1 negative answer (incomplete, no
ordering), 2 bad input, 3 input is not an order ideal, 4 brute-force cap
exceeded, 5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .barcode import build_barcode, order_ideal_violation, star_set
from .errors import (
    CapExceededError,
    EmptyTermSetError,
    InternalInvariantError,
    JanetBarError,
    NotAdmissibleError,
    ParseError,
)
from .formats import (
    decomposition_to_json,
    parse_ordering,
    parse_terms,
    report_to_json,
    search_to_json,
    termset_to_json,
)
from .janet import is_complete_barcode, is_complete_definition, mult_vars_barcode
from .render import ascii_diagram, svg_diagram
from .search import DEFAULT_BRUTE_FORCE_CAP, brute_force_orderings, find_ordering
from .terms import TermSet, variable_name

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_NOT_ADMISSIBLE = 3
EXIT_CAP = 4
EXIT_INTERNAL = 5


def _load(args) -> TermSet:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = "\n".join(args.terms)
    U = parse_terms(text, args.vars)
    if not len(U):
        raise EmptyTermSetError("no terms given")
    return U


def _ordering(args, U: TermSet):
    return parse_ordering(args.order, U.n)


def _dump(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _vars(vs) -> str:
    return "{" + ", ".join(variable_name(v) for v in sorted(vs)) + "}"


def cmd_render(args, out) -> int:
    U = _load(args)
    B = build_barcode(U, _ordering(args, U))
    if args.format == "svg":
        out.write(svg_diagram(B))
    elif args.format == "json":
        _dump(B.diagram(), out)
    else:
        out.write(ascii_diagram(B))
    return EXIT_OK


def cmd_check(args, out) -> int:
    U = _load(args)
    ord = _ordering(args, U)
    report = is_complete_barcode(U, ord)
    if args.verify:
        oracle = is_complete_definition(U, ord)
        if oracle.complete != report.complete or oracle.witnesses != report.witnesses:
            raise InternalInvariantError(
                f"bar-code criterion and definition disagree under {ord}"
            )
    if args.format == "json":
        _dump(report_to_json(report), out)
    else:
        out.write(f"ordering: {ord}\n")
        for (t, v), s in sorted(report.witnesses.items(), key=lambda kv: (kv[0][0][::-1], kv[0][1])):
            divisor = "none" if s is None else str(s)
            out.write(f"{t} * {variable_name(v)} -> {divisor}\n")
        if report.complete:
            out.write("complete\n")
        else:
            t, v = report.first_failure
            out.write(f"not complete: {t} * {variable_name(v)} has no involutive divisor\n")
    return EXIT_OK if report.complete else EXIT_NEGATIVE


def cmd_decompose(args, out) -> int:
    U = _load(args)
    dec = mult_vars_barcode(U, _ordering(args, U))
    if args.format == "json":
        _dump(decomposition_to_json(dec), out)
        return EXIT_OK
    out.write(f"ordering: {dec.ordering}\n")
    width = max(len(str(t)) for t in dec)
    for t in dec:
        out.write(f"{str(t).ljust(width)}  M={_vars(dec.mult[t])}  NM={_vars(dec.nonmult(t))}\n")
    return EXIT_OK


def cmd_star_set(args, out) -> int:
    U = _load(args)
    ord = _ordering(args, U)
    bad = order_ideal_violation(U)
    if bad is not None:
        raise NotAdmissibleError(f"not an order ideal: {bad[1]} divides {bad[0]} but is missing", bad)
    F = star_set(build_barcode(U, ord))
    if args.format == "json":
        _dump(termset_to_json(TermSet.of(F, U.n)), out)
    else:
        for t in F:
            out.write(f"{t}\n")
    return EXIT_OK


def cmd_find_order(args, out) -> int:
    U = _load(args)
    everything = None
    if args.all or args.brute_force:
        everything = sorted(brute_force_orderings(U, args.cap), key=lambda o: o.order)
    result = find_ordering(U)
    if args.format == "json":
        data = search_to_json(result)
        if everything is not None:
            data["all"] = [str(o) for o in everything]
        _dump(data, out)
    else:
        if args.trace:
            for event in result.trace:
                out.write(f"# {event}\n")
        out.write(f"{result.ordering if result.found else 'none'}\n")
        if everything is not None:
            out.write(f"all complete orderings ({len(everything)}):\n")
            for o in everything:
                out.write(f"  {o}\n")
    return EXIT_OK if result.found else EXIT_NEGATIVE


def cmd_gen(args, out) -> int:
    rng = random.Random(args.seed)
    n, e = args.vars or 3, args.max_exp
    size = min(args.size, (e + 1) ** n)
    seen = set()
    while len(seen) < size:
        seen.add(tuple(rng.randint(0, e) for _ in range(n)))
    for t in sorted(seen, key=lambda t: t[::-1]):
        out.write(" ".join(map(str, t)) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="janetbar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p, formats=("text", "json")):
        p.add_argument("terms", nargs="*", help="terms such as x1^2*x3, or exponent vectors in quotes")
        p.add_argument("-f", "--file", help="read terms from a file, one per line")
        p.add_argument("--vars", type=int, help="number of variables (default: largest index seen)")
        p.add_argument("--order", default="identity", help="ordering, minimal first: x1<x3<x2")
        p.add_argument("--format", choices=formats, default="text")
        return p

    p = with_input(sub.add_parser("render", help="draw the bar code with stars"), ("text", "json", "svg"))
    p.set_defaults(func=cmd_render)
    p = with_input(sub.add_parser("check", help="decide completeness"))
    p.add_argument("--verify", action="store_true", help="cross-check with the definition")
    p.set_defaults(func=cmd_check)
    p = with_input(sub.add_parser("decompose", help="multiplicative variables of every term"))
    p.set_defaults(func=cmd_decompose)
    p = with_input(sub.add_parser("star-set", help="star set of an order ideal"))
    p.set_defaults(func=cmd_star_set)
    p = with_input(sub.add_parser("find-order", help="search an ordering making the set complete"))
    p.add_argument("--all", action="store_true", help="also list every complete ordering")
    p.add_argument("--brute-force", action="store_true", help="same as --all")
    p.add_argument("--trace", action="store_true", help="print search decisions")
    p.add_argument("--cap", type=int, default=DEFAULT_BRUTE_FORCE_CAP)
    p.set_defaults(func=cmd_find_order)
    p = sub.add_parser("gen", help="random term set")
    p.add_argument("--vars", type=int, default=3)
    p.add_argument("--size", type=int, default=8)
    p.add_argument("--max-exp", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, EmptyTermSetError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except NotAdmissibleError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NOT_ADMISSIBLE
    except CapExceededError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except InternalInvariantError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except (JanetBarError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
