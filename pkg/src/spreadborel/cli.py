"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 precondition violated,
4 oracle mismatch, 5 Taylor oracle generator cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from . import document, oracle
from .cm import cm_report
from .errors import (
    IndexRangeError,
    MonomialSyntaxError,
    OracleCapError,
    SpreadBorelError,
)
from .ideals import MonomialIdeal, borel_closure, minimal_generators, veronese_ideal
from .monomials import SpreadVector, count_spread, enumerate_spread, monomials_from, render_monomial
from .resolution import betti_table, extremal_betti, poincare_series
from .sampling import random_grid
from .verify import (
    Check,
    check_betti,
    check_cm,
    check_extremal,
    check_height,
    check_poincare,
    verify_ideal,
)

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4
EXIT_CAP = 5


class UsageError(SpreadBorelError):
    pass


def _spread(text: str) -> SpreadVector:
    try:
        return SpreadVector.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _split_gens(text: str) -> list[str]:
    return [g.strip() for g in text.split(",") if g.strip()]


def _load_ideal(args) -> tuple[MonomialIdeal, SpreadVector]:
    t = _spread(args.t) if args.t else None
    if args.file:
        I, doc_t = document.load(args.file)
        t = t or doc_t
        gens = list(I.gens)
        n = I.n
    else:
        if args.n is None or args.gens is None:
            raise UsageError("give --file, or --n together with --gens")
        n = args.n
        gens = monomials_from(_split_gens(args.gens), n)
    if t is None:
        raise UsageError("a spread vector is required (--t or a 't' field in the file)")
    if args.borel:
        return borel_closure(gens, t, n), t
    return minimal_generators(gens, n, t), t


def _emit(args, text: str, data: Any) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _fail_on(checks: list[Check]) -> int:
    bad = [c for c in checks if not c.ok]
    for c in checks:
        print(c.line(), file=sys.stderr if not c.ok else sys.stdout)
    return EXIT_MISMATCH if bad else 0


def cmd_enumerate(args) -> int:
    t = _spread(args.t)
    mons = enumerate_spread(args.n, args.l, t)
    if args.count:
        c = count_spread(args.n, args.l, t)
        if c != len(mons):
            print(f"count formula {c} != enumeration {len(mons)}", file=sys.stderr)
            return EXIT_MISMATCH
        _emit(args, str(c), {"count": c})
    else:
        rendered = [render_monomial(u) for u in mons]
        _emit(args, "\n".join(rendered), {"monomials": rendered})
    return 0


def cmd_closure(args) -> int:
    t = _spread(args.t)
    I = borel_closure(monomials_from(_split_gens(args.gens), args.n), t, args.n)
    _emit(args, str(I), document.ideal_to_document(I, t))
    return 0


def cmd_veronese(args) -> int:
    t = _spread(args.t)
    I = veronese_ideal(args.n, args.l, t)
    _emit(args, str(I), document.ideal_to_document(I, t))
    return 0


def cmd_betti(args) -> int:
    I, t = _load_ideal(args)
    table = betti_table(I, t)
    if args.quotient:
        table = table.to_quotient()
    _emit(args, table.render(), {"subject": table.subject, "entries": table.records()})
    return _fail_on([check_betti(I, t, args.cap)]) if args.verify else 0


def cmd_poincare(args) -> int:
    I, t = _load_ideal(args)
    P = poincare_series(I, t)
    data = [{"y": a, "z": b, "coefficient": c} for (a, b), c in P.coefficients.items()]
    _emit(args, str(P), {"coefficients": data})
    return _fail_on([check_poincare(I, t, args.cap)]) if args.verify else 0


def cmd_extremal(args) -> int:
    I, t = _load_ideal(args)
    ext = extremal_betti(I, t)
    text = "\n".join(f"beta_{{{k},{k + l}}} = {v}" for k, l, v in ext) or "none"
    _emit(args, text, {"extremal": [{"k": k, "l": l, "value": v} for k, l, v in ext]})
    return _fail_on([check_extremal(I, t, args.cap)]) if args.verify else 0


def cmd_cm(args) -> int:
    I, t = _load_ideal(args)
    rep = cm_report(I, t)
    _emit(args, rep.render(), rep.as_dict())
    if args.verify:
        return _fail_on([check_height(I, t), check_cm(I, t, args.cap)])
    return 0


def cmd_verify(args) -> int:
    if args.random:
        jobs = random_grid(args.random, seed=args.seed)
    else:
        jobs = [_load_ideal(args)]
    failures = 0
    for I, t in jobs:
        checks = verify_ideal(I, t, args.cap)
        bad = [c for c in checks if not c.ok]
        failures += bool(bad)
        if not args.random or bad:
            print(f"{I} t=({t})")
            for c in checks:
                print("  " + c.line())
    print(f"{len(jobs) - failures}/{len(jobs)} ideals verified")
    return EXIT_MISMATCH if failures else 0


def _add_ideal_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--file", help="ideal document (JSON)")
    p.add_argument("--n", type=int, help="number of variables")
    p.add_argument("--t", help="spread vector, comma separated, e.g. 1,0")
    p.add_argument("--gens", help='comma-separated generators, e.g. "x1*x2,x1*x3"')
    p.add_argument("--borel", action="store_true", help="treat generators as Borel seeds and close them")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="Taylor oracle generator cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spreadborel", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func: Callable, helptext: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = command("enumerate", cmd_enumerate, "list or count t-spread monomials of one degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True, help="degree")
    p.add_argument("--t", required=True)
    p.add_argument("--count", action="store_true")

    p = command("closure", cmd_closure, "t-spread Borel closure of seed monomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--gens", required=True)

    p = command("veronese", cmd_veronese, "t-spread Veronese ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True, help="degree")
    p.add_argument("--t", required=True)

    for name, func, helptext in [
        ("betti", cmd_betti, "graded Betti table"),
        ("poincare", cmd_poincare, "bigraded Poincare polynomial of S/I"),
        ("extremal", cmd_extremal, "extremal Betti numbers"),
        ("cm", cmd_cm, "height, depth and Cohen-Macaulay status"),
    ]:
        p = command(name, func, helptext)
        _add_ideal_args(p)
        p.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")
        if name == "betti":
            p.add_argument("--quotient", action="store_true", help="show the table of S/I")

    p = command("verify", cmd_verify, "run every oracle cross-check")
    _add_ideal_args(p)
    p.add_argument("--random", type=int, default=0, metavar="COUNT", help="check COUNT random Borel ideals")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (MonomialSyntaxError, IndexRangeError, document.DocumentError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SpreadBorelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
