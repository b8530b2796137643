"""Command-line front end.

Exit codes: 0 ok, 2 usage, 3 hypothesis violation, 4 domain violation,
5 verification failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence

from . import abacus as ab
from . import yinyang as yy
from .counting import HypothesisError, Method, count
from .enumeration import EnumerationSpec, NoCoprimePair, enumerate_family
from .partitions import CoreFamily, format_parts, parse_parts
from .qseries import series_family
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _two(text: str) -> List[int]:
    vals = _ints(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected two integers, got {text!r}")
    return vals


def _family(text: str) -> CoreFamily:
    try:
        return CoreFamily.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown family {text!r}")


def _hypotheses_hold(moduli: Sequence[int]) -> bool:
    if len(moduli) == 2:
        return math.gcd(*moduli) == 1
    if len(moduli) == 3:
        s, u, v = moduli
        if u - s == v - u > 0:
            return math.gcd(s, u - s) == 1
    return all(math.gcd(a, b) == 1 for i, a in enumerate(moduli) for b in moduli[i + 1:])


def cmd_enumerate(args, out) -> int:
    if args.family is CoreFamily.SC:
        raise CliError(EXIT_USAGE, "self-conjugate cores are not enumerated; use count")
    moduli = tuple(args.moduli)
    if args.strict_hypotheses and not _hypotheses_hold(moduli):
        raise CliError(EXIT_HYPOTHESIS, f"moduli {moduli} violate the coprimality hypothesis")
    try:
        found = enumerate_family(EnumerationSpec(args.family, moduli, args.bound))
    except NoCoprimePair as exc:
        raise CliError(EXIT_HYPOTHESIS, str(exc))
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc))
    if args.format == "json":
        out.write(json.dumps([list(p) for p in found], separators=(",", ":")) + "\n")
    elif args.format == "csv":
        out.write("weight,parts\n")
        for p in found:
            out.write(f"{sum(p)},{' '.join(map(str, p))}\n")
    else:
        for p in found:
            out.write(format_parts(p) + "\n")
    return EXIT_OK


def _shape(args):
    if args.pair:
        return tuple(args.pair), False
    return tuple(args.triple), True


def cmd_count(args, out) -> int:
    shape, triple = _shape(args)
    if args.method == "all":
        methods = [Method.FORMULA, Method.PATHS, Method.BRUTE]
        if args.family is CoreFamily.SC:
            methods = [Method.FORMULA] + ([Method.PATHS] if triple else [])
    else:
        methods = [Method(args.method)]
    values = []
    for m in methods:
        try:
            values.append(count(args.family, shape, triple, m))
        except HypothesisError as exc:
            raise CliError(EXIT_HYPOTHESIS, str(exc))
        except ValueError as exc:
            raise CliError(EXIT_USAGE, str(exc))
    out.write(" ".join(map(str, values)) + "\n")
    if len(set(values)) > 1:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_map(args, out) -> int:
    shape, triple = _shape(args)
    a, b = shape
    if math.gcd(a, b) != 1:
        raise CliError(EXIT_HYPOTHESIS, f"{a} and {b} are not coprime")
    if args.family is CoreFamily.SC:
        raise CliError(EXIT_USAGE, "no path map for self-conjugate cores")
    try:
        if args.to_path is not None:
            lam = parse_parts(args.to_path)
            if triple:
                path = ab.to_motzkin(a, b, lam, args.family)
            else:
                path = yy.map_to_path(args.family, a, b, lam)
            out.write(str(path) + "\n")
        else:
            text = args.to_partition.strip().upper()
            if triple:
                lam = ab.from_motzkin(a, b, ab.FreeMotzkinPath(text), args.family)
            else:
                lam = yy.map_to_partition(args.family, a, b, yy.NEPath(text))
            out.write(format_parts(lam) + "\n")
    except (ab.AbacusError, yy.DiagramError) as exc:
        raise CliError(EXIT_DOMAIN, str(exc))
    except ValueError as exc:
        raise CliError(EXIT_DOMAIN, str(exc))
    return EXIT_OK


def cmd_series(args, out) -> int:
    if args.modulus < 2:
        raise CliError(EXIT_HYPOTHESIS, "modulus must be at least 2")
    if args.max_n < 0:
        raise CliError(EXIT_USAGE, "--max-n must be nonnegative")
    for n, c in enumerate(series_family(args.family, args.modulus, args.max_n)):
        out.write(f"{n},{c}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    checks = run_suite(args.suite, args.max)
    failed = 0
    for c in checks:
        if not c.ok or not args.failures_only:
            out.write(c.line() + "\n")
        failed += not c.ok
    out.write(f"{args.suite}: {len(checks) - failed}/{len(checks)} passed\n")
    return EXIT_OK if not failed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simcores", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list simultaneous cores by brute force")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--moduli", type=_ints, required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--format", choices=("lines", "json", "csv"), default="lines")
    p.add_argument("--strict-hypotheses", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    def shape_args(q):
        g = q.add_mutually_exclusive_group(required=True)
        g.add_argument("--pair", type=_two, metavar="S,T")
        g.add_argument("--triple", type=_two, metavar="S,D", help="moduli (s, s+d, s+2d)")

    p = sub.add_parser("count", help="count a family by formula, paths or brute force")
    p.add_argument("--family", type=_family, required=True)
    shape_args(p)
    p.add_argument("--method", choices=[m.value for m in Method] + ["all"], default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("map", help="encode a core as a lattice path or decode a path")
    p.add_argument("--family", type=_family, required=True)
    shape_args(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-path", metavar="PARTS")
    g.add_argument("--to-partition", metavar="PATH")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("series", help="generating function coefficients as n,coefficient")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--max-n", type=int, default=50)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max", type=int)
    p.add_argument("--failures-only", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
