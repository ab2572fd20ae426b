"""Command-line entry point.

Exit status: 0 success, 1 a verification or certificate failed, 2 usage error.
All JSON and CSV output is canonically ordered, so identical flags give
identical bytes.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import checks
from .jsonio import (descent_to_json, dumps, element_from_json, reduction_to_json,
                     relator_to_json, torsion_to_json, witness_to_json)
from .obstruction import DescentError, certify_nonzero_mod_relations, verify_descent
from .reduction import RelatorSet, rank_table, rank_table_csv, reduce, reduce_a1_line
from .relators import FAMILY_C, FAMILY_CBAR, make_relator
from .torsion import CertificateError, certify_eprime, certify_tau

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _nonneg(name: str):
    def parse(s: str) -> int:
        v = int(s)
        if v < 0:
            raise argparse.ArgumentTypeError(f"{name} must be >= 0")
        return v
    return parse


def _positive(name: str):
    def parse(s: str) -> int:
        v = int(s)
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be >= 1")
        return v
    return parse


def _read_element(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        obj = json.loads(text)
        return element_from_json(obj.get("element", obj) if isinstance(obj, dict) else obj)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read element from {path}: {exc}") from exc


def resolve_seed(flag: int | None) -> int:
    env = os.environ.get("SKEIN_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"SKEIN_SEED must be an integer, got {env!r}") from None
    return 0 if flag is None else flag


# -- subcommands ----------------------------------------------------------------

def cmd_relator(args) -> int:
    r = make_relator(args.family, args.m, args.n, args.q)
    _emit(dumps(relator_to_json(r)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    seed = resolve_seed(args.seed)
    print(f"seed: {seed}")
    suites = list(checks.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in suites:
        results = checks.SUITES[name](args.max_m, args.max_n, args.max_q,
                                      samples=args.samples, seed=seed)
        for r in results:
            print(r.line())
            ok &= r.ok
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rank(args) -> int:
    if args.prime is not None:
        if args.A_num is not None or args.A_den is not None:
            raise UsageError("--prime takes --A-val, not --A-num/--A-den")
        a, prime = args.A_val if args.A_val is not None else 2, args.prime
    else:
        if args.A_val is not None:
            raise UsageError("--A-val needs --prime")
        num = 2 if args.A_num is None else args.A_num
        den = 1 if args.A_den is None else args.A_den
        if den == 0:
            raise UsageError("--A-den must be nonzero")
        a, prime = Fraction(num, den), None
    try:
        rows = rank_table(a, args.degree, prime=prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(rank_table_csv(rows), args.out)
    return EXIT_OK


def cmd_reduce(args) -> int:
    e = _read_element(args.input)
    if args.a1_line:
        try:
            cert = reduce_a1_line(e)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        degree = args.degree if args.degree is not None else max(e.max_degree(), 1)
        cert = reduce(e, RelatorSet.up_to_degree(degree))
    if not cert.verify(e):
        print("certificate failed to re-expand", file=sys.stderr)
        return EXIT_FAIL
    _emit(dumps(reduction_to_json(cert)), args.out)
    return EXIT_OK


def cmd_certify_tau(args) -> int:
    try:
        cert = certify_tau(args.m, args.n, args.q)
    except CertificateError as exc:
        print(f"certify-tau: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(dumps(torsion_to_json(cert)), args.out)
    return EXIT_OK if cert.verify() else EXIT_FAIL


def cmd_certify_eprime(args) -> int:
    try:
        cert = certify_eprime(args.i)
    except CertificateError as exc:
        print(f"certify-eprime: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(dumps(torsion_to_json(cert)), args.out)
    return EXIT_OK if cert.verify() else EXIT_FAIL


def cmd_nonsplit(args) -> int:
    try:
        cert = verify_descent(args.depth)
    except DescentError as exc:
        print(f"nonsplit: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if not args.quiet:
        print(cert.trace(), file=sys.stderr)
    _emit(dumps(descent_to_json(cert)), args.out)
    return EXIT_OK


def cmd_nonzero(args) -> int:
    e = _read_element(args.input)
    w = certify_nonzero_mod_relations(e)
    _emit(dumps({"status": "nonzero" if w else "inconclusive", "witness": witness_to_json(w)}), args.out)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kbsm", description="Skein relators, torsion certificates and the non-splitting descent.")
    sub = p.add_subparsers(dest="command", required=True)

    def out_flag(sp):
        sp.add_argument("--out", default=None, help="output file (default: stdout)")

    sp = sub.add_parser("relator", help="emit one relator as JSON")
    sp.add_argument("--family", choices=[FAMILY_C, FAMILY_CBAR], required=True)
    sp.add_argument("--m", type=_nonneg("--m"), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=_nonneg("--q"), required=True)
    out_flag(sp)
    sp.set_defaults(func=cmd_relator)

    sp = sub.add_parser("verify", help="run an identity sweep")
    sp.add_argument("--suite", choices=[*checks.SUITES, "all"], required=True)
    sp.add_argument("--max-m", type=_nonneg("--max-m"), default=8)
    sp.add_argument("--max-n", type=_nonneg("--max-n"), default=8)
    sp.add_argument("--max-q", type=_nonneg("--max-q"), default=4)
    sp.add_argument("--samples", type=_positive("--samples"), default=200,
                    help="sample count for the randomized soundness suite")
    sp.add_argument("--seed", type=int, default=None, help="RNG seed (SKEIN_SEED overrides)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("rank", help="rank table of specialised relator matrices (CSV)")
    sp.add_argument("--A-num", dest="A_num", type=int, default=None)
    sp.add_argument("--A-den", dest="A_den", type=int, default=None)
    sp.add_argument("--prime", type=int, default=None)
    sp.add_argument("--A-val", dest="A_val", type=int, default=None)
    sp.add_argument("--degree", type=_nonneg("--degree"), required=True)
    out_flag(sp)
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("reduce", help="reduce an element (JSON) against the relators")
    sp.add_argument("--input", required=True, help="element JSON file, or - for stdin")
    sp.add_argument("--degree", type=_nonneg("--degree"), default=None,
                    help="use all relators up to this degree (default: the element's degree)")
    sp.add_argument("--a1-line", action="store_true", help="reduce along C(k,0) only")
    out_flag(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("certify-tau", help="torsion certificate for tau(m,n,q)")
    sp.add_argument("--m", type=_nonneg("--m"), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=_nonneg("--q"), required=True)
    out_flag(sp)
    sp.set_defaults(func=cmd_certify_tau)

    sp = sub.add_parser("certify-eprime", help="torsion certificate for e'_i")
    sp.add_argument("--i", type=_positive("--i"), required=True)
    out_flag(sp)
    sp.set_defaults(func=cmd_certify_eprime)

    sp = sub.add_parser("nonsplit", help="replay the non-splitting descent")
    sp.add_argument("--depth", type=_positive("--depth"), required=True)
    sp.add_argument("--quiet", action="store_true", help="suppress the human-readable trace")
    out_flag(sp)
    sp.set_defaults(func=cmd_nonsplit)

    sp = sub.add_parser("nonzero", help="evaluation witness that an element is nonzero mod relators")
    sp.add_argument("--input", required=True, help="element JSON file, or - for stdin")
    out_flag(sp)
    sp.set_defaults(func=cmd_nonzero)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad usage
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
