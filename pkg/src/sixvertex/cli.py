"""Command-line front end: ``sixvertex {schur, verify, asm, wavefunction}``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import __version__
from .algebra import as_rational, format_polynomial
from .asm import CapExceeded, asm_generating_function, asm_statistics, enumerate_asm, format_asm
from .combinatorics import CombinatoricsError, OccupationVector, parse_partition
from .lattice import TILDE, LatticeConfig, wavefunction, wavefunction_closed
from .suites import SUITES, run_suite
from .symfunc import SchurContext, schur_bialternant, schur_combinatorial

REPORT_SCHEMA = "sixvertex.verify/1"
MAX_SITES = 6
MAX_PARTICLES = 3
MAX_ASM = 4

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _beta_arg(text: str):
    if text == "formal":
        return "formal"
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"beta must be 'formal' or a rational like 1/2, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sixvertex", description="Exact checks for the t = -1 boson / six-vertex model.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("schur", help="Schur polynomial of a partition")
    s.add_argument("--lambda", dest="lam", required=True, help='partition text, e.g. "3,1" ("" for empty)')
    s.add_argument("--nvars", type=int, required=True)
    s.add_argument("--method", choices=("bialternant", "combinatorial", "both"), default="bialternant")
    s.add_argument("--beta", type=_beta_arg, default="formal", help="'formal' or a rational (combinatorial method)")

    v = sub.add_parser("verify", help="run an identity suite and write a JSON report")
    v.add_argument("--suite", choices=SUITES + ("all",), required=True)
    v.add_argument("--max-sites", type=int, default=4)
    v.add_argument("--max-particles", type=int, default=2)
    v.add_argument("--report", help="JSON report path (default: standard output)")
    v.add_argument("--unsafe-caps", action="store_true", help=f"allow more than {MAX_SITES} sites or {MAX_PARTICLES} particles")
    v.add_argument("--no-timings", action="store_true", help="write ms = 0 so reports are byte-reproducible")

    a = sub.add_parser("asm", help="alternating sign matrices")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--what", choices=("list", "stats", "gf"), default="list")
    a.add_argument("--unsafe-caps", action="store_true")

    w = sub.add_parser("wavefunction", help="wavefunction amplitude by contraction and closed form")
    w.add_argument("--m", type=int, required=True, help="number of sites")
    w.add_argument("--n", type=int, required=True, help="number of particles")
    w.add_argument("--occ", required=True, help="occupation bits, e.g. 00110")
    w.add_argument("--beta", type=_beta_arg, default="formal")
    return p


def cmd_schur(args, out) -> int:
    try:
        lam = parse_partition(args.lam)
    except CombinatoricsError as exc:
        raise UsageError(str(exc)) from None
    if args.nvars < 1:
        raise UsageError("--nvars must be at least 1")
    if len([p for p in lam if p]) > args.nvars:
        raise UsageError(f"partition {args.lam!r} has more than {args.nvars} nonzero parts")
    ctx = SchurContext.create(args.nvars, beta=args.beta)
    if args.method == "bialternant":
        print(format_polynomial(schur_bialternant(lam, ctx)), file=out)
        return EXIT_OK
    comb = schur_combinatorial(lam, ctx)
    print(format_polynomial(comb), file=out)
    if args.method == "combinatorial":
        return EXIT_OK
    agree = comb == schur_bialternant(lam, ctx)
    print(f"verdict: {'agree' if agree else 'disagree'}", file=out)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args, out) -> int:
    if args.max_sites < 1 or args.max_particles < 0:
        raise UsageError("bounds must be positive")
    if not args.unsafe_caps and (args.max_sites > MAX_SITES or args.max_particles > MAX_PARTICLES):
        raise UsageError(f"bounds above M <= {MAX_SITES}, N <= {MAX_PARTICLES} need --unsafe-caps")
    results = run_suite(args.suite, args.max_sites, args.max_particles)
    checks = [
        {"id": r.id, "params": r.params, "verdict": r.verdict, "ms": 0 if args.no_timings else round(r.ms, 3)}
        for r in results
    ]
    passed = all(r.verdict for r in results)
    report = {
        "schema": REPORT_SCHEMA,
        "version": __version__,
        "suite": args.suite,
        "config": {"max_sites": args.max_sites, "max_particles": args.max_particles},
        "checks": checks,
        "all_passed": passed,
    }
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    failed = [r for r in results if not r.verdict]
    print(f"{args.suite}: {len(results) - len(failed)}/{len(results)} checks passed", file=sys.stderr)
    if failed:
        first = failed[0]
        print(f"first failure: {first.id} {json.dumps(first.params, sort_keys=True)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_asm(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.n > MAX_ASM and not args.unsafe_caps:
        raise UsageError(f"n > {MAX_ASM} needs --unsafe-caps")
    try:
        if args.what == "gf":
            print(format_polynomial(asm_generating_function(args.n)), file=out)
            return EXIT_OK
        matrices = enumerate_asm(args.n)
    except CapExceeded as exc:
        raise UsageError(str(exc)) from None
    if args.what == "list":
        print("\n\n".join(format_asm(a) for a in matrices), file=out)
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["index", "nu", "mu", "rho"])
        for k, a in enumerate(matrices):
            s = asm_statistics(a)
            writer.writerow([k, s.nu, s.mu, s.rho])
    return EXIT_OK


def cmd_wavefunction(args, out) -> int:
    try:
        occ = OccupationVector.from_bits(args.occ)
    except CombinatoricsError as exc:
        raise UsageError(str(exc)) from None
    if len(occ) != args.m:
        raise UsageError(f"--occ has {len(occ)} sites, --m says {args.m}")
    if any(c > 1 for c in occ):
        raise UsageError("occupations are 0/1 at t = -1")
    if occ.N != args.n:
        raise UsageError(f"--occ has {occ.N} particles, --n says {args.n}")
    zs = [f"z{j}" for j in range(1, args.n + 1)]
    cfg = LatticeConfig.create(args.m, zs, beta=args.beta, normalization=TILDE)
    direct = wavefunction(occ, zs, cfg)
    closed = wavefunction_closed(occ, zs, cfg)
    agree = direct == closed
    print(f"direct: {format_polynomial(direct)}", file=out)
    print(f"closed: {format_polynomial(closed)}", file=out)
    print(f"verdict: {'agree' if agree else 'disagree'}", file=out)
    return EXIT_OK if agree else EXIT_FAIL


COMMANDS = {"schur": cmd_schur, "verify": cmd_verify, "asm": cmd_asm, "wavefunction": cmd_wavefunction}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
