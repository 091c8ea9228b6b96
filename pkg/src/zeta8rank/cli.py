"""Command line interface.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from .errors import CapacityError, TheoremCheckError, Zeta8RankError
from .formulas import crosscheck
from .quadforms import MAX_DISC, class_number
from .rank import CSV_COLUMNS, rank2, report_csv_row
from .scan import parse_filter, scan
from .unit_index import e_via_cases, e_via_matrix, symbol_matrix
from .arith import OddSquarefree, normalize_radicand

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3

SCAN_HELP = f"""\
CSV columns: {", ".join(CSV_COLUMNS)}.
'primes' is the factorization joined by '*', 'agreement' is 1 when the
symbol-matrix and case-analysis values of e_d agree.
"""

CROSSCHECK_HELP = f"""\
Exact h2(L_d) is only produced for d = pq with (p, q) = (5, 7) or (3, 7) mod 8
and for primes p = 1 mod 8 with (2/p)_4 != (p/2)_4. The quadratic class number
oracle enumerates forms up to |D| = {MAX_DISC}, so in practice exact values
are restricted to these two-prime and one-prime radicands.
"""


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_rank(args) -> int:
    rep = rank2(args.d)
    if args.json:
        _dump(rep.to_dict())
    else:
        c = rep.classification
        print(f"d = {rep.d} (input {rep.input_d})  primes = {[p.p for p in rep.primes]}")
        print(f"t = {rep.t}  e = {rep.e_matrix} (cases: {rep.e_cases}, {rep.rule})  rank = {rep.rank}")
        print(f"classification: {c.kind.value}  [{c.witness}]")
        if not rep.agreement:
            print("WARNING: closed-form case analysis disagrees with the symbol matrix")
    return EXIT_OK if rep.agreement else EXIT_VERIFY


def cmd_classify(args) -> int:
    rep = rank2(args.d)
    c = rep.classification
    if args.json:
        _dump({"d": rep.d, "rank": rep.rank, **c.to_dict()})
    else:
        print(f"{rep.d}: {c.kind.value}  [{c.witness}]")
    return EXIT_OK


def cmd_symbols(args) -> int:
    nd = normalize_radicand(args.d)
    if not isinstance(nd, OddSquarefree):
        print("d = 1: no ramified primes")
        return EXIT_OK
    rep = rank2(args.d)
    m = symbol_matrix(nd)
    case = e_via_cases(nd)
    if args.json:
        _dump({
            "d": nd.d,
            "primes": [
                {k: v for k, v in vars(p).items() if v is not None} for p in rep.primes
            ],
            "matrix": [list(c) for c in m.columns],
            "e_matrix": e_via_matrix(nd),
            "e_cases": case.value,
            "rule": case.rule,
        })
        return EXIT_OK
    print(f"{'p':>10} {'mod8':>4} {'mod16':>5} {'(2/p)4':>6} {'(p/2)4':>6} {'zeta':>5} {'eps':>5}")
    for p in rep.primes:
        fmt = lambda v: "" if v is None else f"{v:+d}"
        print(
            f"{p.p:>10} {p.mod8:>4} {'' if p.mod16 is None else p.mod16:>5} "
            f"{fmt(p.quartic_2_over_p):>6} {fmt(p.quartic_p_over_2):>6} {p.chi_zeta:>+5d} {p.chi_eps:>+5d}"
        )
    print(f"e_d = {e_via_matrix(nd)} (matrix), {case.value} ({case.rule})")
    return EXIT_OK


def cmd_scan(args) -> int:
    keep = parse_filter(args.filter)
    writer = csv.writer(sys.stdout) if args.format == "csv" else None
    if writer:
        writer.writerow(CSV_COLUMNS)
    all_agree = True
    for rep in scan(args.lo, args.hi, jobs=args.jobs):
        all_agree &= rep.agreement
        if not keep(rep):
            continue
        if writer:
            writer.writerow(report_csv_row(rep))
        else:
            print(json.dumps(rep.to_dict(), sort_keys=True))
    return EXIT_OK if all_agree else EXIT_VERIFY


def cmd_oracle(args) -> int:
    _dump(class_number(args.m).to_dict())
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    rep = crosscheck(args.d)
    _dump(rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_verify_paper(args) -> int:
    from .verify import run_checks

    results = run_checks(args.sweep_limit)
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}: {r.detail}")
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeta8rank",
        description="2-rank of the class group of Q(zeta_8, sqrt d) and related checks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="2-rank report for one d")
    p.add_argument("d", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("classify", help="trivial / cyclic / rank 2 / type (2,2) classification")
    p.add_argument("d", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("symbols", help="quartic and norm residue symbols for the primes of d")
    p.add_argument("d", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_symbols)

    p = sub.add_parser(
        "scan",
        help="tabulate canonical d in a range",
        epilog=SCAN_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--filter", help="kind=<Kind> or rank=<n>")
    p.add_argument("--format", choices=("csv", "jsonl"), default="jsonl")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is unchanged)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("oracle", help="quadratic field class numbers")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("h2", help="class number data of Q(sqrt m) as JSON")
    q.add_argument("m", type=int)
    q.set_defaults(func=cmd_oracle)

    p = sub.add_parser(
        "crosscheck",
        help="compare rank predictions with oracle 2-class numbers",
        epilog=CROSSCHECK_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("verify-paper", help="run the published fixtures and the dual-path sweep")
    p.add_argument("--sweep-limit", type=int, default=20000)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except TheoremCheckError as exc:
        print(f"theorem check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (Zeta8RankError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
