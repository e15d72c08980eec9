"""Command-line front end.

Exit codes: 0 success, 1 domain error (invalid parameters, degenerate
constructions), 2 usage error.  Machine-readable output goes to stdout,
diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Optional, Sequence

from .graphs import decode_graph6, encode_graph6, to_dot
from .families import GpParams, c_minus, c_plus, gp, h_graph, lcf
from .classify import Case, classify, involution_family, quotient_lcf
from .perms import WordTriple, desargues_half_turn, format_word, from_triple
from .covers import kronecker_cover, quotient
from .census import census, rows_to_csv, rows_to_json, verify


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep exit-code contract testable
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="gpcover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify GP(n,k)")
    p_classify.add_argument("--n", type=int, required=True)
    p_classify.add_argument("--k", type=int, required=True)
    p_classify.add_argument("--json", action="store_true")
    p_classify.add_argument("--ascii", action="store_true")

    p_quotient = sub.add_parser("quotient", help="quotient graph as graph6")
    p_quotient.add_argument("--n", type=int, required=True)
    p_quotient.add_argument("--k", type=int, required=True)
    p_quotient.add_argument("--a", type=int, default=None,
                            help="shift of the family member (default: canonical)")
    p_quotient.add_argument("--delta", action="store_true",
                            help="use the hexagonal-drawing involution of GP(10,3)")
    p_quotient.add_argument("--dot", metavar="FILE", default=None)

    p_kc = sub.add_parser("kc", help="Kronecker cover as graph6")
    group = p_kc.add_mutually_exclusive_group(required=True)
    group.add_argument("--gp", metavar="N,K")
    group.add_argument("--g6", metavar="STR")

    p_census = sub.add_parser("census", help="sweep (n,k) and emit CSV/JSON")
    p_census.add_argument("--max-n", type=int, required=True)
    p_census.add_argument("--min-n", type=int, default=3)
    p_census.add_argument("--oracle", action="store_true")
    p_census.add_argument("--all-rows", action="store_true",
                          help="include non-bipartite rows")
    p_census.add_argument("--jobs", type=int, default=1)
    p_census.add_argument("--out", metavar="FILE.csv|.json", default=None)

    p_verify = sub.add_parser("verify", help="cross-check classifier vs oracle")
    p_verify.add_argument("--max-n", type=int, required=True)
    p_verify.add_argument("--jobs", type=int, default=1)

    p_export = sub.add_parser("export", help="emit a family graph")
    p_export.add_argument("--family", choices=("gp", "cplus", "cminus", "h"),
                          required=True)
    p_export.add_argument("--n", type=int, default=None)
    p_export.add_argument("--k", type=int, default=None)
    p_export.add_argument("--dot", metavar="FILE", default=None)
    return parser


def _cmd_classify(args) -> int:
    c = classify(GpParams(args.n, args.k))
    if args.json:
        payload = {
            "n": c.n,
            "k": c.k,
            "case": c.case.value,
            "quotients": [q.label() for q in c.quotients],
            "involutions": [
                format_word(q.via, args.ascii) for q in c.quotients if q.via is not None
            ],
        }
        print(json.dumps(payload))
        return 0
    if c.case in (Case.NOT_BIPARTITE, Case.NO_COVER):
        print(f"{c.case.value}: not a Kronecker cover")
    elif c.case is Case.EXCEPTIONAL_8_3:
        print(f"{c.case.value}: delegated to oracle "
              "(run `gpcover census --oracle` for the adjudicated row)")
    else:
        quotients = ", ".join(q.label() for q in c.quotients)
        words = ", ".join(
            format_word(q.via, args.ascii) for q in c.quotients if q.via is not None
        )
        if len(c.quotients) > 1:
            print(f"{c.case.value}: quotients {quotients}; involutions {words}")
        else:
            print(f"{c.case.value}: quotient {quotients}, involution {words}")
    return 0


def _cmd_quotient(args) -> int:
    p = GpParams(args.n, args.k)
    g = gp(p)
    c = classify(p)
    if args.delta:
        if (args.n, args.k) != (10, 3):
            raise ValueError("--delta applies only to GP(10,3)")
        perm = desargues_half_turn()
    elif c.case in (Case.NOT_BIPARTITE, Case.NO_COVER):
        raise ValueError(f"GP({args.n},{args.k}) is not a Kronecker cover "
                         f"({c.case.value})")
    elif c.case is Case.EXCEPTIONAL_8_3:
        raise ValueError(
            "GP(8,3) admits no covering involution (oracle-adjudicated); "
            "no quotient exists"
        )
    elif args.a is not None:
        if c.case in (Case.B1, Case.B2):
            family = involution_family(p)
        else:  # half-turn cases admit exactly one shift
            family = [c.canonical_involution]
        if args.a not in [t.a for t in family]:
            raise ValueError(
                f"shift {args.a} not in the involution family "
                f"{[t.a for t in family]}"
            )
        perm = from_triple(args.n, args.k, next(t for t in family if t.a == args.a))
    else:
        perm = from_triple(args.n, args.k, c.canonical_involution)
    q = quotient(g, perm)
    print(encode_graph6(q))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(q))
    return 0


def _cmd_kc(args) -> int:
    if args.gp:
        try:
            n_str, k_str = args.gp.split(",")
            p = GpParams(int(n_str), int(k_str))
        except ValueError as exc:
            raise ValueError(f"bad --gp value {args.gp!r}: {exc}") from exc
        base = gp(p)
    else:
        base = decode_graph6(args.g6)
    print(encode_graph6(kronecker_cover(base)))
    return 0


def _cmd_census(args) -> int:
    rows = census(args.min_n, args.max_n, with_oracle=args.oracle,
                  include_nonbipartite=args.all_rows, jobs=args.jobs)
    if args.out:
        if args.out.endswith(".json"):
            text = rows_to_json(rows)
        elif args.out.endswith(".csv"):
            text = rows_to_csv(rows)
        else:
            raise ValueError(f"--out must end in .csv or .json, got {args.out!r}")
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(rows_to_csv(rows))
    return 0


def _cmd_verify(args) -> int:
    report = verify(args.max_n, jobs=args.jobs)
    failures = report.failures()
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        detail = f"  [{check.detail}]" if check.detail and not check.passed else ""
        print(f"{status} GP({check.n},{check.k}) {check.name}{detail}")
    print(f"{len(report.checks) - len(failures)}/{len(report.checks)} checks passed")
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    return 0 if report.all_passed else 1


def _cmd_export(args) -> int:
    if args.family == "h":
        g = h_graph()
    else:
        if args.n is None or args.k is None:
            raise ValueError(f"--family {args.family} requires --n and --k")
        p = GpParams(args.n, args.k)
        if args.family == "gp":
            g = gp(p)
        elif args.family == "cplus":
            g = lcf(c_plus(p))
        else:
            g = lcf(c_minus(p))
    print(encode_graph6(g))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(g))
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "quotient": _cmd_quotient,
    "kc": _cmd_kc,
    "census": _cmd_census,
    "verify": _cmd_verify,
    "export": _cmd_export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
