"""Command-line entry point: ``lcdbch <subcommand> ...`` (or ``python -m lcdbch``)."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from ..bch import closed_dimension_info, dimension
from ..cosets import (DEFAULT_SIEVE_BUDGET, BudgetExceeded, CosetParams, NotCovered,
                      closed_delta, coset, largest_leaders, sieve)
from ..wdist import DEFAULT_BUDGET, LONG_BUDGET, min_distance
from .golden import load_golden
from .report import build_report, records_to_csv, narrow_sense_delta
from .verify import exit_code, verify_paper

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _globals(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = parser.add_argument_group("output and budget")
    g.add_argument("--json", action="store_true", default=d(False), help="JSON output")
    g.add_argument("--csv", action="store_true", default=d(False), help="CSV output")
    g.add_argument("--stable", action="store_true", default=d(False),
                   help="omit timing fields (byte-identical reruns)")
    g.add_argument("--budget", type=int, default=d(None),
                   help=f"max codewords enumerated / residues sieved (default {DEFAULT_BUDGET})")
    g.add_argument("--long", action="store_true", default=d(False),
                   help=f"allow long runs (budget {LONG_BUDGET}, larger sweeps)")


def _code_args(p, need_delta=True):
    p.add_argument("-q", type=int, required=True, help="field size (prime power)")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, default=1, help="divisor of q+1")
    if need_delta:
        p.add_argument("--delta-prime", "--designed", dest="designed", type=int, required=True,
                       help="designed distance of the code")
        p.add_argument("-b", type=int, default=1, choices=(0, 1))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lcdbch", description="LCD BCH codes of length n = (q^m+1)/lambda.")
    _globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cosets", help="cyclotomic cosets and coset leaders")
    _code_args(p, need_delta=False)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("-s", type=int, help="print the coset containing s")
    mode.add_argument("--leaders", action="store_true", help="all coset leaders with sizes")
    mode.add_argument("--largest", type=int, metavar="K", help="the K largest coset leaders")
    _globals(p, suppress=True)

    p = sub.add_parser("code", help="construct a code and cross-check all parameters")
    _code_args(p)
    p.add_argument("--distance", action="store_true", help="compute the exact minimum distance")
    p.add_argument("--printed", action="store_true",
                   help="evaluate piecewise dimension formulas literally")
    _globals(p, suppress=True)

    p = sub.add_parser("delta", help="closed form for the i-th largest coset leader")
    _code_args(p, need_delta=False)
    p.add_argument("-i", type=int, default=1)
    _globals(p, suppress=True)

    p = sub.add_parser("dim", help="closed-form dimension vs coset counting")
    _code_args(p)
    p.add_argument("--printed", action="store_true",
                   help="evaluate piecewise dimension formulas literally")
    _globals(p, suppress=True)

    p = sub.add_parser("distance", help="exact minimum distance within the budget")
    _code_args(p)
    _globals(p, suppress=True)

    p = sub.add_parser("verify-paper", help="golden codes and oracle sweeps")
    p.add_argument("--golden", help="alternative golden table (CSV)")
    p.add_argument("--no-sweeps", action="store_true", help="golden codes only")
    p.add_argument("--workers", type=int, default=1, help="golden cases in parallel")
    _globals(p, suppress=True)
    return parser


def _params(args):
    try:
        P = CosetParams(args.q, args.m, args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    designed = getattr(args, "designed", None)
    if designed is not None and not 2 <= designed <= P.n:
        raise UsageError(f"designed distance {designed} outside [2, {P.n}]")
    return P


def _budget(args, default=DEFAULT_BUDGET):
    if args.budget is not None:
        return args.budget
    return max(default, LONG_BUDGET) if args.long else default


def _emit(args, payload, text, rows=None):
    """Write ``payload`` as JSON, ``rows`` as CSV, or ``text``."""
    if args.json:
        print(json.dumps(payload))
    elif args.csv and rows is not None:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


def cmd_cosets(args):
    P = _params(args)
    head = {"q": P.q, "m": P.m, "lambda": P.lam, "n": P.n}
    if args.s is not None:
        if not 0 <= args.s < P.n:
            raise UsageError(f"s = {args.s} outside [0, {P.n})")
        c = coset(P, args.s)
        _emit(args, {**head, "s": args.s, "leader": c.leader, "size": c.size,
                     "elements": list(c.elements)},
              "{" + ", ".join(map(str, c.elements)) + "}",
              [["element"]] + [[e] for e in c.elements])
        return OK
    budget = _budget(args, DEFAULT_SIEVE_BUDGET)
    if args.largest is not None:
        if args.largest < 1:
            raise UsageError("--largest needs K >= 1")
        try:
            pairs = largest_leaders(P, args.largest, budget)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        key = "largest"
    else:
        table = sieve(P, budget)
        pairs = [(int(a), table.size(int(a))) for a in table.leaders()]
        key = "leaders"
    _emit(args, {**head, key: [{"leader": a, "size": s} for a, s in pairs]},
          "\n".join(f"{a}\t{s}" for a, s in pairs),
          [["leader", "size"]] + [list(x) for x in pairs])
    return OK


def cmd_code(args):
    P = _params(args)
    rec = build_report(P, args.designed, args.b, distance=args.distance,
                       budget=_budget(args), printed=args.printed)
    if args.json:
        print(rec.to_json(args.stable))
    elif args.csv:
        sys.stdout.write(records_to_csv([rec], args.stable))
    else:
        print(rec.text())
    bad = rec.closed_form_mismatch and not args.printed
    return FAILED if bad or (args.distance and not rec.distance.exact) else OK


def cmd_delta(args):
    P = _params(args)
    try:
        r = closed_delta(P.q, P.m, P.lam, args.i)
    except NotCovered as exc:
        print(f"no closed form: {exc}", file=sys.stderr)
        return FAILED
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    oracle = None
    if P.n <= _budget(args, DEFAULT_SIEVE_BUDGET):
        oracle = largest_leaders(P, args.i, DEFAULT_SIEVE_BUDGET * 100)[-1]
    agree = oracle is None or oracle == (r.value, r.coset_size)
    payload = {"q": P.q, "m": P.m, "lambda": P.lam, "n": P.n, "i": args.i, "value": r.value,
               "size": r.coset_size, "source": r.source,
               "oracle": None if oracle is None else {"value": oracle[0], "size": oracle[1]},
               "agree": agree}
    text = f"delta_{args.i} = {r.value} (coset size {r.coset_size}; {r.source})"
    text += "; oracle not run" if oracle is None else f"; oracle {'agrees' if agree else f'gives {oracle}'}"
    _emit(args, payload, text, [list(payload)[:-2], [payload[k] for k in list(payload)[:-2]]])
    return OK if agree else FAILED


def cmd_dim(args):
    P = _params(args)
    try:
        k = dimension(P, args.designed, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    delta = narrow_sense_delta(args.designed, args.b)
    info = None if delta is None else closed_dimension_info(P.q, P.m, P.lam, delta, args.b,
                                                            printed=args.printed)
    kc = None if info is None else info.k
    agree = kc is None or kc == k
    payload = {"q": P.q, "m": P.m, "lambda": P.lam, "n": P.n, "b": args.b,
               "designed": args.designed, "k": k, "k_closed_form": kc,
               "source": None if info is None else info.source, "agree": agree}
    text = f"k = {k} (coset count); closed form: " + (
        "n/a" if info is None else f"{kc} [{info.source}]" + ("" if agree else "  MISMATCH"))
    _emit(args, payload, text, [list(payload), list(payload.values())])
    return OK if agree else FAILED


def cmd_distance(args):
    P = _params(args)
    budget = _budget(args)
    try:
        d = min_distance(P, args.designed, args.b, budget=budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"q": P.q, "m": P.m, "lambda": P.lam, "n": P.n, "b": args.b,
               "designed": args.designed, "value": d.value, "exact": d.exact,
               "method": d.method}
    if not args.stable:
        payload["work"] = d.work
    text = f"d = {d.value} ({d.method})" if d.exact else (
        f"d >= {d.value} (BCH bound; exact enumeration exceeds the budget {budget})")
    _emit(args, payload, text, [list(payload), list(payload.values())])
    return OK if d.exact else FAILED


def cmd_verify_paper(args):
    cases = load_golden(args.golden)
    results = verify_paper(cases, long=args.long, budget=_budget(args, DEFAULT_BUDGET),
                           sweeps=not args.no_sweeps, workers=args.workers)
    code = exit_code(results)
    if args.json:
        print(json.dumps({"results": [r.to_dict(args.stable) for r in results],
                          "exit_code": code}, indent=1))
    elif args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "status", "detail"] + ([] if args.stable else ["seconds"]))
        for r in results:
            w.writerow([r.name, r.status, r.detail] + ([] if args.stable else [round(r.seconds, 3)]))
        sys.stdout.write(buf.getvalue())
    else:
        for r in results:
            print(r.line() + ("" if args.stable else f" ({r.seconds:.1f} s)"))
        counts = {s: sum(r.status == s for r in results) for s in ("PASS", "WARN", "FAIL")}
        print(f"{counts['PASS']} passed, {counts['WARN']} warned, {counts['FAIL']} failed")
    return code


COMMANDS = {"cosets": cmd_cosets, "code": cmd_code, "delta": cmd_delta, "dim": cmd_dim,
            "distance": cmd_distance, "verify-paper": cmd_verify_paper}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: --help exits 0, errors exit 2
        return exc.code if isinstance(exc.code, int) else USAGE
    if args.json and args.csv:
        print("lcdbch: --json and --csv are mutually exclusive", file=sys.stderr)
        return USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"lcdbch {args.command}: error: {exc}", file=sys.stderr)
        return USAGE
    except (BudgetExceeded, OverflowError) as exc:
        print(f"lcdbch {args.command}: budget exceeded: {exc}", file=sys.stderr)
        return FAILED


def entry():
    sys.exit(main())
