"""Command line entry point.

Exit codes: 0 all checks pass, 1 an identity failed, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import List, Sequence

from ..dysonct import d_brute, d_closed, d_recursive, dt_brute, dt_kadell, prec_lt
from ..dysonct.orders import pad
from ..errors import NonExactDivision, QDysonError
from ..exactalg import ZERO, render
from .config import SUITES, ConfigError, SweepConfig, load_config
from .runner import report_json, report_text, run_suite

METHODS = {"D": ("brute", "closed", "recursive"), "Dt": ("brute", "kadell")}

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _methods(text: str) -> tuple:
    return tuple(t.strip() for t in text.split(",") if t.strip())


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="qdyson",
        parents=[fmt],
        description="Exact generalized q-Dyson constant terms and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[fmt], help="evaluate one constant term by several methods")
    c.add_argument("--kind", choices=("D", "Dt"), required=True)
    c.add_argument("--v", type=_ints, required=True, help="e.g. --v=1,1 (use '=' for negative entries)")
    c.add_argument("--lambda", dest="lam", type=_ints, required=True)
    c.add_argument("--a", type=_ints, required=True)
    c.add_argument("--methods", type=_methods, default=("brute",))

    v = sub.add_parser("verify", parents=[fmt], help="run a named verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--n-max", type=int)
    v.add_argument("--a-max", type=int)
    v.add_argument("--lambda-size-max", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--jobs", type=int)
    v.add_argument("--timings", action="store_true", help="record per-case wall time (not reproducible)")

    s = sub.add_parser("sweep", parents=[fmt], help="run a sweep described by a JSON config file")
    s.add_argument("--config", required=True)
    s.add_argument("--jobs", type=int)
    s.add_argument("--timings", action="store_true")
    return parser


def _compute_one(kind: str, method: str, v, lam, a):
    if kind == "Dt":
        if method == "brute":
            return dt_brute(v, lam, a)
        if len(lam) != 1:
            raise UsageError("kadell applies only to a one-part lambda")
        return dt_kadell(v, lam[0], a)
    if method == "brute":
        return d_brute(v, lam, a)
    if method == "recursive":
        return d_recursive(v, lam, a)
    # closed form: product when v == lambda, zero when v strictly precedes lambda
    if sum(v) != sum(lam):
        return ZERO
    lam_n = pad(lam, len(a))
    if tuple(v) == lam_n:
        return d_closed(lam, a)
    if prec_lt(v, lam_n):
        return ZERO
    raise UsageError("no closed form unless v == lambda or v precedes lambda")


def cmd_compute(args, out) -> int:
    fmt = getattr(args, "format", None) or "text"
    allowed = METHODS[args.kind]
    bad = [m for m in args.methods if m not in allowed]
    if bad or not args.methods:
        raise UsageError(f"methods for {args.kind} must be among {', '.join(allowed)}")
    results = {m: _compute_one(args.kind, m, args.v, args.lam, args.a) for m in args.methods}
    agree = len(set(results.values())) <= 1
    if fmt == "json":
        doc = {
            "kind": args.kind,
            "v": list(args.v),
            "lambda": list(args.lam),
            "a": list(args.a),
            "outputs": {m: render(r) for m, r in results.items()},
            "agree": agree,
        }
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        for m, r in results.items():
            out.write(f"{m}: {render(r)}\n")
        out.write(f"agree: {'yes' if agree else 'NO'}\n")
    return EXIT_OK if agree else EXIT_FAIL


def _emit_report(report, args, out) -> int:
    fmt = getattr(args, "format", None) or "json"
    out.write(report_json(report) if fmt == "json" else report_text(report))
    return EXIT_OK if report["summary"]["pass"] else EXIT_FAIL


def cmd_verify(args, out) -> int:
    cfg = SweepConfig.for_suite(
        args.suite,
        n_max=args.n_max,
        a_max=args.a_max,
        lambda_size_max=args.lambda_size_max,
        seed=args.seed,
        parallelism=args.jobs,
    )
    if min(cfg.n_max, cfg.a_max, cfg.lambda_size_max) < 0 or cfg.parallelism < 1:
        raise UsageError("bounds must be >= 0 and --jobs >= 1")
    return _emit_report(run_suite(cfg, timings=args.timings), args, out)


def cmd_sweep(args, out) -> int:
    cfg = load_config(args.config)
    if args.jobs is not None:
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        cfg = replace(cfg, parallelism=args.jobs)
    return _emit_report(run_suite(cfg, timings=args.timings), args, out)


def main(argv: Sequence[str] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handlers = {"compute": cmd_compute, "verify": cmd_verify, "sweep": cmd_sweep}
    try:
        return handlers[args.command](args, out)
    except NonExactDivision as exc:
        # a closed form that fails to divide exactly is a falsified identity
        err.write(f"qdyson {args.command}: identity failure: {exc}\n")
        return EXIT_FAIL
    except (UsageError, ConfigError, QDysonError) as exc:
        err.write(f"qdyson {args.command}: error: {exc}\n")
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
