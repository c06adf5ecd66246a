"""Command-line surface: dimensions, Hilbert series, Frobenius characteristics
and the theorem-verification suites.

Exit codes: 0 all assertions hold, 1 assertion failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from .bases import basis_B_mu, basis_B_mu_ij, d_mu_ij, predicted_cardinality_B_mu
from .shapes import diagram_of, partition_factorial, puncture
from .spans import SpanCache, y_free_hilbert
from .symfunc import frobenius_of_diagram
from .verification import SUITES, YFREE_ORACLE_CELL_BUDGET, run_suite


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse {what} {text!r}")


def _mu_arg(text: str):
    return _parse_ints(text, "partition")


def _hole_arg(text: str):
    hole = _parse_ints(text, "cell")
    if len(hole) != 2:
        raise argparse.ArgumentTypeError(f"cell must be 'r,c', got {text!r}")
    return hole


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-harmonics",
        description="Exact constructions and verifications for Y-free lattice "
        "diagram harmonic modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_mu=True):
        if need_mu:
            p.add_argument("--mu", type=_mu_arg, required=True,
                           help="partition, e.g. 4,2,1")
            p.add_argument("--hole", type=_hole_arg, default=None,
                           help="hole cell 'r,c' (optional)")
        p.add_argument("--format", choices=("json", "table"), default="table")
        p.add_argument("--cache", default=None, help="JSONL oracle cache path")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--seed", type=int, default=0,
                       help="seed echoed into reports")

    p_dim = sub.add_parser("dim", help="formula / basis / oracle dimensions")
    common(p_dim)
    p_dim.add_argument(
        "--oracle-budget", type=int, default=YFREE_ORACLE_CELL_BUDGET,
        help="max diagram cells for the brute-force oracle",
    )

    p_hil = sub.add_parser("hilbert", help="Hilbert series of the Y-free module")
    common(p_hil)

    p_fro = sub.add_parser("frobenius", help="graded Frobenius characteristic")
    common(p_fro)

    p_ver = sub.add_parser("verify", help="run a theorem-verification suite")
    p_ver.add_argument("suite", choices=sorted(SUITES))
    p_ver.add_argument("--max-n", type=int, default=None)
    common(p_ver, need_mu=False)
    return parser


def _diagram(args):
    if args.hole is not None:
        return puncture(args.mu, *args.hole)
    return diagram_of(args.mu)


def _emit(payload, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        if isinstance(payload, dict):
            for k in sorted(payload):
                print(f"{k}: {payload[k]}")
        else:
            for row in payload:
                status = "PASS" if row.get("ok") else "FAIL"
                print(f"{status} [{row.get('suite')}] {row.get('case')}")


def cmd_dim(args) -> int:
    cells = _diagram(args)
    if args.hole is not None:
        formula = d_mu_ij(args.mu, *args.hole)
        basis = basis_B_mu_ij(args.mu, *args.hole)
    else:
        formula = predicted_cardinality_B_mu(args.mu)
        basis = basis_B_mu(args.mu)
    report = {
        "family": basis.label,
        "mu": list(args.mu),
        "hole": list(args.hole) if args.hole is not None else None,
        "formula": formula,
        "cardinality": basis.cardinality,
        "rank": basis.rank(),
    }
    ok = formula == basis.cardinality == report["rank"]
    if len(cells) <= args.oracle_budget:
        cache = SpanCache(args.cache) if args.cache else None
        by_degree = y_free_hilbert(cells, cache)
        oracle = sum(by_degree)
        report["oracle_dim"] = oracle
        report["by_degree"] = by_degree
        ok = ok and oracle == formula
    else:
        report["oracle_dim"] = (
            f"skipped ({len(cells)} cells above budget {args.oracle_budget})"
        )
    report["ok"] = ok
    _emit(report, args.format)
    return 0 if ok else 1


def cmd_hilbert(args) -> int:
    cache = SpanCache(args.cache) if args.cache else None
    hs = y_free_hilbert(_diagram(args), cache)
    _emit({"mu": list(args.mu),
           "hole": list(args.hole) if args.hole is not None else None,
           "hilbert": hs, "dim": sum(hs)}, args.format)
    return 0


def cmd_frobenius(args) -> int:
    sym = frobenius_of_diagram(_diagram(args))
    payload = sym.to_json()
    payload["mu"] = list(args.mu)
    payload["hole"] = list(args.hole) if args.hole is not None else None
    _emit(payload if args.format == "json" else {"frobenius": repr(sym)},
          args.format)
    return 0


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, max_n=args.max_n, jobs=args.jobs)
    failures = [r for r in reports if not r.get("ok")]
    if args.format == "json":
        _emit({"suite": args.suite, "seed": args.seed,
               "cases": len(reports), "failures": len(failures),
               "reports": reports}, "json")
    else:
        print(f"suite={args.suite} seed={args.seed} cases={len(reports)}")
        _emit(reports, "table")
        print(f"{len(reports) - len(failures)}/{len(reports)} cases passed")
    return 0 if not failures else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "dim":
            return cmd_dim(args)
        if args.command == "hilbert":
            return cmd_hilbert(args)
        if args.command == "frobenius":
            return cmd_frobenius(args)
        if args.command == "verify":
            return cmd_verify(args)
    except ValueError as exc:
        parser.exit(2, f"error: {exc}\n")
    return 2


if __name__ == "__main__":
    sys.exit(main())
