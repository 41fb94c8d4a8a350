"""Command-line surface.

Every invocation emits one self-describing JSON document on stdout; all
big integers are decimal strings.  Exit codes: 0 success, 1 verification
failure, 2 usage/incompatibility, 3 resource budget, 4 cross-method
mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import (
    ConstructionError,
    DataError,
    affine_cartan,
    eta_table_entry,
    horizontal,
    parse_algebra,
    supported_algebras,
)
from .orbits import (
    DEFAULT_NODE_BUDGET,
    BudgetExceededError,
    count_via_permutation_weights,
    enumerate_bfs,
)
from .series import (
    BottConventionError,
    SeriesError,
    bott_affine_poincare,
    eta_quotient_series,
    simply_laced_product,
)
from .verify import verify_algebra, verify_all

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


def _document(command: str, algebra: str | None, payload: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "algebra": algebra,
        "payload": payload,
    }


def _emit(doc: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))


def _series_payload(series) -> dict:
    return {
        "truncation": series.truncation,
        "coefficients": [str(c) for c in series.coeffs],
    }


def _census_payload(census) -> dict:
    return {
        "max_depth": census.max_depth,
        "counts": [str(x) for x in census.counts],
        "c": [str(x) for x in census.c],
    }


def _spec_payload(spec) -> dict:
    return {
        "factors": [{"argument": s, "exponent": r} for s, r in spec.factors],
        "phase": spec.phase,
        "multiplier": str(spec.multiplier),
    }


def _report_payload(report) -> dict:
    return {
        "algebra": report.algebra.name,
        "max_depth": report.max_depth,
        "passed": report.passed,
        "resolved_config": report.resolved_config,
        "checks": [
            {
                "name": c.name,
                "status": c.status,
                "details": c.details,
                "mismatch_index": c.mismatch_index,
                "expected": None if c.expected is None else str(c.expected),
                "actual": None if c.actual is None else str(c.actual),
            }
            for c in report.checks
        ],
    }


def _cmd_list(args) -> int:
    rows = []
    for aid in supported_algebras(args.max_rank, None):
        if args.twist is not None and aid.twist != args.twist:
            continue
        data = affine_cartan(aid)
        hor = horizontal(aid)
        spec = eta_table_entry(aid, args.hvee_interp)
        rows.append(
            {
                "algebra": aid.name,
                "coxeter": data.coxeter,
                "dual_coxeter": data.dual_coxeter,
                "weyl_order": str(hor.weyl_order),
                "horizontal": f"{hor.family}{hor.rank}",
                "eta": _spec_payload(spec),
            }
        )
    _emit(_document("list", None, {"algebras": rows}), args.pretty)
    return EXIT_OK


def _cmd_qseries(args) -> int:
    aid = parse_algebra(args.algebra)
    t = args.truncation
    if args.source == "eta":
        series = eta_quotient_series(eta_table_entry(aid, args.hvee_interp), t)
    elif args.source == "product":
        series = simply_laced_product(aid, t)
    else:
        series = bott_affine_poincare(aid, t, args.bott_convention)
    payload = _series_payload(series)
    payload["source"] = args.source
    _emit(_document("qseries", aid.name, payload), args.pretty)
    return EXIT_OK


def _cmd_orbit(args) -> int:
    aid = parse_algebra(args.algebra)
    payload: dict = {"method": args.method}
    if args.method in ("bfs", "both"):
        bfs = enumerate_bfs(aid, args.max_depth, args.node_budget)
        payload["bfs"] = _census_payload(bfs)
    if args.method in ("permw", "both"):
        census, _ = count_via_permutation_weights(aid, args.max_depth)
        payload["permw"] = _census_payload(census)
    if args.method == "both":
        payload["match"] = payload["bfs"] == payload["permw"]
        if not payload["match"]:
            _emit(_document("orbit", aid.name, payload), args.pretty)
            return EXIT_MISMATCH
    _emit(_document("orbit", aid.name, payload), args.pretty)
    return EXIT_OK


def _cmd_permw(args) -> int:
    aid = parse_algebra(args.algebra)
    _, records = count_via_permutation_weights(aid, args.max_depth)
    rows = []
    for r in records:
        row = {
            "depth": r.depth,
            "dominant": list(r.dominant),
            "orbit_size": str(r.orbit_size),
        }
        if args.words:
            row["word"] = list(r.word)
        rows.append(row)
    payload = {"max_depth": args.max_depth, "records": rows}
    _emit(_document("permw", aid.name, payload), args.pretty)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.all:
        reports = verify_all(
            args.max_rank, args.max_depth, node_budget=args.node_budget
        )
    else:
        if not args.algebra:
            raise ConstructionError("verify needs an algebra name or --all")
        reports = [
            verify_algebra(
                parse_algebra(args.algebra),
                args.max_depth,
                node_budget=args.node_budget,
            )
        ]
    payload = {
        "max_depth": args.max_depth,
        "reports": [_report_payload(r) for r in reports],
        "all_passed": all(r.passed for r in reports),
    }
    algebra = None if args.all else reports[0].algebra.name
    _emit(_document("verify", algebra, payload), args.pretty)
    return EXIT_OK if payload["all_passed"] else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affineq",
        description="Depth-graded Poincare series of affine Kac-Moody "
        "algebras, permutation weights, and eta-quotient checks.",
    )
    default_budget = int(os.environ.get("AFFINEQ_NODE_BUDGET", DEFAULT_NODE_BUDGET))
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p, budget=False):
        p.add_argument("--pretty", action="store_true")
        p.add_argument(
            "--hvee-interp",
            choices=("affine", "horizontal-dual", "horizontal"),
            default="affine",
        )
        p.add_argument(
            "--bott-convention", choices=("degrees", "exponents"), default="degrees"
        )
        if budget:
            p.add_argument("--node-budget", type=int, default=default_budget)

    p = sub.add_parser("list", help="supported algebras with table data")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--twist", type=int, choices=(1, 2, 3))
    common(p)
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("qseries", help="expand a q-series")
    p.add_argument("algebra")
    p.add_argument("--source", choices=("eta", "product", "bott"), default="eta")
    p.add_argument("-T", "--truncation", type=int, default=20)
    common(p)
    p.set_defaults(func=_cmd_qseries)

    p = sub.add_parser("orbit", help="depth-graded orbit census")
    p.add_argument("algebra")
    p.add_argument("-M", "--max-depth", type=int, default=10)
    p.add_argument("--method", choices=("bfs", "permw", "both"), default="permw")
    common(p, budget=True)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("permw", help="permutation weights with Weyl words")
    p.add_argument("algebra")
    p.add_argument("-M", "--max-depth", type=int, default=10)
    p.add_argument("--words", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_permw)

    p = sub.add_parser("verify", help="run all cross-checks")
    p.add_argument("algebra", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("-M", "--max-depth", type=int, default=10)
    common(p, budget=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"affineq: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConstructionError, DataError, SeriesError, BottConventionError) as exc:
        print(f"affineq: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
