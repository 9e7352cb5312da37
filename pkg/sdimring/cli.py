"""
Command line entry point

    sdimring analyze --ring 2,2 [--oracle] [--dot srg.gv] [--json report.json]
    sdimring sweep --max-vertices 128 [--case mixed] --out reports.jsonl
    sdimring export --ring 0,0,0 --what srg --format dot --out srg.gv

Exit status: 0 every must-hold claim passes, 1 one of them fails,
2 operational error.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from tqdm import tqdm

from sdimring.harness import (
    CASE_FILTERS,
    AnalysisOptions,
    analyze,
    boundary_table,
    canonical_specs,
    exit_status,
    export,
    iter_sweep,
    report_table,
    summarize,
    write_csv,
    write_jsonl,
)
from sdimring.mis_solver import NodeBudgetExceeded
from sdimring.ring_model import RingSpec
from sdimring.srg_builder import OracleError
from sdimring.utils import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_ORACLE_CAP,
    DEFAULT_VERTEX_BUDGET,
    EXPORT_DIR,
    REPORT_DIR,
    ensure_parent,
    get_current_time,
)

logger = logging.getLogger("sdimring")

EXIT_OK, EXIT_ERROR = 0, 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdimring",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--vertex-budget", type=int, default=DEFAULT_VERTEX_BUDGET)
    parser.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    parser.add_argument("--solver-node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="verify one ring")
    p_analyze.add_argument("--ring", required=True, help='chain lengths, e.g. "2,2"')
    p_analyze.add_argument("--oracle", action="store_true", help="run brute-force oracles")
    p_analyze.add_argument("--dot", help="write the strong resolving graph as DOT")
    p_analyze.add_argument("--json", help="write the report as JSON")

    p_sweep = sub.add_parser("sweep", help="verify every ring up to a vertex count")
    p_sweep.add_argument("--max-vertices", type=int, required=True)
    p_sweep.add_argument("--case", choices=CASE_FILTERS, default="all")
    p_sweep.add_argument(
        "--out",
        default=f"{REPORT_DIR}/sweep_{get_current_time()}.jsonl",
        help="JSONL report file",
    )
    p_sweep.add_argument("--csv", help="CSV summary, default next to --out")
    p_sweep.add_argument("--oracle", action="store_true")
    p_sweep.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_sweep.add_argument("--no-progress", action="store_true")

    p_export = sub.add_parser("export", help="write G(R) or its strong resolving graph")
    p_export.add_argument("--ring", required=True)
    p_export.add_argument("--what", choices=("base", "srg"), default="srg")
    p_export.add_argument("--format", choices=("dot", "json"), default="dot")
    p_export.add_argument("--out", help=f"default under {EXPORT_DIR}")
    return parser


def _options(args: argparse.Namespace) -> AnalysisOptions:
    return AnalysisOptions(
        vertex_budget=args.vertex_budget,
        oracle_cap=args.oracle_cap,
        node_budget=args.solver_node_budget,
        run_oracle=getattr(args, "oracle", False),
    )


def _run_analyze(args: argparse.Namespace) -> int:
    spec = RingSpec.parse(args.ring)
    options = _options(args)
    report = analyze(spec, options)

    print(report_table([report]).T.to_string(header=False))
    print()
    for check in report.claim_checks:
        print(f"{check.claim_id:<3} {check.status.value:<15} {check.detail}")
    if report.oracle is not None:
        o = report.oracle
        print(
            f"oracle: {o.status} brute_sdim={o.brute_sdim} brute_dim_M={o.brute_dim_m} "
            f"agreement={o.agreement} {o.detail}".rstrip()
        )

    if args.json:
        ensure_parent(args.json)
        with open(args.json, "w", encoding="utf-8", newline="\n") as fo:
            fo.write(report.to_json() + "\n")
    if args.dot:
        export(spec, "srg", "dot", args.dot, options)
    return exit_status([report])


def _run_sweep(args: argparse.Namespace) -> int:
    options = _options(args)
    specs = canonical_specs(args.max_vertices, args.case)
    logger.info("Sweeping %d specs with at most %d vertices ...", len(specs), args.max_vertices)
    reports = list(
        tqdm(
            iter_sweep(specs, options, n_jobs=args.jobs),
            total=len(specs),
            disable=args.no_progress,
            desc="sweep",
        )
    )
    write_jsonl(reports, args.out)
    csv_path = args.csv or os.path.splitext(args.out)[0] + ".csv"
    write_csv(reports, csv_path)
    print(summarize(reports).to_string())
    print()
    print(boundary_table().to_string())
    return exit_status(reports)


def _run_export(args: argparse.Namespace) -> int:
    spec = RingSpec.parse(args.ring)
    out = args.out or f"{EXPORT_DIR}/{args.what}_{str(spec).replace(',', '-')}.{args.format}"
    export(spec, args.what, args.format, out, _options(args))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    runners = {"analyze": _run_analyze, "sweep": _run_sweep, "export": _run_export}
    try:
        return runners[args.command](args)
    except (ValueError, OracleError, NodeBudgetExceeded, OSError) as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
