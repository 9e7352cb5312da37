"""
Verification pipeline

analyze: spec -> vertices -> G(R) -> distances -> strong resolving graph
         -> exact vertex cover -> closed forms -> claim checks
sweep:   analyze every canonical spec up to a vertex count
oracle:  brute-force strong metric dimension / metric dimension
export:  G(R) or its strong resolving graph as DOT or JSON
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from multiprocessing import Pool
from typing import Any, Iterator, List, Optional, Sequence, Tuple, Union

import pandas as pd
from pandas import DataFrame

from sdimring.claims import CLAIM_IDS, ClaimCheck, ClaimStatus, get_claims
from sdimring.closed_forms import ClosedFormPrediction, boundary_consistency, predict
from sdimring.graph_core import (
    Graph,
    components,
    diameter,
    is_clique,
    to_dot,
    to_json,
    write_text,
)
from sdimring.mis_solver import CoverResult, max_independent_set, verify_witness
from sdimring.ring_model import (
    CapacityError,
    IdealVector,
    RingCase,
    RingSpec,
    enumerate_vertices,
    intersection_graph,
)
from sdimring.srg_builder import (
    OracleError,
    SrgGraph,
    brute_metric_dimension,
    brute_min_strong_resolving,
    build_srg,
)
from sdimring.utils import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_ORACLE_CAP,
    DEFAULT_VERTEX_BUDGET,
    ensure_parent,
)

logger = logging.getLogger(__name__)

CASE_FILTERS = ("reduced", "nonreduced", "mixed", "all")


@dataclass(frozen=True)
class AnalysisOptions:
    vertex_budget: int = DEFAULT_VERTEX_BUDGET
    oracle_cap: int = DEFAULT_ORACLE_CAP
    node_budget: int = DEFAULT_NODE_BUDGET
    run_oracle: bool = False


@dataclass(frozen=True)
class Pipeline:
    """
    Every intermediate object of one analysis, kept for export and tests
    """

    spec: RingSpec
    vertices: List[IdealVector]
    base: Graph
    srg: SrgGraph
    cover: CoverResult
    prediction: ClosedFormPrediction

    @property
    def connected(self) -> bool:
        return self.srg.dist.all_finite


@dataclass
class Computed:
    vertex_count: int
    diameter: Union[int, float]
    srg_edge_count: int
    mmd_support_size: int
    srg_component_orders: List[int]
    clique_component_order: Optional[int]
    beta: int
    alpha: int
    sdim: int
    witness_independent: List[int]
    witness_verified: bool
    solver_stats: dict


@dataclass
class OracleSection:
    status: str
    brute_sdim: Optional[int] = None
    brute_sdim_witness: Optional[List[int]] = None
    brute_dim_m: Optional[int] = None
    pipeline_sdim: Optional[int] = None
    agreement: Optional[bool] = None
    dim_at_most_sdim: Optional[bool] = None
    detail: str = ""


@dataclass
class VerificationReport:
    spec: List[int]
    case: str
    computed: Optional[Computed] = None
    predicted: Optional[ClosedFormPrediction] = None
    claim_checks: List[ClaimCheck] = field(default_factory=list)
    oracle: Optional[OracleSection] = None
    error: Optional[str] = None

    @property
    def failed_claims(self) -> List[str]:
        return [c.claim_id for c in self.claim_checks if c.status is ClaimStatus.FAIL]

    @property
    def must_hold_failed(self) -> bool:
        return any(
            c.must_hold and c.status is ClaimStatus.FAIL for c in self.claim_checks
        )

    def status_of(self, claim_id: str) -> Optional[ClaimStatus]:
        for check in self.claim_checks:
            if check.claim_id == claim_id:
                return check.status
        return None

    def to_dict(self) -> dict:
        return _jsonable(asdict(self))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def build_pipeline(spec: RingSpec, options: Optional[AnalysisOptions] = None) -> Pipeline:
    if options is None:
        options = AnalysisOptions()
    vertices = enumerate_vertices(spec, vertex_budget=options.vertex_budget)
    base = intersection_graph(vertices)
    srg = build_srg(base)
    cover = max_independent_set(srg.srg, node_budget=options.node_budget)
    return Pipeline(
        spec=spec,
        vertices=vertices,
        base=base,
        srg=srg,
        cover=cover,
        prediction=predict(spec),
    )


def _clique_component_order(srg: Graph) -> Optional[int]:
    """largest component of srg that is a clique"""
    orders = [len(p) for p in components(srg) if is_clique(srg, p)]
    return max(orders) if orders else None


def _computed(pipeline: Pipeline) -> Computed:
    srg, cover = pipeline.srg, pipeline.cover
    return Computed(
        vertex_count=pipeline.base.order,
        diameter=diameter(pipeline.base, srg.dist),
        srg_edge_count=srg.srg.edge_count,
        mmd_support_size=len(srg.mmd_support),
        srg_component_orders=[len(p) for p in components(srg.srg)],
        clique_component_order=_clique_component_order(srg.srg),
        beta=cover.beta,
        alpha=cover.alpha,
        sdim=cover.alpha,
        witness_independent=list(cover.witness_independent),
        witness_verified=verify_witness(srg.srg, cover),
        solver_stats=cover.stats,
    )


def _oracle_section(pipeline: Pipeline, options: AnalysisOptions) -> OracleSection:
    if not pipeline.connected:
        return OracleSection(
            status=ClaimStatus.NOT_APPLICABLE.value,
            pipeline_sdim=pipeline.cover.alpha,
            detail="disconnected, convention applied",
        )
    base, dist = pipeline.base, pipeline.srg.dist
    strong = brute_min_strong_resolving(base, dist, cap=options.oracle_cap)
    metric = brute_metric_dimension(base, dist, cap=options.oracle_cap)
    return OracleSection(
        status="OK",
        brute_sdim=strong.size,
        brute_sdim_witness=list(strong.witness),
        brute_dim_m=metric.size,
        pipeline_sdim=pipeline.cover.alpha,
        agreement=strong.size == pipeline.cover.alpha,
        dim_at_most_sdim=metric.size <= strong.size,
    )


def oracle(spec: RingSpec, options: Optional[AnalysisOptions] = None) -> OracleSection:
    """
    Brute-force cross-check of the pipeline value

    Raises OracleError when G(R) is over the oracle cap.
    """
    if options is None:
        options = AnalysisOptions()
    return _oracle_section(build_pipeline(spec, options), options)


def analyze(spec: RingSpec, options: Optional[AnalysisOptions] = None) -> VerificationReport:
    """
    Run the full pipeline on one spec

    Parameters
    --------
    spec: RingSpec
    options: Optional[AnalysisOptions]
        Budgets and whether to run the brute-force oracle

    Returns
    --------
    report: VerificationReport
    """
    if options is None:
        options = AnalysisOptions()
    logger.debug("Analyzing spec (%s) ...", spec)
    pipeline = build_pipeline(spec, options)
    report = VerificationReport(
        spec=list(spec.factors),
        case=pipeline.prediction.case_tag.value,
        computed=_computed(pipeline),
        predicted=pipeline.prediction,
        claim_checks=get_claims(
            pipeline.vertices, pipeline.srg, pipeline.cover, pipeline.prediction
        ),
    )
    if options.run_oracle:
        try:
            report.oracle = _oracle_section(pipeline, options)
        except OracleError as e:
            report.oracle = OracleSection(status="SKIPPED", detail=str(e))
    logger.debug(
        "Done! sdim = %d, failed claims: %s",
        report.computed.sdim,
        ", ".join(report.failed_claims) or "none",
    )
    return report


def canonical_specs(max_vertices: int, case_filter: str = "all") -> List[RingSpec]:
    """
    One spec per multiset of chain lengths (factors in descending order) with
    1 <= vertex count <= max_vertices, sorted by (vertex count, factors)
    """
    if case_filter not in CASE_FILTERS:
        raise ValueError(f"Unknown case filter {case_filter!r}, use one of {CASE_FILTERS}")
    limit = max_vertices + 2
    found: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], product: int, cap: int) -> None:
        if prefix and product - 2 >= 1:
            found.append(prefix)
        for n_i in range(cap, -1, -1):
            if product * (n_i + 2) <= limit:
                extend(prefix + (n_i,), product * (n_i + 2), n_i)

    extend((), 1, max(limit - 2, 0))
    specs = [RingSpec(f) for f in found]
    if case_filter != "all":
        wanted = RingCase(case_filter.upper())
        specs = [s for s in specs if s.case is wanted]
    return sorted(specs, key=lambda s: (s.vertex_count, tuple(-n for n in s.factors)))


def _analyze_one(job: Tuple[RingSpec, AnalysisOptions]) -> VerificationReport:
    spec, options = job
    try:
        return analyze(spec, options)
    except (CapacityError, OracleError, RuntimeError, ValueError) as e:
        logger.warning("Spec (%s) failed: %s", spec, e)
        return VerificationReport(
            spec=list(spec.factors), case=spec.case.value, error=f"{type(e).__name__}: {e}"
        )


def iter_sweep(
    specs: Sequence[RingSpec],
    options: Optional[AnalysisOptions] = None,
    n_jobs: int = 1,
) -> Iterator[VerificationReport]:
    """
    Reports in the order of `specs`, whatever the number of workers
    """
    if options is None:
        options = AnalysisOptions()
    jobs = [(spec, options) for spec in specs]
    if n_jobs <= 1:
        for job in jobs:
            yield _analyze_one(job)
        return
    with Pool(processes=n_jobs) as pool:
        for report in pool.imap(_analyze_one, jobs):
            yield report


def sweep(
    max_vertices: int,
    case_filter: str = "all",
    options: Optional[AnalysisOptions] = None,
    n_jobs: int = 1,
) -> Tuple[List[VerificationReport], DataFrame]:
    specs = canonical_specs(max_vertices, case_filter)
    reports = list(iter_sweep(specs, options, n_jobs=n_jobs))
    return reports, summarize(reports)


def summarize(reports: Sequence[VerificationReport]) -> DataFrame:
    """
    Count of each status per claim, one row per claim
    """
    statuses = [s.value for s in ClaimStatus]
    counts = {claim_id: {s: 0 for s in statuses} for claim_id in CLAIM_IDS}
    for report in reports:
        for check in report.claim_checks:
            counts[check.claim_id][check.status.value] += 1
    df = pd.DataFrame.from_dict(counts, orient="index", columns=statuses)
    df.index.name = "claim"
    return df


def boundary_table() -> DataFrame:
    """
    Where the case formulas meet, one row per comparison; `expected` marks
    whether the two sides are meant to agree
    """
    df = pd.DataFrame(
        [
            {
                "comparison": c.label,
                "left": c.left,
                "right": c.right,
                "agree": c.agree,
                "expected": c.expected_agree,
            }
            for c in boundary_consistency()
        ]
    )
    return df.set_index("comparison")


def report_table(reports: Sequence[VerificationReport]) -> DataFrame:
    """
    One row per spec: headline numbers and every claim status
    """
    rows = []
    for report in reports:
        row = {
            "spec": ",".join(str(n_i) for n_i in report.spec),
            "case": report.case,
            "vertex_count": None,
            "sdim": None,
            "predicted_sdim": None,
            "beta": None,
            "predicted_beta": None,
        }
        if report.computed is not None:
            row.update(
                vertex_count=report.computed.vertex_count,
                sdim=report.computed.sdim,
                beta=report.computed.beta,
            )
        if report.predicted is not None:
            row.update(
                predicted_sdim=report.predicted.predicted_sdim,
                predicted_beta=report.predicted.predicted_beta,
            )
        for claim_id in CLAIM_IDS:
            status = report.status_of(claim_id)
            row[claim_id] = status.value if status is not None else None
        row["oracle_agreement"] = report.oracle.agreement if report.oracle else None
        row["error"] = report.error
        rows.append(row)
    return pd.DataFrame(rows)


def exit_status(reports: Sequence[VerificationReport]) -> int:
    """
    0 all must-hold claims pass, 1 any of them fails, 2 a spec errored
    """
    if any(r.must_hold_failed for r in reports):
        return 1
    if any(r.error is not None for r in reports):
        return 2
    return 0


def write_jsonl(reports: Sequence[VerificationReport], path: str) -> None:
    ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fo:
        for report in reports:
            fo.write(report.to_json() + "\n")
    logger.info("Reports saved to: %s", path)


def write_csv(reports: Sequence[VerificationReport], path: str) -> None:
    ensure_parent(path)
    report_table(reports).to_csv(path, index=False, lineterminator="\n")
    logger.info("Summary saved to: %s", path)


def render_export(
    spec: RingSpec,
    what: str = "srg",
    fmt: str = "dot",
    options: Optional[AnalysisOptions] = None,
) -> str:
    if what not in ("base", "srg"):
        raise ValueError(f"'what' should be 'base' or 'srg', got {what!r}")
    if fmt not in ("dot", "json"):
        raise ValueError(f"'fmt' should be 'dot' or 'json', got {fmt!r}")
    if options is None:
        options = AnalysisOptions()
    vertices = enumerate_vertices(spec, vertex_budget=options.vertex_budget)
    g = intersection_graph(vertices)
    if what == "srg":
        g = build_srg(g).srg
    if fmt == "dot":
        return to_dot(g, name=f"{what} {spec}")
    return to_json(g, spec=spec.factors)


def export(
    spec: RingSpec,
    what: str,
    fmt: str,
    out: str,
    options: Optional[AnalysisOptions] = None,
) -> str:
    write_text(render_export(spec, what, fmt, options), out)
    return out
