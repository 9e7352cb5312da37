"""
Claim catalog checked against computed graphs

C1  every vertex of G(R) has an MMD partner
C2  srg edge  <=>  same zero-pattern class, or no edge in G(R)
C3  fields only: srg equals the complement of G(R)
C4  srg = full-support clique (+) one connected remainder, as disjoint union
C5  independence number of srg matches the closed form
C6  strong metric dimension matches the closed form
C7  order of the full-support clique matches the published value

C2, C3, C5 and C6 must hold; C1, C4 and C7 are reported only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from sdimring.closed_forms import ClosedFormPrediction
from sdimring.graph_core import Graph, complement_graph, components, is_clique
from sdimring.mis_solver import CoverResult
from sdimring.ring_model import IdealVector, RingCase, same_class, strata
from sdimring.srg_builder import SrgGraph

MUST_HOLD = ("C2", "C3", "C5", "C6")
CLAIM_IDS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7")


class ClaimStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    CONVENTION = "CONVENTION"


@dataclass(frozen=True)
class ClaimCheck:
    claim_id: str
    status: ClaimStatus
    detail: str

    @property
    def must_hold(self) -> bool:
        return self.claim_id in MUST_HOLD


def _status(holds: bool, connected: bool) -> ClaimStatus:
    if not holds:
        return ClaimStatus.FAIL
    return ClaimStatus.PASS if connected else ClaimStatus.CONVENTION


def _not_applicable(claim_id: str, case: RingCase) -> ClaimCheck:
    return ClaimCheck(claim_id, ClaimStatus.NOT_APPLICABLE, f"not claimed for {case.value}")


def check_support(
    vertices: Sequence[IdealVector], srg: SrgGraph, case: RingCase, connected: bool
) -> ClaimCheck:
    if case is RingCase.UNCOVERED:
        return _not_applicable("C1", case)
    order = srg.base.order
    isolated = srg.isolated
    detail = f"mmd_support = {len(srg.mmd_support)} of {order} vertices"
    if isolated:
        detail += "; no MMD partner: " + " ".join(str(vertices[v]) for v in isolated)
    return ClaimCheck("C1", _status(not isolated, connected), detail)


def check_edge_characterization(
    vertices: Sequence[IdealVector], srg: SrgGraph, case: RingCase, connected: bool
) -> ClaimCheck:
    if case is RingCase.UNCOVERED:
        return _not_applicable("C2", case)
    base, sr = srg.base, srg.srg
    mismatches = []
    for u in range(base.order):
        for v in range(u + 1, base.order):
            expected = same_class(vertices[u], vertices[v]) or not base.has_edge(u, v)
            if expected != sr.has_edge(u, v):
                mismatches.append((u, v))
    pairs = base.order * (base.order - 1) // 2
    if mismatches:
        u, v = mismatches[0]
        detail = (
            f"{len(mismatches)} of {pairs} pairs disagree, "
            f"first {vertices[u]} {vertices[v]}"
        )
    else:
        detail = f"all {pairs} pairs agree"
    return ClaimCheck("C2", _status(not mismatches, connected), detail)


def check_complement_identity(srg: SrgGraph, case: RingCase, connected: bool) -> ClaimCheck:
    if case is not RingCase.REDUCED:
        return _not_applicable("C3", case)
    complemented = complement_graph(srg.base)
    holds = srg.srg == complemented
    detail = f"srg has {srg.srg.edge_count} edges, complement has {complemented.edge_count}"
    return ClaimCheck("C3", _status(holds, connected), detail)


def full_support_block(vertices: Sequence[IdealVector], srg: Graph) -> Optional[int]:
    """
    Order of A_0 when it is a clique and a whole component of srg
    """
    if not vertices:
        return None
    a0 = strata(vertices)[0]
    if not a0 or not is_clique(srg, a0):
        return None
    if sorted(a0) not in components(srg):
        return None
    return len(a0)


def check_decomposition(
    vertices: Sequence[IdealVector], srg: SrgGraph, case: RingCase
) -> ClaimCheck:
    if case not in (RingCase.NONREDUCED, RingCase.MIXED):
        return _not_applicable("C4", case)
    parts = components(srg.srg)
    block = full_support_block(vertices, srg.srg)
    shapes = ", ".join(
        f"K_{len(p)}" if is_clique(srg.srg, p) else f"H_{len(p)}" for p in parts
    )
    holds = len(parts) == 2 and block is not None
    return ClaimCheck(
        "C4",
        ClaimStatus.PASS if holds else ClaimStatus.FAIL,
        f"components {{{shapes}}}",
    )


def check_beta(
    cover: CoverResult, prediction: ClosedFormPrediction, connected: bool
) -> ClaimCheck:
    if prediction.predicted_beta is None:
        return _not_applicable("C5", prediction.case_tag)
    holds = cover.beta == prediction.predicted_beta
    return ClaimCheck(
        "C5",
        _status(holds, connected),
        f"computed {cover.beta}, predicted {prediction.predicted_beta}",
    )


def check_sdim(
    cover: CoverResult, prediction: ClosedFormPrediction, connected: bool
) -> ClaimCheck:
    if prediction.predicted_sdim is None:
        return _not_applicable("C6", prediction.case_tag)
    holds = cover.alpha == prediction.predicted_sdim
    return ClaimCheck(
        "C6",
        _status(holds, connected),
        f"computed {cover.alpha}, predicted {prediction.predicted_sdim}",
    )


def check_clique_order(
    vertices: Sequence[IdealVector], srg: SrgGraph, prediction: ClosedFormPrediction
) -> ClaimCheck:
    if prediction.predicted_clique_order is None:
        return _not_applicable("C7", prediction.case_tag)
    block = full_support_block(vertices, srg.srg)
    holds = block == prediction.predicted_clique_order
    return ClaimCheck(
        "C7",
        ClaimStatus.PASS if holds else ClaimStatus.FAIL,
        f"computed {block}, published {prediction.predicted_clique_order}, "
        f"counted {prediction.counted_clique_order}",
    )


def get_claims(
    vertices: Sequence[IdealVector],
    srg: SrgGraph,
    cover: CoverResult,
    prediction: ClosedFormPrediction,
) -> List[ClaimCheck]:
    case = prediction.case_tag
    connected = srg.dist.all_finite
    return [
        check_support(vertices, srg, case, connected),
        check_edge_characterization(vertices, srg, case, connected),
        check_complement_identity(srg, case, connected),
        check_decomposition(vertices, srg, case),
        check_beta(cover, prediction, connected),
        check_sdim(cover, prediction, connected),
        check_clique_order(vertices, srg, prediction),
    ]
