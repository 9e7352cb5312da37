"""
Closed-form predictions for G(R) and its strong resolving graph

m = number of non-field factors, n = number of field factors.

    REDUCED     (m = 0, n >= 2)  beta = 2^(n-1) - 1
                                 sdim = 2^n - 2^(n-1) - 1
    NONREDUCED  (n = 0, m >= 2)  beta = 2^(m-1)
                                 sdim = prod(n_i + 2) - 2^(m-1) - 2
                                 full-support clique order = prod(n_i + 1) - 1
    MIXED       (m, n >= 1)      beta = 2^(m+n-1)
                                 sdim = prod(n_i + 2) * 2^n - 2^(m+n-1) - 2
                                 full-support clique order, as published:
                                 prod(n_i + 1) * 2^n

Products run over the non-field factors. Predictions are plain data; the
harness never uses them to compute anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from sdimring.ring_model import RingCase, RingSpec, classify, full_support_count


@dataclass(frozen=True)
class ClosedFormPrediction:
    """
    Attributes
    --------
    case_tag: RingCase
    predicted_vertex_count: int
        prod over all factors of (n_i + 2), minus 2
    predicted_beta: Optional[int]
    predicted_clique_order: Optional[int]
        Literal published order of the full-support clique
    counted_clique_order: Optional[int]
        |A_0| counted from the spec, recorded next to the published value
    predicted_sdim: Optional[int]
    applicability_notes: str
    """

    case_tag: RingCase
    predicted_vertex_count: int
    predicted_beta: Optional[int]
    predicted_clique_order: Optional[int]
    counted_clique_order: Optional[int]
    predicted_sdim: Optional[int]
    applicability_notes: str


def _prod(values: List[int]) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def reduced_sdim(n: int) -> int:
    return 2**n - 2 ** (n - 1) - 1


def nonreduced_sdim(chains: List[int]) -> int:
    m = len(chains)
    return _prod([c + 2 for c in chains]) - 2 ** (m - 1) - 2


def mixed_sdim(chains: List[int], n: int) -> int:
    m = len(chains)
    return _prod([c + 2 for c in chains]) * 2**n - 2 ** (m + n - 1) - 2


def predict(spec: RingSpec) -> ClosedFormPrediction:
    case = classify(spec)
    chains = [n_i for n_i in spec.factors if n_i >= 1]
    m, n = spec.m, spec.n
    vertex_count = spec.vertex_count

    if case is RingCase.REDUCED:
        notes = "product of fields"
        if n == 2:
            notes += "; G(R) is two isolated vertices, value rests on the MMD convention"
        return ClosedFormPrediction(
            case_tag=case,
            predicted_vertex_count=vertex_count,
            predicted_beta=2 ** (n - 1) - 1,
            predicted_clique_order=None,
            counted_clique_order=None,
            predicted_sdim=reduced_sdim(n),
            applicability_notes=notes,
        )

    if case is RingCase.NONREDUCED:
        clique = _prod([c + 1 for c in chains]) - 1
        return ClosedFormPrediction(
            case_tag=case,
            predicted_vertex_count=vertex_count,
            predicted_beta=2 ** (m - 1),
            predicted_clique_order=clique,
            counted_clique_order=full_support_count(spec),
            predicted_sdim=nonreduced_sdim(chains),
            applicability_notes="product of chain rings, no fields",
        )

    if case is RingCase.MIXED:
        literal = _prod([c + 1 for c in chains]) * 2**n
        counted = full_support_count(spec)
        return ClosedFormPrediction(
            case_tag=case,
            predicted_vertex_count=vertex_count,
            predicted_beta=2 ** (m + n - 1),
            predicted_clique_order=literal,
            counted_clique_order=counted,
            predicted_sdim=mixed_sdim(chains, n),
            applicability_notes=(
                f"chain rings and fields; published clique order {literal} "
                f"differs from the counted full-support class size {counted}"
            ),
        )

    return ClosedFormPrediction(
        case_tag=case,
        predicted_vertex_count=vertex_count,
        predicted_beta=None,
        predicted_clique_order=None,
        counted_clique_order=None,
        predicted_sdim=None,
        applicability_notes="single factor: G(R) is complete, no closed form applies",
    )


@dataclass(frozen=True)
class BoundaryCheck:
    label: str
    left: int
    right: int
    agree: bool
    expected_agree: bool


def boundary_consistency(
    chains: Optional[List[int]] = None, fields: int = 3
) -> List[BoundaryCheck]:
    """
    Evaluate the mixed formula where it meets the other two cases

    The mixed formula at n = 0 coincides with the non-reduced one. At m = 0 it
    is one below the reduced formula; that gap is recorded, not reconciled.
    Also records the reduced value at n = 2, where G(R) is disconnected.
    """
    if chains is None:
        chains = [2, 2]
    mixed_at_no_fields = mixed_sdim(chains, 0)
    mixed_at_no_chains = mixed_sdim([], fields)
    return [
        BoundaryCheck(
            label=f"mixed(n=0, chains={chains}) vs nonreduced",
            left=mixed_at_no_fields,
            right=nonreduced_sdim(chains),
            agree=mixed_at_no_fields == nonreduced_sdim(chains),
            expected_agree=True,
        ),
        BoundaryCheck(
            label=f"mixed(m=0, n={fields}) vs reduced",
            left=mixed_at_no_chains,
            right=reduced_sdim(fields),
            agree=mixed_at_no_chains == reduced_sdim(fields),
            expected_agree=False,
        ),
        BoundaryCheck(
            label="reduced(n=2)",
            left=reduced_sdim(2),
            right=1,
            agree=reduced_sdim(2) == 1,
            expected_agree=True,
        ),
    ]
