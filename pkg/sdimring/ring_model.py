"""
Ideal lattice of a finite product of chain rings

R = R_1 x ... x R_k, every R_i a local principal ideal ring whose ideals form
one chain 0 < I_1 < ... < I_{n_i} < R_i. A factor is stored by its chain
length n_i (number of non-trivial ideals), n_i = 0 being a field.

An ideal of R is a vector of chain levels, one per factor:
    0           zero ideal of R_i
    1 .. n_i    I_1 .. I_{n_i}
    n_i + 1     R_i itself

Intersection in a chain is the smaller ideal, so intersecting two ideals of R
is the componentwise minimum of their levels. No ring elements are modeled.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import numpy as np

from sdimring.graph_core import Graph
from sdimring.utils import DEFAULT_VERTEX_BUDGET

logger = logging.getLogger(__name__)


class RingSpecError(ValueError):
    """Malformed ring spec or ideal vector"""


class CapacityError(ValueError):
    """Vertex enumeration would exceed the configured budget"""


class RingCase(str, Enum):
    REDUCED = "REDUCED"
    NONREDUCED = "NONREDUCED"
    MIXED = "MIXED"
    UNCOVERED = "UNCOVERED"


@dataclass(frozen=True)
class RingSpec:
    """
    Chain lengths of the local factors, in the order given

    Attributes
    --------
    factors: Tuple[int, ...]
        n_i for every factor, n_i >= 0 (0 encodes a field)
    """

    factors: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if len(self.factors) == 0:
            raise RingSpecError("A ring spec needs at least one factor")
        for n_i in self.factors:
            if not isinstance(n_i, int) or isinstance(n_i, bool) or n_i < 0:
                raise RingSpecError(
                    f"Chain lengths must be non-negative integers, got {self.factors}"
                )

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        """
        Parse comma-separated chain lengths, e.g. "0,0,0" or "2,2"
        """
        parts = [p.strip() for p in text.split(",")]
        if not parts or any(p == "" for p in parts):
            raise RingSpecError(f"Cannot parse ring spec {text!r}")
        try:
            factors = tuple(int(p) for p in parts)
        except ValueError:
            raise RingSpecError(f"Cannot parse ring spec {text!r}") from None
        return cls(factors)

    @property
    def factor_count(self) -> int:
        return len(self.factors)

    @property
    def m(self) -> int:
        """number of non-field factors"""
        return sum(1 for n_i in self.factors if n_i >= 1)

    @property
    def n(self) -> int:
        """number of field factors"""
        return sum(1 for n_i in self.factors if n_i == 0)

    @property
    def top(self) -> Tuple[int, ...]:
        return tuple(n_i + 1 for n_i in self.factors)

    @property
    def ideal_count(self) -> int:
        count = 1
        for n_i in self.factors:
            count *= n_i + 2
        return count

    @property
    def vertex_count(self) -> int:
        return self.ideal_count - 2

    @property
    def case(self) -> RingCase:
        return classify(self)

    def canonical(self) -> RingSpec:
        """
        Factors sorted in descending order; every quantity here is invariant
        under permuting the factors
        """
        return RingSpec(tuple(sorted(self.factors, reverse=True)))

    def __str__(self) -> str:
        return ",".join(str(n_i) for n_i in self.factors)


@dataclass(frozen=True)
class IdealVector:
    """
    An ideal of R as one chain level per factor
    """

    spec: RingSpec
    levels: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(self.levels))
        if len(self.levels) != self.spec.factor_count:
            raise RingSpecError(
                f"Ideal vector {self.levels} does not fit spec ({self.spec})"
            )
        for level, top in zip(self.levels, self.spec.top):
            if not 0 <= level <= top:
                raise RingSpecError(
                    f"Level out of range in {self.levels} for spec ({self.spec})"
                )

    @property
    def is_zero(self) -> bool:
        return all(level == 0 for level in self.levels)

    @property
    def is_top(self) -> bool:
        return self.levels == self.spec.top

    @property
    def is_vertex(self) -> bool:
        return not (self.is_zero or self.is_top)

    def __str__(self) -> str:
        return "(" + ",".join(str(level) for level in self.levels) + ")"


@dataclass(frozen=True)
class ZeroPattern:
    """
    One flag per factor, True where the component is the zero ideal
    """

    bits: Tuple[bool, ...]

    @property
    def nzc(self) -> int:
        return sum(self.bits)

    def __invert__(self) -> ZeroPattern:
        return ZeroPattern(tuple(not b for b in self.bits))

    @property
    def support(self) -> Tuple[int, ...]:
        """factor indices with a non-zero component"""
        return tuple(i for i, b in enumerate(self.bits) if not b)


def classify(spec: RingSpec) -> RingCase:
    """
    Which of the three product shapes the spec falls into

    REDUCED     only fields, at least two of them
    NONREDUCED  only non-fields, at least two of them
    MIXED       at least one of each
    UNCOVERED   everything else (a single factor)
    """
    m, n = spec.m, spec.n
    if m == 0 and n >= 2:
        return RingCase.REDUCED
    if n == 0 and m >= 2:
        return RingCase.NONREDUCED
    if m >= 1 and n >= 1:
        return RingCase.MIXED
    return RingCase.UNCOVERED


def enumerate_vertices(
    spec: RingSpec, vertex_budget: int = DEFAULT_VERTEX_BUDGET
) -> List[IdealVector]:
    """
    All non-trivial ideals of R in lexicographic order of their levels

    Parameters
    --------
    spec: RingSpec
    vertex_budget: int
        Refuse to enumerate more than this many vertices

    Returns
    --------
    vertices: List[IdealVector]
        Index i in this list is vertex i everywhere downstream
    """
    if spec.vertex_count > vertex_budget:
        raise CapacityError(
            f"Spec ({spec}) has {spec.vertex_count} vertices, "
            f"over the budget of {vertex_budget}"
        )
    logger.debug("Enumerating %d vertices of spec (%s)", spec.vertex_count, spec)
    ranges = [range(top + 1) for top in spec.top]
    vertices = [IdealVector(spec, levels) for levels in itertools.product(*ranges)]
    # product() puts the zero ideal first and R last
    return vertices[1:-1]


def _check_same_spec(I: IdealVector, J: IdealVector) -> None:
    if I.spec != J.spec:
        raise RingSpecError(
            f"Ideal vectors belong to different specs: ({I.spec}) vs ({J.spec})"
        )


def intersect(I: IdealVector, J: IdealVector) -> IdealVector:
    """
    I cap J, the componentwise minimum; may be the zero ideal
    """
    _check_same_spec(I, J)
    return IdealVector(I.spec, tuple(min(a, b) for a, b in zip(I.levels, J.levels)))


def complement(I: IdealVector) -> IdealVector:
    """
    Swap zero and non-zero components: a non-zero component becomes 0 and a
    zero component becomes the whole factor

    The result is a vertex whenever I has a zero component. For I in A_0
    (full support) it is the zero ideal.
    """
    if not I.is_vertex:
        raise RingSpecError(f"Complement is only defined for non-trivial ideals, got {I}")
    levels = tuple(
        0 if level >= 1 else top for level, top in zip(I.levels, I.spec.top)
    )
    return IdealVector(I.spec, levels)


def zero_pattern(I: IdealVector) -> ZeroPattern:
    return ZeroPattern(tuple(level == 0 for level in I.levels))


def nzc(I: IdealVector) -> int:
    """number of zero components"""
    return zero_pattern(I).nzc


def same_class(I: IdealVector, J: IdealVector) -> bool:
    _check_same_spec(I, J)
    return zero_pattern(I) == zero_pattern(J)


def strata(vertices: Sequence[IdealVector]) -> Dict[int, List[int]]:
    """
    Vertex indices grouped by their number of zero components: {k: A_k}

    Every k in 0 .. factor_count-1 is present, possibly empty.
    """
    if not vertices:
        return {}
    groups: Dict[int, List[int]] = {
        k: [] for k in range(vertices[0].spec.factor_count)
    }
    for index, vertex in enumerate(vertices):
        groups[nzc(vertex)].append(index)
    return groups


def support_classes(vertices: Sequence[IdealVector]) -> Dict[ZeroPattern, List[int]]:
    """
    Vertex indices grouped by zero pattern, i.e. the equivalence classes [I].
    Keys appear in order of their first member.
    """
    classes: Dict[ZeroPattern, List[int]] = {}
    for index, vertex in enumerate(vertices):
        classes.setdefault(zero_pattern(vertex), []).append(index)
    return classes


def full_support_count(spec: RingSpec) -> int:
    """
    Size of A_0 counted directly: every factor non-zero, minus R itself
    """
    count = 1
    for n_i in spec.factors:
        count *= n_i + 1
    return count - 1


def intersection_graph(vertices: Sequence[IdealVector]) -> Graph:
    """
    G(R): one vertex per ideal, an edge when two ideals meet in a non-zero
    ideal, i.e. when their supports share a factor
    """
    if not vertices:
        return Graph(np.zeros((0, 0), dtype=bool))
    support = np.array([level != 0 for v in vertices for level in v.levels]).reshape(
        len(vertices), -1
    )
    overlap = support.astype(np.int64) @ support.T.astype(np.int64)
    adjacency = overlap > 0
    np.fill_diagonal(adjacency, False)
    return Graph(adjacency, [str(v) for v in vertices])
