"""
Strong resolving graph and brute-force resolving-set oracles

Two vertices u, v are mutually maximally distant (MMD) when no neighbor of u
is farther from v than u is, and no neighbor of v is farther from u than v is.
The strong resolving graph keeps every vertex of the base graph and joins
exactly the MMD pairs.

For disconnected base graphs UNREACHABLE counts as larger than every finite
distance: vertices in different components are MMD, and a finite d(u, v)
loses against a neighbor that cannot reach the other endpoint.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, NamedTuple, Optional, Tuple

import numpy as np
from numpy import ndarray

from sdimring.graph_core import DistanceMatrix, Graph, all_pairs_distances
from sdimring.utils import DEFAULT_ORACLE_CAP

logger = logging.getLogger(__name__)


class NotApplicable(Exception):
    """Strong resolution asked about vertices without finite distances"""


class OracleError(ValueError):
    """Brute-force oracle refused its input (disconnected or too large)"""


class OracleResult(NamedTuple):
    size: int
    witness: Tuple[int, ...]


@dataclass(frozen=True)
class SrgGraph:
    """
    Attributes
    --------
    base: Graph
        The graph G whose MMD pairs were collected
    srg: Graph
        Same vertex indices as base, edges = MMD pairs
    dist: DistanceMatrix
        Distances in base
    mmd_support: FrozenSet[int]
        Vertices with at least one MMD partner
    """

    base: Graph
    srg: Graph
    dist: DistanceMatrix
    mmd_support: FrozenSet[int]

    @property
    def isolated(self) -> List[int]:
        return [v for v in range(self.srg.order) if v not in self.mmd_support]


def _neighbor_reach(dist: DistanceMatrix, g: Graph) -> ndarray:
    """
    reach[u, v] = max over w in N(u) of d(v, w), -inf when N(u) is empty
    """
    order = g.order
    reach = np.full((order, order), -np.inf)
    for u in range(order):
        nbrs = np.flatnonzero(g.adjacency[u])
        if nbrs.size:
            reach[u] = dist.values[:, nbrs].max(axis=1)
    return reach


def mmd_matrix(dist: DistanceMatrix, g: Graph) -> ndarray:
    """
    Boolean (V, V) matrix of MMD pairs, empty diagonal
    """
    d = dist.values
    reach = _neighbor_reach(dist, g)
    mmd = (reach <= d) & (reach.T <= d)
    np.fill_diagonal(mmd, False)
    return mmd


def is_mmd(dist: DistanceMatrix, g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise ValueError("MMD is defined for distinct vertices only")
    d_uv = dist[u, v]
    for w in g.neighbors(u):
        if dist[v, w] > d_uv:
            return False
    for w in g.neighbors(v):
        if dist[u, w] > d_uv:
            return False
    return True


def build_srg(g: Graph, dist: Optional[DistanceMatrix] = None) -> SrgGraph:
    if dist is None:
        dist = all_pairs_distances(g)
    mmd = mmd_matrix(dist, g)
    srg = Graph(mmd, g.labels)
    support = frozenset(int(v) for v in np.flatnonzero(mmd.any(axis=1)))
    logger.debug(
        "Strong resolving graph: %d edges, %d/%d vertices with an MMD partner",
        srg.edge_count,
        len(support),
        g.order,
    )
    return SrgGraph(base=g, srg=srg, dist=dist, mmd_support=support)


def strongly_resolves(dist: DistanceMatrix, w: int, u: int, v: int) -> bool:
    """
    True if u lies on a shortest w-v path or v lies on a shortest w-u path
    """
    for a, b in ((w, u), (w, v), (u, v)):
        if not dist.reachable(a, b):
            raise NotApplicable(f"d({a}, {b}) is unreachable")
    d_wu, d_wv, d_uv = dist.hops(w, u), dist.hops(w, v), dist.hops(u, v)
    return d_wu == d_wv + d_uv or d_wv == d_wu + d_uv


def _check_oracle_input(g: Graph, dist: DistanceMatrix, cap: int) -> None:
    if g.order > cap:
        raise OracleError(f"Graph has {g.order} vertices, oracle cap is {cap}")
    if not dist.all_finite:
        raise OracleError("Brute-force oracles need a connected graph")


def _resolver_masks(dist: DistanceMatrix) -> List[int]:
    """
    For every pair u < v, the bitmask of vertices that strongly resolve it
    """
    d = dist.values
    masks = []
    for u, v in itertools.combinations(range(dist.order), 2):
        d_uv = d[u, v]
        col_u, col_v = d[:, u], d[:, v]
        hits = (col_u == col_v + d_uv) | (col_v == col_u + d_uv)
        masks.append(sum(1 << int(w) for w in np.flatnonzero(hits)))
    return masks


def brute_min_strong_resolving(
    g: Graph, dist: Optional[DistanceMatrix] = None, cap: int = DEFAULT_ORACLE_CAP
) -> OracleResult:
    """
    Smallest strong resolving set by trying every subset, smallest size first

    Returns
    --------
    OracleResult
        size and the lexicographically smallest witness of that size
    """
    if dist is None:
        dist = all_pairs_distances(g)
    _check_oracle_input(g, dist, cap)
    masks = _resolver_masks(dist)
    for size in range(g.order + 1):
        for witness in itertools.combinations(range(g.order), size):
            chosen = sum(1 << w for w in witness)
            if all(chosen & mask for mask in masks):
                return OracleResult(size, witness)
    # the whole vertex set always resolves
    raise AssertionError("unreachable")


def brute_metric_dimension(
    g: Graph, dist: Optional[DistanceMatrix] = None, cap: int = DEFAULT_ORACLE_CAP
) -> OracleResult:
    """
    Smallest resolving set: distance vectors to the chosen vertices tell every
    vertex apart
    """
    if dist is None:
        dist = all_pairs_distances(g)
    _check_oracle_input(g, dist, cap)
    d = dist.values
    for size in range(g.order + 1):
        for witness in itertools.combinations(range(g.order), size):
            vectors = {tuple(row) for row in d[:, list(witness)]}
            if len(vectors) == g.order:
                return OracleResult(size, witness)
    raise AssertionError("unreachable")
