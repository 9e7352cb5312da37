"""
Exact maximum independent set / minimum vertex cover

Branch and reduce on bitmasks (bit i = vertex i):

1. Reductions, repeated until none applies
    - degree 0: take the vertex
    - degree 1: take the leaf, drop its neighbor
    - simplicial: a vertex whose neighborhood is a clique is taken
    - domination: if N[u] is inside N[v] for adjacent u, v, drop v
2. Split into connected components and solve each on its own
3. A component that is a clique contributes its lowest vertex
4. Otherwise branch on the vertex of maximum degree (lowest index on ties):
   take it, then skip it unless a greedy clique cover of the rest shows the
   skip branch cannot be strictly larger

The vertex cover is the complement of the independent set (Gallai).
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from sdimring.graph_core import Graph
from sdimring.utils import DEFAULT_NODE_BUDGET, bits_to_list, iter_bits

logger = logging.getLogger(__name__)


@dataclass
class SolverStats:
    nodes: int = 0
    reductions: Dict[str, int] = field(
        default_factory=lambda: {
            "degree0": 0,
            "degree1": 0,
            "simplicial": 0,
            "dominated": 0,
            "clique_component": 0,
            "component_split": 0,
        }
    )

    def as_dict(self) -> dict:
        return asdict(self)


class NodeBudgetExceeded(RuntimeError):
    def __init__(self, message: str, stats: SolverStats):
        RuntimeError.__init__(self, message)
        self.stats = stats


@dataclass(frozen=True)
class CoverResult:
    """
    Attributes
    --------
    alpha: int
        vertex cover number
    beta: int
        independence number
    witness_cover: Tuple[int, ...]
    witness_independent: Tuple[int, ...]
    stats: dict
        search nodes and reduction counters
    """

    alpha: int
    beta: int
    witness_cover: Tuple[int, ...]
    witness_independent: Tuple[int, ...]
    stats: dict


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class MisSolver(object):
    def __init__(self, g: Graph, node_budget: int = DEFAULT_NODE_BUDGET):
        """
        One solver per graph; it owns its search state

        Parameters
        --------
        g: Graph
        node_budget: int
            Maximum number of search nodes before giving up
        """
        self.g = g
        self.node_budget = node_budget
        self.rows: Tuple[int, ...] = g.rows
        self.closed: Tuple[int, ...] = tuple(
            row | (1 << v) for v, row in enumerate(self.rows)
        )
        self.stats = SolverStats()

    def solve(self) -> CoverResult:
        full = (1 << self.g.order) - 1
        independent = self._solve(full)
        beta = _popcount(independent)
        cover = full & ~independent
        logger.debug(
            "Independence number %d on %d vertices, %d search nodes",
            beta,
            self.g.order,
            self.stats.nodes,
        )
        return CoverResult(
            alpha=self.g.order - beta,
            beta=beta,
            witness_cover=tuple(bits_to_list(cover)),
            witness_independent=tuple(bits_to_list(independent)),
            stats=self.stats.as_dict(),
        )

    def _visit(self) -> None:
        self.stats.nodes += 1
        if self.stats.nodes > self.node_budget:
            raise NodeBudgetExceeded(
                f"Search exceeded {self.node_budget} nodes on a graph of order "
                f"{self.g.order}",
                self.stats,
            )

    def _is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if self.closed[v] & mask != mask:
                return False
        return True

    def _reduce(self, mask: int) -> Tuple[int, int]:
        """
        Returns
        --------
        (mask, chosen): Tuple[int, int]
            vertices still undecided, vertices forced into the solution
        """
        reductions = self.stats.reductions
        chosen = 0
        changed = True
        while changed:
            changed = False
            for v in iter_bits(mask):
                bit = 1 << v
                if not mask & bit:
                    continue
                nbrs = self.rows[v] & mask
                if nbrs == 0:
                    reductions["degree0"] += 1
                elif nbrs & (nbrs - 1) == 0:
                    reductions["degree1"] += 1
                elif self._is_clique(nbrs):
                    reductions["simplicial"] += 1
                else:
                    continue
                chosen |= bit
                mask &= ~(bit | nbrs)
                changed = True
            if changed:
                continue
            for v in iter_bits(mask):
                if not mask >> v & 1:
                    continue
                closed_v = self.closed[v] & mask
                for u in iter_bits(self.rows[v] & mask):
                    if self.closed[u] & mask & ~closed_v == 0:
                        reductions["dominated"] += 1
                        mask &= ~(1 << v)
                        changed = True
                        break
        return mask, chosen

    def _components(self, mask: int) -> List[int]:
        parts = []
        remaining = mask
        while remaining:
            seed = remaining & -remaining
            part = seed
            frontier = seed
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.rows[v]
                frontier = reach & remaining & ~part
                part |= frontier
            parts.append(part)
            remaining &= ~part
        return parts

    def _upper_bound(self, mask: int) -> int:
        """
        Greedy clique cover; an independent set meets each clique at most once
        """
        count = 0
        remaining = mask
        while remaining:
            v = (remaining & -remaining).bit_length() - 1
            clique = 1 << v
            candidates = self.rows[v] & remaining
            while candidates:
                x = (candidates & -candidates).bit_length() - 1
                clique |= 1 << x
                candidates &= self.rows[x]
            remaining &= ~clique
            count += 1
        return count

    def _branch_vertex(self, mask: int) -> int:
        best, best_degree = -1, -1
        for v in iter_bits(mask):
            degree = _popcount(self.rows[v] & mask)
            if degree > best_degree:
                best, best_degree = v, degree
        return best

    def _solve(self, mask: int) -> int:
        self._visit()
        mask, chosen = self._reduce(mask)
        if not mask:
            return chosen

        parts = self._components(mask)
        if len(parts) > 1:
            self.stats.reductions["component_split"] += 1
            for part in parts:
                chosen |= self._solve(part)
            return chosen

        if self._is_clique(mask):
            self.stats.reductions["clique_component"] += 1
            return chosen | (mask & -mask)

        v = self._branch_vertex(mask)
        take = (1 << v) | self._solve(mask & ~self.closed[v])
        rest = mask & ~(1 << v)
        if self._upper_bound(rest) <= _popcount(take):
            return chosen | take
        skip = self._solve(rest)
        if _popcount(skip) > _popcount(take):
            return chosen | skip
        return chosen | take


def max_independent_set(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> CoverResult:
    return MisSolver(g, node_budget=node_budget).solve()


def verify_witness(g: Graph, result: CoverResult) -> bool:
    """
    Re-check both witnesses against the adjacency matrix
    """
    order = g.order
    cover = set(result.witness_cover)
    independent = set(result.witness_independent)
    if any(not 0 <= v < order for v in cover | independent):
        return False
    if len(cover) != result.alpha or len(independent) != result.beta:
        return False
    if result.alpha + result.beta != order:
        return False
    for u, v in g.edges():
        if u not in cover and v not in cover:
            return False
        if u in independent and v in independent:
            return False
    return True


def exhaustive_independence_number(g: Graph) -> int:
    """
    Independence number by plain include/exclude enumeration, no reductions
    """
    closed = tuple(row | (1 << v) for v, row in enumerate(g.rows))

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        return max(1 + best(mask & ~closed[v]), best(mask & ~(1 << v)))

    return best((1 << g.order) - 1)
