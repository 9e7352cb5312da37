"""
Dense undirected graphs with exact hop distances

Adjacency is a symmetric boolean numpy matrix with an empty diagonal. The
same rows are also kept as Python ints (bit i set = neighbor i) for the
bitset code in srg_builder and mis_solver.

Distances come from a BFS per source (scipy csgraph). Vertices in different
components are UNREACHABLE, stored as IEEE infinity so that an unreachable
distance compares larger than every finite one.
"""

from __future__ import annotations

import json
import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy import ndarray
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from sdimring.utils import ensure_parent

logger = logging.getLogger(__name__)

UNREACHABLE = math.inf


class GraphError(ValueError):
    """Malformed adjacency or invalid vertex ids"""


class Graph(object):
    def __init__(self, adjacency: ndarray, labels: Optional[Sequence[str]] = None):
        """
        Parameters
        --------
        adjacency: ndarray
            (V, V) matrix, non-zero entries are edges. Must be symmetric with
            a zero diagonal.
        labels: Optional[Sequence[str]]
            Vertex labels, default the vertex index
        """
        adjacency = np.asarray(adjacency).astype(bool)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise GraphError(f"Adjacency should be (V, V), got {adjacency.shape}")
        if not np.array_equal(adjacency, adjacency.T):
            raise GraphError("Adjacency matrix is not symmetric")
        if adjacency.diagonal().any():
            raise GraphError("Adjacency matrix has self loops")
        adjacency.setflags(write=False)
        self._adjacency = adjacency

        order = adjacency.shape[0]
        if labels is None:
            labels = [str(i) for i in range(order)]
        if len(labels) != order:
            raise GraphError(f"Expected {order} labels, got {len(labels)}")
        self.labels: Tuple[str, ...] = tuple(labels)

        self.rows: Tuple[int, ...] = tuple(
            sum(1 << int(j) for j in np.flatnonzero(adjacency[i])) for i in range(order)
        )

    @classmethod
    def from_edges(
        cls,
        order: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> Graph:
        adjacency = np.zeros((order, order), dtype=bool)
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order) or u == v:
                raise GraphError(f"Invalid edge ({u}, {v}) for order {order}")
            adjacency[u, v] = adjacency[v, u] = True
        return cls(adjacency, labels)

    @property
    def order(self) -> int:
        return self._adjacency.shape[0]

    @property
    def adjacency(self) -> ndarray:
        """read-only view"""
        return self._adjacency

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adjacency[u, v])

    def neighbors(self, u: int) -> List[int]:
        return [int(j) for j in np.flatnonzero(self._adjacency[u])]

    def degree(self, u: int) -> int:
        return int(self._adjacency[u].sum())

    def edges(self) -> List[Tuple[int, int]]:
        """(i, j) with i < j, sorted lexicographically"""
        rows, cols = np.nonzero(np.triu(self._adjacency, k=1))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    @property
    def edge_count(self) -> int:
        return int(self._adjacency.sum()) // 2

    def check_vertices(self, vertices: Iterable[int]) -> List[int]:
        vertices = list(vertices)
        for v in vertices:
            if not isinstance(v, (int, np.integer)) or not 0 <= v < self.order:
                raise GraphError(f"Vertex id {v} is not in a graph of order {self.order}")
        if len(set(vertices)) != len(vertices):
            raise GraphError(f"Duplicate vertex ids in {vertices}")
        return [int(v) for v in vertices]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adjacency, other._adjacency)

    def __hash__(self) -> int:
        return hash(self._adjacency.tobytes())

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count})"


class DistanceMatrix(object):
    def __init__(self, values: ndarray):
        """
        Parameters
        --------
        values: ndarray
            (V, V) float matrix of hop counts, UNREACHABLE where no path exists
        """
        values = np.asarray(values, dtype=float)
        values.setflags(write=False)
        self.values = values

    @property
    def order(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, pair: Tuple[int, int]) -> float:
        u, v = pair
        return float(self.values[u, v])

    def reachable(self, u: int, v: int) -> bool:
        return bool(np.isfinite(self.values[u, v]))

    def hops(self, u: int, v: int) -> int:
        """Finite distance as an int; unreachable pairs raise"""
        if not self.reachable(u, v):
            raise GraphError(f"Vertices {u} and {v} are not connected")
        return int(self.values[u, v])

    def max_finite(self) -> int:
        finite = self.values[np.isfinite(self.values)]
        return int(finite.max()) if finite.size else 0

    @property
    def all_finite(self) -> bool:
        return bool(np.isfinite(self.values).all())


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """
    Unweighted shortest path lengths between every pair of vertices
    """
    if g.order == 0:
        return DistanceMatrix(np.zeros((0, 0)))
    dist = shortest_path(
        csr_matrix(g.adjacency.astype(np.int8)),
        method="D",
        directed=False,
        unweighted=True,
    )
    return DistanceMatrix(dist)


def complement_graph(g: Graph) -> Graph:
    adjacency = ~g.adjacency
    np.fill_diagonal(adjacency, False)
    return Graph(adjacency, g.labels)


def induced(g: Graph, vertices: Sequence[int]) -> Graph:
    """
    Subgraph on `vertices`; vertex k of the result is vertices[k] of g
    """
    vertices = g.check_vertices(vertices)
    index = np.array(vertices, dtype=int)
    adjacency = g.adjacency[np.ix_(index, index)] if vertices else np.zeros((0, 0))
    return Graph(adjacency, [g.labels[v] for v in vertices])


def components(g: Graph) -> List[List[int]]:
    """
    Connected components as sorted vertex lists, ordered by smallest member
    """
    if g.order == 0:
        return []
    _, membership = connected_components(
        csr_matrix(g.adjacency.astype(np.int8)), directed=False
    )
    parts: dict = {}
    for v, label in enumerate(membership):
        parts.setdefault(int(label), []).append(v)
    return sorted(parts.values(), key=lambda part: part[0])


def diameter(g: Graph, dist: Optional[DistanceMatrix] = None) -> Union[int, float]:
    """
    Largest distance; UNREACHABLE for a disconnected graph
    """
    if g.order == 0:
        return 0
    if dist is None:
        dist = all_pairs_distances(g)
    if not dist.all_finite:
        return UNREACHABLE
    return dist.max_finite()


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    vertices = g.check_vertices(vertices)
    index = np.array(vertices, dtype=int)
    block = g.adjacency[np.ix_(index, index)]
    return bool(block.sum() == len(vertices) * (len(vertices) - 1))


def to_dot(g: Graph, name: str = "G") -> str:
    """
    Graphviz text, vertices in index order, edges sorted
    """
    lines = [f'graph "{name}" {{']
    for v, label in enumerate(g.labels):
        lines.append(f'\t{v} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"\t{u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph, spec: Optional[Sequence[int]] = None) -> str:
    payload = {
        "spec": list(spec) if spec is not None else None,
        "vertices": list(g.labels),
        "edges": [[u, v] for u, v in g.edges()],
    }
    return json.dumps(payload, sort_keys=True) + "\n"


def write_text(text: str, path: str) -> None:
    ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fo:
        fo.write(text)
    logger.info("Graph written to: %s", path)
