"""
Worked examples as explicit data, plus shared hypothesis strategies

Three fields F1 x F2 x F3: V1..V6 name the six non-trivial ideals the way the
drawings of G(R) and its strong resolving graph do.

Two chain rings R1 x R2, each with ideals 0 < I_i1 < I_i2 < R_i: V1..V14,
with I_i1 and I_i2 stored as levels 1 and 2 and R_i as level 3.
"""

from typing import Dict, Iterable, List, Set, Tuple

from hypothesis import strategies as st

from sdimring.graph_core import Graph
from sdimring.ring_model import IdealVector, RingSpec

THREE_FIELDS = RingSpec((0, 0, 0))

THREE_FIELDS_LABELS: Dict[str, Tuple[int, ...]] = {
    "V1": (1, 1, 0),
    "V2": (1, 0, 1),
    "V3": (0, 1, 1),
    "V4": (0, 0, 1),
    "V5": (0, 1, 0),
    "V6": (1, 0, 0),
}

THREE_FIELDS_BASE_EDGES = [
    ("V1", "V2"),
    ("V1", "V3"),
    ("V1", "V5"),
    ("V1", "V6"),
    ("V2", "V3"),
    ("V2", "V4"),
    ("V2", "V6"),
    ("V3", "V4"),
    ("V3", "V5"),
]

THREE_FIELDS_SRG_EDGES = [
    ("V1", "V4"),
    ("V2", "V5"),
    ("V3", "V6"),
    ("V4", "V5"),
    ("V4", "V6"),
    ("V5", "V6"),
]

TWO_CHAINS = RingSpec((2, 2))

TWO_CHAINS_LABELS: Dict[str, Tuple[int, ...]] = {
    "V1": (3, 0),
    "V2": (0, 3),
    "V3": (1, 0),
    "V4": (1, 1),
    "V5": (1, 2),
    "V6": (1, 3),
    "V7": (2, 0),
    "V8": (2, 1),
    "V9": (2, 2),
    "V10": (2, 3),
    "V11": (0, 1),
    "V12": (0, 2),
    "V13": (3, 1),
    "V14": (3, 2),
}

# the block of the strong resolving graph outside the full-support clique
TWO_CHAINS_H = ["V1", "V2", "V3", "V7", "V11", "V12"]


def index_of(vertices: List[IdealVector], levels: Tuple[int, ...]) -> int:
    for i, v in enumerate(vertices):
        if v.levels == levels:
            return i
    raise KeyError(levels)


def label_indices(
    vertices: List[IdealVector], labels: Dict[str, Tuple[int, ...]]
) -> Dict[str, int]:
    return {name: index_of(vertices, levels) for name, levels in labels.items()}


def as_index_edges(
    named_edges: Iterable[Tuple[str, str]], indices: Dict[str, int]
) -> Set[Tuple[int, int]]:
    out = set()
    for a, b in named_edges:
        u, v = indices[a], indices[b]
        out.add((min(u, v), max(u, v)))
    return out


def complete_graph(order: int) -> Graph:
    return Graph.from_edges(
        order, [(u, v) for u in range(order) for v in range(u + 1, order)]
    )


def path_graph(order: int) -> Graph:
    return Graph.from_edges(order, [(i, i + 1) for i in range(order - 1)])


@st.composite
def graphs(draw, min_order: int = 0, max_order: int = 9) -> Graph:
    order = draw(st.integers(min_value=min_order, max_value=max_order))
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(order, [p for p, keep in zip(pairs, flags) if keep])


@st.composite
def connected_graphs(draw, min_order: int = 1, max_order: int = 8) -> Graph:
    """a random spanning tree plus random extra edges"""
    order = draw(st.integers(min_value=min_order, max_value=max_order))
    edges = set()
    for v in range(1, order):
        parent = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((parent, v))
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges.update(p for p, keep in zip(pairs, flags) if keep)
    return Graph.from_edges(order, sorted(edges))


ring_specs = st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=3).map(
    lambda factors: RingSpec(tuple(factors))
)
