import itertools

import pytest
from hypothesis import given, settings

from sdimring.ring_model import (
    CapacityError,
    IdealVector,
    RingCase,
    RingSpec,
    RingSpecError,
    ZeroPattern,
    classify,
    complement,
    enumerate_vertices,
    full_support_count,
    intersect,
    intersection_graph,
    nzc,
    same_class,
    strata,
    support_classes,
    zero_pattern,
)
from sdimring.tests.fixtures import ring_specs


def _v(factors, levels) -> IdealVector:
    return IdealVector(RingSpec(factors), levels)


def test_parse_ring_spec():
    assert RingSpec.parse("0,0,0").factors == (0, 0, 0)
    assert RingSpec.parse(" 2, 2 ").factors == (2, 2)
    assert str(RingSpec.parse("1,0")) == "1,0"


@pytest.mark.parametrize("text", ["", "1,,2", "a,1", "1.5", "-1", "2,-3"])
def test_parse_rejects_malformed(text):
    with pytest.raises(RingSpecError):
        RingSpec.parse(text)


def test_ring_spec_validation():
    with pytest.raises(RingSpecError):
        RingSpec(())
    with pytest.raises(RingSpecError):
        RingSpec((1, -1))
    with pytest.raises(ValueError):
        RingSpec((True, 1))


def test_ring_spec_counts():
    spec = RingSpec((2, 0, 1))
    assert (spec.m, spec.n) == (2, 1)
    assert spec.ideal_count == 4 * 2 * 3
    assert spec.vertex_count == 22
    assert spec.top == (3, 1, 2)
    assert spec.canonical().factors == (2, 1, 0)


@pytest.mark.parametrize(
    "factors, case",
    [
        ((0, 0), RingCase.REDUCED),
        ((0, 0, 0), RingCase.REDUCED),
        ((2, 2), RingCase.NONREDUCED),
        ((1, 3, 1), RingCase.NONREDUCED),
        ((1, 0), RingCase.MIXED),
        ((0, 2, 0), RingCase.MIXED),
        ((0,), RingCase.UNCOVERED),
        ((4,), RingCase.UNCOVERED),
    ],
)
def test_classify(factors, case):
    assert classify(RingSpec(factors)) is case
    assert RingSpec(factors).case is case


def test_enumerate_vertices_examples():
    assert len(enumerate_vertices(RingSpec((0, 0, 0)))) == 6
    assert len(enumerate_vertices(RingSpec((2, 2)))) == 14
    assert enumerate_vertices(RingSpec((0,))) == []


def test_enumerate_vertices_lexicographic():
    vertices = enumerate_vertices(RingSpec((0, 0, 0)))
    assert [v.levels for v in vertices] == [
        (0, 0, 1),
        (0, 1, 0),
        (0, 1, 1),
        (1, 0, 0),
        (1, 0, 1),
        (1, 1, 0),
    ]
    assert all(v.is_vertex for v in vertices)


def test_enumerate_vertices_budget():
    spec = RingSpec((3, 3, 3, 3))  # 5^4 - 2 = 623 vertices
    with pytest.raises(CapacityError):
        enumerate_vertices(spec)
    assert len(enumerate_vertices(spec, vertex_budget=623)) == 623
    with pytest.raises(CapacityError):
        enumerate_vertices(RingSpec((2, 2)), vertex_budget=13)


@settings(deadline=None, max_examples=50)
@given(ring_specs)
def test_enumerate_vertices_count_and_uniqueness(spec):
    vertices = enumerate_vertices(spec)
    levels = [v.levels for v in vertices]
    assert len(vertices) == spec.vertex_count
    assert len(set(levels)) == len(levels)
    assert levels == sorted(levels)


def test_ideal_vector_validation():
    spec = RingSpec((1, 0))
    with pytest.raises(RingSpecError):
        IdealVector(spec, (1,))
    with pytest.raises(RingSpecError):
        IdealVector(spec, (3, 0))
    assert IdealVector(spec, (0, 0)).is_zero
    assert IdealVector(spec, (2, 1)).is_top
    assert str(IdealVector(spec, (1, 0))) == "(1,0)"


def test_intersect_examples():
    assert intersect(_v((0, 0, 0), (1, 1, 0)), _v((0, 0, 0), (0, 1, 1))).levels == (0, 1, 0)
    assert intersect(_v((2, 2), (2, 1)), _v((2, 2), (1, 2))).levels == (1, 1)


def test_intersect_rejects_other_spec():
    with pytest.raises(RingSpecError):
        intersect(_v((1, 1), (1, 1)), _v((2, 2), (1, 1)))


def test_intersect_lattice_laws():
    vertices = enumerate_vertices(RingSpec((1, 0, 1)))
    for I, J in itertools.product(vertices, repeat=2):
        assert intersect(I, J) == intersect(J, I)
        if I == J:
            assert intersect(I, I) == I
    for I, J, K in itertools.product(vertices[:8], repeat=3):
        assert intersect(intersect(I, J), K) == intersect(I, intersect(J, K))


def test_complement_examples():
    assert complement(_v((0, 0, 0), (1, 0, 1))).levels == (0, 1, 0)
    assert complement(_v((2, 2), (2, 0))).levels == (0, 3)


def test_complement_of_full_support_is_zero():
    Ic = complement(_v((2, 2), (1, 1)))
    assert Ic.levels == (0, 0)
    assert Ic.is_zero and not Ic.is_vertex
    assert complement(_v((1, 0), (1, 1))).is_zero


def test_complement_rejects_trivial_ideals():
    with pytest.raises(RingSpecError):
        complement(_v((1, 1), (0, 0)))
    with pytest.raises(RingSpecError):
        complement(_v((1, 1), (2, 2)))


@settings(deadline=None, max_examples=50)
@given(ring_specs)
def test_complement_properties(spec):
    for I in enumerate_vertices(spec):
        Ic = complement(I)
        assert Ic.is_vertex == (nzc(I) >= 1)
        assert intersect(I, Ic).is_zero
        assert zero_pattern(Ic) == ~zero_pattern(I)
        assert nzc(I) + nzc(Ic) == spec.factor_count


def test_zero_pattern_negation_on_every_vertex():
    vertices = enumerate_vertices(RingSpec((1, 1)))
    assert len(vertices) == 7
    for I in vertices:
        assert zero_pattern(complement(I)).bits == tuple(not b for b in zero_pattern(I).bits)


def test_nzc_and_strata():
    assert nzc(_v((0, 0, 0), (1, 1, 0))) == 1
    assert nzc(_v((2, 2), (1, 1))) == 0
    groups = strata(enumerate_vertices(RingSpec((0, 0, 0))))
    assert {k: len(members) for k, members in groups.items()} == {0: 0, 1: 3, 2: 3}
    assert strata([]) == {}


def test_zero_pattern_support():
    pattern = ZeroPattern((True, False, False))
    assert pattern.nzc == 1
    assert pattern.support == (1, 2)
    assert (~pattern).support == (0,)


@settings(deadline=None, max_examples=50)
@given(ring_specs)
def test_strata_partition_vertices(spec):
    vertices = enumerate_vertices(spec)
    groups = strata(vertices)
    members = sorted(i for group in groups.values() for i in group)
    assert members == list(range(len(vertices)))
    assert all(0 <= k <= spec.factor_count - 1 for k in groups)
    if vertices:
        assert len(groups[0]) == full_support_count(spec)


def test_same_class():
    assert same_class(_v((2, 2), (1, 1)), _v((2, 2), (2, 2)))
    assert not same_class(_v((1, 1), (1, 0)), _v((1, 1), (0, 1)))


@pytest.mark.parametrize(
    "factors, count",
    [((0, 0, 0), 6), ((0, 0, 0, 0), 14), ((2, 2), 3), ((1, 0, 2), 7), ((1, 1, 1, 0), 15)],
)
def test_number_of_classes(factors, count):
    # with only fields the full-support class is R itself, which is not a vertex
    classes = support_classes(enumerate_vertices(RingSpec(factors)))
    assert len(classes) == count


def test_support_class_sizes():
    spec = RingSpec((2, 1, 0))
    classes = support_classes(enumerate_vertices(spec))
    for pattern, members in classes.items():
        size = 1
        for i in pattern.support:
            size *= spec.factors[i] + 1
        if pattern.nzc == 0:
            size -= 1
        assert len(members) == size


def test_classmates_are_adjacent():
    vertices = enumerate_vertices(RingSpec((2, 1, 0)))
    g = intersection_graph(vertices)
    for u, v in itertools.combinations(range(len(vertices)), 2):
        if same_class(vertices[u], vertices[v]):
            assert not intersect(vertices[u], vertices[v]).is_zero
            assert g.has_edge(u, v)


def test_intersection_graph_matches_intersect():
    vertices = enumerate_vertices(RingSpec((1, 0, 1)))
    g = intersection_graph(vertices)
    for u, v in itertools.combinations(range(len(vertices)), 2):
        assert g.has_edge(u, v) == (not intersect(vertices[u], vertices[v]).is_zero)
    assert g.labels[0] == str(vertices[0])


def test_intersection_graph_single_factor_is_complete():
    g = intersection_graph(enumerate_vertices(RingSpec((3,))))
    assert g.order == 3
    assert g.edge_count == 3
    assert intersection_graph([]).order == 0
