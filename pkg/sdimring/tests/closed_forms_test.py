import itertools

import pytest
from hypothesis import given, settings

from sdimring.closed_forms import (
    boundary_consistency,
    mixed_sdim,
    nonreduced_sdim,
    predict,
    reduced_sdim,
)
from sdimring.ring_model import RingCase, RingSpec
from sdimring.tests.fixtures import ring_specs


def test_predict_three_fields():
    p = predict(RingSpec((0, 0, 0)))
    assert p.case_tag is RingCase.REDUCED
    assert (p.predicted_sdim, p.predicted_beta, p.predicted_vertex_count) == (3, 3, 6)
    assert p.predicted_clique_order is None


def test_predict_two_chains():
    p = predict(RingSpec((2, 2)))
    assert p.case_tag is RingCase.NONREDUCED
    assert p.predicted_sdim == 12
    assert p.predicted_beta == 2
    assert p.predicted_clique_order == 8
    assert p.counted_clique_order == 8
    assert p.predicted_vertex_count == 14


def test_predict_mixed():
    p = predict(RingSpec((1, 0)))
    assert p.case_tag is RingCase.MIXED
    assert (p.predicted_sdim, p.predicted_beta, p.predicted_vertex_count) == (2, 2, 4)
    assert p.predicted_clique_order == 4
    assert p.counted_clique_order == 1
    assert "differs" in p.applicability_notes


def test_predict_disconnected_reduced_note():
    p = predict(RingSpec((0, 0)))
    assert p.predicted_sdim == 1
    assert p.predicted_beta == 1
    assert "MMD convention" in p.applicability_notes


@pytest.mark.parametrize("factors", [(0,), (3,)])
def test_predict_uncovered(factors):
    p = predict(RingSpec(factors))
    assert p.case_tag is RingCase.UNCOVERED
    assert p.predicted_sdim is None
    assert p.predicted_beta is None
    assert p.predicted_clique_order is None
    assert p.predicted_vertex_count == factors[0]


def test_formula_values():
    assert [reduced_sdim(n) for n in (2, 3, 4, 5, 6)] == [1, 3, 7, 15, 31]
    assert nonreduced_sdim([2, 2]) == 12
    assert nonreduced_sdim([1, 1]) == 5
    assert mixed_sdim([1], 1) == 2
    assert mixed_sdim([2], 1) == 4
    assert mixed_sdim([1], 2) == 6


def test_boundary_consistency():
    checks = boundary_consistency()
    assert [(c.left, c.right) for c in checks] == [(12, 12), (2, 3), (1, 1)]
    assert [c.agree for c in checks] == [True, False, True]
    assert all(c.agree == c.expected_agree for c in checks)


@settings(deadline=None, max_examples=60)
@given(ring_specs)
def test_predict_is_permutation_invariant(spec):
    expected = predict(spec)
    for order in itertools.permutations(spec.factors):
        p = predict(RingSpec(order))
        assert p.predicted_sdim == expected.predicted_sdim
        assert p.predicted_beta == expected.predicted_beta
        assert p.predicted_clique_order == expected.predicted_clique_order
        assert p.case_tag is expected.case_tag


@settings(deadline=None, max_examples=60)
@given(ring_specs)
def test_predicted_vertex_count(spec):
    count = 1
    for n_i in spec.factors:
        count *= n_i + 2
    assert predict(spec).predicted_vertex_count == count - 2
