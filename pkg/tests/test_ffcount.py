import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lequiv import ffcount as ff
from lequiv.fields import field, field_of_order
from lequiv.motivic import (class_grassmannian, class_hyperplane_section,
                            class_projective_space, class_universal_hyperplane)


def brute_subspaces(k, n, F):
    """Distinct row spaces of all k x n matrices of rank k (tiny cases only)."""
    seen = set()
    for rows in itertools.product(itertools.product(range(F.order), repeat=n), repeat=k):
        if ff.rank(rows, F) == k:
            seen.add(ff.Subspace.span(rows, n, F))
    return len(seen)


@pytest.mark.parametrize("k,n,order", [(1, 3, 2), (2, 4, 2), (2, 3, 3), (1, 4, 3), (2, 4, 3)])
def test_grassmannian_brute_force(k, n, order):
    F = field_of_order(order)
    assert ff.count_grassmannian(k, n, F) == brute_subspaces(k, n, F) == \
        ff.gaussian_binomial(k, n, order)


@pytest.mark.parametrize("order,count", [(2, 155), (3, 1210), (4, 5797), (5, 20306)])
def test_gr25_counts(order, count):
    F = field_of_order(order)
    assert ff.count_grassmannian(2, 5, F) == count == class_grassmannian(2, 5).evaluate(order)


@pytest.mark.parametrize("order", [2, 3, 4])
def test_echelon_forms_distinct(order):
    F = field_of_order(order)
    mats, P = ff._gr25(F)
    assert len({tuple(r) for r in P.tolist()}) == len(P)
    assert all(ff.rank(m.tolist(), F) == 2 for m in mats[:200])


@pytest.mark.parametrize("order", [2, 3])
def test_partition_by_pivot_pattern(order):
    F = field_of_order(order)
    pats = ff.pivot_patterns(2, 5)
    assert pats[0] == (0, 1) and pats[-1] == (3, 4)
    parts = [ff.count_grassmannian(2, 5, F, [p]) for p in pats]
    assert sum(parts) == ff.count_grassmannian(2, 5, F)
    half = len(pats) // 2
    assert ff.count_grassmannian(2, 5, F, pats[:half]) + \
        ff.count_grassmannian(2, 5, F, pats[half:]) == sum(parts)


def test_enumeration_guardrail():
    with pytest.raises(ff.EnumerationLimitError):
        ff.count_universal_hyperplane(field(5), None)
    with pytest.raises(ff.EnumerationLimitError):
        ff.detect_singular([ff.standard_form(2, field(5))] * 5, 5, max_ext=2)


forms_f3 = st.lists(st.integers(0, 2), min_size=10, max_size=10).filter(any)


@given(forms_f3)
@settings(max_examples=100, deadline=None)
def test_kernel_dimension_and_section_count(coeffs):
    F = field(3)
    theta = ff.TwoForm.from_coeffs(coeffs, F)
    kdim = ff.form_kernel(theta).dim
    assert kdim in (1, 3)
    assert theta.rank() == 5 - kdim
    assert ff.count_hyperplane_section(theta) == class_hyperplane_section(kdim).evaluate(3)


@pytest.mark.parametrize("order", [2, 3, 4, 5])
def test_section_count_depends_only_on_rank(order):
    F = field_of_order(order)
    rng = np.random.default_rng(order)
    for rank_, kdim in ((4, 1), (2, 3)):
        expected = class_hyperplane_section(kdim).evaluate(order)
        for _ in range(20):
            theta = ff.random_form(rank_, F, rng)
            assert theta.rank() == rank_
            assert ff.count_hyperplane_section(theta) == expected


def test_wedge_and_evaluate():
    F = field(3)
    t = ff.TwoForm.wedge([1, 0, 0, 0, 0], [0, 1, 0, 0, 0], F)
    assert t == ff.standard_form(2, F)
    assert t.evaluate([1, 0, 0, 0, 0], [0, 1, 0, 0, 0]) == 1
    assert t.evaluate([0, 1, 0, 0, 0], [1, 0, 0, 0, 0]) == 2
    with pytest.raises(ValueError):
        ff.TwoForm(((1, 0), (0, 0)), F)
    with pytest.raises(ValueError):
        ff.count_hyperplane_section(ff.TwoForm.from_coeffs([0] * 10, F))


def test_common_plane_fixture(fixture_forms):
    F = field(2)
    A = fixture_forms("common_plane")
    pts = ff.section_points(A, F, "primal")
    plane = ff.Subspace.span([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]], 5, F)
    assert plane in pts.points


def test_shared_kernel_fixture(fixture_forms):
    F = field(2)
    A = fixture_forms("shared_kernel")
    pts = ff.section_points(A, F, "primal")
    assert pts.degenerate
    assert not ff.detect_singular(A, 2, 1).empty


def test_singular_over_extension_fixture(fixture_forms):
    A = fixture_forms("singular_over_f4")
    report = ff.detect_singular(A, 2, max_ext=2)
    assert report.witnesses[1] == []
    assert report.witnesses[2]
    assert report.first_singular_degree == 2
    assert "not a smoothness proof" in ff.detect_singular(A, 2, 1).summary()
    F4 = field(2, 2)
    for U, theta in report.witnesses[2]:
        assert theta.vanishes_on(U)
        K = ff.form_kernel(theta)
        assert ff.intersection_dim(U, K, F4) == 2


def test_witness_lies_in_span():
    F = field(2)
    A, _ = ff.smooth_form_space(2, 3)
    for U in ff.primal_points(A, F):
        assert ff.singular_witness(U, A, F) is None


@pytest.mark.parametrize("q,seed", [(2, s) for s in range(4)] + [(3, s) for s in range(3)])
def test_primal_points_two_ways(q, seed):
    F = field(q)
    A = ff.random_form_space(F, np.random.default_rng(seed))
    a = ff.primal_points(A, F)
    assert a == ff.primal_points_by_grassmannian(A, F)
    for U in a:
        assert all(f.vanishes_on(U) for f in A)


def test_primal_points_over_extension_agree():
    F4 = field(2, 2)
    A = [f.over(F4) for f in ff.random_form_space(field(2), np.random.default_rng(5))]
    assert ff.primal_points(A, F4) == ff.primal_points_by_grassmannian(A, F4)


def test_dual_points_are_decomposable():
    F = field(3)
    A = ff.random_form_space(F, np.random.default_rng(11))
    for theta in ff.dual_points(A, F):
        assert ff.form_kernel(theta).dim == 3


@pytest.mark.parametrize("q,seed", [(2, 0), (2, 1), (3, 0)])
def test_torsor(q, seed):
    A, _ = ff.smooth_form_space(q, seed)
    r = ff.torsor_count_test(A, q, seed)
    assert r.reliable and r.counts_equal and r.pairing_ok
    assert r.count_X == r.count_Y


def test_requires_five_independent_forms():
    F = field(2)
    f = ff.standard_form(2, F)
    with pytest.raises(ValueError):
        ff.section_points([f] * 5, F)
    with pytest.raises(ValueError):
        ff.section_points([f], F)


def test_universal_full_f2():
    F = field(2)
    expected = class_universal_hyperplane(class_projective_space(9),
                                          class_grassmannian(2, 5)).evaluate(2)
    assert expected == 79205
    assert ff.count_universal_hyperplane(F, None, "sections") == expected
    assert ff.count_universal_hyperplane(F, None, "fibration") == expected


def test_universal_empty_and_small():
    F = field(3)
    assert ff.count_universal_hyperplane(F, []) == 0
    theta = ff.standard_form(4, F)
    assert ff.count_universal_hyperplane(F, [theta], "sections") == \
        ff.count_universal_hyperplane(F, [theta], "fibration") == 400


@pytest.mark.parametrize("q,seed", [(2, 7), (3, 1)])
def test_universal_over_form_space(q, seed):
    F = field(q)
    A, _ = ff.smooth_form_space(q, seed)
    rep = ff.universal_hyperplane_report(F, A)
    assert rep["agree"]
    assert rep["scalar_over_S"] == class_universal_hyperplane(
        class_projective_space(4), 0).evaluate(q)
