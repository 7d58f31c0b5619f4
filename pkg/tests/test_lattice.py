import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors as sympy_invariants

from lequiv import intmat
from lequiv.lattice import (HYPERBOLIC_PLANE, GramMatrix, LatticeError, brute_force_isometries,
                            brute_force_isomorphic, canonical_residues, classification_validated,
                            discriminant_form, explicit_isomorphism, forms_isomorphic,
                            is_isomorphic, isometry_group, isotropic_lines, lambda_gram,
                            same_genus, signature)

T = 5


def isotropic_oracle(g, bound=30):
    """Primitive norm-zero vectors up to sign, by search over a box."""
    out = set()
    for v in itertools.product(range(-bound, bound + 1), repeat=2):
        if v != (0, 0) and math.gcd(*v) == 1 and g.norm(v) == 0:
            out.add(intmat.normalize_sign(v))
    return sorted(out)


def test_lambda_gram():
    assert lambda_gram(5, 0).entries == ((0, 5), (5, 0))
    assert lambda_gram(5, 4).entries == ((8, 5), (5, 0))
    assert lambda_gram(1, 0) == HYPERBOLIC_PLANE
    assert lambda_gram(7, 3).det == -49
    with pytest.raises(LatticeError):
        lambda_gram(0, 1)


def test_ns_of_degree_8_example():
    # basis (H, C) with H^2=8, H.C=3, C^2=-2; F = H - C gives basis (H, F)
    g = GramMatrix(((8, 3), (3, -2)))
    m = [[1, 1], [0, -1]]
    assert intmat.congruent(g.entries, m) == lambda_gram(5, 4).matrix()
    assert is_isomorphic(g, lambda_gram(5, 4))


def test_degree_10_example():
    g = GramMatrix(((10, 5), (5, 0)))
    # H -> H - F
    assert intmat.congruent(g.entries, [[1, 0], [-1, 1]]) == lambda_gram(5, 0).matrix()
    assert is_isomorphic(g, lambda_gram(5, 0))


def test_construction_rejects_bad_input():
    with pytest.raises(LatticeError):
        GramMatrix(((1, 0), (0, 2)))
    with pytest.raises(LatticeError):
        GramMatrix(((2, 2), (2, 2)))
    with pytest.raises(LatticeError):
        GramMatrix(((2, 1), (0, 2)))


def test_signature():
    assert signature(lambda_gram(5, 3)) == (1, 1)
    assert signature(HYPERBOLIC_PLANE.direct_sum(lambda_gram(5, 0))) == (2, 2)
    assert signature(GramMatrix(((2, 0), (0, 2)))) == (2, 0)
    assert signature(GramMatrix(((-2, 1), (1, -2)))) == (0, 2)


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_signature_matches_eigenvalues(a, b, c, e):
    g = [[2 * a, b, 0, 0], [b, 2 * c, e, 0], [0, e, 2, 1], [0, 0, 1, -4]]
    if intmat.det(g) == 0:
        return
    ev = Matrix(g).eigenvals()
    pos = sum(m for v, m in ev.items() if complex(v.evalf()).real > 0)
    assert signature(GramMatrix(g)) == (pos, 4 - pos)


def test_isotropic_lines_examples():
    assert set(isotropic_lines(lambda_gram(5, 0))) == {(1, 0), (0, 1)}
    assert isotropic_lines(lambda_gram(5, 1)) == [(0, 1), (5, -1)]
    assert isotropic_lines(lambda_gram(5, 4)) == [(0, 1), (5, -4)]


@pytest.mark.parametrize("t,d", [(t, d) for t in (1, 2, 3, 5, 6, 7) for d in range(-3, 8)])
def test_isotropic_lines_against_search(t, d):
    g = lambda_gram(t, d)
    assert isotropic_lines(g) == isotropic_oracle(g, bound=max(30, 2 * t + abs(d)))


def test_discriminant_examples():
    assert discriminant_form(lambda_gram(5, 0)).invariant_factors == (5, 5)
    a1 = discriminant_form(lambda_gram(5, 1))
    assert a1.invariant_factors == (25,)
    assert a1.gram_q[0][0] == Fraction(-2, 25) % 2
    assert discriminant_form(HYPERBOLIC_PLANE).order == 1


@pytest.mark.parametrize("t,d", [(t, d) for t in (2, 3, 4, 5, 6, 7, 9) for d in range(0, 10)])
def test_discriminant_group(t, d):
    g = lambda_gram(t, d)
    a = discriminant_form(g)
    assert a.order == t * t
    expected = [x for x in sympy_invariants(Matrix(g.matrix())) if abs(x) > 1]
    assert list(a.invariant_factors) == [abs(int(x)) for x in expected]
    els = list(a.elements())
    for x, y in itertools.product(els[:40], els[:40]):
        assert (a.q(a.add(x, y)) - a.q(x) - a.q(y) - 2 * a.b(x, y)) % 2 == 0


@pytest.mark.parametrize("d", range(1, 5))
def test_generator_square(d):
    # some generator of Z/25 has q = -2d/25 mod 2
    a = discriminant_form(lambda_gram(T, d))
    gens = [x for x in a.elements() if a.element_order(x) == 25]
    assert Fraction(-2 * d, 25) % 2 in {a.q(x) for x in gens}


def test_isomorphism_examples():
    assert is_isomorphic(lambda_gram(5, 2), lambda_gram(5, 3))
    assert not is_isomorphic(lambda_gram(5, 1), lambda_gram(5, 4))
    g = lambda_gram(7, 3)
    assert is_isomorphic(g, g)
    assert not is_isomorphic(lambda_gram(5, 1), lambda_gram(7, 1))


@pytest.mark.parametrize("d1,d2", list(itertools.product(range(5), repeat=2)))
def test_isomorphism_criterion_and_oracle(d1, d2):
    g1, g2 = lambda_gram(T, d1), lambda_gram(T, d2)
    criterion = (d1 - d2) % T == 0 or (d1 * d2) % T == 1
    assert is_isomorphic(g1, g2) == criterion
    assert brute_force_isomorphic(g1, g2, bound=25) == criterion
    if criterion:
        m = explicit_isomorphism(g1, g2)
        assert intmat.congruent(g1.entries, m) == g2.matrix()


@pytest.mark.parametrize("t", [3, 7, 11])
def test_isomorphism_criterion_other_primes(t):
    for d1, d2 in itertools.product(range(t), repeat=2):
        criterion = (d1 - d2) % t == 0 or (d1 * d2) % t == 1
        assert is_isomorphic(lambda_gram(t, d1), lambda_gram(t, d2)) == criterion


@pytest.mark.parametrize("t", [4, 6, 9])
def test_composite_t_agrees_with_brute_force(t):
    assert not classification_validated(t)
    for d1, d2 in itertools.product(range(t), repeat=2):
        g1, g2 = lambda_gram(t, d1), lambda_gram(t, d2)
        assert is_isomorphic(g1, g2) == brute_force_isomorphic(g1, g2, bound=3 * t)


@pytest.mark.parametrize("d,order", [(0, 4), (1, 4), (2, 2), (3, 2), (4, 4)])
def test_isometry_group(d, order):
    g = lambda_gram(T, d)
    group = isometry_group(g)
    assert len(group) == order
    assert sorted(group) == sorted(brute_force_isometries(g, g, 25))
    keys = {str(m) for m in group}
    for a, b in itertools.product(group, repeat=2):
        assert intmat.congruent(g.entries, a) == g.matrix()
        assert str(intmat.matmul(a, b)) in keys
        assert str(intmat.integer_inverse(a)) in keys


@pytest.mark.parametrize("t", [3, 7, 11, 13])
def test_isometry_group_order_rule(t):
    for d in range(t):
        expected = 4 if d % t in (1, t - 1, 0) else 2
        assert len(isometry_group(lambda_gram(t, d))) == expected


@pytest.mark.parametrize("d1,d2", list(itertools.product(range(5), repeat=2)))
def test_genus_criterion(d1, d2):
    criterion = any((d2 - k * k * d1) % T == 0 for k in range(1, T) if math.gcd(k, T) == 1)
    assert same_genus(lambda_gram(T, d1), lambda_gram(T, d2)) == criterion


def test_genus_examples():
    assert same_genus(lambda_gram(5, 1), lambda_gram(5, 4))
    assert not same_genus(lambda_gram(5, 1), lambda_gram(5, 2))
    g = HYPERBOLIC_PLANE.direct_sum(lambda_gram(5, 0))
    assert same_genus(g, g)
    assert not same_genus(g, lambda_gram(5, 0))


def test_form_isomorphism_detects_scaling():
    a, b = discriminant_form(lambda_gram(5, 1)), discriminant_form(lambda_gram(5, 2))
    assert not forms_isomorphic(a, b)
    assert forms_isomorphic(a, discriminant_form(lambda_gram(5, 4)))


def test_residues_are_pairs():
    assert canonical_residues(lambda_gram(5, 2)) == (2, 3)
    assert canonical_residues(lambda_gram(5, 0)) == (0, 0)


def test_json():
    assert lambda_gram(5, 1).to_json() == [[2, 5], [5, 0]]
    assert discriminant_form(lambda_gram(5, 1)).to_json() == {"factors": [25], "q": [["48/25"]]}
