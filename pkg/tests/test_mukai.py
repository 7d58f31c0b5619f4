import itertools

import pytest

from lequiv import intmat
from lequiv.lattice import LatticeError, is_isomorphic, isometry_group, lambda_gram
from lequiv.mukai import (E1, E2, F, H, allowed_discriminant_actions, discriminant_action,
                          extend_ns_isometry, extended_gram, g0_isometry, jac2_isomorphism_verdict,
                          jacobian_ns, mukai_vector)


def test_extended_gram():
    lat = extended_gram(5, 3)
    assert lat.pair(E1, E2) == -1
    assert lat.pair(E1, E1) == lat.pair(E2, E2) == 0
    assert lat.pair(H, H) == 6 and lat.pair(H, F) == 5 and lat.pair(F, F) == 0
    v = mukai_vector(5, 2)
    assert lat.pair(v, v) == 0


def test_explicit_perp_basis():
    # v = F + k e2 is orthogonal to e2, F and t e1 + k H
    t, d, k = 5, 1, 2
    lat = extended_gram(t, d)
    v = mukai_vector(t, k)
    w = (t, 0, k, 0)
    for u in (E2, F, w):
        assert lat.pair(v, u) == 0
    # (w, e2) descends to a basis of v^perp/v with Gram ((2dk^2, -t), (-t, 0))
    g = [[lat.pair(a, b) for b in (w, E2)] for a in (w, E2)]
    assert g == [[2 * d * k * k, -t], [-t, 0]]
    assert is_isomorphic(jacobian_ns(t, d, k), lambda_gram(t, (d * k * k) % t))


@pytest.mark.parametrize("d,k", list(itertools.product(range(5), range(1, 5))))
def test_jacobian_ns(d, k):
    assert is_isomorphic(jacobian_ns(5, d, k), lambda_gram(5, (d * k * k) % 5))


@pytest.mark.parametrize("t", [3, 7])
def test_jacobian_ns_other_primes(t):
    for d, k in itertools.product(range(t), range(1, t)):
        g = jacobian_ns(t, d, k)
        assert g.det == -t * t
        assert is_isomorphic(g, jacobian_ns(t, d, t - k))
        assert is_isomorphic(g, lambda_gram(t, (d * k * k) % t))


def test_jacobian_requires_coprime():
    with pytest.raises(LatticeError):
        jacobian_ns(6, 1, 2)


def test_g0():
    m = g0_isometry()
    lat = extended_gram(5, 0)
    assert intmat.congruent(lat.gram.entries, m) == lat.gram.matrix()
    assert intmat.matvec(m, E1) == [0, 2, 0, 1]
    act = discriminant_action(m, lat)
    assert act == [[2, 0], [0, 3]]
    allowed = allowed_discriminant_actions(5)
    assert act not in allowed
    assert [[(-x) % 5 for x in r] for r in act] not in allowed


def test_ns_isometries_give_allowed_actions():
    lat = extended_gram(5, 0)
    allowed = allowed_discriminant_actions(5)
    for m2 in isometry_group(lambda_gram(5, 0)):
        assert discriminant_action(extend_ns_isometry(m2), lat) in allowed
    swap = extend_ns_isometry([[0, 1], [1, 0]])
    assert discriminant_action(swap, lat) == [[0, 1], [1, 0]]


def test_discriminant_action_is_functorial():
    lat = extended_gram(5, 0)
    g0 = g0_isometry()
    mats = [g0, extend_ns_isometry([[0, 1], [1, 0]]), extend_ns_isometry([[-1, 0], [0, -1]])]
    for a, b in itertools.product(mats, repeat=2):
        lhs = discriminant_action(intmat.matmul(a, b), lat)
        rhs = intmat.matmul(discriminant_action(a, lat), discriminant_action(b, lat))
        assert lhs == [[x % 5 for x in r] for r in rhs]


def test_discriminant_action_rejects_non_isometry():
    with pytest.raises(LatticeError):
        discriminant_action([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
                            extended_gram(5, 0))
    with pytest.raises(LatticeError):
        discriminant_action(intmat.identity(4), extended_gram(5, 1))


@pytest.mark.parametrize("d,verdict", [(0, "not_isomorphic_if_very_general"),
                                       (1, "not_isomorphic"), (2, "isomorphic"),
                                       (3, "isomorphic"), (4, "not_isomorphic")])
def test_verdicts(d, verdict):
    out = jac2_isomorphism_verdict(d)
    assert out["verdict"] == verdict
    assert out["d"] == d


def test_verdict_without_generality_is_undetermined():
    assert jac2_isomorphism_verdict(0, very_general=False)["verdict"] == "undetermined"
