"""Extended Neron-Severi lattice U + Lambda(t, d) and Jacobian computations.

Coordinates are always in the ordered basis (e1, e2, H, F) with
e1^2 = e2^2 = 0, e1.e2 = -1, and (H, F) spanning Lambda(t, d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import intmat
from .lattice import (GramMatrix, LatticeError, canonical_residues, is_isomorphic,
                      isometry_group, lambda_gram, same_genus)

E1, E2, H, F = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


@dataclass(frozen=True)
class ExtendedLattice:
    t: int
    d: int
    gram: GramMatrix = field(init=False, repr=False)

    def __post_init__(self):
        ns = lambda_gram(self.t, self.d)
        u = GramMatrix(((0, -1), (-1, 0)))
        object.__setattr__(self, "gram", u.direct_sum(ns))

    def pair(self, a: Sequence, b: Sequence):
        return intmat.bilinear(self.gram.entries, a, b)

    def is_isometry(self, m: Sequence[Sequence[int]]) -> bool:
        return (intmat.congruent(self.gram.entries, m) == self.gram.matrix()
                and abs(intmat.det(m)) == 1)


def extended_gram(t: int, d: int) -> ExtendedLattice:
    return ExtendedLattice(t, d)


def mukai_vector(t: int, k: int) -> tuple[int, ...]:
    """v = F + k e2, the vector whose moduli space is Jac^k."""
    return (0, k, 0, 1)


def jacobian_ns(t: int, d: int, k: int) -> GramMatrix:
    """Gram matrix of v^perp / v for v = F + k e2."""
    if math.gcd(t, k) != 1:
        raise LatticeError(f"gcd(t, k) must be 1, got t={t}, k={k}")
    lat = extended_gram(t, d)
    v = mukai_vector(t, k)
    row = intmat.matvec(lat.gram.entries, v)
    perp = intmat.integer_kernel([row])          # 4 x 3, columns span v^perp
    # coordinates of v in the basis of v^perp
    coords = _solve_in_basis(perp, v)
    basis = intmat.complete_to_basis(coords)     # first column is coords
    reps = [intmat.matvec(perp, [basis[r][j] for r in range(3)]) for j in (1, 2)]
    g = [[lat.pair(a, b) for b in reps] for a in reps]
    return GramMatrix(g)


def _solve_in_basis(cols: list[list[int]], v: Sequence[int]) -> list[int]:
    """Integer coordinates c with cols @ c == v (cols has full column rank)."""
    n = len(cols[0])
    # least squares normal equations are exact here because v lies in the span
    ct = intmat.transpose(cols)
    gram = intmat.matmul(ct, cols)
    rhs = intmat.matvec(ct, v)
    inv = intmat.inverse(gram)
    c = [sum(inv[i][j] * rhs[j] for j in range(n)) for i in range(n)]
    if any(x.denominator != 1 for x in c):
        raise ArithmeticError("vector is not in the integral span")
    c = [int(x) for x in c]
    assert intmat.matvec(cols, c) == list(v)
    return c


def g0_isometry() -> list[list[int]]:
    """Isometry of U + Lambda(5, 0) taking e1 to F + 2 e2.

    e1 -> 2e2 + F, e2 -> -2e1 - H, H -> 2H + 5e1, F -> -2F - 5e2.
    """
    images = [(0, 2, 0, 1), (-2, 0, -1, 0), (5, 0, 2, 0), (0, -5, 0, -2)]
    m = intmat.transpose(images)
    lat = extended_gram(5, 0)
    assert lat.is_isometry(m), "g0 does not preserve the form"
    assert intmat.matvec(m, E1) == [0, 2, 0, 1]
    return m


def extend_ns_isometry(m2: Sequence[Sequence[int]]) -> list[list[int]]:
    """Identity on U, m2 on the (H, F) block."""
    m = intmat.identity(4)
    for i in range(2):
        for j in range(2):
            m[2 + i][2 + j] = m2[i][j]
    return m


def discriminant_action(m: Sequence[Sequence[int]], lat: ExtendedLattice) -> list[list[int]]:
    """Matrix mod t of m acting on N^*/N = <H/t, F/t>.

    Column j holds the image of the j-th generator in those generators.
    """
    t = lat.t
    if lat.d % t:
        raise LatticeError("discriminant group is (Z/t)^2 only when t divides d")
    if not lat.is_isometry(m):
        raise LatticeError("matrix is not an isometry of the lattice")
    cols = []
    for gen in (H, F):
        img = [Fraction(x, t) for x in intmat.matvec(m, gen)]
        if img[0].denominator != 1 or img[1].denominator != 1:
            raise ArithmeticError("image has a non-integral U component")
        cols.append([int(img[2] * t) % t, int(img[3] * t) % t])
    return intmat.transpose(cols)


def allowed_discriminant_actions(t: int = 5) -> list[list[list[int]]]:
    """Actions of O(NS) on (Z/t)^2: +-identity and +-swap."""
    mats = [[[1, 0], [0, 1]], [[-1, 0], [0, -1]], [[0, 1], [1, 0]], [[0, -1], [-1, 0]]]
    return [[[x % t for x in row] for row in m] for m in mats]


def jac2_isomorphism_verdict(d: int, very_general: bool = True) -> dict:
    """Decide whether X and Jac^2(X) agree for NS(X) = Lambda(5, d).

    The 'very general' hypothesis (Hodge isometries of the transcendental
    lattice are +-1) is an assumption carried in the evidence, not computed.
    """
    t = 5
    d = d % t
    base = lambda_gram(t, d)
    evidence: dict = {"ns_gram": base.to_json()}
    if d in (2, 3):
        genus = [e for e in range(t) if same_genus(base, lambda_gram(t, e))]
        unique = all(is_isomorphic(base, lambda_gram(t, e)) for e in genus)
        group = isometry_group(base)
        evidence.update(genus_members=genus, unique_class_in_genus=unique,
                        isometry_group=group, isometry_group_order=len(group))
        ok = unique and len(group) == 2
        verdict = "isomorphic" if ok else "undetermined"
    elif d in (1, 4):
        jac = jacobian_ns(t, d, 2)
        iso = is_isomorphic(base, jac)
        evidence.update(jacobian_ns_gram=jac.to_json(), jacobian_residues=list(canonical_residues(jac)),
                        base_residues=list(canonical_residues(base)), ns_isomorphic=iso)
        verdict = "not_isomorphic" if not iso else "undetermined"
    else:
        lat = extended_gram(t, 0)
        g0 = g0_isometry()
        act = discriminant_action(g0, lat)
        neg = [[(-x) % t for x in row] for row in act]
        allowed = allowed_discriminant_actions(t)
        blocked = act not in allowed and neg not in allowed
        evidence.update(g0=g0, g0_e1_image=intmat.matvec(g0, E1), g0_action=act,
                        minus_g0_action=neg, allowed_actions=allowed,
                        action_outside_allowed=blocked, very_general_assumed=very_general)
        if blocked and very_general:
            verdict = "not_isomorphic_if_very_general"
        else:
            verdict = "undetermined"
    return {"d": d, "verdict": verdict, "evidence": evidence}
