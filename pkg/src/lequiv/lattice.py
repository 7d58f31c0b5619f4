"""Even integral lattices of rank 2 (and the rank-4 extensions built on them).

The central family is Lambda(t, d) with Gram matrix ((2d, t), (t, 0)) in the
basis (H, F).  Every even rank-2 lattice of determinant -t^2 is of this form;
isomorphism classes are decided by the canonical-residue invariant of
:func:`isotropic_residues`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import intmat


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(rows)
        if n not in (2, 4) or any(len(r) != n for r in rows):
            raise LatticeError("Gram matrix must be square of rank 2 or 4")
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(n)):
            raise LatticeError("Gram matrix is not symmetric")
        if any(rows[i][i] % 2 for i in range(n)):
            raise LatticeError("lattice is not even")
        if intmat.det(rows) == 0:
            raise LatticeError("Gram matrix is degenerate")
        object.__setattr__(self, "entries", rows)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @cached_property
    def det(self) -> int:
        return intmat.det(self.entries)

    def matrix(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        return intmat.bilinear(self.entries, u, v)

    def norm(self, v: Sequence[int]) -> int:
        return self.pair(v, v)

    def direct_sum(self, other: "GramMatrix") -> "GramMatrix":
        a, b = self.rank, other.rank
        rows = [list(r) + [0] * b for r in self.entries]
        rows += [[0] * a + list(r) for r in other.entries]
        return GramMatrix(rows)

    def to_json(self) -> list[list[int]]:
        return self.matrix()

    def __str__(self) -> str:
        return "(" + ", ".join("(" + ", ".join(map(str, r)) + ")" for r in self.entries) + ")"


def lambda_gram(t: int, d: int) -> GramMatrix:
    if t <= 0:
        raise LatticeError(f"t must be positive, got {t}")
    return GramMatrix(((2 * d, t), (t, 0)))


HYPERBOLIC_PLANE = GramMatrix(((0, 1), (1, 0)))


def signature(g: GramMatrix) -> tuple[int, int]:
    """(positive, negative) inertia by exact symmetric elimination over Q."""
    m = [[Fraction(x) for x in row] for row in g.entries]
    n = len(m)
    pos = neg = 0
    for k in range(n):
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if j is not None:
                m[k], m[j] = m[j], m[k]
                for row in m:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if j is None:
                    raise LatticeError("Gram matrix is degenerate")
                # e_k -> e_k + e_j makes the diagonal entry 2 m[k][j] != 0
                for row in m:
                    row[k] += row[j]
                m[k] = [a + b for a, b in zip(m[k], m[j])]
        p = m[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] -= m[i][k] * m[k][j] / p
        for i in range(k + 1, n):
            m[k][i] = m[i][k] = Fraction(0)
    return pos, neg


# --- discriminant forms -------------------------------------------------

def _mod(x: Fraction, m: int) -> Fraction:
    return x - m * math.floor(x / m)


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """Discriminant group with its Q/2Z-valued quadratic form.

    ``gram_q[i][i]`` is q(g_i) mod 2 and ``gram_q[i][j]`` is b(g_i, g_j) mod 1
    on the chosen generators ``g_i`` of orders ``invariant_factors[i]``.
    """
    invariant_factors: tuple[int, ...]
    gram_q: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    def elements(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*(range(f) for f in self.invariant_factors))

    def b(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        n = len(self.invariant_factors)
        s = sum(x[i] * y[j] * self.gram_q[i][j] for i in range(n) for j in range(n))
        return _mod(s, 1)

    def q(self, x: Sequence[int]) -> Fraction:
        n = len(self.invariant_factors)
        s = sum(x[i] * x[i] * self.gram_q[i][i] for i in range(n))
        s += sum(2 * x[i] * x[j] * self.gram_q[i][j]
                 for i in range(n) for j in range(i + 1, n))
        return _mod(s, 2)

    def add(self, x, y):
        return tuple((a + b) % f for a, b, f in zip(x, y, self.invariant_factors))

    def scale(self, k: int, x):
        return tuple((k * a) % f for a, f in zip(x, self.invariant_factors))

    def element_order(self, x) -> int:
        return math.lcm(*(f // math.gcd(a, f) for a, f in zip(x, self.invariant_factors))) \
            if x else 1

    def to_json(self) -> dict:
        return {"factors": list(self.invariant_factors),
                "q": [[str(v) for v in row] for row in self.gram_q]}


def discriminant_form(g: GramMatrix) -> FiniteQuadraticForm:
    return discriminant_data(g)[0]


def discriminant_data(g: GramMatrix):
    """Discriminant form plus the rational generator vectors used for it."""
    d, _, v = intmat.smith_normal_form(g.matrix())
    n = g.rank
    gens, factors = [], []
    for i in range(n):
        if d[i][i] == 0:
            raise LatticeError("Gram matrix is degenerate")
        if d[i][i] > 1:
            gens.append([Fraction(v[r][i], d[i][i]) for r in range(n)])
            factors.append(d[i][i])
    gq = []
    for i, gi in enumerate(gens):
        row = []
        for j, gj in enumerate(gens):
            val = intmat.bilinear(g.entries, gi, gj)
            row.append(_mod(val, 2) if i == j else _mod(val, 1))
        gq.append(tuple(row))
    return FiniteQuadraticForm(tuple(factors), tuple(gq)), gens


def forms_isomorphic(a: FiniteQuadraticForm, b: FiniteQuadraticForm) -> bool:
    """Exhaustive search for a group isomorphism carrying q_a to q_b."""
    if sorted(a.invariant_factors) != sorted(b.invariant_factors):
        return False
    n = len(a.invariant_factors)
    if n == 0:
        return True
    els = list(b.elements())
    by_q: dict = {}
    for x in els:
        by_q.setdefault((b.element_order(x), b.q(x)), []).append(x)
    gens = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    cands = [by_q.get((a.invariant_factors[i], a.q(gens[i])), []) for i in range(n)]

    def search(i, images):
        if i == n:
            seen = set()
            for coeffs in a.elements():
                img = tuple(0 for _ in b.invariant_factors)
                for c, im in zip(coeffs, images):
                    img = b.add(img, b.scale(c, im))
                seen.add(img)
            return len(seen) == b.order
        for x in cands[i]:
            if all(b.b(images[j], x) == a.b(gens[j], gens[i]) for j in range(i)):
                if search(i + 1, images + [x]):
                    return True
        return False

    return search(0, [])


# --- rank-2 classification ---------------------------------------------

def _t_of(g: GramMatrix) -> int:
    if g.rank != 2:
        raise LatticeError("expected a rank-2 lattice")
    t = math.isqrt(-g.det) if g.det < 0 else -1
    if t <= 0 or t * t != -g.det:
        raise LatticeError(f"determinant {g.det} is not minus a square")
    return t


def isotropic_lines(g: GramMatrix) -> list[tuple[int, int]]:
    """The two primitive isotropic vectors (up to sign) of a rank-2 lattice of det -t^2."""
    t = _t_of(g)
    (a, b), (_, c) = g.entries
    if a == 0:
        roots = [(1, 0), (c, -2 * b)]
    else:
        # a x^2 + 2 b x y + c y^2 = 0 has x/y = (-b +- t)/a
        roots = [(-b + t, a), (-b - t, a)]
    lines = sorted({intmat.normalize_sign(intmat.primitive(r)) for r in roots})
    assert len(lines) == 2, lines
    for v in lines:
        assert g.norm(v) == 0, (g, v)
    return lines


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def isotropic_residues(g: GramMatrix) -> list[tuple[tuple[int, int], int]]:
    """For each isotropic line e, the residue d' mod t with (f, e) spanning Lambda(t, d').

    f is any lattice vector with e.f = t; replacing f by f + m e changes
    f^2/2 by m t, so d' = f^2/2 mod t is an invariant of the line.
    """
    t = _t_of(g)
    out = []
    for e in isotropic_lines(g):
        w = intmat.matvec(g.entries, e)
        h, x, y = _ext_gcd(w[0], w[1])
        assert h == t, (g, e, h)
        f = (x, y)
        assert g.pair(e, f) == t
        out.append((e, (g.norm(f) // 2) % t))
    return out


def canonical_residues(g: GramMatrix) -> tuple[int, int]:
    return tuple(sorted(r for _, r in isotropic_residues(g)))


def classification_validated(t: int) -> bool:
    """Whether the reference classification results cover this t (odd primes)."""
    return t > 2 and all(t % p for p in range(2, math.isqrt(t) + 1))


def is_isomorphic(g1: GramMatrix, g2: GramMatrix) -> bool:
    if g1.rank != 2 or g2.rank != 2 or g1.det != g2.det or g1.det >= 0:
        return False
    if signature(g1) != signature(g2):
        return False
    return bool(set(canonical_residues(g1)) & set(canonical_residues(g2)))


def explicit_isomorphism(g1: GramMatrix, g2: GramMatrix) -> "list[list[int]] | None":
    """Integral M with M^T g1 M = g2 built from matching residues, or None."""
    if not is_isomorphic(g1, g2):
        return None
    t = _t_of(g1)

    def adapted(g):
        res = {}
        for e, r in isotropic_residues(g):
            w = intmat.matvec(g.entries, e)
            _, x, y = _ext_gcd(w[0], w[1])
            res.setdefault(r, ((x, y), e))
        return res

    r1, r2 = adapted(g1), adapted(g2)
    r = next(iter(set(r1) & set(r2)))
    (f1, e1), (f2, e2) = r1[r], r2[r]
    # shift f so that f^2 = 2r exactly in both bases
    f1 = tuple(a - ((g1.norm(f1) // 2 - r) // t) * b for a, b in zip(f1, e1))
    f2 = tuple(a - ((g2.norm(f2) // 2 - r) // t) * b for a, b in zip(f2, e2))
    b1 = [[f1[0], e1[0]], [f1[1], e1[1]]]
    b2 = [[f2[0], e2[0]], [f2[1], e2[1]]]
    m = intmat.matmul(b1, intmat.integer_inverse(b2))
    assert intmat.congruent(g1.entries, m) == g2.matrix()
    return m


def isometry_group(g: GramMatrix) -> list[list[list[int]]]:
    """All isometries of a rank-2 lattice with det -t^2.

    An isometry permutes the two isotropic lines, possibly with a sign, so it
    is determined by where it sends the pair (e1, e2); each of the eight
    candidates is kept if it is integral and preserves the form.
    """
    _t_of(g)
    e1, e2 = isotropic_lines(g)
    src = [[e1[0], e2[0]], [e1[1], e2[1]]]
    src_inv = intmat.inverse(src)
    out = []
    for (a, b), s1, s2 in itertools.product([(e1, e2), (e2, e1)], (1, -1), (1, -1)):
        dst = [[s1 * a[0], s2 * b[0]], [s1 * a[1], s2 * b[1]]]
        m = intmat.matmul(dst, src_inv)
        if any(x.denominator != 1 for row in m for x in row):
            continue
        m = [[int(x) for x in row] for row in m]
        if intmat.congruent(g.entries, m) == g.matrix():
            out.append(m)
    return sorted(out)


def same_genus(g1: GramMatrix, g2: GramMatrix) -> bool:
    if g1.rank != g2.rank or signature(g1) != signature(g2):
        return False
    return forms_isomorphic(discriminant_form(g1), discriminant_form(g2))


# --- brute-force oracles (used by tests, bounded, not proofs) -----------

def brute_force_isometries(g1: GramMatrix, g2: GramMatrix, bound: int = 25):
    """All M with entries in [-bound, bound], det +-1 and M^T g1 M = g2 (rank 2)."""
    rng = range(-bound, bound + 1)
    (a, b), (_, c) = g2.entries
    col0, col1 = [], []
    for v in itertools.product(rng, rng):
        n = g1.norm(v)
        if n == a:
            col0.append(v)
        if n == c:
            col1.append(v)
    out = []
    for u in col0:
        gu = intmat.matvec(g1.entries, u)
        for v in col1:
            if gu[0] * v[0] + gu[1] * v[1] == b and abs(u[0] * v[1] - u[1] * v[0]) == 1:
                out.append([[u[0], v[0]], [u[1], v[1]]])
    return out


def brute_force_isomorphic(g1: GramMatrix, g2: GramMatrix, bound: int = 25) -> bool:
    return bool(brute_force_isometries(g1, g2, bound))
