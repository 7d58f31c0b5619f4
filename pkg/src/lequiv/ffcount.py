"""Brute-force point counts over finite fields.

This is the independent oracle for the class computations: a motivic class
evaluated at L = |F| must equal the number of F-points found here by direct
enumeration.  All ambient spaces are V = F^5 and Lambda^2 V; 2-forms are
stored as 5x5 alternating matrices with entries encoded as in
:mod:`lequiv.fields`.

Results over finite fields corroborate the characteristic-zero statements;
they are not proofs of them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .fields import FiniteField, field

N = 5
PAIRS = tuple(itertools.combinations(range(N), 2))       # Pluecker index order
QUADRUPLES = tuple(itertools.combinations(range(N), 4))
MAX_ENUMERATION = 2_000_000


class EnumerationLimitError(ValueError):
    """Raised when an enumeration would exceed the desk-scale guardrail."""


# --- scalar linear algebra over a field ---------------------------------

def rref(rows: Sequence[Sequence[int]], F: FiniteField) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    add, mul, neg, inv = F.add_l, F.mul_l, F.neg_l, F.inv_l
    m = [list(map(int, r)) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        s = inv[m[r][c]]
        m[r] = [mul[s][x] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = neg[m[i][c]]
                m[i] = [add[x][mul[f][y]] for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[int]], F: FiniteField) -> int:
    return len(rref(rows, F)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence[int]], ncols: int, F: FiniteField) -> list[list[int]]:
    """Basis of {x : rows @ x = 0} in F^ncols."""
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    r, piv = rref(rows, F)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(r, piv):
            v[p] = F.neg_l[row[f]]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n stored by its canonical reduced echelon basis."""
    basis: tuple[tuple[int, ...], ...]
    ambient_dim: int

    @classmethod
    def span(cls, rows: Iterable[Sequence[int]], ambient_dim: int,
             F: FiniteField) -> "Subspace":
        rows = [list(r) for r in rows]
        r, _ = rref(rows, F) if rows else ([], [])
        return cls(tuple(tuple(x) for x in r), ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.basis]


def intersection_dim(a: Subspace, b: Subspace, F: FiniteField) -> int:
    return a.dim + b.dim - rank(list(a.basis) + list(b.basis), F)


# --- 2-forms ------------------------------------------------------------

@dataclass(frozen=True)
class TwoForm:
    """Alternating bilinear form theta(u, w) = u^T M w on F^5."""
    matrix: tuple[tuple[int, ...], ...]
    field: FiniteField = dc_field(compare=False)

    def __post_init__(self):
        F = self.field
        m = tuple(tuple(int(x) % F.order for x in row) for row in self.matrix)
        n = len(m)
        if any(len(r) != n for r in m):
            raise ValueError("form matrix must be square")
        for i in range(n):
            if m[i][i]:
                raise ValueError("alternating form needs a zero diagonal")
            for j in range(i + 1, n):
                if m[j][i] != F.neg_l[m[i][j]]:
                    raise ValueError("form matrix is not skew-symmetric")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], F: FiniteField) -> "TwoForm":
        """Build from the upper-triangular entries in PAIRS order."""
        m = [[0] * N for _ in range(N)]
        for (i, j), c in zip(PAIRS, coeffs):
            m[i][j] = int(c)
            m[j][i] = F.neg_l[int(c)]
        return cls(tuple(map(tuple, m)), F)

    @classmethod
    def wedge(cls, u: Sequence[int], w: Sequence[int], F: FiniteField) -> "TwoForm":
        """The decomposable form u* ^ w* : (a, b) -> u(a) w(b) - u(b) w(a)."""
        mul, sub = F.mul_l, F.sub
        m = [[int(sub[mul[u[i]][w[j]], mul[u[j]][w[i]]]) for j in range(N)] for i in range(N)]
        return cls(tuple(map(tuple, m)), F)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.matrix[i][j] for i, j in PAIRS)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def evaluate(self, u: Sequence[int], w: Sequence[int]) -> int:
        F = self.field
        add, mul = F.add_l, F.mul_l
        acc = 0
        for i in range(N):
            if u[i]:
                for j in range(N):
                    if w[j] and self.matrix[i][j]:
                        acc = add[acc][mul[mul[u[i]][self.matrix[i][j]]][w[j]]]
        return acc

    def vanishes_on(self, U: Subspace) -> bool:
        return all(self.evaluate(a, b) == 0 for a in U.basis for b in U.basis)

    def rank(self) -> int:
        return rank([list(r) for r in self.matrix], self.field)

    def over(self, F: FiniteField) -> "TwoForm":
        """The same form viewed over an extension of its prime field."""
        if F.q != self.field.q or self.field.m != 1:
            raise ValueError("can only extend forms defined over the prime field")
        return TwoForm(self.matrix, F)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def form_kernel(theta: TwoForm) -> Subspace:
    F = theta.field
    basis = nullspace([list(r) for r in theta.matrix], N, F)
    return Subspace.span(basis, N, F)


def standard_form(rank_: int, F: FiniteField) -> TwoForm:
    """x1^x2 (rank 2) or x1^x2 + x3^x4 (rank 4)."""
    if rank_ not in (2, 4):
        raise ValueError("nonzero alternating forms on F^5 have rank 2 or 4")
    coeffs = [0] * len(PAIRS)
    coeffs[PAIRS.index((0, 1))] = 1
    if rank_ == 4:
        coeffs[PAIRS.index((2, 3))] = 1
    return TwoForm.from_coeffs(coeffs, F)


def random_invertible(F: FiniteField, rng: np.random.Generator, n: int = N) -> list[list[int]]:
    while True:
        m = rng.integers(0, F.order, size=(n, n)).tolist()
        if rank(m, F) == n:
            return m


def random_form(rank_: int, F: FiniteField, rng: np.random.Generator) -> TwoForm:
    """P^T S P for the standard form S of the given rank and a random invertible P."""
    s = standard_form(rank_, F).matrix
    p = random_invertible(F, rng)
    add, mul = F.add_l, F.mul_l

    def mm(a, b):
        out = [[0] * N for _ in range(N)]
        for i in range(N):
            for j in range(N):
                acc = 0
                for k in range(N):
                    acc = add[acc][mul[a[i][k]][b[k][j]]]
                out[i][j] = acc
        return out

    pt = [list(r) for r in zip(*p)]
    return TwoForm(tuple(map(tuple, mm(mm(pt, s), p))), F)


# --- enumeration --------------------------------------------------------

def pivot_patterns(k: int, n: int) -> list[tuple[int, ...]]:
    """Pivot column sets of k x n echelon forms, in colex order."""
    return sorted(itertools.combinations(range(n), k), key=lambda c: c[::-1])


def gaussian_binomial(k: int, n: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _check_size(count: int, what: str):
    if count > MAX_ENUMERATION:
        raise EnumerationLimitError(
            f"{what} has {count} points, above the enumeration limit {MAX_ENUMERATION}")


def echelon_forms(k: int, n: int, F: FiniteField,
                  patterns: "Sequence[tuple[int, ...]] | None" = None) -> np.ndarray:
    """All reduced echelon k x n matrices over F with the given pivot patterns.

    Returned as an array of shape (count, k, n); each subspace of dimension
    k appears exactly once when all patterns are used.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    patterns = pivot_patterns(k, n) if patterns is None else list(patterns)
    Q = F.order
    blocks = []
    for piv in patterns:
        free = [(i, j) for i, c in enumerate(piv) for j in range(c + 1, n) if j not in piv]
        count = Q ** len(free)
        _check_size(count, f"pivot pattern {piv}")
        block = np.zeros((count, k, n), dtype=np.int64)
        for i, c in enumerate(piv):
            block[:, i, c] = 1
        if free:
            vals = np.indices((Q,) * len(free)).reshape(len(free), -1)
            for (i, j), v in zip(free, vals):
                block[:, i, j] = v
        blocks.append(block)
    if not blocks:
        return np.zeros((0, k, n), dtype=np.int64)
    out = np.concatenate(blocks)
    _check_size(len(out), f"Gr({k},{n}) over F_{Q}")
    return out


def count_grassmannian(k: int, n: int, F: FiniteField,
                       patterns: "Sequence[tuple[int, ...]] | None" = None) -> int:
    """Number of k-dimensional subspaces of F^n, by enumerating echelon forms.

    ``patterns`` restricts to a subset of pivot patterns so counts can be
    partitioned across workers; the partial counts add up to the total.
    """
    _check_size(gaussian_binomial(k, n, F.order), f"Gr({k},{n}) over F_{F.order}")
    return len(echelon_forms(k, n, F, patterns))


def plucker(mats: np.ndarray, F: FiniteField) -> np.ndarray:
    """Pluecker coordinates p_ij = u_i w_j - u_j w_i of 2 x n matrices, shape (count, 10)."""
    u, w = mats[:, 0, :], mats[:, 1, :]
    cols = [F.sub[F.mul[u[:, i], w[:, j]], F.mul[u[:, j], w[:, i]]] for i, j in PAIRS]
    return np.stack(cols, axis=1)


@lru_cache(maxsize=16)
def _gr25(F: FiniteField) -> tuple[np.ndarray, np.ndarray]:
    mats = echelon_forms(2, N, F)
    return mats, plucker(mats, F)


def projective_points(r: int, F: FiniteField) -> np.ndarray:
    """Normalized representatives (first nonzero entry 1) of P^{r-1}(F), shape (count, r)."""
    Q = F.order
    total = (Q ** r - 1) // (Q - 1)
    _check_size(total, f"P^{r - 1} over F_{Q}")
    blocks = []
    for lead in range(r):
        rest = r - lead - 1
        block = np.zeros((Q ** rest, r), dtype=np.int64)
        block[:, lead] = 1
        if rest:
            block[:, lead + 1:] = np.indices((Q,) * rest).reshape(rest, -1).T
        blocks.append(block)
    return np.concatenate(blocks)


def _combine(coeff_arr: np.ndarray, basis: Sequence[Sequence[int]], F: FiniteField) -> np.ndarray:
    """Rows sum_i c_i basis[i] for every coefficient row c."""
    basis = np.asarray(basis, dtype=np.int64)
    out = np.zeros((len(coeff_arr), basis.shape[1]), dtype=np.int64)
    for i in range(basis.shape[0]):
        out = F.add[out, F.mul[coeff_arr[:, i:i + 1], basis[i][None, :]]]
    return out


def count_hyperplane_section(theta: TwoForm) -> int:
    """#{U in Gr(2,5)(F) : theta(U) = 0}."""
    if theta.is_zero():
        raise ValueError("the zero form does not define a hyperplane")
    F = theta.field
    _, P = _gr25(F)
    return int(np.count_nonzero(F.vdot(theta.coeffs, P) == 0))


# --- linear sections X_A and Y_A ----------------------------------------

def _as_forms(A: Sequence, F: FiniteField) -> list[TwoForm]:
    forms = []
    for a in A:
        if isinstance(a, TwoForm):
            forms.append(a if a.field == F else a.over(F))
        else:
            forms.append(TwoForm(tuple(tuple(int(x) % F.q for x in r) for r in a), F))
    return forms


def _check_space(forms: Sequence[TwoForm], F: FiniteField, dim: int = 5):
    if len(forms) != dim or rank([list(f.coeffs) for f in forms], F) != dim:
        raise ValueError(f"A must be spanned by {dim} linearly independent 2-forms")


def singular_witness(U: Subspace, forms: Sequence[TwoForm], F: FiniteField) -> "TwoForm | None":
    """A nonzero theta0 in span(forms) with U inside Ker(theta0), if one exists.

    Conditions theta0(u, e_l) = 0 for the two basis vectors u of U and all l
    are linear in the coefficients of theta0.
    """
    rows = []
    for u in U.basis:
        for l in range(N):
            e = [int(i == l) for i in range(N)]
            rows.append([f.evaluate(u, e) for f in forms])
    ker = nullspace(rows, len(forms), F)
    if not ker:
        return None
    c = ker[0]
    coeffs = [0] * len(PAIRS)
    for ci, f in zip(c, forms):
        for idx, x in enumerate(f.coeffs):
            coeffs[idx] = F.add_l[coeffs[idx]][F.mul_l[ci][x]]
    return TwoForm.from_coeffs(coeffs, F)


@dataclass
class SectionPoints:
    side: str
    field: FiniteField
    points: list
    degenerate: bool
    witnesses: list = dc_field(default_factory=list)

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {"side": self.side, "field": self.field.to_json(),
                "count": len(self.points), "degenerate": self.degenerate,
                "points": [p.to_json() for p in self.points],
                "witnesses": [{"U": u.to_json(), "theta0": t.to_json()}
                              for u, t in self.witnesses]}


def primal_points(forms: Sequence[TwoForm], F: FiniteField) -> list[Subspace]:
    """U in Gr(2,5)(F) killed by every form, found through P(A^perp).

    A point of P(A^perp) is a 2-vector p; it lies on the Grassmannian iff
    it is decomposable, i.e. all 4x4 Pfaffians p_ab p_cd - p_ac p_bd + p_ad p_bc
    vanish, and then U is the row space of p as a skew matrix.
    """
    base = forms[0].field if forms else F
    perp = nullspace([list(f.coeffs) for f in forms], len(PAIRS), base) if forms else \
        [[int(i == j) for j in range(len(PAIRS))] for i in range(len(PAIRS))]
    if not perp:
        return []
    coords = projective_points(len(perp), F)
    p = _combine(coords, perp, F)
    keep = _pfaffians_vanish(p, F)
    out = set()
    for row in p[keep]:
        m = [[0] * N for _ in range(N)]
        for (i, j), x in zip(PAIRS, row.tolist()):
            m[i][j] = x
            m[j][i] = F.neg_l[x]
        U = Subspace.span(m, N, F)
        assert U.dim == 2
        out.add(U)
    return sorted(out, key=lambda s: s.basis)


def primal_points_by_grassmannian(forms: Sequence[TwoForm], F: FiniteField) -> list[Subspace]:
    """Same set as :func:`primal_points`, by filtering all of Gr(2,5)(F)."""
    mats, P = _gr25(F)
    keep = np.ones(len(P), dtype=bool)
    for f in forms:
        keep &= F.vdot(f.coeffs, P) == 0
    return sorted((Subspace(tuple(map(tuple, m.tolist())), N) for m in mats[keep]),
                  key=lambda s: s.basis)


def _pfaffians_vanish(p: np.ndarray, F: FiniteField) -> np.ndarray:
    idx = {pair: c for c, pair in enumerate(PAIRS)}
    ok = np.ones(len(p), dtype=bool)
    for a, b, c, d in QUADRUPLES:
        t1 = F.mul[p[:, idx[a, b]], p[:, idx[c, d]]]
        t2 = F.mul[p[:, idx[a, c]], p[:, idx[b, d]]]
        t3 = F.mul[p[:, idx[a, d]], p[:, idx[b, c]]]
        ok &= F.add[F.sub[t1, t2], t3] == 0
    return ok


def dual_points(forms: Sequence[TwoForm], F: FiniteField) -> list[TwoForm]:
    """[theta] in P(A)(F) with a three-dimensional kernel (decomposable theta)."""
    coords = projective_points(len(forms), F)
    theta = _combine(coords, [f.coeffs for f in forms], F)
    keep = _pfaffians_vanish(theta, F)
    out = []
    for row in theta[keep]:
        t = TwoForm.from_coeffs(row.tolist(), F)
        assert form_kernel(t).dim == 3
        out.append(t)
    return out


def section_points(A: Sequence, F: FiniteField, side: str = "primal") -> SectionPoints:
    """Points of X = Gr(2,V) meet P(A^perp) (primal) or Y = Gr(2,V^dual) meet P(A) (dual).

    ``degenerate`` is set when some F-point of X is singular, i.e. lies in
    the kernel of a nonzero form of A.
    """
    forms = _as_forms(A, F)
    _check_space(forms, F)
    xs = primal_points(forms, F)
    witnesses = [(U, w) for U in xs if (w := singular_witness(U, forms, F)) is not None]
    if side == "primal":
        pts = xs
    elif side == "dual":
        pts = dual_points(forms, F)
    else:
        raise ValueError("side must be 'primal' or 'dual'")
    return SectionPoints(side, F, pts, bool(witnesses), witnesses)


# --- singularity screen and torsor check --------------------------------

MAX_SCREEN_ORDER = 16


@dataclass
class SingularityReport:
    q: int
    max_ext: int
    witnesses: dict = dc_field(default_factory=dict)   # m -> [(U, theta0)]

    @property
    def empty(self) -> bool:
        return not any(self.witnesses.values())

    @property
    def first_singular_degree(self) -> "int | None":
        return next((m for m in sorted(self.witnesses) if self.witnesses[m]), None)

    def summary(self) -> str:
        if self.empty:
            return (f"no singular point found over F_{self.q}^m for m <= {self.max_ext} "
                    "(this is a finite screen, not a smoothness proof)")
        return f"singular point found over F_{self.q}^{self.first_singular_degree}"

    def to_json(self) -> dict:
        return {"q": self.q, "max_ext": self.max_ext, "empty": self.empty,
                "summary": self.summary(),
                "witnesses": {str(m): [{"U": u.to_json(), "theta0": t.to_json()}
                                       for u, t in w] for m, w in sorted(self.witnesses.items())}}


def _prime_field_forms(A: Sequence, q: int) -> list[TwoForm]:
    F = field(q)
    forms = _as_forms(A, F)
    _check_space(forms, F)
    return forms


def detect_singular(A: Sequence, q: int, max_ext: int = 2) -> SingularityReport:
    """Search for singular points of X_A over F_{q^m}, m = 1..max_ext.

    A point U of X_A is singular exactly when U lies in the kernel of some
    nonzero form of A.  An empty report only covers the degrees screened.
    """
    if not 1 <= max_ext <= 4:
        raise ValueError("max_ext must be in 1..4")
    if q ** max_ext > MAX_SCREEN_ORDER:
        raise EnumerationLimitError(
            f"F_{q}^{max_ext} exceeds the screening limit of order {MAX_SCREEN_ORDER}")
    base = _prime_field_forms(A, q)
    report = SingularityReport(q, max_ext)
    for m in range(1, max_ext + 1):
        F = field(q, m)
        forms = [f.over(F) for f in base]
        found = []
        for U in primal_points(forms, F):
            w = singular_witness(U, forms, F)
            if w is not None:
                found.append((U, w))
        report.witnesses[m] = found
    return report


@dataclass
class TorsorReport:
    q: int
    count_X: int
    count_Y: int
    counts_equal: bool
    pairing_ok: bool
    reliable: bool
    screen: SingularityReport
    bad_pairs: list = dc_field(default_factory=list)
    seed: "int | None" = None

    def to_json(self) -> dict:
        return {"q": self.q, "seed": self.seed, "count_X": self.count_X,
                "count_Y": self.count_Y, "counts_equal": self.counts_equal,
                "pairing_ok": self.pairing_ok, "reliable": self.reliable,
                "screen": self.screen.summary(),
                "bad_pairs": [{"U": u.to_json(), "theta": t.to_json(), "dim": d}
                              for u, t, d in self.bad_pairs],
                "note": "finite-field corroboration of the duality, not a proof of it"}


def torsor_count_test(A: Sequence, q: int, seed: "int | None" = None) -> TorsorReport:
    """Count X_A and Y_A over F_q and check dim(U meet Ker theta) = 1 on all pairs."""
    forms = _prime_field_forms(A, q)
    F = field(q)
    screen = detect_singular(forms, q, max_ext=2 if q * q <= MAX_SCREEN_ORDER else 1)
    xs = primal_points(forms, F)
    ys = dual_points(forms, F)
    bad = []
    kernels = [form_kernel(t) for t in ys]
    for U in xs:
        for t, K in zip(ys, kernels):
            dim = intersection_dim(U, K, F)
            if dim != 1:
                bad.append((U, t, dim))
    return TorsorReport(q, len(xs), len(ys), len(xs) == len(ys), not bad,
                        screen.empty, screen=screen, bad_pairs=bad, seed=seed)


def random_form_space(F: FiniteField, rng: np.random.Generator, dim: int = 5) -> list[TwoForm]:
    """dim linearly independent uniformly random alternating forms."""
    while True:
        coeffs = rng.integers(0, F.order, size=(dim, len(PAIRS))).tolist()
        if rank(coeffs, F) == dim:
            return [TwoForm.from_coeffs(c, F) for c in coeffs]


def smooth_form_space(q: int, seed: int, max_ext: int = 2,
                      max_attempts: int = 200) -> tuple[list[TwoForm], int]:
    """First random A (from a generator seeded with ``seed``) passing the screen.

    Returns (A, attempts).  Deterministic for a given seed.
    """
    rng = np.random.default_rng(seed)
    F = field(q)
    for attempt in range(1, max_attempts + 1):
        A = random_form_space(F, rng)
        if detect_singular(A, q, max_ext).empty:
            return A, attempt
    raise RuntimeError(f"no form space passed the screen in {max_attempts} attempts")


# --- universal hyperplane section ---------------------------------------

def _span_forms(A: "Sequence | None", F: FiniteField) -> list[TwoForm]:
    if A is None:
        return [TwoForm.from_coeffs([int(i == j) for j in range(len(PAIRS))], F)
                for i in range(len(PAIRS))]
    forms = _as_forms(A, F)
    if forms and rank([list(f.coeffs) for f in forms], F) != len(forms):
        raise ValueError("forms spanning S must be linearly independent")
    return forms


def count_universal_hyperplane(F: FiniteField, A: "Sequence | None" = None,
                               method: str = "sections") -> int:
    """#{(U, [theta]) in Gr(2,5) x S : theta(U) = 0} with S = P(span A), or P^9 if A is None.

    method="sections" sums the enumerated hyperplane-section counts over
    the points of S; method="fibration" sums, over U, the size of the
    projective subspace of S vanishing on U (computed from a rank).
    """
    forms = _span_forms(A, F)
    r = len(forms)
    if r == 0:
        return 0
    if A is None and F.order > 3:
        raise EnumerationLimitError("the full P^9 family is limited to fields of order 2 or 3")
    _, P = _gr25(F)
    Q = F.order
    if method == "sections":
        thetas = _combine(projective_points(r, F), [f.coeffs for f in forms], F)
        total = 0
        for start in range(0, len(thetas), 512):
            chunk = thetas[start:start + 512]
            if F.m == 1:
                vals = (chunk @ P.T) % F.q
            else:
                vals = np.zeros((len(chunk), len(P)), dtype=np.int64)
                for c in range(len(PAIRS)):
                    vals = F.add[vals, F.mul[chunk[:, c:c + 1], P[None, :, c]]]
            total += int(np.count_nonzero(vals == 0))
        return total
    if method == "fibration":
        evals = np.stack([F.vdot(f.coeffs, P) for f in forms], axis=1)
        rk = np.any(evals != 0, axis=1).astype(np.int64)
        fiber = (Q ** (r - rk) - 1) // (Q - 1)
        return int(fiber.sum())
    raise ValueError("method must be 'sections' or 'fibration'")


def universal_hyperplane_report(F: FiniteField, A: "Sequence | None" = None) -> dict:
    """Both enumerations plus the two class formulas evaluated at L = |F|.

    With S = P(A) of dimension r - 1, the class is computed as
    [P^{r-1}] * smooth + L^4 [S meet Gr(2,V^dual)] (fibering over S) and as
    [Gr(2,5)] [P^{r-2}] + L^{r-1} [X_A] (fibering over Gr(2,5)).
    """
    from .motivic import (L, class_grassmannian, class_projective_space,
                          class_universal_hyperplane)

    forms = _span_forms(A, F)
    r = len(forms)
    Q = F.order
    by_sections = count_universal_hyperplane(F, A, "sections")
    by_fibration = count_universal_hyperplane(F, A, "fibration")
    out = {"field": F.to_json(), "dim_S": r - 1,
           "sections_count": by_sections, "fibration_count": by_fibration}
    if r == 0:
        out.update(formula_over_S=0, formula_over_Gr=0, agree=by_sections == by_fibration == 0)
        return out
    if A is None:
        y_val = class_grassmannian(2, 5).evaluate(Q)
        x_val = 0
    else:
        y_val = len(dual_points(forms, F)) if r else 0
        x_val = len(primal_points(forms, F))
    over_s = class_universal_hyperplane(class_projective_space(r - 1), 0).evaluate(Q) \
        + L.evaluate(Q) ** 4 * y_val
    over_gr = (class_grassmannian(2, 5) * class_projective_space(r - 2)).evaluate(Q) \
        + Q ** (r - 1) * x_val if r >= 2 else None
    out.update(count_S_cap_dual_grassmannian=y_val, count_X=x_val,
               scalar_over_S=class_universal_hyperplane(class_projective_space(r - 1), 0)
               .evaluate(Q),
               formula_over_S=over_s, formula_over_Gr=over_gr,
               agree=len({by_sections, by_fibration, over_s, over_gr}) == 1)
    return out
