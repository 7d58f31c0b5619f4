"""Small exact integer matrix routines.

Matrices are plain lists of rows of Python ints. Everything here is exact;
sizes in this package never exceed 4x4, so no attempt is made at
coefficient-growth control beyond the usual Euclidean reductions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return [[int(x) for x in row] for row in rows]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def bilinear(g: Sequence[Sequence], u: Sequence, v: Sequence):
    """Return u^T g v."""
    return sum(ui * x for ui, x in zip(u, matvec(g, v)))


def congruent(g: Sequence[Sequence], m: Sequence[Sequence]) -> list[list]:
    """Return m^T g m."""
    return matmul(transpose(m), matmul(g, m))


def det(a: Sequence[Sequence]) -> int:
    """Exact determinant via fraction-free elimination (Bareiss)."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact rational inverse by Gauss-Jordan; raises on singular input."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ValueError("matrix is singular")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def integer_inverse(a: Sequence[Sequence[int]]) -> Matrix:
    """Inverse of a unimodular matrix, checked to be integral."""
    inv = inverse(a)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with U @ a @ V == D diagonal, U and V unimodular.

    Diagonal entries are nonnegative and each divides the next.
    """
    d = as_matrix(a)
    rows, cols = len(d), len(d[0]) if d else 0
    u, v = identity(rows), identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for m in (d, v):
            for row in m:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):  # row dst += f * row src
        d[dst] = [x + f * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for m in (d, v):
            for row in m:
                row[dst] += f * row[src]

    for s in range(min(rows, cols)):
        while True:
            entries = [(abs(d[i][j]), i, j) for i in range(s, rows)
                       for j in range(s, cols) if d[i][j] != 0]
            if not entries:
                break
            _, i, j = min(entries)
            swap_rows(s, i)
            swap_cols(s, j)
            p = d[s][s]
            done = True
            for i in range(s + 1, rows):
                q = d[i][s] // p
                if q:
                    add_row(s, i, -q)
                if d[i][s]:
                    done = False
            for j in range(s + 1, cols):
                q = d[s][j] // p
                if q:
                    add_col(s, j, -q)
                if d[s][j]:
                    done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(s + 1, rows) for j in range(s + 1, cols)
                        if d[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], s, 1)
        if s < rows and s < cols and d[s][s] < 0:
            d[s] = [-x for x in d[s]]
            u[s] = [-x for x in u[s]]
    return d, u, v


def invariant_factors(a: Sequence[Sequence[int]]) -> list[int]:
    d, _, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0])))]


def integer_kernel(a: Sequence[Sequence[int]]) -> Matrix:
    """Basis of {x in Z^n : a x = 0}, returned as the columns of a matrix.

    The basis is saturated: it spans the full integral kernel, not a
    finite-index sublattice of it.
    """
    d, _, v = smith_normal_form(a)
    n = len(v)
    r = sum(1 for i in range(min(len(d), n)) if d[i][i] != 0)
    return [row[r:] for row in v]


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in vec)


def normalize_sign(vec: Sequence[int]) -> tuple[int, ...]:
    """Flip sign so the first nonzero coordinate is positive."""
    for x in vec:
        if x:
            return tuple(vec) if x > 0 else tuple(-y for y in vec)
    return tuple(vec)


def complete_to_basis(vec: Sequence[int]) -> Matrix:
    """Unimodular matrix whose first column is the primitive vector ``vec``."""
    vec = list(vec)
    if primitive(vec) != tuple(vec) and primitive(vec) != tuple(-x for x in vec):
        raise ValueError(f"{vec} is not primitive")
    _, u, v = smith_normal_form([[x] for x in vec])
    basis = integer_inverse(u)
    # u @ vec * v00 == e1, so column 0 of u^-1 is v00 * vec
    if v[0][0] == -1:
        for row in basis:
            row[0] = -row[0]
    assert [row[0] for row in basis] == vec, (basis, vec)
    return basis
