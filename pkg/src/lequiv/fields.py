"""Finite fields F_{q^m} for small q and m, with lookup tables.

An element is encoded as the integer sum(c_i * q**i) of its coefficients in
the power basis of F_q[x]/(modulus).  Constants 0..q-1 therefore encode the
prime subfield, so matrices over F_q can be used unchanged over any
extension.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np

MAX_PRIME = 7
MAX_DEGREE = 4


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


def _poly_mod(a: list[int], m: tuple[int, ...], q: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m (coefficients low -> high)."""
    a = [x % q for x in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % q
    return a[:dm] + [0] * max(0, dm - len(a))


def monic_polynomials(q: int, deg: int):
    """Monic polynomials of the given degree, in increasing order of encoding."""
    for low in range(q ** deg):
        coeffs = [(low // q ** i) % q for i in range(deg)]
        yield tuple(coeffs) + (1,)


def is_irreducible(poly: tuple[int, ...], q: int) -> bool:
    """Exhaustive check: no monic factor of degree 1 .. deg//2."""
    deg = len(poly) - 1
    for k in range(1, deg // 2 + 1):
        for f in monic_polynomials(q, k):
            if not any(_poly_mod(list(poly), f, q)):
                return False
    return True


@lru_cache(maxsize=None)
def first_irreducible(q: int, m: int) -> tuple[int, ...]:
    for f in monic_polynomials(q, m):
        if is_irreducible(f, q):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")


class FiniteField:
    """The field with q**m elements, q prime."""

    def __init__(self, q: int, m: int = 1):
        if not _is_prime(q) or q > MAX_PRIME:
            raise ValueError(f"q must be a prime <= {MAX_PRIME}, got {q}")
        if not 1 <= m <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}, got {m}")
        self.q, self.m = q, m
        self.order = q ** m
        self.modulus = first_irreducible(q, m)
        if not is_irreducible(self.modulus, q):
            raise AssertionError("modulus is reducible")
        n = self.order
        powers = q ** np.arange(m, dtype=np.int64)
        digits = (np.arange(n, dtype=np.int64)[:, None] // powers) % q   # (n, m)
        add = (((digits[:, None, :] + digits[None, :, :]) % q) @ powers)
        small = digits.astype(np.int16)
        prod = np.zeros((n, n, 2 * m - 1), dtype=np.int16)
        for i in range(m):
            for j in range(m):
                prod[:, :, i + j] += small[:, None, i] * small[None, :, j]
        prod %= q
        mod = np.array(self.modulus, dtype=np.int16)
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[:, :, top].copy()
            prod[:, :, top - m:top + 1] -= c[:, :, None] * mod[None, None, :]
            prod %= q
        mul = prod[:, :, :m].astype(np.int64) @ powers
        self.add, self.mul = add, mul
        self.neg = ((-digits) % q) @ powers
        self.sub = add[:, self.neg]
        inv = np.argmax(mul == 1, axis=1)
        inv[0] = 0
        self.inv = inv

    # python-list copies for scalar code paths
    @cached_property
    def add_l(self) -> list:
        return self.add.tolist()

    @cached_property
    def mul_l(self) -> list:
        return self.mul.tolist()

    @cached_property
    def neg_l(self) -> list:
        return self.neg.tolist()

    @cached_property
    def inv_l(self) -> list:
        return self.inv.tolist()

    @classmethod
    def of_order(cls, order: int) -> "FiniteField":
        return field_of_order(order)

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def __repr__(self) -> str:
        return f"FiniteField({self.q}, {self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.q, self.m) == (other.q, other.m)

    def __hash__(self) -> int:
        return hash((self.q, self.m))

    def to_json(self) -> dict:
        return {"q": self.q, "m": self.m, "order": self.order, "modulus": list(self.modulus)}

    # vectorized helpers -------------------------------------------------
    def vdot(self, coeffs, arr: np.ndarray) -> np.ndarray:
        """sum_c coeffs[c] * arr[..., c] in the field, over the last axis."""
        if self.m == 1:
            return (arr @ np.asarray(coeffs, dtype=np.int64)) % self.q
        acc = np.zeros(arr.shape[:-1], dtype=np.int64)
        for c, a in enumerate(coeffs):
            if a:
                acc = self.add[acc, self.mul[a, arr[..., c]]]
        return acc


@lru_cache(maxsize=None)
def field(q: int, m: int = 1) -> FiniteField:
    return FiniteField(q, m)


def field_of_order(order: int) -> FiniteField:
    for q in range(2, MAX_PRIME + 1):
        if _is_prime(q):
            for m in range(1, MAX_DEGREE + 1):
                if q ** m == order:
                    return field(q, m)
    raise ValueError(f"no supported field of order {order}")
