"""Schubert cycles on Gr(k, n) and multiplication by the divisor class.

Only the Pieri rule for sigma_1 is implemented; degrees are obtained by
iterating it until the point class is reached.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    k: int
    n: int

    def __post_init__(self):
        parts = [int(p) for p in self.parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError("partition entries must be nonnegative")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition {tuple(parts)} is not weakly decreasing")
        if not 0 <= self.k <= self.n:
            raise ValueError("need 0 <= k <= n")
        if len(parts) > self.k or (parts and parts[0] > self.n - self.k):
            raise ValueError(f"partition {tuple(parts)} does not fit the "
                             f"{self.k}x{self.n - self.k} box")
        object.__setattr__(self, "parts", tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self) -> tuple[int, ...]:
        return self.parts + (0,) * (self.k - len(self.parts))

    def transpose(self) -> "Partition":
        conj = tuple(sum(1 for p in self.parts if p > i) for i in range(self.n - self.k))
        return Partition(conj, self.n - self.k, self.n)

    def addable(self) -> list["Partition"]:
        """Partitions obtained by adding one box inside the box."""
        rows = list(self.padded())
        out = []
        for i in range(self.k):
            if rows[i] < self.n - self.k and (i == 0 or rows[i - 1] > rows[i]):
                rows[i] += 1
                out.append(Partition(tuple(rows), self.k, self.n))
                rows[i] -= 1
        return out

    def to_json(self) -> list[int]:
        return list(self.parts)


class SchubertCycle:
    """Integer combination of Schubert classes on a fixed Gr(k, n)."""

    def __init__(self, k: int, n: int, terms: "Mapping[Sequence[int], int] | None" = None):
        self.k, self.n = k, n
        acc: Counter = Counter()
        for parts, c in (terms or {}).items():
            acc[Partition(tuple(parts), k, n).parts] += c
        self.terms = {p: c for p, c in acc.items() if c}

    @classmethod
    def schubert_class(cls, parts: Sequence[int], k: int, n: int) -> "SchubertCycle":
        return cls(k, n, {tuple(parts): 1})

    def _check(self, other: "SchubertCycle"):
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError("cycles live on different Grassmannians")

    def __add__(self, other: "SchubertCycle") -> "SchubertCycle":
        self._check(other)
        terms = Counter(self.terms)
        terms.update(other.terms)
        return SchubertCycle(self.k, self.n, terms)

    def __rmul__(self, c: int) -> "SchubertCycle":
        return SchubertCycle(self.k, self.n, {p: c * v for p, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, SchubertCycle) and (self.k, self.n) == (other.k, other.n)
                and self.terms == other.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"0 on Gr({self.k},{self.n})"
        body = " + ".join(f"{c}*s{list(p)}" for p, c in sorted(self.terms.items()))
        return f"{body} on Gr({self.k},{self.n})"

    def coefficient(self, parts: Iterable[int]) -> int:
        return self.terms.get(Partition(tuple(parts), self.k, self.n).parts, 0)

    def to_json(self) -> list[dict]:
        return [{"partition": list(p), "coeff": c} for p, c in sorted(self.terms.items())]


def pieri_multiply(c: SchubertCycle) -> SchubertCycle:
    """Multiply by sigma_1: every sigma_lambda becomes the sum over one-box additions."""
    out: Counter = Counter()
    for parts, coeff in c.terms.items():
        for mu in Partition(parts, c.k, c.n).addable():
            out[mu.parts] += coeff
    return SchubertCycle(c.k, c.n, out)


def degree(lam: "Partition | Sequence[int]", k: int, n: int) -> int:
    """Coefficient of the point class in sigma_lambda * sigma_1^(k(n-k) - |lambda|)."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam), k, n)
    cycle = SchubertCycle(k, n, {lam.parts: 1})
    for _ in range(k * (n - k) - lam.size):
        cycle = pieri_multiply(cycle)
    return cycle.coefficient((n - k,) * k)
