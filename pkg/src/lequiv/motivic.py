"""Class computations in the image Z[L] of the Grothendieck ring.

A :class:`MotivicExpression` is an element of the free Z[L]-module with
basis 1, X, Y, where X and Y are formal curve classes.  Multiplication is
only defined when at least one factor has no X/Y part, so products such as
X*Y are rejected instead of silently extending the algebra.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

Poly = tuple[int, ...]


def _norm(coeffs: Iterable[int]) -> Poly:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _norm((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _norm(out)


def _pscale(a: Poly, k: int) -> Poly:
    return _norm(k * x for x in a)


def _peval(a: Poly, q: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * q + c
    return acc


def _pstr(a: Poly) -> str:
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        mono = "" if i == 0 else ("L" if i == 1 else f"L^{i}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{'*' + mono if mono else ''}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


class SymbolProductError(ArithmeticError):
    """Raised when two expressions with X/Y parts are multiplied."""


@dataclass(frozen=True)
class MotivicExpression:
    scalar: Poly = ()
    x: Poly = ()
    y: Poly = ()

    def __post_init__(self):
        object.__setattr__(self, "scalar", _norm(self.scalar))
        object.__setattr__(self, "x", _norm(self.x))
        object.__setattr__(self, "y", _norm(self.y))

    # constructors
    @classmethod
    def const(cls, c: int) -> "MotivicExpression":
        return cls((c,))

    @classmethod
    def poly(cls, coeffs: Sequence[int]) -> "MotivicExpression":
        return cls(tuple(coeffs))

    @classmethod
    def lefschetz(cls, power: int = 1) -> "MotivicExpression":
        return cls((0,) * power + (1,))

    @classmethod
    def symbol_x(cls) -> "MotivicExpression":
        return cls((), (1,), ())

    @classmethod
    def symbol_y(cls) -> "MotivicExpression":
        return cls((), (), (1,))

    # predicates
    def is_zero(self) -> bool:
        return not (self.scalar or self.x or self.y)

    def is_scalar(self) -> bool:
        return not (self.x or self.y)

    # arithmetic
    def __add__(self, other: "Expr") -> "MotivicExpression":
        other = _coerce(other)
        return MotivicExpression(_padd(self.scalar, other.scalar),
                                 _padd(self.x, other.x), _padd(self.y, other.y))

    __radd__ = __add__

    def __neg__(self) -> "MotivicExpression":
        return MotivicExpression(_pscale(self.scalar, -1), _pscale(self.x, -1),
                                 _pscale(self.y, -1))

    def __sub__(self, other: "Expr") -> "MotivicExpression":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Expr") -> "MotivicExpression":
        return _coerce(other) - self

    def __mul__(self, other: "Expr") -> "MotivicExpression":
        other = _coerce(other)
        if self.is_scalar():
            s, e = self.scalar, other
        elif other.is_scalar():
            s, e = other.scalar, self
        else:
            raise SymbolProductError(
                "products of formal curve symbols are not defined")
        return MotivicExpression(_pmul(s, e.scalar), _pmul(s, e.x), _pmul(s, e.y))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MotivicExpression":
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = MotivicExpression.const(1)
        for _ in range(n):
            out = out * self
        return out

    # evaluation
    def evaluate(self, q: int, x: "int | None" = None, y: "int | None" = None) -> int:
        """Evaluate at L = q, substituting integers for the symbols.

        Raises if a symbol with nonzero coefficient has no value.
        """
        total = _peval(self.scalar, q)
        for name, part, val in (("X", self.x, x), ("Y", self.y, y)):
            if part:
                if val is None:
                    raise ValueError(f"no value given for symbol {name}")
                total += _peval(part, q) * val
        return total

    def substitute(self, x: "Expr | None" = None,
                   y: "Expr | None" = None) -> "MotivicExpression":
        """Replace X and/or Y by scalar-only expressions."""
        out = MotivicExpression(self.scalar,
                                () if x is not None else self.x,
                                () if y is not None else self.y)
        for part, val in ((self.x, x), (self.y, y)):
            if val is not None:
                val = _coerce(val)
                if not val.is_scalar():
                    raise SymbolProductError("symbols may only be replaced by scalars")
                out = out + MotivicExpression(part) * val
        return out

    def degree(self) -> int:
        return max(len(self.scalar), len(self.x), len(self.y)) - 1

    # serialization
    def to_json(self) -> dict:
        return {"scalar": list(self.scalar), "x": list(self.x), "y": list(self.y)}

    @classmethod
    def from_json(cls, obj: "dict | str") -> "MotivicExpression":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(obj.get("scalar", ())), tuple(obj.get("x", ())),
                   tuple(obj.get("y", ())))

    def __str__(self) -> str:
        parts = []
        if self.scalar or self.is_zero():
            parts.append(_pstr(self.scalar))
        for name, p in (("X", self.x), ("Y", self.y)):
            if p:
                parts.append(f"({_pstr(p)})*{name}")
        return " + ".join(parts)


Expr = Union[MotivicExpression, int]


def _coerce(e: Expr) -> MotivicExpression:
    if isinstance(e, MotivicExpression):
        return e
    if isinstance(e, int):
        return MotivicExpression.const(e)
    raise TypeError(f"cannot interpret {e!r} as a motivic expression")


L = MotivicExpression.lefschetz()
X = MotivicExpression.symbol_x()
Y = MotivicExpression.symbol_y()

SMOOTH_SECTION = MotivicExpression((1, 1, 2, 2, 1, 1))
SINGULAR_SECTION = MotivicExpression((1, 1, 2, 2, 2, 1))


def class_projective_space(n: int) -> MotivicExpression:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return MotivicExpression((1,) * (n + 1))


def box_partitions(k: int, width: int):
    """Weakly decreasing k-tuples with entries in [0, width]."""
    for parts in itertools.combinations_with_replacement(range(width, -1, -1), k):
        yield parts


def class_grassmannian(k: int, n: int) -> MotivicExpression:
    """Class of Gr(k, n) from its Schubert cell decomposition.

    Cells are indexed by partitions in the k x (n-k) box; the cell of
    lambda is an affine space of dimension |box| - |lambda|.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    top = k * (n - k)
    coeffs = [0] * (top + 1)
    for lam in box_partitions(k, n - k):
        coeffs[top - sum(lam)] += 1
    return MotivicExpression(tuple(coeffs))


def class_hyperplane_section(kernel_dim: int) -> MotivicExpression:
    """Class of Gr(2,5) cut by the hyperplane of a nonzero 2-form.

    The hyperplane section of a form with one-dimensional kernel is smooth;
    a three-dimensional kernel means the form is decomposable and the
    section is singular along a plane.  Both are assembled from the
    stratification by the relative position of U and the kernel K:
    smooth  = [P^3] + ([P^2] - [P^1]) * [LG(2,4)],
    singular = [P^2] + ([P^3] - [P^1]) * [P^2].
    """
    P = class_projective_space
    if kernel_dim == 1:
        lg24 = P(3)  # a smooth 3-dimensional quadric
        return P(3) + (P(2) - P(1)) * lg24
    if kernel_dim == 3:
        return P(2) + (P(3) - P(1)) * P(2)
    raise ValueError("a nonzero 2-form on a 5-space has kernel of dimension 1 or 3, "
                     f"not {kernel_dim}")


def class_universal_hyperplane(s_class: Expr, s_cap_dual_class: Expr) -> MotivicExpression:
    """Class of {(U, theta) in Gr(2,5) x S : theta(U) = 0}.

    ``s_class`` is [S] and ``s_cap_dual_class`` is [S meet Gr(2, V^dual)].
    """
    return _coerce(s_class) * SMOOTH_SECTION + L ** 4 * _coerce(s_cap_dual_class)


@dataclass(frozen=True)
class DualityReport:
    lhs: MotivicExpression
    rhs: MotivicExpression
    difference: MotivicExpression
    identity_holds: bool

    @property
    def shared_scalar(self) -> MotivicExpression:
        return MotivicExpression(self.lhs.scalar)

    def to_json(self) -> dict:
        return {"lhs": self.lhs.to_json(), "rhs": self.rhs.to_json(),
                "difference": self.difference.to_json(),
                "identity_holds": self.identity_holds}


def verify_quintic_duality() -> DualityReport:
    """Compare the two computations of the universal section over P(A).

    Fibering over P(A) gives [P^4] * smooth + L^4 Y; fibering over Gr(2,5)
    gives [Gr(2,5)] [P^3] + L^4 X.  The scalar parts agree, leaving
    L^4 (Y - X) = 0.
    """
    lhs = class_universal_hyperplane(class_projective_space(4), Y)
    rhs = class_grassmannian(2, 5) * class_projective_space(3) + L ** 4 * X
    return DualityReport(lhs, rhs, lhs - rhs, lhs.scalar == rhs.scalar)
