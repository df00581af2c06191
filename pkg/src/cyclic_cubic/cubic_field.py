"""The cyclic cubic field L_n = Q(rho), rho a root of X^3 - nX^2 - (n+3)X - 1.

Elements are stored over the power basis {1, rho, rho^2}; the generator
sigma of the Galois group sends rho to rho' = rho^2 - (n+1)rho - 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .arith import divisors
from .errors import ReducibleError, SingularBasis, ZeroDenominator


def det3(m) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def solve3(m, rhs) -> list[Fraction]:
    """Solve m @ x = rhs exactly by Cramer's rule."""
    det = det3(m)
    if det == 0:
        raise SingularBasis("singular 3x3 system")
    out = []
    for j in range(3):
        mj = [[rhs[i] if k == j else m[i][k] for k in range(3)] for i in range(3)]
        out.append(Fraction(det3(mj)) / det)
    return out


@dataclass(frozen=True)
class CubicField:
    n1: int
    n2: int

    @property
    def n(self) -> Fraction:
        return Fraction(self.n1, self.n2)

    @property
    def delta(self) -> int:
        return self.n1**2 + 3 * self.n1 * self.n2 + 9 * self.n2**2

    def __call__(self, c0=0, c1=0, c2=0) -> "FieldElement":
        return FieldElement(self, (Fraction(c0), Fraction(c1), Fraction(c2)))

    @cached_property
    def one(self):
        return self(1)

    @cached_property
    def rho(self):
        return self(0, 1)

    @cached_property
    def rho_prime(self):
        n = self.n
        return self(-2, -(n + 1), 1)

    @cached_property
    def _rho_prime_sq(self):
        return self.rho_prime * self.rho_prime

    @property
    def power_basis_disc(self) -> Fraction:
        """disc(1, rho, rho^2) = (n^2 + 3n + 9)^2."""
        return Fraction(self.delta**2, self.n2**4)

    def from_rho_basis(self, c, c_rho, c_rho_prime) -> "FieldElement":
        """The element c + c_rho*rho + c_rho_prime*rho'."""
        return self(c) + self.rho * Fraction(c_rho) + self.rho_prime * Fraction(c_rho_prime)


def new_field(n1: int, n2: int) -> CubicField:
    """Normalize n1/n2 (coprime, n2 > 0) and check that f_n is irreducible."""
    if n2 == 0:
        raise ZeroDenominator("n2 must be nonzero")
    g = math.gcd(n1, n2)
    n1, n2 = n1 // g, n2 // g
    if n2 < 0:
        n1, n2 = -n1, -n2
    root = rational_root(n1, n2)
    if root is not None:
        raise ReducibleError(n1, n2, root)
    return CubicField(n1, n2)


def rational_root(n1: int, n2: int):
    """A rational root of f_n, or None.

    n2*rho is a root of the monic integer cubic
    X^3 - n1 X^2 - (n1 n2 + 3 n2^2) X - n2^3, so any rational root is t/n2
    with t dividing n2^3.
    """
    a2, a1, a0 = -n1, -(n1 * n2 + 3 * n2 * n2), -(n2**3)
    for t in divisors(n2**3):
        for s in (t, -t):
            if ((s + a2) * s + a1) * s + a0 == 0:
                return Fraction(s, n2)
    return None


class FieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: CubicField, coords):
        self.field = field
        self.coords = tuple(Fraction(c) for c in coords)

    def _lift(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        return FieldElement(self.field, (Fraction(other), 0, 0))

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __add__(self, other):
        o = self._lift(other)
        return FieldElement(self.field, [x + y for x, y in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-x for x in self.coords])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            k = Fraction(other)
            return FieldElement(self.field, [k * x for x in self.coords])
        o = self._lift(other)
        a, b = self.coords, o.coords
        prod = [Fraction(0)] * 5
        for i in range(3):
            if a[i]:
                for j in range(3):
                    prod[i + j] += a[i] * b[j]
        # rho^3 = n rho^2 + (n+3) rho + 1
        n = self.field.n
        for k in (4, 3):
            ck = prod[k]
            if ck:
                prod[k - 1] += n * ck
                prod[k - 2] += (n + 3) * ck
                prod[k - 3] += ck
        return FieldElement(self.field, prod[:3])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        c0, c1, c2 = (str(c) for c in self.coords)
        return f"FieldElement(n={self.field.n}, {c0} + {c1}*rho + {c2}*rho^2)"

    def mult_matrix(self):
        """Columns are the coordinates of x, x*rho, x*rho^2."""
        cols = [self, self * self.field.rho, self * self.field.rho * self.field.rho]
        return [[cols[j].coords[i] for j in range(3)] for i in range(3)]

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(self.field, solve3(self.mult_matrix(), [1, 0, 0]))

    def is_rational(self) -> bool:
        return self.coords[1] == 0 and self.coords[2] == 0

    def rho_basis(self) -> tuple[Fraction, Fraction, Fraction]:
        """Coordinates (c, c_rho, c_rho') over {1, rho, rho'}."""
        c0, c1, c2 = self.coords
        return (c0 + 2 * c2, c1 + (self.field.n + 1) * c2, c2)


def sigma(x: FieldElement) -> FieldElement:
    F = x.field
    c0, c1, c2 = x.coords
    return F(c0) + F.rho_prime * c1 + F._rho_prime_sq * c2


def _rational(x: FieldElement) -> Fraction:
    if not x.is_rational():
        raise AssertionError(f"expected a rational element, got {x}")
    return x.coords[0]


def conjugates(x: FieldElement):
    y = sigma(x)
    return x, y, sigma(y)


def trace(x: FieldElement) -> Fraction:
    a, b, c = conjugates(x)
    return _rational(a + b + c)


def norm_elem(x: FieldElement) -> Fraction:
    a, b, c = conjugates(x)
    return _rational(a * b * c)


def minpoly(x: FieldElement) -> list[Fraction]:
    """Monic minimal polynomial over Q, coefficients from the leading one down."""
    if x.is_rational():
        return [Fraction(1), -x.coords[0]]
    a, b, c = conjugates(x)
    e1 = _rational(a + b + c)
    e2 = _rational(a * b + a * c + b * c)
    e3 = _rational(a * b * c)
    return [Fraction(1), -e1, e2, -e3]


def is_integral(x: FieldElement) -> bool:
    return all(c.denominator == 1 for c in minpoly(x))


def coord_matrix(elems: Sequence[FieldElement]):
    """Rows are the power-basis coordinates of the given elements."""
    return [list(e.coords) for e in elems]


def disc_triple(x1: FieldElement, x2: FieldElement, x3: FieldElement) -> Fraction:
    d = det3(coord_matrix((x1, x2, x3)))
    return d * d * x1.field.power_basis_disc


def coordinates(basis: Sequence[FieldElement], x: FieldElement) -> list[Fraction]:
    """Coordinates of x with respect to a basis of L_n over Q."""
    m = coord_matrix(basis)
    mt = [[m[j][i] for j in range(3)] for i in range(3)]
    return solve3(mt, list(x.coords))


def lattice_index(basis: Sequence[FieldElement], vectors: Sequence[FieldElement]) -> Fraction:
    """|det T| where vectors = T * basis.

    Equals 1 iff the lattices coincide, provided every vector has integer
    coordinates in ``basis`` (see :func:`in_lattice`).
    """
    db = det3(coord_matrix(basis))
    if db == 0:
        raise SingularBasis("basis is linearly dependent")
    return abs(Fraction(det3(coord_matrix(vectors))) / db)


def in_lattice(basis: Sequence[FieldElement], x: FieldElement) -> bool:
    return all(c.denominator == 1 for c in coordinates(basis, x))


def same_lattice(basis, vectors) -> bool:
    return lattice_index(basis, vectors) == 1 and all(in_lattice(basis, v) for v in vectors)
